#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "sgr/matrix.hpp"
#include "sgr/report.hpp"

namespace {

sgr::Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw sgr::SchemaError("cannot open '" + path + "'");
    try {
        return sgr::Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw sgr::SchemaError("JSON parse error in '" + path + "': " + e.what());
    }
}

struct CommonOpts {
    std::string input_path;
    std::string out_path;
    bool json = false;
    std::string field = "q";
    bool field_given = false;
    int depth = 0;
    std::size_t max_dim = sgr::kDefaultDimBound;
    std::size_t group_bound = sgr::kDefaultGroupOrderBound;
    std::vector<std::string> sample;
    int steps = 0;
    bool timing = false;
    bool serial = false;
    std::string engine = "auto";
    std::string builtin;  // tower convenience
};

void add_common(CLI::App* cmd, CommonOpts& o, bool needs_input) {
    auto* in = cmd->add_option("--input", o.input_path, "input document (JSON)");
    if (needs_input) in->required();
    cmd->add_flag("--json", o.json, "print the full JSON report");
    cmd->add_option("--out", o.out_path, "write the JSON report to a file");
    cmd->add_option("--field", o.field, "coefficient field: q or p=<prime>")
        ->each([&o](const std::string&) { o.field_given = true; });
    cmd->add_option("--depth", o.depth, "tower depth / level selector");
    cmd->add_option("--max-dim", o.max_dim, "algebra dimension bound");
    cmd->add_option("--max-group", o.group_bound, "group order bound");
    cmd->add_option("--sample", o.sample, "sample words, comma separated")->delimiter(',');
    cmd->add_option("--steps", o.steps, "reduction step limit (default n|G|)");
    cmd->add_flag("--timing", o.timing, "include timing in the report (breaks byte determinism)");
    cmd->add_flag("--serial", o.serial, "run the serial elimination kernels");
    cmd->add_option("--engine", o.engine, "simplicity engine: auto | oracle | linear")
        ->check(CLI::IsMember({"auto", "oracle", "linear"}));
}

sgr::JobOptions to_job_options(const CommonOpts& o) {
    sgr::JobOptions j;
    j.field = sgr::Field::parse(o.field);
    j.field_from_flag = o.field_given;
    j.depth = o.depth;
    j.max_dim = o.max_dim;
    j.group_order_bound = o.group_bound;
    j.sample_words = o.sample;
    j.max_steps = o.steps;
    j.timing = o.timing;
    j.engine = o.engine;
    return j;
}

void emit(const sgr::RunResult& res, const CommonOpts& o) {
    if (!o.out_path.empty()) {
        std::ofstream out(o.out_path);
        if (!out) throw sgr::Error("cannot write '" + o.out_path + "'");
        out << res.report.dump(2) << "\n";
    }
    if (o.json) {
        std::cout << res.report.dump(2) << "\n";
        return;
    }
    // compact human summary
    if (res.report.contains("verdict"))
        std::cout << "verdict: " << res.report["verdict"].get<std::string>() << "\n";
    if (res.report.contains("class"))
        std::cout << "class: " << res.report["class"].get<std::string>() << "\n";
    if (res.report.contains("outcome"))
        std::cout << "outcome: " << res.report["outcome"].get<std::string>() << "\n";
    if (res.report.contains("valid"))
        std::cout << "valid: " << (res.report["valid"].get<bool>() ? "yes" : "no") << "\n";
    std::cout << "exit: " << res.exit_code << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact simplicity analysis for skew group rings over split ground rings"};
    app.require_subcommand(1);

    struct Sub {
        CLI::App* cmd;
        CommonOpts opts;
        std::string job;
    };
    std::vector<std::unique_ptr<Sub>> subs;
    auto add = [&](const std::string& name, const std::string& desc, const std::string& job,
                   bool needs_input) -> Sub& {
        auto s = std::make_unique<Sub>();
        s->cmd = app.add_subcommand(name, desc);
        s->job = job;
        add_common(s->cmd, s->opts, needs_input);
        subs.push_back(std::move(s));
        return *subs.back();
    };

    add("simple", "decide simplicity of k^n * G with both engines", "simple", true);
    add("g-simple", "decide G-simplicity of the ground ring", "g-simple", true);
    add("classify-aut", "classify an automorphism: identity / x-inner / x-outer",
        "classify-aut", true);
    add("corner-inner", "produce and verify a corner-inner witness", "corner-inner", true);
    add("ideal", "two-sided ideal closure and ground intersection", "ideal", true);
    add("certificate", "generation certificate: pairs with sum a x b = 1", "certificate", true);
    add("quasi-inverse", "solve x y x = x (ground or skew element)", "quasi-inverse", true);
    add("reduce", "iterate the length reduction from an element", "reduce", true);

    auto* tower = app.add_subcommand("tower", "tower commands");
    tower->require_subcommand(1);
    for (const char* sub : {"build", "verify", "clopen", "freeness", "limit-simplicity",
                            "level-ring"}) {
        auto s = std::make_unique<Sub>();
        s->cmd = tower->add_subcommand(sub, std::string("tower ") + sub);
        s->job = std::string("tower ") + sub;
        add_common(s->cmd, s->opts, false);
        s->cmd->add_option("--builtin", s->opts.builtin, "built-in tower: prufer | onepoint");
        subs.push_back(std::move(s));
    }

    // verify: positional artifact path + --input ring document
    auto verify = std::make_unique<Sub>();
    std::string artifact_path;
    verify->cmd = app.add_subcommand("verify", "re-check a shipped certificate or witness");
    verify->cmd->add_option("artifact", artifact_path, "certificate/witness JSON file")
        ->required();
    add_common(verify->cmd, verify->opts, true);
    verify->job = "verify";
    subs.push_back(std::move(verify));

    CLI11_PARSE(app, argc, argv);

    for (auto& s : subs) {
        if (!s->cmd->parsed()) continue;
        try {
            sgr::set_exec_mode(s->opts.serial ? sgr::ExecMode::Serial : sgr::ExecMode::Parallel);
            sgr::JobOptions opts = to_job_options(s->opts);
            sgr::Json input;
            if (!s->opts.input_path.empty())
                input = load_json(s->opts.input_path);
            else if (!s->opts.builtin.empty())
                input = sgr::Json{{"builtin", s->opts.builtin}};
            else
                throw sgr::SchemaError("either --input or --builtin is required");
            sgr::RunResult res;
            if (s->job == "verify") {
                sgr::Json artifact = load_json(artifact_path);
                // accept a bare artifact or a report embedding one
                if (!artifact.contains("kind")) {
                    if (artifact.contains("certificate"))
                        artifact = artifact["certificate"];
                    else if (artifact.contains("witness"))
                        artifact = artifact["witness"];
                }
                res = sgr::run_verify(artifact, input, opts);
            } else {
                res = sgr::run_job(s->job, input, opts);
            }
            emit(res, s->opts);
            return res.exit_code;
        } catch (const sgr::HashMismatch& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        } catch (const sgr::SchemaError& e) {
            std::cerr << "input error: " << e.what() << "\n";
            return 2;
        } catch (const sgr::Error& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        }
    }
    return 2;
}
