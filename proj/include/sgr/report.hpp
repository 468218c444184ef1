#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sgr/ideal.hpp"
#include "sgr/tower.hpp"

namespace sgr {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "1.0.0";

/// FNV-1a 64 over the key-sorted dump; stable across runs and platforms.
std::string content_hash(const Json& doc);

struct JobOptions {
    Field field = Field::rationals();
    bool field_from_flag = false;  // a --field flag overrides the document
    int depth = 0;                 // 0 = document / builtin default
    std::size_t max_dim = kDefaultDimBound;
    std::size_t group_order_bound = kDefaultGroupOrderBound;
    std::vector<std::string> sample_words;  // raw --sample tokens
    int max_steps = 0;                      // reduce: 0 = n|G|
    bool timing = false;
    /// simplicity engine: "auto" (oracle + linear cross-check), "oracle",
    /// or "linear" (exit code 3 when the characteristic is unsupported)
    std::string engine = "auto";
};

// --- input parsing (strict: unknown fields rejected with JSON pointers) ---

Action parse_action(const Json& doc, const JobOptions& opts);
ContextPtr parse_context(const Json& doc, const JobOptions& opts);
int resolve_element(const Action& act, const Json& spec, const std::string& where);
GroundElement parse_ground_vector(const Field& f, const Json& arr, std::size_t n,
                                  const std::string& where);
SkewElement parse_skew_element(const ContextPtr& ctx, const Json& doc, const std::string& where);
std::pair<Tower, TowerAction> parse_tower(const Json& doc, const JobOptions& opts);
GeneratorWord parse_word(const std::string& text);

// --- serialization ---

Json ground_to_json(const GroundElement& g);
Json skew_to_json(const SkewElement& x);
Json certificate_to_json(const Certificate& cert, const std::string& ring_hash);
Json witness_to_json(const SkewElement& generator, std::size_t ideal_dim,
                     const std::string& ring_hash);
Json corner_witness_to_json(const CornerInnerWitness& w, const std::string& g_label,
                            const std::string& ring_hash);

struct RunResult {
    Json report;
    int exit_code = 0;
    /// side artifact (certificate / witness file) when the command produces one
    std::optional<Json> artifact;
};

/// Dispatches one job; throws SchemaError and friends on bad input
/// (exit code 2 at the CLI boundary), reports Unsupported regimes with
/// exit code 3 inside the result.
RunResult run_job(const std::string& command, const Json& input, const JobOptions& opts);

/// Re-checks a shipped artifact from scratch using only skew arithmetic
/// (plus a closure re-run for ideal witnesses). Throws HashMismatch when the
/// artifact does not match the input document.
RunResult run_verify(const Json& artifact, const Json& input, const JobOptions& opts);

}  // namespace sgr
