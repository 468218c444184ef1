#include "sgr/action.hpp"

#include <algorithm>
#include <map>

#include "sgr/matrix.hpp"

namespace sgr {

Action::Action(FiniteGroup group, int n, std::vector<Permutation> perm_of)
    : group_(std::move(group)), n_(n), perm_of_(std::move(perm_of)) {
    if (n_ < 1) throw DimensionMismatch("action needs n >= 1");
    if (perm_of_.size() != static_cast<std::size_t>(group_.order()))
        throw SchemaError("action needs one permutation per group element");
    for (const auto& p : perm_of_)
        if (p.degree() != n_) throw DimensionMismatch("permutation degree differs from n");
    if (!perm_of_[group_.identity()].is_identity())
        throw SchemaError("action does not send the group identity to the identity map");
    for (int g = 0; g < group_.order(); ++g)
        for (int h = 0; h < group_.order(); ++h)
            if (!(perm_of_[group_.mul(g, h)] == perm_of_[g].after(perm_of_[h])))
                throw SchemaError("perm_of is not a homomorphism at (" + group_.label(g) +
                                  ", " + group_.label(h) + ")");
}

Action Action::from_generators(std::vector<std::pair<std::string, Permutation>> gens,
                               std::size_t order_bound) {
    if (gens.empty()) throw SchemaError("at least one generator required");
    std::sort(gens.begin(), gens.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    const int n = gens.front().second.degree();
    for (const auto& [name, p] : gens) {
        (void)name;
        if (p.degree() != n) throw DimensionMismatch("generators of different degree");
    }

    // BFS closure; labels are the first (shortest) word reaching an element.
    std::vector<Permutation> elems{Permutation::identity(n)};
    std::vector<std::string> labels{"1"};
    std::map<std::vector<int>, int> index{{elems[0].images(), 0}};
    for (std::size_t head = 0; head < elems.size(); ++head) {
        for (const auto& [name, p] : gens) {
            Permutation q = elems[head].after(p);  // word extended on the right
            if (index.emplace(q.images(), static_cast<int>(elems.size())).second) {
                labels.push_back(head == 0 ? name : labels[head] + name);
                elems.push_back(std::move(q));
                if (elems.size() > order_bound)
                    throw OrderBoundExceeded("generated group order exceeds bound " +
                                             std::to_string(order_bound));
            }
        }
    }
    const int m = static_cast<int>(elems.size());
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            table[i][j] = index.at(elems[i].after(elems[j]).images());
    FiniteGroup g(std::move(labels), std::move(table), std::max<std::size_t>(m, order_bound));
    return Action(std::move(g), n, std::move(elems));
}

GroundElement Action::act(int g, const GroundElement& r) const {
    if (static_cast<int>(r.size()) != n_) throw DimensionMismatch("ground element length != n");
    const Permutation& inv = perm_of_[group_.inverse(g)];
    GroundElement out(r.field(), r.size());
    for (int i = 1; i <= n_; ++i) out[i - 1] = r[inv(i) - 1];
    return out;
}

std::vector<std::vector<int>> orbits(const Action& act) {
    const int n = act.degree();
    std::vector<int> owner(n + 1, 0);
    std::vector<std::vector<int>> out;
    for (int start = 1; start <= n; ++start) {
        if (owner[start]) continue;
        std::vector<int> orbit{start};
        owner[start] = 1;
        for (std::size_t head = 0; head < orbit.size(); ++head)
            for (int g = 0; g < act.group().order(); ++g) {
                int img = act.perm(g)(orbit[head]);
                if (!owner[img]) {
                    owner[img] = 1;
                    orbit.push_back(img);
                }
            }
        std::sort(orbit.begin(), orbit.end());
        out.push_back(std::move(orbit));
    }
    return out;
}

bool is_transitive(const Action& act) { return orbits(act).size() == 1; }

bool is_free(const Action& act, int* witness_g, int* witness_coord) {
    for (int g = 0; g < act.group().order(); ++g) {
        if (g == act.group().identity()) continue;
        auto fix = act.perm(g).fixed_points();
        if (!fix.empty()) {
            if (witness_g) *witness_g = g;
            if (witness_coord) *witness_coord = fix.front();
            return false;
        }
    }
    return true;
}

GSimpleResult is_g_simple(const Action& act, const Field& f) {
    GSimpleResult res;
    auto orbs = orbits(act);
    res.g_simple = orbs.size() == 1;
    if (res.g_simple) {
        res.reasoning.push_back("action is transitive on coordinates");
        res.reasoning.push_back(
            "ideals of k^n are coordinate-subset spans and invariant ideals are orbit-union "
            "spans, so the only invariant ideals are 0 and the whole ring");
        return res;
    }
    // witness: indicator of the least orbit (orbits ordered by least element)
    res.witness = GroundElement::indicator(f, act.degree(), orbs.front());
    res.reasoning.push_back("action has " + std::to_string(orbs.size()) + " coordinate orbits");
    res.reasoning.push_back(
        "the indicator of one orbit generates a proper nonzero invariant ideal");
    return res;
}

std::string to_string(AutClass c) {
    switch (c) {
        case AutClass::Identity: return "identity";
        case AutClass::XInner: return "x-inner";
        case AutClass::XOuter: return "x-outer";
    }
    return "?";
}

AutClassification classify_automorphism(const Action& act, int g, const Field& f) {
    AutClassification out;
    const Permutation& p = act.perm(g);
    auto fix = p.fixed_points();
    if (p.is_identity())
        out.cls = AutClass::Identity;
    else if (!fix.empty())
        out.cls = AutClass::XInner;
    else
        out.cls = AutClass::XOuter;
    if (!fix.empty())
        out.fixed_idempotent = GroundElement::indicator(f, act.degree(), fix);

    // Independent check: ann_R((id - f)(R)) as a kernel computation.
    // x * d = 0 is diagonal in coordinates, so each basis constraint
    // e_j - f(e_j) contributes n single-variable equations x_i * d_i = 0.
    const int n = act.degree();
    Matrix sys(f, n * n, n);
    for (int j = 1; j <= n; ++j) {
        GroundElement d = GroundElement::unit(f, n, j) - act.act(g, GroundElement::unit(f, n, j));
        for (int i = 0; i < n; ++i) sys.at((j - 1) * n + i, i) = d[i];
    }
    RowSpace ann(f, n);
    for (auto& v : kernel_basis(sys)) ann.insert(std::move(v));
    RowSpace expected(f, n);
    for (int i : fix) {
        std::vector<Scalar> e(n, Scalar::zero(f));
        e[i - 1] = Scalar::one(f);
        expected.insert(std::move(e));
    }
    out.annihilator_matches =
        ann.rank() == expected.rank() &&
        [&] {
            for (const auto& r : expected.rows())
                if (!ann.contains(r)) return false;
            return true;
        }();
    return out;
}

std::optional<CornerInnerWitness> corner_inner_witness(const Action& act, int g, const Field& f) {
    auto fix = act.perm(g).fixed_points();
    if (fix.empty()) return std::nullopt;
    GroundElement e = GroundElement::indicator(f, act.degree(), fix);
    return CornerInnerWitness{e, e, e, e};
}

bool verify_corner_inner_witness(const Action& act, int g, const CornerInnerWitness& w) {
    const auto& e = w.e;
    const auto& ep = w.e_prime;
    const auto& u = w.u;
    const auto& v = w.v;
    if (e.is_zero() || !is_idempotent(e) || !is_idempotent(ep)) return false;
    const int ginv = act.group().inverse(g);
    if (act.act(ginv, e) != ep) return false;          // e' = f^-1(e)
    if (e * u * ep != u || ep * v * e != v) return false;  // memberships
    if (u * v != e || v * u != ep) return false;           // condition (a)
    // condition (b) on the basis of e'Re'
    for (int i : support(ep)) {
        GroundElement x = GroundElement::unit(e.field(), act.degree(), i);
        if (act.act(g, x) != u * x * v) return false;
    }
    return true;
}

ActionPredicates action_predicates(const Action& act) {
    ActionPredicates out;
    const auto& grp = act.group();
    out.faithful = true;
    for (int g = 0; g < grp.order(); ++g) {
        if (g == grp.identity()) continue;
        if (act.perm(g).is_identity()) {
            out.faithful = false;
            out.faithful_witness = g;
            break;
        }
    }
    out.outer = out.faithful;  // conjugation by a unit is trivial on commutative rings
    int a = 0, b = 0;
    out.abelian = grp.abelian(&a, &b);
    if (!out.abelian) {
        out.abelian_witness_a = a;
        out.abelian_witness_b = b;
    }
    int wg = 0, wc = 0;
    out.fixed_point_free = is_free(act, &wg, &wc);
    out.x_outer = out.fixed_point_free;
    if (!out.fixed_point_free) out.x_inner_witness = wg;
    return out;
}

}  // namespace sgr
