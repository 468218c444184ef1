#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sgr/ground.hpp"
#include "sgr/group.hpp"
#include "sgr/perm.hpp"

namespace sgr {

/// Action of a finite group on k^n through coordinate permutations.
/// perm_of is a verified homomorphism; it need not be injective.
class Action {
public:
    Action(FiniteGroup group, int n, std::vector<Permutation> perm_of);

    /// Permutation group generated by named generators; element labels are
    /// reduced words over the generator names ("1" for the identity).
    static Action from_generators(std::vector<std::pair<std::string, Permutation>> gens,
                                  std::size_t order_bound = kDefaultGroupOrderBound);

    const FiniteGroup& group() const { return group_; }
    int degree() const { return n_; }
    const Permutation& perm(int g) const { return perm_of_[g]; }

    /// alpha(g) applied to a ground element: (g r)_i = r_{g^-1(i)}.
    GroundElement act(int g, const GroundElement& r) const;

private:
    FiniteGroup group_;
    int n_;
    std::vector<Permutation> perm_of_;
};

/// Coordinate orbits, each sorted ascending; orbits ordered by least element.
std::vector<std::vector<int>> orbits(const Action& act);

bool is_transitive(const Action& act);

/// g != identity acting with no fixed coordinate for every g; the free /
/// "no nonzero ideal is fixed pointwise" condition for this ring class.
bool is_free(const Action& act, int* witness_g = nullptr, int* witness_coord = nullptr);

struct GSimpleResult {
    bool g_simple;
    // Indicator idempotent of the lexicographically least orbit indicator;
    // generates a proper invariant ideal when not G-simple.
    std::optional<GroundElement> witness;
    std::vector<std::string> reasoning;
};

/// G-simplicity of k^n: the invariant ideals are spanned by unions of
/// orbits, so G-simple iff the action is transitive.
GSimpleResult is_g_simple(const Action& act, const Field& f);

enum class AutClass { Identity, XInner, XOuter };

std::string to_string(AutClass c);

struct AutClassification {
    AutClass cls;
    /// Indicator of the fixed coordinates; alpha(g) is the identity on eR.
    std::optional<GroundElement> fixed_idempotent;
    /// Cross-check: ann_R((id - f)(R)) computed by kernel solving equals eR.
    bool annihilator_matches;
};

/// X-inner iff the permutation has a fixed coordinate (with witness e);
/// also runs the annihilator characterization as an independent check.
AutClassification classify_automorphism(const Action& act, int g, const Field& f);

struct CornerInnerWitness {
    GroundElement e, e_prime, u, v;
};

/// For a permutation automorphism with fixed set F != {}: e = e' = u = v =
/// indicator(F). None iff the fixed set is empty.
std::optional<CornerInnerWitness> corner_inner_witness(const Action& act, int g, const Field& f);

/// Checks e' = f^-1(e), u in eRe', v in e'Re, uv = e, vu = e', and
/// f(x) = u x v on every basis element of e'Re'. (The inverse law on eRe
/// follows from these and is not checked.)
bool verify_corner_inner_witness(const Action& act, int g, const CornerInnerWitness& w);

struct ActionPredicates {
    bool faithful = false;
    bool outer = false;      // = faithful: inner automorphisms of k^n are trivial
    bool abelian = false;
    bool x_outer = false;    // no g != 1 is X-inner
    bool fixed_point_free = false;  // no g != 1 fixes a coordinate; equals x_outer here
    std::optional<int> faithful_witness;   // g != 1 acting as the identity
    std::optional<int> abelian_witness_a, abelian_witness_b;
    std::optional<int> x_inner_witness;    // g != 1 with a fixed coordinate
};

ActionPredicates action_predicates(const Action& act);

}  // namespace sgr
