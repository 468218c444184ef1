#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sgr/poly.hpp"
#include "sgr/skew.hpp"

namespace sgr {

/// Two-sided ideal of k^n * G as a canonical echelon row space in k^{n|G|},
/// closed under left/right multiplication by every basis monomial e_i g.
class IdealBasis {
public:
    IdealBasis(ContextPtr ctx, RowSpace rows);

    const ContextPtr& context() const { return ctx_; }
    const RowSpace& row_space() const { return rows_; }
    std::size_t dimension() const { return rows_.rank(); }
    bool is_zero() const { return rows_.rank() == 0; }
    bool is_full() const { return rows_.full(); }

    bool contains(const SkewElement& x) const;
    std::vector<SkewElement> basis_elements() const;

    /// Re-checks closedness under monomial multiplication on both sides.
    bool verify_closed() const;

private:
    ContextPtr ctx_;
    RowSpace rows_;
};

struct ClosureOptions {
    bool track_provenance = false;
};

/// Least two-sided ideal containing the generators: breadth-first
/// multiply-and-reduce to a fixpoint (early exit once the space is full).
IdealBasis ideal_closure(const ContextPtr& ctx, const std::vector<SkewElement>& gens,
                         const ClosureOptions& opts = {});

struct StructureBlock {
    std::vector<int> orbit;       // sorted coordinates
    std::vector<int> stabilizer;  // stabilizer of min(orbit), as element indices
    std::string descriptor;       // "M_3(k[H]) with |H| = 2"
};

struct StructureReport {
    std::vector<StructureBlock> blocks;
    bool simple = false;
    std::vector<std::string> reasoning;
};

/// Independent oracle: k^X * G decomposes over the orbits into matrix rings
/// over stabilizer group algebras; simple iff one orbit and trivial
/// stabilizer. Field-characteristic-independent.
StructureReport structure_oracle(const Action& act);

enum class LinearStatus { Simple, NotSimple, Unsupported };

struct LinearVerdict {
    LinearStatus status = LinearStatus::Unsupported;
    std::size_t radical_dim = 0;
    std::size_t center_dim = 0;
    bool radical_nilpotent_checked = false;
    std::optional<SkewElement> central_idempotent;  // block-splitting witness
    std::optional<IdealBasis> witness_ideal;        // proper nonzero ideal
    std::vector<std::string> reasoning;
};

/// Generic finite-dimensional decider. Radical = kernel of the trace form
/// of the regular representation (valid in characteristic 0 or p > n|G|;
/// other characteristics report Unsupported). When semisimple, simple iff
/// the center is a field, decided by minimal-polynomial irreducibility of
/// every center basis element; a factored minimal polynomial yields a
/// nontrivial central idempotent witness via the coprime Bezout split.
LinearVerdict is_simple_linear(const ContextPtr& ctx);

struct Certificate {
    SkewElement x;
    std::vector<std::pair<SkewElement, SkewElement>> pairs;  // sum a x b = 1
};

SkewElement evaluate_certificate(const Certificate& cert);

struct CertificateResult {
    std::optional<Certificate> certificate;  // when the closure is full
    std::optional<IdealBasis> proper_ideal;  // NotGenerating witness otherwise
};

/// Explicit pairs with sum a_i x b_i = 1, extracted by tracking multiplier
/// provenance through the closure's row reduction.
CertificateResult simplicity_certificate(const SkewElement& x);

/// Verified generator of a proper nonzero ideal: the least orbit indicator
/// when intransitive, else e_i (1 - g) for the first coordinate i fixed by
/// some g != 1. nullopt when the ring is simple.
std::optional<SkewElement> proper_ideal_witness(const ContextPtr& ctx);

struct ReduceStep {
    enum class Kind { Shorter, Unit, Obstruction, Stalled };
    Kind kind;
    std::optional<SkewElement> element;  // Shorter / Unit / Stalled payload
    std::optional<int> obstruction_g;    // g with alpha(g) corner-inner
    std::optional<CornerInnerWitness> obstruction;
    std::string note;
};

/// One step of the constructive length reduction inside the ideal generated
/// by x: normalize the leading coefficient to an idempotent, then try the
/// fixed candidate list (ground commutators, group commutators, the three
/// quasi-inverse recombinations). Falls through to a unit (greedy orbit
/// cover), a corner-inner obstruction witness, or a stall inside a proper
/// ideal.
ReduceStep length_reduce(const SkewElement& x);

struct IntersectionReport {
    std::size_t ideal_dim = 0;
    std::size_t intersection_dim = 0;
    std::vector<GroundElement> intersection_basis;
    bool g_simple_action = false;
    /// When the action is G-simple and the intersection is nonzero, the
    /// ideal must be everything; records that this was verified.
    bool forced_full = false;
};

IntersectionReport check_g_invariant_intersection(const IdealBasis& ideal);

/// Minimal polynomial of an algebra element given in coordinates.
Poly algebra_min_poly(const ContextPtr& ctx, const std::vector<Scalar>& elem);

/// Power spans J, J^2, ... until zero; true iff some power vanishes.
bool verify_nilpotent(const IdealBasis& ideal);

}  // namespace sgr
