#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sgr/action.hpp"
#include "sgr/matrix.hpp"

namespace sgr {

inline constexpr std::size_t kDefaultDimBound = 4096;

/// The algebra k^n * G for a fixed action and field. Carries the fixed
/// basis ordering: basis index = g * n + (i - 1), group index major,
/// coordinate minor. All matrices and certificates refer to it.
class SkewRingContext {
public:
    SkewRingContext(Action act, Field f, std::size_t dim_bound = kDefaultDimBound);

    const Action& action() const { return act_; }
    const FiniteGroup& group() const { return act_.group(); }
    const Field& field() const { return f_; }
    int n() const { return act_.degree(); }
    std::size_t dim() const { return static_cast<std::size_t>(n()) * group().order(); }

    std::size_t basis_index(int coord, int g) const {  // coord 1-indexed
        return static_cast<std::size_t>(g) * n() + (coord - 1);
    }
    std::pair<int, int> basis_of(std::size_t index) const {  // (coord, g)
        return {static_cast<int>(index % n()) + 1, static_cast<int>(index / n())};
    }

    /// Content fingerprint; equal contexts are interchangeable.
    std::uint64_t fingerprint() const { return fingerprint_; }

private:
    Action act_;
    Field f_;
    std::uint64_t fingerprint_;
};

using ContextPtr = std::shared_ptr<const SkewRingContext>;

ContextPtr make_context(Action act, Field f, std::size_t dim_bound = kDefaultDimBound);

/// Element of k^n * G: a sparse group-indexed family of ground coefficients.
/// Canonical: a zero coefficient is never stored.
class SkewElement {
public:
    explicit SkewElement(ContextPtr ctx);

    static SkewElement zero(ContextPtr ctx) { return SkewElement(std::move(ctx)); }
    static SkewElement one(ContextPtr ctx);
    /// r * g for a ground coefficient r.
    static SkewElement term(ContextPtr ctx, int g, GroundElement r);
    /// Basis monomial e_i * g.
    static SkewElement monomial(ContextPtr ctx, int coord, int g);
    static SkewElement from_ground(ContextPtr ctx, GroundElement r);
    static SkewElement from_vector(ContextPtr ctx, const std::vector<Scalar>& v);

    const ContextPtr& context() const { return ctx_; }
    const std::map<int, GroundElement>& terms() const { return terms_; }
    /// Coefficient of g (zero element if absent).
    GroundElement coefficient(int g) const;
    std::vector<int> support_groups() const;
    std::size_t length() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    /// Coordinates in the fixed basis order, length n|G|.
    std::vector<Scalar> to_vector() const;

    SkewElement operator+(const SkewElement& o) const;
    SkewElement operator-(const SkewElement& o) const;
    SkewElement operator-() const;
    SkewElement scaled(const Scalar& s) const;
    bool operator==(const SkewElement& o) const;
    bool operator!=(const SkewElement& o) const { return !(*this == o); }

    std::string str() const;

    void set_term(int g, GroundElement r);  // drops zero coefficients

private:
    ContextPtr ctx_;
    std::map<int, GroundElement> terms_;
};

void check_same_context(const SkewElement& x, const SkewElement& y);

/// (r g)(s h) = r (g s) (g h), extended bilinearly; exact.
SkewElement skew_mul(const SkewElement& x, const SkewElement& y);

/// g x g^-1; preserves length.
SkewElement conjugate(int g, const SkewElement& x);

/// Left and right ground multiplications r * x and x * r.
SkewElement ground_mul_left(const GroundElement& r, const SkewElement& x);
SkewElement ground_mul_right(const SkewElement& x, const GroundElement& r);

/// Matrix of left multiplication by x in the fixed basis order.
Matrix regular_rep(const SkewElement& x);
/// Matrix of right multiplication by x.
Matrix regular_rep_right(const SkewElement& x);

struct UnitCheck {
    bool unit = false;
    std::optional<SkewElement> inverse;
};

/// Unit iff the regular representation is invertible; the inverse is
/// recovered by solving L_x y = 1 and verified on both sides.
UnitCheck is_unit(const SkewElement& x);

/// y with x y x = x, from the linear system (L_x R_x) y = x; the
/// deterministic least solution (zeros in all free variables of the echelon
/// solve). nullopt = no solution: x witnesses that the ring is not regular.
std::optional<SkewElement> skew_quasi_inverse(const SkewElement& x);

}  // namespace sgr
