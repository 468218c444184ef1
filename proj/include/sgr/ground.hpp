#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sgr/scalar.hpp"

namespace sgr {

/// Element of the split ground ring k^n, n >= 1, with componentwise
/// operations. The all-ones vector is the multiplicative identity.
class GroundElement {
public:
    GroundElement(const Field& f, std::size_t n);  // zero vector
    GroundElement(const Field& f, std::vector<Scalar> coords);

    static GroundElement ones(const Field& f, std::size_t n);
    /// Indicator of coordinate i (1-indexed): the primitive idempotent e_i.
    static GroundElement unit(const Field& f, std::size_t n, std::size_t i);
    static GroundElement indicator(const Field& f, std::size_t n, const std::vector<int>& coords);

    std::size_t size() const { return c_.size(); }
    const Field& field() const { return f_; }
    const Scalar& operator[](std::size_t i) const { return c_[i]; }  // 0-indexed
    Scalar& operator[](std::size_t i) { return c_[i]; }
    const std::vector<Scalar>& coords() const { return c_; }

    bool is_zero() const;
    bool operator==(const GroundElement& o) const;
    bool operator!=(const GroundElement& o) const { return !(*this == o); }

    GroundElement operator+(const GroundElement& o) const;
    GroundElement operator-(const GroundElement& o) const;
    GroundElement operator*(const GroundElement& o) const;
    GroundElement operator-() const;
    GroundElement scaled(const Scalar& s) const;

    std::string str() const;  // "(1, 0, 2/3)"

private:
    void check_compatible(const GroundElement& o) const;

    Field f_;
    std::vector<Scalar> c_;
};

/// Regularity witness: x with a*x*a = a and x*a*x = x; componentwise
/// inversion on the support, zero elsewhere. Always solvable in k^n.
GroundElement quasi_inverse(const GroundElement& a);

/// e = a * quasi_inverse(a): the 0/1 indicator of the support of a.
/// Satisfies e^2 = e and e*a = a.
GroundElement support_idempotent(const GroundElement& a);

bool is_idempotent(const GroundElement& a);

/// 1-indexed coordinates with nonzero entry.
std::vector<int> support(const GroundElement& a);

}  // namespace sgr
