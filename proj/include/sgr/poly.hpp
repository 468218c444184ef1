#pragma once

#include <string>
#include <vector>

#include "sgr/scalar.hpp"

namespace sgr {

/// Dense univariate polynomial over one coefficient field.
/// Normalized: no stored leading zero.
class Poly {
public:
    explicit Poly(const Field& f) : f_(f) {}
    Poly(const Field& f, std::vector<Scalar> coeffs);

    static Poly zero(const Field& f) { return Poly(f); }
    static Poly constant(const Scalar& s);
    static Poly x(const Field& f);
    static Poly from_ints(const Field& f, const std::vector<long long>& coeffs);

    const Field& field() const { return f_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
    Scalar coeff(std::size_t i) const;
    const std::vector<Scalar>& coeffs() const { return c_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const Scalar& s) const;
    Poly monic() const;
    bool operator==(const Poly& o) const { return f_ == o.f_ && c_ == o.c_; }
    /// Canonical order: by degree, then coefficients from the constant term up.
    int cmp(const Poly& o) const;

    Scalar eval(const Scalar& at) const;
    Poly derivative() const;
    std::string str(const std::string& var = "t") const;

private:
    void normalize();

    Field f_;
    std::vector<Scalar> c_;
};

/// Quotient and remainder; the divisor must be nonzero.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
/// Monic gcd.
Poly poly_gcd(Poly a, Poly b);
/// g = gcd and u a + v b = g.
struct GcdExt {
    Poly g, u, v;
};
GcdExt poly_gcd_ext(const Poly& a, const Poly& b);

struct PolyFactor {
    Poly p;  // monic irreducible
    int multiplicity;
};

/// Complete irreducible factorization of a monic polynomial, deterministic.
/// Over GF(p): Berlekamp (p = 2) or distinct/equal-degree splitting with a
/// fixed-seed engine (odd p). Over Q: factorization modulo one big prime
/// above the factor-coefficient bound, then subset recombination — sound and
/// complete for all degrees.
std::vector<PolyFactor> factor_poly(const Poly& monic);

bool is_irreducible(const Poly& monic);

}  // namespace sgr
