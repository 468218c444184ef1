#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "sgr/errors.hpp"

namespace sgr {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Coefficient field: the rationals (characteristic 0) or a prime field GF(p).
class Field {
public:
    Field() = default;  // rationals
    static Field rationals() { return Field{}; }
    static Field gf(std::uint32_t p);           // throws NotPrime
    static Field parse(const std::string& s);   // "q" or "p=<prime>"

    bool rational() const { return p_ == 0; }
    std::uint32_t characteristic() const { return p_; }
    std::string name() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    std::uint32_t p_ = 0;
};

/// Exact scalar. In characteristic 0 a reduced rational with positive
/// denominator; mod p a residue in [0, p). No rounding anywhere.
class Scalar {
public:
    Scalar() = default;  // zero over Q

    static Scalar zero(const Field& f);
    static Scalar one(const Field& f);
    static Scalar from_int(const Field& f, long long v);
    static Scalar from_rat(BigRat v);                         // char 0
    static Scalar parse(const Field& f, const std::string& s);

    const Field& field() const { return f_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // throws Error on zero divisor
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar inverse() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    // Total order within one field (numeric); used only for canonical sorting.
    int cmp(const Scalar& o) const;

    std::string str() const;  // "a" or "a/b"; residues as plain integers

    const BigRat& rat() const { return q_; }
    long long residue() const { return r_; }

private:
    void check_same_field(const Scalar& o) const;

    Field f_;
    BigRat q_;           // used iff f_.rational()
    long long r_ = 0;    // used iff !f_.rational()
};

}  // namespace sgr
