#include "sgr/scalar.hpp"

#include <sstream>

namespace sgr {

namespace {

bool is_prime_u32(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

long long mod_reduce(long long v, std::uint32_t p) {
    long long r = v % static_cast<long long>(p);
    return r < 0 ? r + p : r;
}

// Extended Euclid; requires gcd(a, p) = 1.
long long mod_inverse(long long a, std::uint32_t p) {
    long long t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
        long long q = r / nr;
        t -= q * nt; std::swap(t, nt);
        r -= q * nr; std::swap(r, nr);
    }
    if (r != 1) throw Error("scalar has no inverse mod " + std::to_string(p));
    return t < 0 ? t + p : t;
}

}  // namespace

Field Field::gf(std::uint32_t p) {
    if (!is_prime_u32(p)) throw NotPrime("GF(p) requires a prime, got " + std::to_string(p));
    Field f;
    f.p_ = p;
    return f;
}

Field Field::parse(const std::string& s) {
    if (s == "q" || s == "Q") return rationals();
    if (s.rfind("p=", 0) == 0) {
        unsigned long v = 0;
        try {
            v = std::stoul(s.substr(2));
        } catch (const std::exception&) {
            throw SchemaError("bad field spec '" + s + "'");
        }
        if (v > 0x7fffffffUL) throw SchemaError("prime too large in field spec '" + s + "'");
        return gf(static_cast<std::uint32_t>(v));
    }
    throw SchemaError("bad field spec '" + s + "' (expected 'q' or 'p=<prime>')");
}

std::string Field::name() const {
    return p_ == 0 ? "Q" : "GF(" + std::to_string(p_) + ")";
}

Scalar Scalar::zero(const Field& f) {
    Scalar s;
    s.f_ = f;
    return s;
}

Scalar Scalar::one(const Field& f) { return from_int(f, 1); }

Scalar Scalar::from_int(const Field& f, long long v) {
    Scalar s;
    s.f_ = f;
    if (f.rational())
        s.q_ = BigRat(v);
    else
        s.r_ = mod_reduce(v, f.characteristic());
    return s;
}

Scalar Scalar::from_rat(BigRat v) {
    Scalar s;
    s.q_ = std::move(v);
    return s;
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
    auto bad = [&] { return SchemaError("bad scalar '" + text + "' for " + f.name()); };
    if (text.empty()) throw bad();
    auto slash = text.find('/');
    try {
        if (f.rational()) {
            BigInt num(text.substr(0, slash));
            BigInt den = slash == std::string::npos ? BigInt(1) : BigInt(text.substr(slash + 1));
            if (den == 0) throw bad();
            if (den < 0) {
                num = -num;
                den = -den;
            }
            return from_rat(BigRat(num, den));
        }
        if (slash != std::string::npos) throw bad();
        BigInt v(text);
        auto p = static_cast<long long>(f.characteristic());
        return from_int(f, static_cast<long long>(v % p));
    } catch (const std::runtime_error&) {
        throw bad();
    }
}

bool Scalar::is_zero() const { return f_.rational() ? q_.is_zero() : r_ == 0; }

bool Scalar::is_one() const { return f_.rational() ? q_ == 1 : r_ == 1; }

void Scalar::check_same_field(const Scalar& o) const {
    if (f_ != o.f_)
        throw FieldMismatch("scalar fields differ: " + f_.name() + " vs " + o.f_.name());
}

Scalar Scalar::operator-() const {
    Scalar s(*this);
    if (f_.rational())
        s.q_ = -q_;
    else if (r_ != 0)
        s.r_ = f_.characteristic() - r_;
    return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    Scalar s;
    s.f_ = f_;
    if (f_.rational()) {
        s.q_ = q_ + o.q_;
    } else {
        s.r_ = r_ + o.r_;
        if (s.r_ >= f_.characteristic()) s.r_ -= f_.characteristic();
    }
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    Scalar s;
    s.f_ = f_;
    if (f_.rational())
        s.q_ = q_ * o.q_;
    else
        s.r_ = (r_ * o.r_) % f_.characteristic();  // p < 2^31, product fits
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error("inverse of zero scalar");
    Scalar s;
    s.f_ = f_;
    if (f_.rational())
        s.q_ = 1 / q_;
    else
        s.r_ = mod_inverse(r_, f_.characteristic());
    return s;
}

bool Scalar::operator==(const Scalar& o) const {
    check_same_field(o);
    return f_.rational() ? q_ == o.q_ : r_ == o.r_;
}

int Scalar::cmp(const Scalar& o) const {
    check_same_field(o);
    if (f_.rational()) return q_ < o.q_ ? -1 : (q_ == o.q_ ? 0 : 1);
    return r_ < o.r_ ? -1 : (r_ == o.r_ ? 0 : 1);
}

std::string Scalar::str() const {
    if (!f_.rational()) return std::to_string(r_);
    std::ostringstream out;
    out << numerator(q_);
    if (denominator(q_) != 1) out << '/' << denominator(q_);
    return out.str();
}

}  // namespace sgr
