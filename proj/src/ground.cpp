#include "sgr/ground.hpp"

#include <sstream>

namespace sgr {

GroundElement::GroundElement(const Field& f, std::size_t n)
    : f_(f), c_(n, Scalar::zero(f)) {
    if (n == 0) throw DimensionMismatch("ground ring needs n >= 1");
}

GroundElement::GroundElement(const Field& f, std::vector<Scalar> coords)
    : f_(f), c_(std::move(coords)) {
    if (c_.empty()) throw DimensionMismatch("ground ring needs n >= 1");
    for (const auto& s : c_)
        if (s.field() != f_) throw FieldMismatch("coordinate field differs from ring field");
}

GroundElement GroundElement::ones(const Field& f, std::size_t n) {
    GroundElement g(f, n);
    for (auto& s : g.c_) s = Scalar::one(f);
    return g;
}

GroundElement GroundElement::unit(const Field& f, std::size_t n, std::size_t i) {
    if (i < 1 || i > n) throw DimensionMismatch("unit index out of range");
    GroundElement g(f, n);
    g.c_[i - 1] = Scalar::one(f);
    return g;
}

GroundElement GroundElement::indicator(const Field& f, std::size_t n, const std::vector<int>& coords) {
    GroundElement g(f, n);
    for (int i : coords) {
        if (i < 1 || static_cast<std::size_t>(i) > n)
            throw DimensionMismatch("indicator coordinate out of range");
        g.c_[i - 1] = Scalar::one(f);
    }
    return g;
}

bool GroundElement::is_zero() const {
    for (const auto& s : c_)
        if (!s.is_zero()) return false;
    return true;
}

bool GroundElement::operator==(const GroundElement& o) const {
    if (f_ != o.f_ || c_.size() != o.c_.size()) return false;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

void GroundElement::check_compatible(const GroundElement& o) const {
    if (c_.size() != o.c_.size())
        throw DimensionMismatch("ground elements of different length");
    if (f_ != o.f_)
        throw FieldMismatch("ground elements over different fields");
}

GroundElement GroundElement::operator+(const GroundElement& o) const {
    check_compatible(o);
    GroundElement r(*this);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
    return r;
}

GroundElement GroundElement::operator-(const GroundElement& o) const {
    check_compatible(o);
    GroundElement r(*this);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
    return r;
}

GroundElement GroundElement::operator*(const GroundElement& o) const {
    check_compatible(o);
    GroundElement r(*this);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] *= o.c_[i];
    return r;
}

GroundElement GroundElement::operator-() const {
    GroundElement r(*this);
    for (auto& s : r.c_) s = -s;
    return r;
}

GroundElement GroundElement::scaled(const Scalar& s) const {
    GroundElement r(*this);
    for (auto& v : r.c_) v *= s;
    return r;
}

std::string GroundElement::str() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) out << ", ";
        out << c_[i].str();
    }
    out << ')';
    return out.str();
}

GroundElement quasi_inverse(const GroundElement& a) {
    GroundElement r(a.field(), a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero()) r[i] = a[i].inverse();
    return r;
}

GroundElement support_idempotent(const GroundElement& a) {
    GroundElement r(a.field(), a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero()) r[i] = Scalar::one(a.field());
    return r;
}

bool is_idempotent(const GroundElement& a) { return a * a == a; }

std::vector<int> support(const GroundElement& a) {
    std::vector<int> s;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero()) s.push_back(static_cast<int>(i) + 1);
    return s;
}

}  // namespace sgr
