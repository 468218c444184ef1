#include "sgr/poly.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <sstream>

#include "sgr/errors.hpp"

namespace sgr {

Poly::Poly(const Field& f, std::vector<Scalar> coeffs) : f_(f), c_(std::move(coeffs)) {
    for (const auto& s : c_)
        if (s.field() != f_) throw FieldMismatch("polynomial coefficient field mismatch");
    normalize();
}

void Poly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const Scalar& s) {
    Poly p(s.field());
    if (!s.is_zero()) p.c_.push_back(s);
    return p;
}

Poly Poly::x(const Field& f) {
    Poly p(f);
    p.c_ = {Scalar::zero(f), Scalar::one(f)};
    return p;
}

Poly Poly::from_ints(const Field& f, const std::vector<long long>& coeffs) {
    std::vector<Scalar> c;
    c.reserve(coeffs.size());
    for (long long v : coeffs) c.push_back(Scalar::from_int(f, v));
    return Poly(f, std::move(c));
}

Scalar Poly::coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : Scalar::zero(f_);
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Scalar> c(std::max(c_.size(), o.c_.size()), Scalar::zero(f_));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) + o.coeff(i);
    return Poly(f_, std::move(c));
}

Poly Poly::operator-(const Poly& o) const {
    std::vector<Scalar> c(std::max(c_.size(), o.c_.size()), Scalar::zero(f_));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) - o.coeff(i);
    return Poly(f_, std::move(c));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly(f_);
    std::vector<Scalar> c(c_.size() + o.c_.size() - 1, Scalar::zero(f_));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            if (!o.c_[j].is_zero()) c[i + j] += c_[i] * o.c_[j];
    }
    return Poly(f_, std::move(c));
}

Poly Poly::scaled(const Scalar& s) const {
    std::vector<Scalar> c(c_);
    for (auto& v : c) v *= s;
    return Poly(f_, std::move(c));
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(c_.back().inverse());
}

int Poly::cmp(const Poly& o) const {
    if (degree() != o.degree()) return degree() < o.degree() ? -1 : 1;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        int c = c_[i].cmp(o.c_[i]);
        if (c != 0) return c;
    }
    return 0;
}

Scalar Poly::eval(const Scalar& at) const {
    Scalar acc = Scalar::zero(f_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() < 2) return Poly(f_);
    std::vector<Scalar> c(c_.size() - 1, Scalar::zero(f_));
    for (std::size_t i = 1; i < c_.size(); ++i)
        c[i - 1] = c_[i] * Scalar::from_int(f_, static_cast<long long>(i));
    return Poly(f_, std::move(c));
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i].is_zero()) continue;
        if (!first) out << " + ";
        if (i == 0 || !c_[i].is_one()) out << c_[i].str();
        if (i > 0) {
            if (!c_[i].is_one()) out << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
        first = false;
    }
    return out.str();
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error("polynomial division by zero");
    const Field& f = a.field();
    std::vector<Scalar> rem(a.coeffs());
    const Scalar lead_inv = b.coeffs().back().inverse();
    std::vector<Scalar> qc(a.degree() >= b.degree() ? a.degree() - b.degree() + 1 : 0,
                           Scalar::zero(f));
    for (int i = a.degree(); i >= b.degree() && i >= 0; --i) {
        if (rem[i].is_zero()) continue;
        Scalar c = rem[i] * lead_inv;
        qc[i - b.degree()] = c;
        for (int j = 0; j <= b.degree(); ++j)
            rem[i - b.degree() + j] -= c * b.coeffs()[j];
    }
    return {Poly(f, std::move(qc)), Poly(f, std::move(rem))};
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

GcdExt poly_gcd_ext(const Poly& a, const Poly& b) {
    const Field& f = a.field();
    Poly r0 = a, r1 = b;
    Poly u0 = Poly::constant(Scalar::one(f)), u1 = Poly(f);
    Poly v0 = Poly(f), v1 = Poly::constant(Scalar::one(f));
    while (!r1.is_zero()) {
        auto [q, r] = poly_divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly nu = u0 - q * u1;
        u0 = std::move(u1);
        u1 = std::move(nu);
        Poly nv = v0 - q * v1;
        v0 = std::move(v1);
        v1 = std::move(nv);
    }
    if (r0.is_zero()) return {r0, u0, v0};
    Scalar s = r0.coeffs().back().inverse();
    return {r0.scaled(s), u0.scaled(s), v0.scaled(s)};
}

// ---------------------------------------------------------------------------
// GF(p) factorization

namespace {

Poly poly_powmod(const Poly& base, BigInt exp, const Poly& mod) {
    Poly acc = Poly::constant(Scalar::one(base.field()));
    Poly b = poly_divmod(base, mod).second;
    while (exp > 0) {
        if ((exp & 1) != 0) acc = poly_divmod(acc * b, mod).second;
        b = poly_divmod(b * b, mod).second;
        exp >>= 1;
    }
    return acc;
}

// Berlekamp with exhaustive split scan; used for small p.
void berlekamp_split(const Poly& f, std::vector<Poly>& out) {
    const Field& fld = f.field();
    const auto p = fld.characteristic();
    const int n = f.degree();
    if (n == 1) {
        out.push_back(f.monic());
        return;
    }
    // Frobenius kernel: v with v^p = v (mod f); its dimension equals the
    // number of irreducible factors.
    Poly xp = poly_powmod(Poly::x(fld), BigInt(p), f);
    std::vector<std::vector<Scalar>> mat(n, std::vector<Scalar>(n, Scalar::zero(fld)));
    Poly cur = Poly::constant(Scalar::one(fld));
    for (int j = 0; j < n; ++j) {  // column j = coeffs of x^{jp} mod f, minus e_j
        for (int i = 0; i <= cur.degree(); ++i) mat[i][j] = cur.coeffs()[i];
        mat[j][j] -= Scalar::one(fld);
        cur = poly_divmod(cur * xp, f).second;
    }
    // canonical kernel basis by gaussian elimination
    std::vector<int> pivot_col;
    int lead = 0;
    for (int col = 0; col < n && lead < n; ++col) {
        int piv = lead;
        while (piv < n && mat[piv][col].is_zero()) ++piv;
        if (piv == n) continue;
        std::swap(mat[piv], mat[lead]);
        Scalar inv = mat[lead][col].inverse();
        for (auto& s : mat[lead]) s *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == lead || mat[r][col].is_zero()) continue;
            Scalar factor = mat[r][col];
            for (int c = 0; c < n; ++c) mat[r][c] -= factor * mat[lead][c];
        }
        pivot_col.push_back(col);
        ++lead;
    }
    std::vector<Poly> basis;
    std::vector<bool> is_piv(n, false);
    for (int c : pivot_col) is_piv[c] = true;
    for (int free = 0; free < n; ++free) {
        if (is_piv[free]) continue;
        std::vector<Scalar> v(n, Scalar::zero(fld));
        v[free] = Scalar::one(fld);
        for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -mat[i][free];
        basis.emplace_back(fld, std::move(v));
    }
    const std::size_t target = basis.size();
    std::vector<Poly> factors{f.monic()};
    bool progress = true;
    while (factors.size() < target && progress) {
        progress = false;
        for (const auto& v : basis) {
            if (v.degree() < 1) continue;
            std::vector<Poly> next;
            for (const auto& g : factors) {
                bool split = false;
                if (g.degree() > 1) {
                    for (std::uint32_t c = 0; c < p && !split; ++c) {
                        Poly h = poly_gcd(v - Poly::constant(Scalar::from_int(fld, c)), g);
                        if (h.degree() > 0 && h.degree() < g.degree()) {
                            next.push_back(h);
                            next.push_back(poly_divmod(g, h).first.monic());
                            split = progress = true;
                        }
                    }
                }
                if (!split) next.push_back(g);
            }
            factors = std::move(next);
            if (factors.size() == target) break;
        }
    }
    if (factors.size() != target)
        throw InternalError("Berlekamp splitting did not separate all factors");
    for (auto& g : factors) out.push_back(g.monic());
}

// Equal-degree splitting for odd p with a fixed-seed engine.
void edf_odd(const Poly& f, int d, std::uint64_t p, std::vector<Poly>& out) {
    const Field& fld = f.field();
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    BigInt exp = (boost::multiprecision::pow(BigInt(p), d) - 1) / 2;
    std::mt19937_64 rng(0x5b21c351u ^ (static_cast<std::uint64_t>(f.degree()) << 16) ^
                        static_cast<std::uint64_t>(d));
    for (int attempt = 0; attempt < 512; ++attempt) {
        std::vector<Scalar> uc(f.degree(), Scalar::zero(fld));
        for (auto& s : uc) s = Scalar::from_int(fld, static_cast<long long>(rng() % p));
        Poly u(fld, std::move(uc));
        if (u.degree() < 1) continue;
        Poly g = poly_gcd(u, f);
        if (g.degree() <= 0 || g.degree() >= f.degree()) {
            Poly w = poly_powmod(u, exp, f) - Poly::constant(Scalar::one(fld));
            g = poly_gcd(w, f);
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            edf_odd(g, d, p, out);
            edf_odd(poly_divmod(f, g).first.monic(), d, p, out);
            return;
        }
    }
    throw InternalError("equal-degree splitting did not converge");
}

// Distinct-degree decomposition of a squarefree monic f, odd p.
std::vector<Poly> factor_sf_gf_odd(Poly f, std::uint64_t p) {
    const Field& fld = f.field();
    std::vector<Poly> out;
    Poly h = Poly::x(fld);
    int d = 0;
    while (f.degree() > 0) {
        ++d;
        if (2 * d > f.degree()) {
            out.push_back(f.monic());
            break;
        }
        h = poly_powmod(h, BigInt(p), f);
        Poly g = poly_gcd(h - Poly::x(fld), f);
        if (g.degree() > 0) {
            edf_odd(g, d, p, out);
            f = poly_divmod(f, g).first.monic();
            h = poly_divmod(h, f).second;
        }
    }
    return out;
}

std::vector<Poly> factor_sf_gf(const Poly& f) {
    const auto p = f.field().characteristic();
    std::vector<Poly> out;
    if (f.degree() == 1) {
        out.push_back(f.monic());
        return out;
    }
    if (f.degree() < 1) return out;
    if (p < 64)
        berlekamp_split(f.monic(), out);
    else
        out = factor_sf_gf_odd(f.monic(), p);
    return out;
}

// ---------------------------------------------------------------------------
// Q factorization: factor modulo one prime P above twice the coefficient
// bound of any monic integer factor, then recombine subsets with exact
// integer division tests. No Hensel lifting needed at that prime size.

struct ZPoly {
    std::vector<BigInt> c;  // c[i] = coefficient of s^i
    int degree() const { return static_cast<int>(c.size()) - 1; }
    void normalize() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
};

struct ModPoly {
    std::vector<BigInt> c;  // residues in [0, P)
    int degree() const { return static_cast<int>(c.size()) - 1; }
    void normalize() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
};

ModPoly mod_reduce(const ZPoly& a, const BigInt& P) {
    ModPoly r;
    r.c.reserve(a.c.size());
    for (const auto& v : a.c) {
        BigInt m = v % P;
        if (m < 0) m += P;
        r.c.push_back(m);
    }
    r.normalize();
    return r;
}

ModPoly mod_mul(const ModPoly& a, const ModPoly& b, const BigInt& P) {
    if (a.c.empty() || b.c.empty()) return {};
    ModPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) {
            if (b.c[j] == 0) continue;
            r.c[i + j] = (r.c[i + j] + a.c[i] * b.c[j]) % P;
        }
    }
    r.normalize();
    return r;
}

BigInt mod_inv_big(BigInt a, const BigInt& P) {
    BigInt t = 0, nt = 1, r = P, nr = a % P;
    if (nr < 0) nr += P;
    while (nr != 0) {
        BigInt q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    if (r != 1) throw InternalError("modular inverse does not exist");
    if (t < 0) t += P;
    return t;
}

// q, r with a = q b + r; b need not be monic.
std::pair<ModPoly, ModPoly> mod_divmod(ModPoly a, const ModPoly& b, const BigInt& P) {
    if (b.c.empty()) throw InternalError("modular division by zero");
    ModPoly q;
    if (a.degree() >= b.degree()) q.c.assign(a.degree() - b.degree() + 1, BigInt(0));
    const BigInt lead_inv = mod_inv_big(b.c.back(), P);
    while (a.degree() >= b.degree()) {
        BigInt f = a.c.back() * lead_inv % P;
        int shift = a.degree() - b.degree();
        q.c[shift] = f;
        if (f != 0)
            for (std::size_t j = 0; j < b.c.size(); ++j) {
                BigInt& t = a.c[shift + j];
                t = (t - f * b.c[j]) % P;
                if (t < 0) t += P;
            }
        a.c.pop_back();
        a.normalize();
    }
    q.normalize();
    return {std::move(q), std::move(a)};
}

ModPoly mod_gcd(ModPoly a, ModPoly b, const BigInt& P) {
    while (!b.c.empty()) {
        ModPoly r = mod_divmod(a, b, P).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.c.empty()) {
        BigInt inv = mod_inv_big(a.c.back(), P);
        for (auto& v : a.c) v = v * inv % P;
    }
    return a;
}

ModPoly mod_powmod(const ModPoly& base, BigInt exp, const ModPoly& mod, const BigInt& P) {
    ModPoly acc;
    acc.c = {BigInt(1)};
    ModPoly b = mod_divmod(base, mod, P).second;
    while (exp > 0) {
        if ((exp & 1) != 0) acc = mod_divmod(mod_mul(acc, b, P), mod, P).second;
        b = mod_divmod(mod_mul(b, b, P), mod, P).second;
        exp >>= 1;
    }
    return acc;
}

void mod_edf(const ModPoly& f, int d, const BigInt& P, std::vector<ModPoly>& out,
             std::mt19937_64& rng) {
    if (f.degree() == d) {
        out.push_back(f);
        return;
    }
    const BigInt exp = (boost::multiprecision::pow(P, d) - 1) / 2;
    const int words = static_cast<int>(msb(P) / 64) + 2;
    for (int attempt = 0; attempt < 512; ++attempt) {
        ModPoly u;
        u.c.resize(f.degree());
        for (auto& v : u.c) {
            BigInt acc = 0;
            for (int k = 0; k < words; ++k) acc = (acc << 64) | BigInt(rng());
            v = acc % P;
        }
        u.normalize();
        if (u.degree() < 1) continue;
        ModPoly g = mod_gcd(u, f, P);
        if (g.degree() <= 0 || g.degree() >= f.degree()) {
            ModPoly w = mod_powmod(u, exp, f, P);
            if (w.c.empty()) w.c = {BigInt(0)};
            w.c[0] = (w.c[0] + P - 1) % P;
            w.normalize();
            g = mod_gcd(w, f, P);
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            mod_edf(g, d, P, out, rng);
            mod_edf(mod_divmod(f, g, P).first, d, P, out, rng);
            return;
        }
    }
    throw InternalError("modular equal-degree splitting did not converge");
}

std::vector<ModPoly> mod_factor_squarefree(const ModPoly& f, const BigInt& P) {
    std::vector<ModPoly> out;
    ModPoly rem = f;
    // make monic
    if (!rem.c.empty() && rem.c.back() != 1) {
        BigInt inv = mod_inv_big(rem.c.back(), P);
        for (auto& v : rem.c) v = v * inv % P;
    }
    ModPoly h;
    h.c = {BigInt(0), BigInt(1)};
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(f.degree()));
    int d = 0;
    while (rem.degree() > 0) {
        ++d;
        if (2 * d > rem.degree()) {
            out.push_back(rem);
            break;
        }
        h = mod_powmod(h, P, rem, P);
        ModPoly hx = h;
        if (hx.c.size() < 2) hx.c.resize(2, BigInt(0));
        hx.c[1] = (hx.c[1] + P - 1) % P;
        hx.normalize();
        ModPoly g = mod_gcd(hx, rem, P);
        if (g.degree() > 0) {
            mod_edf(g, d, P, out, rng);
            rem = mod_divmod(rem, g, P).first;
            h = mod_divmod(h, rem, P).second;
        }
    }
    return out;
}

bool miller_rabin(const BigInt& n) {
    if (n < 2) return false;
    for (int small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == small) return true;
        if (n % small == 0) return false;
    }
    BigInt d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // deterministic below 3.3e24; the caller keeps the bound under 2^79 and
    // this witness set is proven complete there
    for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        BigInt x = boost::multiprecision::powm(BigInt(a), d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = x * x % n;
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::optional<ZPoly> zdivide_exact(const ZPoly& a, const ZPoly& b) {
    if (b.c.empty() || b.c.back() != 1) throw InternalError("zdivide needs a monic divisor");
    if (a.degree() < b.degree()) return std::nullopt;
    ZPoly rem = a, quo;
    quo.c.assign(a.degree() - b.degree() + 1, BigInt(0));
    while (rem.degree() >= b.degree()) {
        BigInt c = rem.c.back();
        int shift = rem.degree() - b.degree();
        quo.c[shift] = c;
        for (std::size_t j = 0; j < b.c.size(); ++j) rem.c[shift + j] -= c * b.c[j];
        rem.normalize();
    }
    if (!rem.c.empty()) return std::nullopt;
    return quo;
}

std::vector<ZPoly> factor_z_squarefree(ZPoly f) {
    std::vector<ZPoly> out;
    if (f.degree() <= 1) {
        if (f.degree() == 1) out.push_back(f);
        return out;
    }
    BigInt height = 0;
    for (const auto& c : f.c) height += abs(c);
    const BigInt bound = (height + 1) << (f.degree() + 1);
    if (msb(bound) > 78)
        throw Error("factorization coefficient bound exceeds the deterministic prime range");

    // first primes >= 2*bound with squarefree reduction; keep the candidate
    // with the fewest modular factors (fewer subsets to recombine)
    BigInt P = 2 * bound + 1;
    if ((P & 1) == 0) ++P;
    std::vector<std::pair<std::size_t, BigInt>> candidates;
    int tested = 0;
    while (candidates.size() < 3 && tested < 20000) {
        ++tested;
        P += 2;
        if (!miller_rabin(P)) continue;
        ModPoly fp = mod_reduce(f, P);
        if (fp.degree() != f.degree()) continue;
        ModPoly der;
        der.c.assign(fp.c.size() - 1, BigInt(0));
        for (std::size_t i = 1; i < fp.c.size(); ++i) der.c[i - 1] = fp.c[i] * i % P;
        der.normalize();
        if (mod_gcd(fp, der, P).degree() != 0) continue;
        auto factors = mod_factor_squarefree(fp, P);
        candidates.emplace_back(factors.size(), P);
        if (factors.size() <= 3) break;
    }
    if (candidates.empty()) throw InternalError("no usable prime found for factorization");
    std::sort(candidates.begin(), candidates.end());
    P = candidates.front().second;

    auto mods = mod_factor_squarefree(mod_reduce(f, P), P);
    std::sort(mods.begin(), mods.end(), [](const ModPoly& a, const ModPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.c < b.c;
    });
    auto lift_sym = [&P](const ModPoly& m) {
        ZPoly z;
        z.c.reserve(m.c.size());
        for (const auto& v : m.c) z.c.push_back(v * 2 > P ? v - P : v);
        return z;
    };

    ZPoly rem_f = f;
    std::vector<ModPoly> active = mods;
    std::size_t card = 1;
    while (2 * card <= active.size()) {
        std::vector<std::size_t> idx(card);
        for (std::size_t i = 0; i < card; ++i) idx[i] = i;
        bool found = false;
        while (true) {
            int deg_sum = 0;
            for (auto i : idx) deg_sum += active[i].degree();
            if (2 * deg_sum <= rem_f.degree()) {
                ModPoly prod;
                prod.c = {BigInt(1)};
                for (auto i : idx) prod = mod_mul(prod, active[i], P);
                ZPoly cand = lift_sym(prod);
                bool pretest = !cand.c.empty() && cand.c.back() == 1;
                if (pretest && rem_f.c.front() != 0)
                    pretest = cand.c.front() != 0 && rem_f.c.front() % cand.c.front() == 0;
                if (pretest) {
                    if (auto quo = zdivide_exact(rem_f, cand)) {
                        out.push_back(cand);
                        rem_f = std::move(*quo);
                        std::vector<ModPoly> next;
                        for (std::size_t i = 0; i < active.size(); ++i)
                            if (std::find(idx.begin(), idx.end(), i) == idx.end())
                                next.push_back(active[i]);
                        active = std::move(next);
                        found = true;
                        break;
                    }
                }
            }
            int pos = static_cast<int>(card) - 1;
            while (pos >= 0 && idx[pos] == active.size() - card + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (std::size_t i = pos + 1; i < card; ++i) idx[i] = idx[i - 1] + 1;
        }
        if (!found) ++card;  // factors of this cardinality exhausted
    }
    if (rem_f.degree() > 0) out.push_back(rem_f);
    return out;
}

Poly zpoly_to_rational(const ZPoly& z, const BigInt& scale) {
    // undo the substitution t = s/c: h(s) -> c^{-deg h} h(c t)
    const Field q = Field::rationals();
    std::vector<Scalar> coeffs;
    const int d = z.degree();
    for (int i = 0; i <= d; ++i) {
        BigRat v(z.c[i]);
        v *= BigRat(boost::multiprecision::pow(scale, i), boost::multiprecision::pow(scale, d));
        coeffs.push_back(Scalar::from_rat(v));
    }
    return Poly(q, std::move(coeffs));
}

std::vector<Poly> factor_sf_rationals(const Poly& f) {
    std::vector<Poly> out;
    if (f.degree() == 1) {
        out.push_back(f.monic());
        return out;
    }
    if (f.degree() < 1) return out;
    Poly g = f;
    const Field q = Field::rationals();
    if (g.coeff(0).is_zero()) {  // strip the root at zero
        out.push_back(Poly::x(q));
        std::vector<Scalar> shifted(g.coeffs().begin() + 1, g.coeffs().end());
        g = Poly(q, std::move(shifted));
        if (g.degree() < 1) return out;
    }
    BigInt c = 1;
    for (const auto& s : g.coeffs())
        c = boost::multiprecision::lcm(c, BigInt(denominator(s.rat())));
    ZPoly z;
    const int d = g.degree();
    for (int i = 0; i <= d; ++i) {
        BigRat v = g.coeff(i).rat() * BigRat(boost::multiprecision::pow(c, d - i));
        if (denominator(v) != 1) throw InternalError("denominator clearing failed");
        z.c.push_back(BigInt(numerator(v)));
    }
    for (auto& zf : factor_z_squarefree(z)) out.push_back(zpoly_to_rational(zf, c));
    return out;
}

}  // namespace

std::vector<PolyFactor> factor_poly(const Poly& input) {
    if (!input.is_monic()) throw Error("factor_poly expects a monic polynomial");
    const Field& fld = input.field();
    std::vector<PolyFactor> result;
    Poly f = input;

    while (f.degree() > 0) {
        Poly der = f.derivative();
        if (der.is_zero()) {
            // char p and f = h(t^p); over the prime field f = (same coeffs)(t)^p
            const auto p = fld.characteristic();
            if (p == 0) throw InternalError("zero derivative in characteristic 0");
            std::vector<Scalar> hc;
            for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) hc.push_back(f.coeff(i));
            for (auto& [qp, m] : factor_poly(Poly(fld, std::move(hc))))
                result.push_back({qp, m * static_cast<int>(p)});
            f = Poly::constant(Scalar::one(fld));
            break;
        }
        Poly gcd_fd = poly_gcd(f, der);
        Poly sf = poly_divmod(f, gcd_fd).first.monic();
        auto irr = fld.rational() ? factor_sf_rationals(sf) : factor_sf_gf(sf);
        for (auto& qp : irr) {
            Poly qm = qp.monic();
            int mult = 0;
            while (true) {
                auto [quo, rem] = poly_divmod(f, qm);
                if (!rem.is_zero()) break;
                f = quo;
                ++mult;
            }
            if (mult > 0) result.push_back({qm, mult});
        }
    }
    std::sort(result.begin(), result.end(),
              [](const PolyFactor& a, const PolyFactor& b) { return a.p.cmp(b.p) < 0; });
    std::vector<PolyFactor> merged;
    for (auto& pf : result) {
        if (!merged.empty() && merged.back().p == pf.p)
            merged.back().multiplicity += pf.multiplicity;
        else
            merged.push_back(pf);
    }
    Poly check = Poly::constant(Scalar::one(fld));
    for (const auto& [qp, m] : merged)
        for (int k = 0; k < m; ++k) check = check * qp;
    if (!(check == input)) throw InternalError("factorization self-check failed");
    return merged;
}

bool is_irreducible(const Poly& monic) {
    if (monic.degree() < 1) return false;
    auto f = factor_poly(monic);
    return f.size() == 1 && f.front().multiplicity == 1;
}

}  // namespace sgr
