#include "sgr/skew.hpp"

#include <sstream>

namespace sgr {

namespace {

std::uint64_t fnv1a(std::uint64_t h, std::uint64_t v) {
    for (int k = 0; k < 8; ++k) {
        h ^= (v >> (8 * k)) & 0xff;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace

SkewRingContext::SkewRingContext(Action act, Field f, std::size_t dim_bound)
    : act_(std::move(act)), f_(f) {
    if (dim() > dim_bound)
        throw DimensionBoundExceeded("algebra dimension " + std::to_string(dim()) +
                                     " exceeds bound " + std::to_string(dim_bound));
    std::uint64_t h = 0xcbf29ce484222325ULL;
    h = fnv1a(h, f.characteristic());
    h = fnv1a(h, static_cast<std::uint64_t>(n()));
    h = fnv1a(h, static_cast<std::uint64_t>(group().order()));
    for (int g = 0; g < group().order(); ++g) {
        for (int j = 0; j < group().order(); ++j) h = fnv1a(h, group().mul(g, j));
        for (int i = 1; i <= n(); ++i) h = fnv1a(h, act_.perm(g)(i));
    }
    fingerprint_ = h;
}

ContextPtr make_context(Action act, Field f, std::size_t dim_bound) {
    return std::make_shared<const SkewRingContext>(std::move(act), f, dim_bound);
}

SkewElement::SkewElement(ContextPtr ctx) : ctx_(std::move(ctx)) {
    if (!ctx_) throw ContextMismatch("null context");
}

SkewElement SkewElement::one(ContextPtr ctx) {
    auto f = ctx->field();
    auto n = ctx->n();
    SkewElement x(std::move(ctx));
    x.set_term(x.ctx_->group().identity(), GroundElement::ones(f, n));
    return x;
}

SkewElement SkewElement::term(ContextPtr ctx, int g, GroundElement r) {
    SkewElement x(std::move(ctx));
    x.set_term(g, std::move(r));
    return x;
}

SkewElement SkewElement::monomial(ContextPtr ctx, int coord, int g) {
    auto f = ctx->field();
    auto n = ctx->n();
    return term(std::move(ctx), g, GroundElement::unit(f, n, coord));
}

SkewElement SkewElement::from_ground(ContextPtr ctx, GroundElement r) {
    int id = ctx->group().identity();
    return term(std::move(ctx), id, std::move(r));
}

SkewElement SkewElement::from_vector(ContextPtr ctx, const std::vector<Scalar>& v) {
    if (v.size() != ctx->dim()) throw DimensionMismatch("vector length != algebra dimension");
    SkewElement x(ctx);
    for (int g = 0; g < ctx->group().order(); ++g) {
        GroundElement r(ctx->field(), ctx->n());
        bool nz = false;
        for (int i = 1; i <= ctx->n(); ++i) {
            r[i - 1] = v[ctx->basis_index(i, g)];
            nz = nz || !r[i - 1].is_zero();
        }
        if (nz) x.terms_.emplace(g, std::move(r));
    }
    return x;
}

GroundElement SkewElement::coefficient(int g) const {
    auto it = terms_.find(g);
    if (it != terms_.end()) return it->second;
    return GroundElement(ctx_->field(), ctx_->n());
}

std::vector<int> SkewElement::support_groups() const {
    std::vector<int> s;
    for (const auto& [g, r] : terms_) {
        (void)r;
        s.push_back(g);
    }
    return s;
}

std::vector<Scalar> SkewElement::to_vector() const {
    std::vector<Scalar> v(ctx_->dim(), Scalar::zero(ctx_->field()));
    for (const auto& [g, r] : terms_)
        for (int i = 1; i <= ctx_->n(); ++i) v[ctx_->basis_index(i, g)] = r[i - 1];
    return v;
}

void SkewElement::set_term(int g, GroundElement r) {
    if (g < 0 || g >= ctx_->group().order()) throw SchemaError("group index out of range");
    if (r.field() != ctx_->field() || static_cast<int>(r.size()) != ctx_->n())
        throw ContextMismatch("coefficient does not match the ring context");
    if (r.is_zero())
        terms_.erase(g);
    else
        terms_.insert_or_assign(g, std::move(r));
}

SkewElement SkewElement::operator+(const SkewElement& o) const {
    check_same_context(*this, o);
    SkewElement r(*this);
    for (const auto& [g, c] : o.terms_) {
        auto it = r.terms_.find(g);
        if (it == r.terms_.end()) {
            r.terms_.emplace(g, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) r.terms_.erase(it);
        }
    }
    return r;
}

SkewElement SkewElement::operator-() const {
    SkewElement r(*this);
    for (auto& [g, c] : r.terms_) {
        (void)g;
        c = -c;
    }
    return r;
}

SkewElement SkewElement::operator-(const SkewElement& o) const { return *this + (-o); }

SkewElement SkewElement::scaled(const Scalar& s) const {
    SkewElement r(ctx_);
    if (s.is_zero()) return r;
    for (const auto& [g, c] : terms_) r.set_term(g, c.scaled(s));
    return r;
}

bool SkewElement::operator==(const SkewElement& o) const {
    check_same_context(*this, o);
    return terms_ == o.terms_;
}

std::string SkewElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [g, c] : terms_) {
        if (!first) out << " + ";
        out << c.str() << "." << ctx_->group().label(g);
        first = false;
    }
    return out.str();
}

void check_same_context(const SkewElement& x, const SkewElement& y) {
    if (x.context()->fingerprint() != y.context()->fingerprint())
        throw ContextMismatch("elements of different skew ring contexts");
}

SkewElement skew_mul(const SkewElement& x, const SkewElement& y) {
    check_same_context(x, y);
    const auto& ctx = *x.context();
    SkewElement out(x.context());
    std::map<int, GroundElement> acc;
    for (const auto& [g, r] : x.terms()) {
        for (const auto& [h, s] : y.terms()) {
            // (r g)(s h) = r * (g s) * (g h)
            GroundElement coeff = r * ctx.action().act(g, s);
            if (coeff.is_zero()) continue;
            int gh = ctx.group().mul(g, h);
            auto it = acc.find(gh);
            if (it == acc.end())
                acc.emplace(gh, std::move(coeff));
            else
                it->second = it->second + coeff;
        }
    }
    for (auto& [g, c] : acc)
        if (!c.is_zero()) out.set_term(g, std::move(c));
    return out;
}

SkewElement conjugate(int g, const SkewElement& x) {
    const auto& ctx = *x.context();
    const int ginv = ctx.group().inverse(g);
    SkewElement out(x.context());
    for (const auto& [h, r] : x.terms())
        out.set_term(ctx.group().mul(ctx.group().mul(g, h), ginv), ctx.action().act(g, r));
    return out;
}

SkewElement ground_mul_left(const GroundElement& r, const SkewElement& x) {
    SkewElement out(x.context());
    for (const auto& [g, c] : x.terms()) out.set_term(g, r * c);
    return out;
}

SkewElement ground_mul_right(const SkewElement& x, const GroundElement& r) {
    const auto& ctx = *x.context();
    SkewElement out(x.context());
    for (const auto& [g, c] : x.terms()) out.set_term(g, c * ctx.action().act(g, r));
    return out;
}

Matrix regular_rep(const SkewElement& x) {
    const auto& ctx = *x.context();
    const std::size_t dim = ctx.dim();
    Matrix m(ctx.field(), dim, dim);
    for (std::size_t col = 0; col < dim; ++col) {
        auto [coord, g] = ctx.basis_of(col);
        SkewElement prod = skew_mul(x, SkewElement::monomial(x.context(), coord, g));
        for (const auto& [h, r] : prod.terms())
            for (int i = 1; i <= ctx.n(); ++i)
                if (!r[i - 1].is_zero()) m.at(ctx.basis_index(i, h), col) = r[i - 1];
    }
    return m;
}

Matrix regular_rep_right(const SkewElement& x) {
    const auto& ctx = *x.context();
    const std::size_t dim = ctx.dim();
    Matrix m(ctx.field(), dim, dim);
    for (std::size_t col = 0; col < dim; ++col) {
        auto [coord, g] = ctx.basis_of(col);
        SkewElement prod = skew_mul(SkewElement::monomial(x.context(), coord, g), x);
        for (const auto& [h, r] : prod.terms())
            for (int i = 1; i <= ctx.n(); ++i)
                if (!r[i - 1].is_zero()) m.at(ctx.basis_index(i, h), col) = r[i - 1];
    }
    return m;
}

UnitCheck is_unit(const SkewElement& x) {
    UnitCheck out;
    auto sol = solve(regular_rep(x), SkewElement::one(x.context()).to_vector());
    if (!sol) return out;
    SkewElement y = SkewElement::from_vector(x.context(), *sol);
    SkewElement one = SkewElement::one(x.context());
    if (skew_mul(x, y) == one && skew_mul(y, x) == one) {
        out.unit = true;
        out.inverse = std::move(y);
    }
    return out;
}

std::optional<SkewElement> skew_quasi_inverse(const SkewElement& x) {
    if (x.is_zero()) return SkewElement::zero(x.context());
    Matrix m = regular_rep(x) * regular_rep_right(x);  // y -> x y x
    auto sol = solve(m, x.to_vector());
    if (!sol) return std::nullopt;
    return SkewElement::from_vector(x.context(), *sol);
}

}  // namespace sgr
