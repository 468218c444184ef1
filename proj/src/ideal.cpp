#include "sgr/ideal.hpp"

#include <algorithm>
#include <sstream>

namespace sgr {

namespace {

// Composition of multiplier codes (-1 = ring identity, else monomial index).
// Monomial products are 0 or another monomial with coefficient 1:
// (e_i g)(e_j h) = e_i (g e_j) (gh), nonzero iff g(j) = i.
std::optional<int> mono_compose(const SkewRingContext& ctx, int a, int b) {
    if (a == -1) return b;
    if (b == -1) return a;
    auto [i, g] = ctx.basis_of(static_cast<std::size_t>(a));
    auto [j, h] = ctx.basis_of(static_cast<std::size_t>(b));
    if (ctx.action().perm(g)(j) != i) return std::nullopt;
    return static_cast<int>(ctx.basis_index(i, ctx.group().mul(g, h)));
}

SkewElement code_to_element(const ContextPtr& ctx, int code) {
    if (code == -1) return SkewElement::one(ctx);
    auto [i, g] = ctx->basis_of(static_cast<std::size_t>(code));
    return SkewElement::monomial(ctx, i, g);
}

}  // namespace

IdealBasis::IdealBasis(ContextPtr ctx, RowSpace rows) : ctx_(std::move(ctx)), rows_(std::move(rows)) {
    if (rows_.dim() != ctx_->dim()) throw ContextMismatch("row space dimension != algebra dimension");
}

bool IdealBasis::contains(const SkewElement& x) const { return rows_.contains(x.to_vector()); }

std::vector<SkewElement> IdealBasis::basis_elements() const {
    std::vector<SkewElement> out;
    out.reserve(rows_.rank());
    for (const auto& r : rows_.rows()) out.push_back(SkewElement::from_vector(ctx_, r));
    return out;
}

bool IdealBasis::verify_closed() const {
    if (is_full()) return true;
    for (const auto& row : rows_.rows()) {
        SkewElement x = SkewElement::from_vector(ctx_, row);
        for (std::size_t m = 0; m < ctx_->dim(); ++m) {
            auto [i, g] = ctx_->basis_of(m);
            SkewElement mono = SkewElement::monomial(ctx_, i, g);
            if (!rows_.contains(skew_mul(mono, x).to_vector())) return false;
            if (!rows_.contains(skew_mul(x, mono).to_vector())) return false;
        }
    }
    return true;
}

IdealBasis ideal_closure(const ContextPtr& ctx, const std::vector<SkewElement>& gens,
                         const ClosureOptions& opts) {
    const std::size_t dim = ctx->dim();
    RowSpace rs(ctx->field(), dim, opts.track_provenance);
    std::vector<std::pair<std::vector<Scalar>, CertExpr>> work;
    std::size_t next_work = 0;
    auto insert_tracked = [&](std::vector<Scalar> v, CertExpr e) {
        // find the inserted row afterwards via rank growth + pivot search
        std::vector<std::size_t> old_pivots = rs.pivots();
        if (!rs.insert(std::move(v), std::move(e))) return false;
        // locate the new pivot
        const auto& piv = rs.pivots();
        std::size_t new_row = piv.size() - 1;
        for (std::size_t i = 0; i < piv.size(); ++i) {
            if (i >= old_pivots.size() || old_pivots[i] != piv[i]) {
                new_row = i;
                break;
            }
        }
        work.emplace_back(rs.rows()[new_row], opts.track_provenance ? rs.expr(new_row) : CertExpr{});
        return true;
    };

    for (const auto& g : gens) {
        if (g.context()->fingerprint() != ctx->fingerprint())
            throw ContextMismatch("generator from a different context");
        CertExpr e;
        if (opts.track_provenance) e.emplace(std::pair<int, int>{-1, -1}, Scalar::one(ctx->field()));
        insert_tracked(g.to_vector(), std::move(e));
    }

    while (next_work < work.size() && !rs.full()) {
        auto [vec, expr] = work[next_work++];
        SkewElement x = SkewElement::from_vector(ctx, vec);
        for (std::size_t m = 0; m < dim && !rs.full(); ++m) {
            auto [i, g] = ctx->basis_of(m);
            SkewElement mono = SkewElement::monomial(ctx, i, g);
            // left product
            {
                SkewElement p = skew_mul(mono, x);
                if (!p.is_zero()) {
                    CertExpr pe;
                    if (opts.track_provenance)
                        for (const auto& [key, c] : expr)
                            if (auto left = mono_compose(*ctx, static_cast<int>(m), key.first)) {
                                auto k = std::pair<int, int>{*left, key.second};
                                auto it = pe.find(k);
                                if (it == pe.end())
                                    pe.emplace(k, c);
                                else {
                                    it->second += c;
                                    if (it->second.is_zero()) pe.erase(it);
                                }
                            }
                    insert_tracked(p.to_vector(), std::move(pe));
                }
            }
            // right product
            {
                SkewElement p = skew_mul(x, mono);
                if (!p.is_zero()) {
                    CertExpr pe;
                    if (opts.track_provenance)
                        for (const auto& [key, c] : expr)
                            if (auto right = mono_compose(*ctx, key.second, static_cast<int>(m))) {
                                auto k = std::pair<int, int>{key.first, *right};
                                auto it = pe.find(k);
                                if (it == pe.end())
                                    pe.emplace(k, c);
                                else {
                                    it->second += c;
                                    if (it->second.is_zero()) pe.erase(it);
                                }
                            }
                    insert_tracked(p.to_vector(), std::move(pe));
                }
            }
        }
    }
    return IdealBasis(ctx, std::move(rs));
}

StructureReport structure_oracle(const Action& act) {
    StructureReport rep;
    auto orbs = orbits(act);
    const auto& grp = act.group();
    bool all_trivial = true;
    for (const auto& orbit : orbs) {
        StructureBlock blk;
        blk.orbit = orbit;
        const int base = orbit.front();
        for (int g = 0; g < grp.order(); ++g)
            if (act.perm(g)(base) == base) blk.stabilizer.push_back(g);
        if (blk.orbit.size() * blk.stabilizer.size() != static_cast<std::size_t>(grp.order()))
            throw InternalError("orbit-stabilizer law violated");
        std::ostringstream d;
        d << "M_" << blk.orbit.size() << "(k[H]) with |H| = " << blk.stabilizer.size();
        blk.descriptor = d.str();
        if (blk.stabilizer.size() > 1) all_trivial = false;
        rep.blocks.push_back(std::move(blk));
    }
    rep.simple = orbs.size() == 1 && all_trivial;
    rep.reasoning.push_back("the algebra decomposes over the coordinate orbits into blocks "
                            "M_|orbit|(k[stabilizer])");
    if (orbs.size() > 1)
        rep.reasoning.push_back("more than one orbit: the decomposition has " +
                                std::to_string(orbs.size()) + " blocks, so the ring is not simple");
    else if (!all_trivial)
        rep.reasoning.push_back(
            "nontrivial stabilizer: the single block is a matrix ring over a group algebra "
            "k[H] with |H| > 1, whose augmentation ideal induces a proper ideal");
    else
        rep.reasoning.push_back(
            "one orbit with trivial stabilizer: the ring is a full matrix ring over k, "
            "hence simple in every characteristic");
    return rep;
}

namespace {

// trace of left multiplication by a monomial, by its diagonal action
Scalar monomial_trace(const SkewRingContext& ctx, std::size_t m) {
    auto [i, g] = ctx.basis_of(m);
    const auto& grp = ctx.group();
    Scalar tr = Scalar::zero(ctx.field());
    // (e_i g)(e_j h) = [g(j) = i] e_i (gh): diagonal iff gh = h and j = i,
    // i.e. g = 1; summed over all h with g(j) = i.
    if (g != grp.identity()) return tr;
    (void)i;
    return Scalar::from_int(ctx.field(), grp.order());
}

std::vector<std::vector<Scalar>> center_basis(const ContextPtr& ctx) {
    const std::size_t dim = ctx->dim();
    const Field& f = ctx->field();
    const auto& grp = ctx->group();
    // start from the standard basis, intersect with each commutant kernel
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t i = 0; i < dim; ++i) {
        std::vector<Scalar> v(dim, Scalar::zero(f));
        v[i] = Scalar::one(f);
        basis.push_back(std::move(v));
    }
    std::vector<SkewElement> constraints;
    for (int i = 1; i <= ctx->n(); ++i)
        constraints.push_back(SkewElement::from_ground(ctx, GroundElement::unit(f, ctx->n(), i)));
    for (int g = 0; g < grp.order(); ++g) {
        if (g == grp.identity()) continue;
        constraints.push_back(SkewElement::term(ctx, g, GroundElement::ones(f, ctx->n())));
    }
    for (const auto& a : constraints) {
        if (basis.empty()) break;
        // images T(b) = a b - b a stacked as columns; kernel in basis coords
        Matrix img(f, dim, basis.size());
        for (std::size_t k = 0; k < basis.size(); ++k) {
            SkewElement b = SkewElement::from_vector(ctx, basis[k]);
            std::vector<Scalar> t = (skew_mul(a, b) - skew_mul(b, a)).to_vector();
            for (std::size_t r = 0; r < dim; ++r) img.at(r, k) = t[r];
        }
        auto ker = kernel_basis(img);
        std::vector<std::vector<Scalar>> next;
        for (const auto& mu : ker) {
            std::vector<Scalar> v(dim, Scalar::zero(f));
            for (std::size_t k = 0; k < basis.size(); ++k) {
                if (mu[k].is_zero()) continue;
                for (std::size_t r = 0; r < dim; ++r)
                    if (!basis[k][r].is_zero()) v[r] += mu[k] * basis[k][r];
            }
            next.push_back(std::move(v));
        }
        basis = std::move(next);
    }
    // canonicalize
    RowSpace rs(f, dim);
    for (auto& v : basis) rs.insert(std::move(v));
    return rs.rows();
}

}  // namespace

Poly algebra_min_poly(const ContextPtr& ctx, const std::vector<Scalar>& elem) {
    const Field& f = ctx->field();
    const std::size_t dim = ctx->dim();
    SkewElement z = SkewElement::from_vector(ctx, elem);
    RowSpace span(f, dim);
    std::vector<std::vector<Scalar>> powers;
    std::vector<Scalar> cur = SkewElement::one(ctx).to_vector();
    while (span.insert(cur)) {
        powers.push_back(cur);
        cur = skew_mul(SkewElement::from_vector(ctx, cur), z).to_vector();
    }
    // cur = z^m is dependent on the earlier powers; solve for the combination
    Matrix m(f, dim, powers.size());
    for (std::size_t k = 0; k < powers.size(); ++k)
        for (std::size_t r = 0; r < dim; ++r) m.at(r, k) = powers[k][r];
    auto lam = solve(m, cur);
    if (!lam) throw InternalError("minimal polynomial solve failed");
    std::vector<Scalar> coeffs(powers.size() + 1, Scalar::zero(f));
    for (std::size_t k = 0; k < powers.size(); ++k) coeffs[k] = -(*lam)[k];
    coeffs[powers.size()] = Scalar::one(f);
    return Poly(f, std::move(coeffs));
}

bool verify_nilpotent(const IdealBasis& ideal) {
    if (ideal.is_zero()) return true;
    const auto& ctx = ideal.context();
    const std::vector<SkewElement> jgens = ideal.basis_elements();
    std::vector<SkewElement> cur = jgens;  // spans J^k
    std::size_t prev_dim = ideal.dimension();
    for (std::size_t step = 0; step <= ctx->dim(); ++step) {
        RowSpace next(ctx->field(), ctx->dim());
        std::vector<SkewElement> next_elems;
        for (const auto& a : cur)
            for (const auto& b : jgens) {
                SkewElement p = skew_mul(a, b);
                if (!p.is_zero() && next.insert(p.to_vector())) next_elems.push_back(std::move(p));
            }
        if (next.rank() == 0) return true;
        // the power chain J ⊇ J^2 ⊇ ... must shrink strictly until zero
        if (next.rank() >= prev_dim) return false;
        prev_dim = next.rank();
        cur = std::move(next_elems);
    }
    return false;
}

LinearVerdict is_simple_linear(const ContextPtr& ctx) {
    LinearVerdict out;
    const Field& f = ctx->field();
    const std::size_t dim = ctx->dim();
    if (!f.rational() && f.characteristic() <= dim) {
        out.status = LinearStatus::Unsupported;
        out.reasoning.push_back("characteristic " + std::to_string(f.characteristic()) +
                                " is not above the algebra dimension " + std::to_string(dim) +
                                "; the trace-form radical criterion does not apply — deferring "
                                "to the structure oracle");
        return out;
    }
    // radical = kernel of the trace form Tr(L_x L_y); the regular
    // representation is multiplicative, so the Gram matrix over basis
    // monomials is Tr(L_{b_k b_l}) with monomial products.
    std::vector<Scalar> mono_tr(dim, Scalar::zero(f));
    for (std::size_t m = 0; m < dim; ++m) mono_tr[m] = monomial_trace(*ctx, m);
    Matrix gram(f, dim, dim);
    for (std::size_t k = 0; k < dim; ++k) {
        auto [i, g] = ctx->basis_of(k);
        for (std::size_t l = 0; l < dim; ++l) {
            auto [j, h] = ctx->basis_of(l);
            if (ctx->action().perm(g)(j) != i) continue;  // product vanishes
            gram.at(k, l) = mono_tr[ctx->basis_index(i, ctx->group().mul(g, h))];
        }
    }
    auto rad = kernel_basis(gram);
    out.radical_dim = rad.size();
    if (!rad.empty()) {
        out.status = LinearStatus::NotSimple;
        std::vector<SkewElement> gens;
        for (const auto& v : rad) gens.push_back(SkewElement::from_vector(ctx, v));
        IdealBasis j = ideal_closure(ctx, gens);
        out.radical_nilpotent_checked = verify_nilpotent(j);
        if (!out.radical_nilpotent_checked)
            throw InternalError("trace-form kernel is not nilpotent; radical criterion misapplied");
        out.reasoning.push_back("the trace form of the regular representation is degenerate: "
                                "its kernel is a nonzero nilpotent ideal (verified), so the ring "
                                "is not semisimple and not simple");
        out.witness_ideal = std::move(j);
        return out;
    }
    out.reasoning.push_back(
        "the trace form of the regular representation is nondegenerate, so the radical is zero");

    auto zbasis = center_basis(ctx);
    out.center_dim = zbasis.size();
    out.reasoning.push_back("center dimension " + std::to_string(zbasis.size()));
    for (const auto& z : zbasis) {
        Poly mp = algebra_min_poly(ctx, z);
        auto factors = factor_poly(mp);
        if (factors.size() == 1 && factors.front().multiplicity == 1) continue;
        if (factors.front().multiplicity != 1)
            throw InternalError("center element with non-squarefree minimal polynomial "
                                "in a semisimple ring");
        // coprime split p = f1 * rest; Bezout gives a central idempotent
        const Poly& f1 = factors.front().p;
        Poly rest = Poly::constant(Scalar::one(f));
        for (std::size_t k = 1; k < factors.size(); ++k) rest = rest * factors[k].p;
        GcdExt bez = poly_gcd_ext(f1, rest);
        if (bez.g.degree() != 0) throw InternalError("split factors are not coprime");
        // idempotent = (u * f1)(z), normalized by the gcd constant
        Poly uf = bez.u * f1;
        Scalar norm = bez.g.coeff(0).inverse();
        SkewElement zel = SkewElement::from_vector(ctx, z);
        SkewElement eps = SkewElement::zero(ctx);
        for (int d = uf.degree(); d >= 0; --d) {
            eps = skew_mul(eps, zel);
            if (!uf.coeff(d).is_zero())
                eps = eps + SkewElement::one(ctx).scaled(uf.coeff(d) * norm);
        }
        SkewElement one = SkewElement::one(ctx);
        if (skew_mul(eps, eps) != eps || eps.is_zero() || eps == one)
            throw InternalError("constructed central idempotent failed verification");
        out.status = LinearStatus::NotSimple;
        out.central_idempotent = eps;
        out.witness_ideal = ideal_closure(ctx, {eps});
        if (out.witness_ideal->is_full() || out.witness_ideal->is_zero())
            throw InternalError("central idempotent ideal is not proper");
        out.reasoning.push_back(
            "a center basis element has minimal polynomial " + mp.str() +
            " which factors; the Bezout split yields a nontrivial central idempotent, so the "
            "ring is a direct sum of two nonzero ideals");
        return out;
    }
    out.status = LinearStatus::Simple;
    out.reasoning.push_back(
        "every center basis element has an irreducible minimal polynomial; elements with "
        "irreducible minimal polynomial share one normalized trace across simple factors, so "
        "they span a proper subspace unless the center is a field — the center is a field and "
        "the semisimple ring has a single block");
    return out;
}

SkewElement evaluate_certificate(const Certificate& cert) {
    SkewElement acc = SkewElement::zero(cert.x.context());
    for (const auto& [a, b] : cert.pairs) acc = acc + skew_mul(skew_mul(a, cert.x), b);
    return acc;
}

CertificateResult simplicity_certificate(const SkewElement& x) {
    CertificateResult out;
    const auto& ctx = x.context();
    IdealBasis ideal = ideal_closure(ctx, {x}, {.track_provenance = true});
    if (!ideal.is_full()) {
        out.proper_ideal = std::move(ideal);
        return out;
    }
    auto coords = ideal.row_space().coordinates(SkewElement::one(ctx).to_vector());
    if (!coords) throw InternalError("full ideal does not contain 1");
    CertExpr total;
    for (std::size_t r = 0; r < coords->size(); ++r)
        expr_axpy(total, (*coords)[r], ideal.row_space().expr(r));
    Certificate cert{x, {}};
    for (const auto& [key, c] : total) {
        if (c.is_zero()) continue;
        cert.pairs.emplace_back(code_to_element(ctx, key.first).scaled(c),
                                code_to_element(ctx, key.second));
    }
    if (evaluate_certificate(cert) != SkewElement::one(ctx))
        throw InternalError("certificate failed direct evaluation");
    out.certificate = std::move(cert);
    return out;
}

std::optional<SkewElement> proper_ideal_witness(const ContextPtr& ctx) {
    const Action& act = ctx->action();
    auto rep = structure_oracle(act);
    if (rep.simple) return std::nullopt;
    SkewElement w = SkewElement::zero(ctx);
    auto orbs = orbits(act);
    if (orbs.size() > 1) {
        // least orbit (sorted element lists) -> its indicator
        w = SkewElement::from_ground(
            ctx, GroundElement::indicator(ctx->field(), act.degree(), orbs.front()));
    } else {
        // transitive with a nontrivial stabilizer: e_i (1 - g)
        int coord = 0, elem = -1;
        for (int i = 1; i <= act.degree() && elem < 0; ++i)
            for (int g = 0; g < act.group().order(); ++g) {
                if (g == act.group().identity()) continue;
                if (act.perm(g)(i) == i) {
                    coord = i;
                    elem = g;
                    break;
                }
            }
        if (elem < 0) throw InternalError("oracle says not simple but the action is free");
        GroundElement ei = GroundElement::unit(ctx->field(), act.degree(), coord);
        w = SkewElement::from_ground(ctx, ei) - SkewElement::term(ctx, elem, ei);
    }
    IdealBasis closure = ideal_closure(ctx, {w});
    if (closure.is_zero() || closure.is_full())
        throw InternalError("proper ideal witness closure is not a proper nonzero ideal");
    return w;
}

ReduceStep length_reduce(const SkewElement& x) {
    if (x.is_zero()) throw ZeroInput("length reduction of zero");
    const auto& ctx = x.context();
    const Field& f = ctx->field();
    const auto& grp = ctx->group();
    const int n = ctx->n();

    // normalize: translate the leading support element to the identity and
    // make the leading coefficient an idempotent
    const int g1 = x.terms().begin()->first;
    const GroundElement r1 = x.terms().begin()->second;
    const GroundElement s = quasi_inverse(r1);
    const GroundElement e = support_idempotent(r1);
    SkewElement xt = ground_mul_left(
        s, skew_mul(x, SkewElement::term(ctx, grp.inverse(g1), GroundElement::ones(f, n))));
    if (xt.is_zero() || xt.coefficient(grp.identity()) != e)
        throw InternalError("normalization lost the idempotent head");
    if (xt.length() < x.length())
        return {ReduceStep::Kind::Shorter, xt, std::nullopt, std::nullopt,
                "normalization already shortened the element"};

    auto shorter = [&](SkewElement c, const std::string& note) -> ReduceStep {
        return {ReduceStep::Kind::Shorter, std::move(c), std::nullopt, std::nullopt, note};
    };

    // (a) ground commutators r x - x r, support-shrinking
    for (int i = 1; i <= n; ++i) {
        GroundElement r = GroundElement::unit(f, n, i);
        SkewElement c = ground_mul_left(r, xt) - ground_mul_right(xt, r);
        if (!c.is_zero()) {
            if (c.length() >= xt.length())
                throw InternalError("ground commutator did not shrink the support");
            return shorter(std::move(c), "ground commutator with coordinate idempotent " +
                                             std::to_string(i));
        }
    }
    // (b) group commutators h x - x h (kept only when strictly shorter)
    for (int h = 0; h < grp.order(); ++h) {
        if (h == grp.identity()) continue;
        SkewElement he = SkewElement::term(ctx, h, GroundElement::ones(f, n));
        SkewElement c = skew_mul(he, xt) - skew_mul(xt, he);
        if (!c.is_zero() && c.length() < xt.length())
            return shorter(std::move(c), "group commutator with " + grp.label(h));
    }

    if (xt.length() >= 2) {
        auto it = xt.terms().begin();
        ++it;
        const int g2 = it->first;
        const GroundElement r2 = it->second;
        const GroundElement y = quasi_inverse(r2);
        const GroundElement yr2 = y * r2;  // support idempotent of r2
        // (c) x - x * alpha(g2^-1)(y r2)
        {
            SkewElement c = xt - ground_mul_right(xt, ctx->action().act(grp.inverse(g2), yr2));
            if (!c.is_zero()) {
                if (c.length() >= xt.length())
                    throw InternalError("candidate (c) did not shrink the support");
                return shorter(std::move(c), "right recombination through the quasi-inverse");
            }
        }
        // (d) x - (r2 y) x
        {
            SkewElement c = xt - ground_mul_left(r2 * y, xt);
            if (!c.is_zero()) {
                if (c.length() >= xt.length())
                    throw InternalError("candidate (d) did not shrink the support");
                return shorter(std::move(c), "left recombination through the quasi-inverse");
            }
        }
        // (e) x e - x
        {
            SkewElement c = ground_mul_right(xt, e) - xt;
            if (!c.is_zero()) {
                if (c.length() >= xt.length())
                    throw InternalError("candidate (e) did not shrink the support");
                return shorter(std::move(c), "right multiplication by the head idempotent");
            }
        }
        // all candidates vanish: the second term carries a corner-inner
        // automorphism witness
        GroundElement ep = ctx->action().act(g2, e);
        CornerInnerWitness w{e, ep, r2 * ep, ep * y * e};
        const int gobs = grp.inverse(g2);
        if (!verify_corner_inner_witness(ctx->action(), gobs, w))
            throw InternalError("constructed corner-inner obstruction failed verification");
        return {ReduceStep::Kind::Obstruction, std::nullopt, gobs, w,
                "all reduction candidates vanish; " + grp.label(gobs) +
                    " acts corner-inner on the head corner"};
    }

    // length 1: x ~ e in R; greedily cover orbits with conjugates of e
    if (e == GroundElement::ones(f, n))
        return {ReduceStep::Kind::Unit, SkewElement::one(ctx), std::nullopt, std::nullopt,
                "the head idempotent is the ring identity"};
    GroundElement cover = e;
    for (int h = 0; h < grp.order(); ++h) {
        GroundElement he = ctx->action().act(h, e);
        for (int i = 0; i < n; ++i)
            if (!he[i].is_zero() && cover[i].is_zero()) cover[i] = Scalar::one(f);
    }
    if (cover == GroundElement::ones(f, n))
        return {ReduceStep::Kind::Unit, SkewElement::one(ctx), std::nullopt, std::nullopt,
                "conjugates of the head idempotent cover every coordinate; their masked sum "
                "is the ring identity"};
    return {ReduceStep::Kind::Stalled, SkewElement::from_ground(ctx, cover), std::nullopt,
            std::nullopt,
            "conjugates of the head idempotent cover only a proper orbit union; the ideal "
            "stabilizes below the identity"};
}

IntersectionReport check_g_invariant_intersection(const IdealBasis& ideal) {
    IntersectionReport rep;
    const auto& ctx = ideal.context();
    const std::size_t dim = ctx->dim();
    const int n = ctx->n();
    const int id = ctx->group().identity();
    rep.ideal_dim = ideal.dimension();

    // column order: non-identity block first, identity block last; rows with
    // pivots in the trailing block are supported inside R
    std::vector<std::size_t> order;
    for (std::size_t c = 0; c < dim; ++c)
        if (ctx->basis_of(c).second != id) order.push_back(c);
    const std::size_t split = order.size();
    for (int i = 1; i <= n; ++i) order.push_back(ctx->basis_index(i, id));

    Matrix m(ctx->field(), ideal.dimension(), dim);
    for (std::size_t r = 0; r < ideal.dimension(); ++r)
        for (std::size_t c = 0; c < dim; ++c) m.at(r, c) = ideal.row_space().rows()[r][order[c]];
    RrefResult rr = rref(m);
    for (std::size_t r = 0; r < rr.rank; ++r) {
        if (rr.pivot_cols[r] < split) continue;
        GroundElement v(ctx->field(), n);
        for (int i = 0; i < n; ++i) v[i] = rr.m.at(r, split + i);
        rep.intersection_basis.push_back(std::move(v));
    }
    rep.intersection_dim = rep.intersection_basis.size();
    rep.g_simple_action = is_g_simple(ctx->action(), ctx->field()).g_simple;
    if (rep.g_simple_action && rep.intersection_dim > 0) {
        rep.forced_full = ideal.is_full();
        if (!rep.forced_full)
            throw InternalError(
                "a proper ideal intersects R nontrivially although the action is G-simple");
    }
    return rep;
}

}  // namespace sgr
