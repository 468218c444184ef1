#include "sgr/matrix.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>

namespace sgr {

namespace {
std::atomic<ExecMode> g_mode{ExecMode::Parallel};
}

ExecMode exec_mode() { return g_mode.load(); }
void set_exec_mode(ExecMode m) { g_mode.store(m); }

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols)
    : f_(f), rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const Field& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape mismatch");
    if (f_ != o.f_) throw FieldMismatch("matrix product over different fields");
    Matrix r(f_, rows_, o.cols_);
    const bool par = exec_mode() == ExecMode::Parallel;
#pragma omp parallel for schedule(static) if (par)
    for (long long i = 0; i < static_cast<long long>(rows_); ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& lhs = at(i, k);
            if (lhs.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Scalar& rhs = o.at(k, j);
                if (rhs.is_zero()) continue;
                r.at(i, j) += lhs * rhs;
            }
        }
    }
    return r;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
    if (v.size() != cols_) throw DimensionMismatch("matrix apply shape mismatch");
    std::vector<Scalar> r(rows_, Scalar::zero(f_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(f_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || f_ != o.f_) return false;
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != o.a_[i]) return false;
    return true;
}

namespace {

// Scale row r by s, columns from `from`.
void scale_row(Matrix& m, std::size_t r, const Scalar& s, std::size_t from) {
    for (std::size_t c = from; c < m.cols(); ++c)
        if (!m.at(r, c).is_zero()) m.at(r, c) *= s;
}

// row r -= factor * row p, columns from `from`. factor is nonzero.
void row_axpy(Matrix& m, std::size_t r, std::size_t p, const Scalar& factor, std::size_t from) {
    for (std::size_t c = from; c < m.cols(); ++c) {
        const Scalar& src = m.at(p, c);
        if (!src.is_zero()) m.at(r, c) -= factor * src;
    }
}

template <bool Parallel>
RrefResult rref_impl(Matrix m) {
    RrefResult out{Matrix(m.field(), 0, 0), {}, 0};
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols && lead < rows; ++col) {
        // lowest-index pivot rule
        std::size_t piv = lead;
        while (piv < rows && m.at(piv, col).is_zero()) ++piv;
        if (piv == rows) continue;
        if (piv != lead)
            for (std::size_t c = col; c < cols; ++c) std::swap(m.at(lead, c), m.at(piv, c));
        if (!m.at(lead, col).is_one()) scale_row(m, lead, m.at(lead, col).inverse(), col);

        // The row updates below are mutually independent: each touches only
        // its own row, reading the fixed pivot row.
        if constexpr (Parallel) {
#pragma omp parallel for schedule(static)
            for (long long r = 0; r < static_cast<long long>(rows); ++r) {
                if (static_cast<std::size_t>(r) == lead) continue;
                const Scalar factor = m.at(r, col);
                if (factor.is_zero()) continue;
                m.at(r, col) = Scalar::zero(m.field());
                row_axpy(m, r, lead, factor, col + 1);
            }
        } else {
            for (std::size_t r = 0; r < rows; ++r) {
                if (r == lead) continue;
                const Scalar factor = m.at(r, col);
                if (factor.is_zero()) continue;
                m.at(r, col) = Scalar::zero(m.field());
                row_axpy(m, r, lead, factor, col + 1);
            }
        }
        out.pivot_cols.push_back(col);
        ++lead;
    }
    out.rank = out.pivot_cols.size();
    out.m = std::move(m);
    return out;
}

}  // namespace

RrefResult rref_serial(const Matrix& m) { return rref_impl<false>(m); }
RrefResult rref_parallel(const Matrix& m) { return rref_impl<true>(m); }

RrefResult rref(const Matrix& m) {
    return exec_mode() == ExecMode::Parallel ? rref_parallel(m) : rref_serial(m);
}

std::optional<std::vector<Scalar>> solve(const Matrix& a, const std::vector<Scalar>& b) {
    if (b.size() != a.rows()) throw DimensionMismatch("solve shape mismatch");
    Matrix aug(a.field(), a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    RrefResult r = rref(aug);
    std::vector<Scalar> x(a.cols(), Scalar::zero(a.field()));
    for (std::size_t i = 0; i < r.rank; ++i) {
        if (r.pivot_cols[i] == a.cols()) return std::nullopt;  // 0 = 1 row
        x[r.pivot_cols[i]] = r.m.at(i, a.cols());
    }
    return x;
}

std::vector<std::vector<Scalar>> kernel_basis(const Matrix& a) {
    RrefResult r = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : r.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(a.cols(), Scalar::zero(a.field()));
        v[free] = Scalar::one(a.field());
        for (std::size_t i = 0; i < r.rank; ++i)
            v[r.pivot_cols[i]] = -r.m.at(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Matrix> inverse(const Matrix& a) {
    if (a.rows() != a.cols()) throw DimensionMismatch("inverse of non-square matrix");
    const std::size_t n = a.rows();
    Matrix aug(a.field(), n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n + i) = Scalar::one(a.field());
    }
    RrefResult r = rref(aug);
    if (r.rank < n || r.pivot_cols[n - 1] != n - 1) return std::nullopt;
    Matrix inv(a.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.m.at(i, n + j);
    return inv;
}

void expr_axpy(CertExpr& dst, const Scalar& coeff, const CertExpr& src) {
    if (coeff.is_zero()) return;
    for (const auto& [key, val] : src) {
        auto it = dst.find(key);
        if (it == dst.end()) {
            dst.emplace(key, coeff * val);
        } else {
            it->second += coeff * val;
            if (it->second.is_zero()) dst.erase(it);
        }
    }
}

RowSpace::RowSpace(const Field& f, std::size_t dim, bool track_provenance)
    : f_(f), dim_(dim), track_(track_provenance) {}

bool RowSpace::insert(std::vector<Scalar> v, CertExpr expr) {
    if (v.size() != dim_) throw DimensionMismatch("row space vector of wrong length");
    // reduce against existing rows
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Scalar factor = v[pivots_[i]];
        if (factor.is_zero()) continue;
        const auto& row = rows_[i];
        for (std::size_t c = pivots_[i]; c < dim_; ++c)
            if (!row[c].is_zero()) v[c] -= factor * row[c];
        if (track_) expr_axpy(expr, -factor, exprs_[i]);
    }
    std::size_t piv = 0;
    while (piv < dim_ && v[piv].is_zero()) ++piv;
    if (piv == dim_) return false;
    // normalize
    if (!v[piv].is_one()) {
        const Scalar inv = v[piv].inverse();
        for (std::size_t c = piv; c < dim_; ++c)
            if (!v[c].is_zero()) v[c] *= inv;
        if (track_) {
            CertExpr scaled;
            expr_axpy(scaled, inv, expr);
            expr = std::move(scaled);
        }
    }
    // eliminate the new pivot column from existing rows (keeps canonical RREF)
    std::vector<Scalar> factors(rows_.size(), Scalar::zero(f_));
    for (std::size_t i = 0; i < rows_.size(); ++i) factors[i] = rows_[i][piv];
    const bool par = exec_mode() == ExecMode::Parallel && rows_.size() > 8;
#pragma omp parallel for schedule(static) if (par)
    for (long long i = 0; i < static_cast<long long>(rows_.size()); ++i) {
        const Scalar& factor = factors[i];
        if (factor.is_zero()) continue;
        for (std::size_t c = piv; c < dim_; ++c)
            if (!v[c].is_zero()) rows_[i][c] -= factor * v[c];
    }
    if (track_)
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (!factors[i].is_zero()) expr_axpy(exprs_[i], -factors[i], expr);
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, piv);
    if (track_) exprs_.insert(exprs_.begin() + pos, std::move(expr));
    return true;
}

std::vector<Scalar> RowSpace::reduce(std::vector<Scalar> v) const {
    if (v.size() != dim_) throw DimensionMismatch("row space vector of wrong length");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Scalar factor = v[pivots_[i]];
        if (factor.is_zero()) continue;
        const auto& row = rows_[i];
        for (std::size_t c = pivots_[i]; c < dim_; ++c)
            if (!row[c].is_zero()) v[c] -= factor * row[c];
    }
    return v;
}

bool RowSpace::contains(std::vector<Scalar> v) const {
    v = reduce(std::move(v));
    for (const auto& s : v)
        if (!s.is_zero()) return false;
    return true;
}

std::optional<std::vector<Scalar>> RowSpace::coordinates(std::vector<Scalar> v) const {
    std::vector<Scalar> coeff(rows_.size(), Scalar::zero(f_));
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Scalar factor = v[pivots_[i]];
        if (factor.is_zero()) continue;
        coeff[i] = factor;
        const auto& row = rows_[i];
        for (std::size_t c = pivots_[i]; c < dim_; ++c)
            if (!row[c].is_zero()) v[c] -= factor * row[c];
    }
    for (const auto& s : v)
        if (!s.is_zero()) return std::nullopt;
    return coeff;
}

}  // namespace sgr
