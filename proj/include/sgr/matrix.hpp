#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "sgr/ground.hpp"
#include "sgr/scalar.hpp"

namespace sgr {

// Execution mode of the elimination kernels. Parallel uses OpenMP over the
// independent row updates of one elimination step; pivot selection stays
// sequential (lowest index), so results are bit-identical to Serial for any
// thread count.
enum class ExecMode { Serial, Parallel };

ExecMode exec_mode();
void set_exec_mode(ExecMode m);

/// Dense exact matrix over one field.
class Matrix {
public:
    Matrix(const Field& f, std::size_t rows, std::size_t cols);  // zeros
    static Matrix identity(const Field& f, std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return f_; }

    const Scalar& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    Scalar& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }

    Matrix operator*(const Matrix& o) const;
    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;
    Matrix transpose() const;
    bool operator==(const Matrix& o) const;

private:
    Field f_;
    std::size_t rows_, cols_;
    std::vector<Scalar> a_;
};

struct RrefResult {
    Matrix m;
    std::vector<std::size_t> pivot_cols;  // ascending
    std::size_t rank = 0;
};

// Canonical reduced row echelon form: leading ones, zeros above and below
// pivots, lowest-index pivot rule. rref() dispatches on the process-wide
// ExecMode; the _serial/_parallel kernels are the reference pair.
RrefResult rref(const Matrix& m);
RrefResult rref_serial(const Matrix& m);
RrefResult rref_parallel(const Matrix& m);

/// Particular solution of A x = b with zeros in all free variables,
/// or nullopt when inconsistent.
std::optional<std::vector<Scalar>> solve(const Matrix& a, const std::vector<Scalar>& b);

/// Canonical kernel basis from the RREF (one vector per free column,
/// free-column order ascending).
std::vector<std::vector<Scalar>> kernel_basis(const Matrix& a);

std::optional<Matrix> inverse(const Matrix& a);

// Provenance expression attached to a row: a sum of terms
// coeff * (left . x . right) where left/right are encoded multipliers
// (-1 = the ring identity, otherwise an algebra basis monomial index).
using CertExpr = std::map<std::pair<int, int>, Scalar>;

void expr_axpy(CertExpr& dst, const Scalar& coeff, const CertExpr& src);

/// Incrementally maintained canonical RREF row space, optionally tracking
/// a provenance expression per row (used for certificate extraction).
class RowSpace {
public:
    RowSpace(const Field& f, std::size_t dim, bool track_provenance = false);

    /// Inserts v (reducing against the basis); returns true if the rank grew.
    bool insert(std::vector<Scalar> v, CertExpr expr = {});

    bool contains(std::vector<Scalar> v) const;
    /// Residual of v after reduction against the basis.
    std::vector<Scalar> reduce(std::vector<Scalar> v) const;
    /// Coefficients expressing v over rows(), or nullopt if v is outside.
    std::optional<std::vector<Scalar>> coordinates(std::vector<Scalar> v) const;

    std::size_t rank() const { return rows_.size(); }
    std::size_t dim() const { return dim_; }
    bool full() const { return rows_.size() == dim_; }
    const Field& field() const { return f_; }
    const std::vector<std::vector<Scalar>>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    const CertExpr& expr(std::size_t row) const { return exprs_[row]; }

private:
    Field f_;
    std::size_t dim_;
    bool track_;
    std::vector<std::vector<Scalar>> rows_;   // pivot-sorted canonical RREF
    std::vector<std::size_t> pivots_;
    std::vector<CertExpr> exprs_;
};

}  // namespace sgr
