#ifndef RMRES_MATRIX_HPP
#define RMRES_MATRIX_HPP

#include <Eigen/Core>
#include <span>
#include <vector>

#include "rmres/gf.hpp"

namespace rmres {

/// Dense row-major storage of field elements; arithmetic goes through the owning Field.
using ElemMatrix = Eigen::Matrix<Elem, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
/// A word of F_q^n (row vector).
using Codeword = Eigen::Matrix<Elem, 1, Eigen::Dynamic>;

/**
 * Matrix over GF(q). Zero-row and zero-column shapes are legal; the empty
 * parity-check matrix of the full-space code is a 0 x n Matrix.
 */
class Matrix {
public:
    using Index = Eigen::Index;

    Matrix(FieldPtr field, Index rows, Index cols);
    Matrix(FieldPtr field, ElemMatrix entries);

    static Matrix identity(FieldPtr field, Index n);
    static Matrix from_rows(FieldPtr field, const std::vector<Codeword>& rows, Index cols);

    Index rows() const noexcept { return entries_.rows(); }
    Index cols() const noexcept { return entries_.cols(); }
    const Field& field() const noexcept { return *field_; }
    const FieldPtr& field_ptr() const noexcept { return field_; }

    const ElemMatrix& entries() const noexcept { return entries_; }
    ElemMatrix& entries() noexcept { return entries_; }

    Elem operator()(Index i, Index j) const { return entries_(i, j); }
    Elem& operator()(Index i, Index j) { return entries_(i, j); }

    Codeword row(Index i) const { return entries_.row(i); }

    /// Same field, same shape, same entries.
    bool operator==(const Matrix& other) const;

private:
    FieldPtr field_;
    ElemMatrix entries_;
};

struct RrefResult {
    Matrix reduced;
    int rank = 0;
    std::vector<int> pivots;
};

/// dst[j] += c * src[j] for j < n.
void axpy(const Field& field, Elem* dst, Elem c, const Elem* src, Eigen::Index n) noexcept;

/// Reduced row echelon form; pivot = first nonzero entry in column scan order.
RrefResult rref(const Matrix& m);
int rank(const Matrix& m);

/// Rows form a basis of {v : M v^T = 0}, one row per free column in increasing order.
Matrix null_space_basis(const Matrix& m);
/// Same, reusing an existing reduction of a matrix with `cols` columns.
Matrix null_space_from_rref(const RrefResult& red, Eigen::Index cols);

/// True iff A and B span the same row space. Throws DimensionMismatch / SpecMismatch.
bool row_space_equal(const Matrix& a, const Matrix& b);

Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);

/// Column restriction H_sigma (columns in the order given). Throws IndexOutOfRange.
Matrix submatrix_columns(const Matrix& m, std::span<const int> columns);

/// M v^T as a row vector of length rows(M).
Codeword mat_vec(const Matrix& m, const Codeword& v);

/// u M for a message row u of length rows(M).
Codeword vec_mat(const Codeword& u, const Matrix& m);

bool is_zero(const Codeword& v) noexcept;

/**
 * Incremental echelon basis of a subspace of F_q^dim. insert() reports whether
 * the vector enlarged the span; pop() undoes the most recent successful insert,
 * which lets depth-first subset sweeps share work between siblings.
 */
class EchelonBasis {
public:
    EchelonBasis(const Field& field, int dim);

    bool insert(std::span<const Elem> v);
    void pop();
    int rank() const noexcept { return static_cast<int>(pivots_.size()); }

private:
    const Field* field_;
    int dim_;
    std::vector<Elem> rows_;  // rank * dim, each row monic at its pivot
    std::vector<int> pivots_;
    std::vector<Elem> scratch_;
};

}  // namespace rmres

#endif
