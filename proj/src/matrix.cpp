#include "rmres/matrix.hpp"

#include <algorithm>
#include <string>

#include "rmres/error.hpp"

namespace rmres {

Matrix::Matrix(FieldPtr field, Index rows, Index cols)
    : field_(std::move(field)), entries_(ElemMatrix::Zero(rows, cols)) {}

Matrix::Matrix(FieldPtr field, ElemMatrix entries) : field_(std::move(field)), entries_(std::move(entries)) {
    const int q = field_->size();
    for (Index i = 0; i < entries_.rows(); ++i)
        for (Index j = 0; j < entries_.cols(); ++j)
            if (entries_(i, j) >= q) throw Error(ErrorKind::SpecMismatch, "entry outside field");
}

Matrix Matrix::identity(FieldPtr field, Index n) {
    Matrix m(std::move(field), n, n);
    for (Index i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(FieldPtr field, const std::vector<Codeword>& rows, Index cols) {
    Matrix m(std::move(field), static_cast<Index>(rows.size()), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw Error(ErrorKind::DimensionMismatch, "row length differs from column count");
        m.entries_.row(static_cast<Index>(i)) = rows[i];
    }
    return m;
}

bool Matrix::operator==(const Matrix& other) const {
    return *field_ == *other.field_ && rows() == other.rows() && cols() == other.cols() && entries_ == other.entries_;
}

void axpy(const Field& field, Elem* dst, Elem c, const Elem* src, Eigen::Index n) noexcept {
    if (c == 0) return;
    const auto mul = field.mul_row(c);
    for (Eigen::Index j = 0; j < n; ++j) {
        if (src[j] == 0) continue;
        dst[j] = field.add_row(dst[j])[mul[src[j]]];
    }
}

RrefResult rref(const Matrix& m) {
    const Field& f = m.field();
    Matrix r = m;
    ElemMatrix& a = r.entries();
    const Eigen::Index rows = a.rows();
    const Eigen::Index cols = a.cols();
    std::vector<int> pivots;
    Eigen::Index lead = 0;
    for (Eigen::Index col = 0; col < cols && lead < rows; ++col) {
        Eigen::Index sel = lead;
        while (sel < rows && a(sel, col) == 0) ++sel;
        if (sel == rows) continue;
        if (sel != lead) a.row(sel).swap(a.row(lead));
        const Elem inv = f.inv(a(lead, col));
        if (inv != 1) {
            const auto mul = f.mul_row(inv);
            for (Eigen::Index j = col; j < cols; ++j) a(lead, j) = mul[a(lead, j)];
        }
        const Elem* src = a.row(lead).data() + col;
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i == lead || a(i, col) == 0) continue;
            axpy(f, a.row(i).data() + col, f.neg(a(i, col)), src, cols - col);
        }
        pivots.push_back(static_cast<int>(col));
        ++lead;
    }
    const int rk = static_cast<int>(pivots.size());
    return {std::move(r), rk, std::move(pivots)};
}

int rank(const Matrix& m) { return rref(m).rank; }

Matrix null_space_basis(const Matrix& m) { return null_space_from_rref(rref(m), m.cols()); }

Matrix null_space_from_rref(const RrefResult& red, Eigen::Index cols) {
    const Field& f = red.reduced.field();
    std::vector<char> is_pivot(cols, 0);
    for (int p : red.pivots) is_pivot[p] = 1;
    Matrix basis(red.reduced.field_ptr(), cols - red.rank, cols);
    Eigen::Index out = 0;
    for (Eigen::Index free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        basis(out, free) = 1;
        for (int i = 0; i < red.rank; ++i) basis(out, red.pivots[i]) = f.neg(red.reduced(i, free));
        ++out;
    }
    return basis;
}

bool row_space_equal(const Matrix& a, const Matrix& b) {
    if (!(a.field() == b.field())) throw Error(ErrorKind::SpecMismatch, "row_space_equal over different fields");
    if (a.cols() != b.cols()) throw Error(ErrorKind::DimensionMismatch, "row_space_equal column counts differ");
    const auto ra = rref(a);
    const auto rb = rref(b);
    if (ra.rank != rb.rank) return false;
    return ra.reduced.entries().topRows(ra.rank) == rb.reduced.entries().topRows(rb.rank);
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    if (!(a.field() == b.field())) throw Error(ErrorKind::SpecMismatch, "mat_mul over different fields");
    if (a.cols() != b.rows())
        throw Error(ErrorKind::DimensionMismatch,
                    "mat_mul shapes " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " and " +
                        std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    const Field& f = a.field();
    Matrix c(a.field_ptr(), a.rows(), b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index l = 0; l < a.cols(); ++l)
            axpy(f, c.entries().row(i).data(), a(i, l), b.entries().row(l).data(), b.cols());
    return c;
}

Matrix transpose(const Matrix& m) { return Matrix(m.field_ptr(), ElemMatrix(m.entries().transpose())); }

Matrix submatrix_columns(const Matrix& m, std::span<const int> columns) {
    Matrix out(m.field_ptr(), m.rows(), static_cast<Eigen::Index>(columns.size()));
    for (std::size_t c = 0; c < columns.size(); ++c) {
        const int j = columns[c];
        if (j < 0 || j >= m.cols()) throw Error(ErrorKind::IndexOutOfRange, "column " + std::to_string(j));
        out.entries().col(static_cast<Eigen::Index>(c)) = m.entries().col(j);
    }
    return out;
}

Codeword mat_vec(const Matrix& m, const Codeword& v) {
    if (v.size() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "mat_vec length mismatch");
    const Field& f = m.field();
    Codeword out = Codeword::Zero(m.rows());
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Elem acc = 0;
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (v[j] != 0 && m(i, j) != 0) acc = f.add(acc, f.mul(m(i, j), v[j]));
        out[i] = acc;
    }
    return out;
}

Codeword vec_mat(const Codeword& u, const Matrix& m) {
    if (u.size() != m.rows()) throw Error(ErrorKind::DimensionMismatch, "vec_mat length mismatch");
    Codeword out = Codeword::Zero(m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i) axpy(m.field(), out.data(), u[i], m.entries().row(i).data(), m.cols());
    return out;
}

bool is_zero(const Codeword& v) noexcept {
    for (Eigen::Index j = 0; j < v.size(); ++j)
        if (v[j] != 0) return false;
    return true;
}

EchelonBasis::EchelonBasis(const Field& field, int dim) : field_(&field), dim_(dim), scratch_(dim) {}

bool EchelonBasis::insert(std::span<const Elem> v) {
    std::copy(v.begin(), v.end(), scratch_.begin());
    const Field& f = *field_;
    for (std::size_t b = 0; b < pivots_.size(); ++b) {
        const Elem c = scratch_[pivots_[b]];
        if (c != 0) axpy(f, scratch_.data(), f.neg(c), rows_.data() + b * dim_, dim_);
    }
    int pivot = 0;
    while (pivot < dim_ && scratch_[pivot] == 0) ++pivot;
    if (pivot == dim_) return false;
    const auto mul = f.mul_row(f.inv(scratch_[pivot]));
    for (int j = 0; j < dim_; ++j) scratch_[j] = mul[scratch_[j]];
    rows_.insert(rows_.end(), scratch_.begin(), scratch_.end());
    pivots_.push_back(pivot);
    return true;
}

void EchelonBasis::pop() {
    if (pivots_.empty()) return;
    pivots_.pop_back();
    rows_.resize(pivots_.size() * dim_);
}

}  // namespace rmres
