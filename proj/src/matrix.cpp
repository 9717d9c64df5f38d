#include "klac/matrix.hpp"

#include "klac/errors.hpp"

namespace klac {

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
    rows_ = int(rows.size());
    cols_ = rows_ ? int(rows.begin()->size()) : 0;
    a_.reserve(size_t(rows_) * cols_);
    for (const auto& r : rows) {
        if (int(r.size()) != cols_) throw DimensionError("ragged matrix initializer");
        for (const auto& x : r) a_.push_back(x);
    }
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Matrix Matrix::conjugate() const {
    Matrix t(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(i, j) = at(i, j).conj();
    return t;
}

Matrix Matrix::conjugate_transpose() const {
    return transpose().conjugate();
}

Matrix Matrix::col(int j) const {
    Matrix v(rows_, 1);
    for (int i = 0; i < rows_; ++i) v.at(i, 0) = at(i, j);
    return v;
}

void Matrix::set_col(int j, const Matrix& v) {
    if (v.rows() != rows_ || v.cols() != 1) throw DimensionError("set_col shape mismatch");
    for (int i = 0; i < rows_; ++i) at(i, j) = v.at(i, 0);
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
    if (a.cols_ == 0) return b;
    if (b.cols_ == 0) return a;
    if (a.rows_ != b.rows_) throw DimensionError("hstack row mismatch");
    Matrix m(a.rows_, a.cols_ + b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
        for (int j = 0; j < a.cols_; ++j) m.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols_; ++j) m.at(i, a.cols_ + j) = b.at(i, j);
    }
    return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix add shape mismatch");
    for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sub shape mismatch");
    for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

Matrix operator-(const Matrix& a) {
    Matrix m(a.rows_, a.cols_);
    for (size_t k = 0; k < a.a_.size(); ++k) m.a_[k] = -a.a_[k];
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix mul shape mismatch");
    Matrix m(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) {
                const Scalar& bkj = b.at(k, j);
                if (!bkj.is_zero()) m.at(i, j) += aik * bkj;
            }
        }
    return m;
}

Matrix operator*(const Scalar& s, Matrix a) {
    for (auto& x : a.a_) x *= s;
    return a;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

}  // namespace klac
