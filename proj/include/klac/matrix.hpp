#pragma once

#include <initializer_list>
#include <vector>

#include "klac/scalar.hpp"

namespace klac {

// Dense matrix over Gaussian rationals. Zero-row / zero-column shapes are legal
// and arise routinely at the ends of graded complexes.
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Scalar& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const Scalar& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    Matrix transpose() const;
    Matrix conjugate() const;
    Matrix conjugate_transpose() const;

    Matrix col(int j) const;
    void set_col(int j, const Matrix& v);
    static Matrix hstack(const Matrix& a, const Matrix& b);

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator-(const Matrix& a);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& s, Matrix a);
    friend bool operator==(const Matrix& a, const Matrix& b);

  private:
    int rows_, cols_;
    std::vector<Scalar> a_;
};

}  // namespace klac
