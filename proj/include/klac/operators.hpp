#pragma once

#include <vector>

#include "klac/linalg.hpp"
#include "klac/multi_index.hpp"

namespace klac {

// Homogeneous exterior-algebra element: one coefficient per multi-index of
// the given degree, in enumeration order.
struct FormVector {
    int degree = 0;
    Matrix coeffs;  // dim(degree) x 1

    static FormVector zero(const ExteriorBasis& b, int k) {
        return FormVector{k, Matrix(b.dim(k), 1)};
    }
    static FormVector unit(const ExteriorBasis& b) {  // the constant 1 in degree 0
        FormVector f = zero(b, 0);
        f.coeffs.at(0, 0) = Scalar(1);
        return f;
    }
    bool is_zero() const { return coeffs.is_zero(); }
};

FormVector operator+(const FormVector& a, const FormVector& b);
FormVector operator-(const FormVector& a, const FormVector& b);
FormVector operator*(const Scalar& s, FormVector a);

// Degree-indexed family of matrices with a fixed degree shift.
// at(k) maps degree k to degree k+shift; out-of-range degrees are represented
// by matrices with zero rows or columns so compositions stay total.
class GradedOperator {
  public:
    GradedOperator() = default;
    GradedOperator(const ExteriorBasis& b, int shift);

    int shift() const { return shift_; }
    int fiber_rank() const { return r_; }

    const Matrix& at(int k) const { return mats_[k]; }
    Matrix& at(int k) { return mats_[k]; }

    FormVector apply(const FormVector& f) const;

    bool is_zero() const;

    GradedOperator& operator+=(const GradedOperator& o);
    GradedOperator& operator-=(const GradedOperator& o);
    friend GradedOperator operator+(GradedOperator a, const GradedOperator& b) { return a += b; }
    friend GradedOperator operator-(GradedOperator a, const GradedOperator& b) { return a -= b; }
    friend GradedOperator operator-(const GradedOperator& a);
    friend GradedOperator operator*(const Scalar& s, GradedOperator a);
    // composition a after b
    friend GradedOperator operator*(const GradedOperator& a, const GradedOperator& b);
    friend bool operator==(const GradedOperator& a, const GradedOperator& b);

  private:
    int r_ = 0;
    int shift_ = 0;
    std::vector<int> dims_;     // dims_[k] = binomial(r,k), padded with 0 outside
    std::vector<Matrix> mats_;  // index = source degree 0..r
    int dim_at(int k) const { return (k < 0 || k > r_) ? 0 : dims_[k]; }
};

GradedOperator commutator(const GradedOperator& a, const GradedOperator& b);
GradedOperator identity_operator(const ExteriorBasis& b);

}  // namespace klac
