#include "klac/operators.hpp"

#include "klac/errors.hpp"

namespace klac {

FormVector operator+(const FormVector& a, const FormVector& b) {
    if (a.degree != b.degree) throw DimensionError("form degree mismatch");
    return FormVector{a.degree, a.coeffs + b.coeffs};
}

FormVector operator-(const FormVector& a, const FormVector& b) {
    if (a.degree != b.degree) throw DimensionError("form degree mismatch");
    return FormVector{a.degree, a.coeffs - b.coeffs};
}

FormVector operator*(const Scalar& s, FormVector a) {
    a.coeffs = s * a.coeffs;
    return a;
}

GradedOperator::GradedOperator(const ExteriorBasis& b, int shift)
    : r_(b.fiber_rank()), shift_(shift) {
    dims_.resize(r_ + 1);
    for (int k = 0; k <= r_; ++k) dims_[k] = b.dim(k);
    mats_.resize(r_ + 1);
    for (int k = 0; k <= r_; ++k) mats_[k] = Matrix(dim_at(k + shift), dim_at(k));
}

FormVector GradedOperator::apply(const FormVector& f) const {
    const int k = f.degree;
    if (k < 0 || k > r_) throw DimensionError("degree out of range");
    return FormVector{k + shift_, mats_[k] * f.coeffs};
}

bool GradedOperator::is_zero() const {
    for (const auto& m : mats_)
        if (!m.is_zero()) return false;
    return true;
}

GradedOperator& GradedOperator::operator+=(const GradedOperator& o) {
    if (r_ != o.r_ || shift_ != o.shift_) throw DimensionError("graded operator add mismatch");
    for (int k = 0; k <= r_; ++k) mats_[k] += o.mats_[k];
    return *this;
}

GradedOperator& GradedOperator::operator-=(const GradedOperator& o) {
    if (r_ != o.r_ || shift_ != o.shift_) throw DimensionError("graded operator sub mismatch");
    for (int k = 0; k <= r_; ++k) mats_[k] -= o.mats_[k];
    return *this;
}

GradedOperator operator-(const GradedOperator& a) {
    GradedOperator out = a;
    for (int k = 0; k <= out.r_; ++k) out.mats_[k] = -out.mats_[k];
    return out;
}

GradedOperator operator*(const Scalar& s, GradedOperator a) {
    for (int k = 0; k <= a.r_; ++k) a.mats_[k] = s * a.mats_[k];
    return a;
}

GradedOperator operator*(const GradedOperator& a, const GradedOperator& b) {
    if (a.r_ != b.r_) throw DimensionError("graded operator rank mismatch");
    GradedOperator out;
    out.r_ = a.r_;
    out.shift_ = a.shift_ + b.shift_;
    out.dims_ = a.dims_;
    out.mats_.resize(out.r_ + 1);
    for (int k = 0; k <= out.r_; ++k) {
        const int mid = k + b.shift_;
        if (mid < 0 || mid > out.r_) {
            out.mats_[k] = Matrix(out.dim_at(k + out.shift_), out.dim_at(k));
        } else {
            out.mats_[k] = a.mats_[mid] * b.mats_[k];
        }
    }
    return out;
}

bool operator==(const GradedOperator& a, const GradedOperator& b) {
    if (a.r_ != b.r_ || a.shift_ != b.shift_) return false;
    for (int k = 0; k <= a.r_; ++k)
        if (!(a.mats_[k] == b.mats_[k])) return false;
    return true;
}

GradedOperator commutator(const GradedOperator& a, const GradedOperator& b) {
    return a * b - b * a;
}

GradedOperator identity_operator(const ExteriorBasis& b) {
    GradedOperator id(b, 0);
    for (int k = 0; k <= b.fiber_rank(); ++k) id.at(k) = Matrix::identity(b.dim(k));
    return id;
}

}  // namespace klac
