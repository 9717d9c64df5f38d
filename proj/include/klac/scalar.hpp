#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace klac {

using Rational = mpq_class;

// Parse "p", "-p", "p/q" (q > 0 after canonicalization). Throws ModelError on junk.
Rational rational_from_string(std::string_view s);
std::string rational_to_string(const Rational& q);

// mpq_class(num, den) does not canonicalize; this does.
Rational make_rational(long num, long den);

// Gaussian rational a + b*i with exact rational components.
// Canonical form is inherited from mpq_class (reduced, positive denominator).
class Scalar {
  public:
    Scalar() : re_(0), im_(0) {}
    Scalar(int n) : re_(n), im_(0) {}
    Scalar(long n) : re_(n), im_(0) {}
    Scalar(Rational re) : re_(std::move(re)), im_(0) {}
    Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static Scalar i() { return Scalar(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    Scalar conj() const { return Scalar(re_, Rational(-im_)); }
    Rational norm() const { return Rational(re_ * re_ + im_ * im_); }

    Scalar inverse() const;  // throws ModelError on zero

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend Scalar operator-(const Scalar& a) { return Scalar(Rational(-a.re_), Rational(-a.im_)); }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // i^n for any integer n.
    static Scalar i_power(long n);

    std::string str() const;  // "p/q" or "p/q+p/q*i"

  private:
    Rational re_, im_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace klac
