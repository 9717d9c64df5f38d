#include "klac/scalar.hpp"

#include <cctype>
#include <ostream>

#include "klac/errors.hpp"

namespace klac {

Rational rational_from_string(std::string_view s) {
    if (s.empty()) throw ModelError("empty rational literal");
    // mpq_class accepts garbage loosely; validate the shape ourselves.
    size_t pos = 0;
    auto digits = [&](size_t start) {
        size_t p = start;
        while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
        return p;
    };
    if (s[pos] == '+' || s[pos] == '-') ++pos;
    size_t end_num = digits(pos);
    if (end_num == pos) throw ModelError("bad rational literal '" + std::string(s) + "'");
    pos = end_num;
    if (pos < s.size()) {
        if (s[pos] != '/') throw ModelError("bad rational literal '" + std::string(s) + "'");
        ++pos;
        size_t end_den = digits(pos);
        if (end_den == pos || end_den != s.size())
            throw ModelError("bad rational literal '" + std::string(s) + "'");
        if (std::string_view(s.substr(pos)).find_first_not_of('0') == std::string_view::npos)
            throw ModelError("zero denominator in '" + std::string(s) + "'");
    }
    if (s[0] == '+') s.remove_prefix(1);  // mpq_set_str rejects a leading '+'
    Rational q(std::string(s), 10);
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rational& q) {
    return q.get_str();
}

Rational make_rational(long num, long den) {
    if (den == 0) throw ModelError("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw ModelError("division by zero scalar");
    Rational n = norm();
    return Scalar(Rational(re_ / n), Rational(-im_ / n));
}

Scalar& Scalar::operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    Rational r(re_ * o.re_ - im_ * o.im_);
    Rational i(re_ * o.im_ + im_ * o.re_);
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    return *this *= o.inverse();
}

Scalar Scalar::i_power(long n) {
    long k = ((n % 4) + 4) % 4;
    switch (k) {
        case 0: return Scalar(1);
        case 1: return Scalar::i();
        case 2: return Scalar(-1);
        default: return -Scalar::i();
    }
}

std::string Scalar::str() const {
    if (im_ == 0) return rational_to_string(re_);
    std::string out;
    if (re_ != 0) out += rational_to_string(re_);
    if (im_ > 0 && re_ != 0) out += "+";
    if (im_ == -1)
        out += "-";
    else if (im_ != 1)
        out += rational_to_string(im_) + "*";
    out += "i";
    return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << s.str();
}

}  // namespace klac
