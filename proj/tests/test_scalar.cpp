#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "klac/errors.hpp"
#include "klac/scalar.hpp"

using namespace klac;

TEST_CASE("rational parsing and canonical form") {
    CHECK(rational_from_string("2/4") == Rational(1, 2));
    CHECK(rational_from_string("-6/4") == make_rational(-3, 2));
    CHECK(rational_from_string("7") == 7);
    CHECK(rational_from_string("+3/9") == make_rational(1, 3));
    CHECK(rational_to_string(make_rational(-3, 2)) == "-3/2");
    CHECK_THROWS_AS(rational_from_string(""), ModelError);
    CHECK_THROWS_AS(rational_from_string("1/0"), ModelError);
    CHECK_THROWS_AS(rational_from_string("1.5"), ModelError);
    CHECK_THROWS_AS(rational_from_string("a/b"), ModelError);
    CHECK_THROWS_AS(rational_from_string("1/"), ModelError);
    CHECK_THROWS_AS(rational_from_string("1/2/3"), ModelError);
}

TEST_CASE("gaussian rational field arithmetic") {
    const Scalar i = Scalar::i();
    CHECK(i * i == Scalar(-1));
    Scalar z(make_rational(1, 2), make_rational(-1, 3));
    CHECK(z + z.conj() == Scalar(Rational(1)));
    CHECK((z * z.inverse()) == Scalar(1));
    CHECK(z - z == Scalar(0));
    CHECK((z / z) == Scalar(1));
    CHECK_THROWS_AS(Scalar(0).inverse(), ModelError);

    Scalar a(make_rational(2, 3), make_rational(-1, 2));
    Scalar b(make_rational(-5, 7), Rational(2));
    Scalar c(Rational(4), make_rational(1, 5));
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
}

TEST_CASE("powers of i") {
    CHECK(Scalar::i_power(0) == Scalar(1));
    CHECK(Scalar::i_power(1) == Scalar::i());
    CHECK(Scalar::i_power(2) == Scalar(-1));
    CHECK(Scalar::i_power(3) == -Scalar::i());
    CHECK(Scalar::i_power(4) == Scalar(1));
    CHECK(Scalar::i_power(-1) == -Scalar::i());
    CHECK(Scalar::i_power(9) == Scalar::i());
}

TEST_CASE("printing") {
    CHECK(Scalar(make_rational(3, 4)).str() == "3/4");
    CHECK(Scalar(Rational(0), Rational(1)).str() == "i");
    CHECK(Scalar(Rational(0), Rational(-1)).str() == "-i");
    CHECK(Scalar(Rational(1), Rational(2)).str() == "1+2*i");
    CHECK(Scalar(Rational(1), Rational(-2)).str() == "1-2*i");
}
