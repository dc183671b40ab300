#include <catch_amalgamated.hpp>

#include <gammamedian/qsqrt2.hpp>
#include <gammamedian/rational.hpp>

using gammamedian::BigInt;
using gammamedian::QSqrt2;
using gammamedian::Rational;

TEST_CASE("rational canonical form", "[rational]") {
    CHECK(Rational(6, 8).to_string() == "3/4");
    CHECK(Rational(3, -6).to_string() == "-1/2");
    CHECK(Rational(0, 7).to_string() == "0/1");
    CHECK(Rational(0).to_string() == "0/1");
    CHECK(Rational(2).to_string() == "2/1");
    CHECK(Rational(-4, -10).denominator() == 5);
    CHECK(Rational(-4, 10).numerator() == -2);
}

TEST_CASE("rational arithmetic stays reduced", "[rational]") {
    const Rational a(1, 6), b(1, 3);
    CHECK((a + b).to_string() == "1/2");
    CHECK((a - b).to_string() == "-1/6");
    CHECK((a * b).to_string() == "1/18");
    CHECK((a / b).to_string() == "1/2");
    CHECK((-a).to_string() == "-1/6");
    CHECK((b - b).to_string() == "0/1");
    CHECK(Rational(-3, 7).abs() == Rational(3, 7));
}

TEST_CASE("rational errors", "[rational]") {
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational::parse("abc"));
}

TEST_CASE("rational parse round trip", "[rational]") {
    for (const char* s : {"2/3", "-16/2835", "0/1", "17546990164037632/7002491221234884375"}) {
        CHECK(Rational::parse(s).to_string() == s);
    }
    CHECK(Rational::parse("5") == Rational(5));
    CHECK(Rational::parse("4/6").to_string() == "2/3");
}

TEST_CASE("rational ordering and conversion", "[rational]") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, 3).to_double() == Catch::Approx(1.0 / 3.0).epsilon(1e-16));
    CHECK(Rational(1, 3).sign() == 1);
    CHECK(Rational(0).sign() == 0);
    CHECK(Rational(0).is_zero());
}

TEST_CASE("big integer helpers", "[rational]") {
    CHECK(gammamedian::factorial(0) == 1);
    CHECK(gammamedian::factorial(20) == BigInt("2432902008176640000"));
    CHECK(gammamedian::ipow(BigInt(3), 27) == BigInt("7625597484987"));
}

TEST_CASE("qsqrt2 field operations", "[qsqrt2]") {
    const QSqrt2 a(Rational(1), Rational(1));    // 1 + sqrt2
    const QSqrt2 b(Rational(3), Rational(-2));   // 3 - 2 sqrt2
    CHECK((a * a) == QSqrt2(Rational(3), Rational(2)));
    CHECK((a * a * b) == QSqrt2(1));
    CHECK((QSqrt2(1) / a) == QSqrt2(Rational(-1), Rational(1)));
    CHECK(a.norm() == Rational(-1));
    CHECK(a.conjugate() == QSqrt2(Rational(1), Rational(-1)));
    CHECK((QSqrt2::sqrt2() * QSqrt2::sqrt2()) == QSqrt2(2));
    CHECK((a - a).is_zero());
    CHECK_FALSE(QSqrt2::sqrt2() == QSqrt2(Rational(1)));
}

TEST_CASE("qsqrt2 inverse formula matches conjugate over norm", "[qsqrt2]") {
    for (int p = -3; p <= 3; ++p) {
        for (int q = -3; q <= 3; ++q) {
            const QSqrt2 z(Rational(p, 2), Rational(q, 3));
            if (z.is_zero()) {
                CHECK_THROWS_AS(QSqrt2(1) / z, std::domain_error);
                continue;
            }
            CHECK(z * (QSqrt2(1) / z) == QSqrt2(1));
        }
    }
}

TEST_CASE("qsqrt2 rational extraction", "[qsqrt2]") {
    CHECK(QSqrt2(Rational(2, 3)).is_rational());
    CHECK(QSqrt2(Rational(2, 3)).to_rational() == Rational(2, 3));
    CHECK_THROWS_AS(QSqrt2::sqrt2().to_rational(), std::logic_error);
    CHECK(QSqrt2(Rational(0), Rational(1, 2)).to_double() == Catch::Approx(std::sqrt(2.0) / 2));
    CHECK(QSqrt2(Rational(1, 2), Rational(-1, 3)).to_string() == "1/2 + -1/3*sqrt(2)");
}
