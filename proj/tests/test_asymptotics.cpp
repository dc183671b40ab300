#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include <gammamedian/asymptotics.hpp>
#include <gammamedian/golden.hpp>
#include <gammamedian/quadrature.hpp>
#include <gammamedian/verify.hpp>

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using gammamedian::AsymptoticExpansion;
using gammamedian::Rational;
using R = std::vector<Rational>;

namespace {

// u + e^{-u} - 1 without cancellation for small u
double shifted_exp(double u) {
    double term = u * u / 2, sum = 0.0;
    for (int m = 2; m < 30; ++m) {
        sum += term;
        term *= -u / (m + 1);
    }
    return sum;
}

AsymptoticExpansion pure(R inv) {
    const auto n = inv.size();
    return {Rational(0), Rational(0), std::move(inv), n};
}

} // namespace

TEST_CASE("xi_sum examples", "[asymptotics]") {
    CHECK(gammamedian::xi_sum(1) == pure({Rational(1, 3)}));
    CHECK(gammamedian::xi_sum(2) == pure({Rational(1, 3), Rational(4, 135)}));
    CHECK(gammamedian::xi_sum(3).inv(3) == Rational(-8, 2835));
    CHECK_THROWS_AS(gammamedian::xi_sum(0), std::invalid_argument);
}

TEST_CASE("integrand_power_coeffs examples", "[asymptotics]") {
    CHECK(gammamedian::integrand_power_coeffs(1, 4) == R{Rational(1, 2), Rational(-1, 6), Rational(1, 24)});
    CHECK(gammamedian::integrand_power_coeffs(2, 4) == R{Rational(1, 4)});
    CHECK(gammamedian::integrand_power_coeffs(3, 6) == R{Rational(1, 8)});
    CHECK(gammamedian::integrand_power_coeffs(3, 5).empty());
    CHECK_THROWS_AS(gammamedian::integrand_power_coeffs(0, 4), std::invalid_argument);
}

TEST_CASE("integrand_power_coeffs equal powers of the k = 1 series", "[asymptotics][property]") {
    constexpr std::size_t deg = 14;
    gammamedian::TruncatedSeries<Rational> base(deg);
    for (std::size_t m = 2; m <= deg; ++m) {
        base[m] = Rational(m % 2 == 0 ? 1 : -1, gammamedian::factorial(static_cast<unsigned>(m)));
    }
    for (unsigned k = 1; k <= 7; ++k) {
        const auto p = gammamedian::series_pow(base, k);
        const auto t = gammamedian::integrand_power_coeffs(k, deg);
        REQUIRE(t.size() == deg - 2 * k + 1);
        for (std::size_t l = 0; l < 2 * k; ++l) CHECK(p[l].is_zero());
        for (std::size_t l = 2 * k; l <= deg; ++l) CHECK(t[l - 2 * k] == p[l]);
    }
}

TEST_CASE("sum_of_int with one term", "[asymptotics]") {
    const auto s = gammamedian::sum_of_int(1, pure({Rational(1, 3)}));
    CHECK(s == pure({Rational(0), Rational(-1, 162)}));
    CHECK_THROWS_AS(gammamedian::sum_of_int(1, AsymptoticExpansion(Rational(1), Rational(0), {}, 0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(gammamedian::sum_of_int(1, AsymptoticExpansion(Rational(0), Rational(1), {}, 0)),
                    std::invalid_argument);
}

TEST_CASE("sum_of_int against numerical integrals", "[asymptotics]") {
    // n = 2, phi = 1/(3x) + 29/(810x^2): the exact sum of integrals differs from the
    // truncated expansion by o(x^{-3})
    const auto phi = pure({Rational(1, 3), Rational(29, 810)});
    const auto expansion = gammamedian::sum_of_int(2, phi);
    std::vector<double> scaled;
    for (const double x : {50.0, 100.0, 200.0}) {
        const double upper = gammamedian::eval_expansion(phi, x);
        double exact = 0.0;
        for (int k = 1; k <= 2; ++k) {
            const auto in = gammamedian::integrate(
                [k](double u) { return std::pow(shifted_exp(u), k); }, 0.0, upper, 1e-8);
            exact += (k % 2 == 0 ? 1.0 : -1.0) * std::pow(x, k) / std::tgamma(k + 1.0) * in.value;
        }
        scaled.push_back(std::abs(exact - gammamedian::eval_expansion(expansion, x)) * std::pow(x, 3));
    }
    CHECK(scaled[0] > scaled[1]);
    CHECK(scaled[1] > scaled[2]);
    CHECK(scaled[2] < 1e-4);
}

TEST_CASE("asymp_phi examples", "[asymptotics]") {
    const auto p3 = gammamedian::asymp_phi(3);
    CHECK(p3 == pure({Rational(1, 3), Rational(29, 810), Rational(-37, 25515)}));
    CHECK(p3.order() == 3);
    CHECK(gammamedian::asymp_phi(4).inv(4) == Rational(-3877, 19683 * 25 * 4));
    CHECK_THROWS_AS(gammamedian::asymp_phi(0), std::invalid_argument);
}

TEST_CASE("asymp_phi reproduces the reference table", "[asymptotics][golden]") {
    const auto phi = gammamedian::asymp_phi(10);
    CHECK(phi.is_pure_inverse());
    CHECK(phi.inverse_coeffs() == gammamedian::golden::phi_coefficients());
    // lower orders are prefixes
    for (std::size_t n = 1; n < 10; ++n) {
        const auto p = gammamedian::asymp_phi(n);
        CHECK(p.inverse_coeffs() == R(phi.inverse_coeffs().begin(), phi.inverse_coeffs().begin() + n));
    }
}

TEST_CASE("asymp_m examples", "[asymptotics]") {
    CHECK(gammamedian::asymp_m(2) == AsymptoticExpansion(Rational(1), Rational(-1, 3), {Rational(8, 405)}, 1));
    CHECK(gammamedian::asymp_m(3) ==
          AsymptoticExpansion(Rational(1), Rational(-1, 3), {Rational(8, 405), Rational(184, 25515)}, 2));
    const auto m = gammamedian::asymp_m(10);
    CHECK(m.linear_coeff() == Rational(1));
    CHECK(m.const_coeff() == gammamedian::golden::m_constant());
    CHECK(m.inverse_coeffs() == gammamedian::golden::m_coefficients());
    CHECK(m.inv(9) == -Rational(8 * 29 * gammamedian::BigInt("1376560394479059407"),
                                gammamedian::ipow(3, 27) * 78125 * 343 * 121 * 17));
}

TEST_CASE("differentiate_expansion examples", "[asymptotics]") {
    const auto d = gammamedian::differentiate_expansion(gammamedian::asymp_m(3));
    CHECK(d == AsymptoticExpansion(Rational(0), Rational(1), {Rational(0), Rational(-8, 405), Rational(-368, 25515)}, 3));
    CHECK(gammamedian::differentiate_expansion(AsymptoticExpansion(Rational(0), Rational(-1, 3), {}, 0)) ==
          AsymptoticExpansion());
    CHECK(gammamedian::differentiate_expansion(pure({Rational(1, 3)})) == pure({Rational(0), Rational(-1, 3)}));
}

TEST_CASE("differentiation and integration are consistent", "[asymptotics][property]") {
    for (std::size_t n = 2; n <= 10; ++n) {
        const auto m = gammamedian::asymp_m(n);
        const auto back = gammamedian::integrate_expansion(gammamedian::differentiate_expansion(m));
        CHECK(back == AsymptoticExpansion(m.linear_coeff(), Rational(0), m.inverse_coeffs(), m.order()));
    }
    CHECK_THROWS_AS(gammamedian::integrate_expansion(pure({Rational(1)})), std::invalid_argument);
    CHECK_THROWS_AS(gammamedian::integrate_expansion(AsymptoticExpansion(Rational(1), Rational(0), {}, 0)),
                    std::invalid_argument);
}

TEST_CASE("exp and log round trip between phi and m", "[asymptotics][property]") {
    for (std::size_t n = 1; n <= 10; ++n) {
        const auto phi = gammamedian::asymp_phi(n);
        const auto m = gammamedian::asymp_m(n);
        // m / x as a series in y = 1/x
        gammamedian::TruncatedSeries<Rational> ratio(n);
        ratio[0] = m.linear_coeff();
        if (n >= 1) ratio[1] = m.const_coeff();
        for (std::size_t k = 2; k <= n; ++k) ratio[k] = m.inv(k - 1);
        CHECK(-gammamedian::series_log(ratio) == phi.to_inverse_series(n));
    }
}

TEST_CASE("eval_expansion examples", "[asymptotics]") {
    CHECK_THAT(gammamedian::eval_expansion(gammamedian::asymp_phi(1), 3.0), WithinRel(1.0 / 9.0, 1e-15));
    CHECK_THAT(gammamedian::eval_expansion(gammamedian::asymp_m(3), 10.0),
               WithinAbs(10.0 - 1.0 / 3.0 + 8.0 / 4050.0 + 184.0 / 2551500.0, 1e-14));
    CHECK_THROWS_AS(gammamedian::eval_expansion(gammamedian::asymp_m(3), 0.0), std::domain_error);
    const auto m = gammamedian::asymp_m(6);
    double prev = 1.0;
    for (const double x : {1e2, 1e3, 1e4}) {
        const double rest = std::abs(gammamedian::eval_expansion(m, x) - (x - 1.0 / 3.0));
        CHECK(rest < prev);
        prev = rest;
    }
}

TEST_CASE("xi Taylor coefficients grow like (2 pi)^{-k}", "[asymptotics][property]") {
    // radius of convergence 2 pi: |c_k|^{1/k} rises towards 1/(2 pi) from below along
    // each parity class, and |c_k| (2 pi)^k stays bounded away from 0 and infinity
    const auto t = gammamedian::xi_derivatives(21);
    const double inv_radius = 1.0 / (2.0 * std::numbers::pi);
    std::vector<double> root(t.size()), scaled(t.size());
    for (std::size_t k = 1; k < t.size(); ++k) {
        const double c = std::abs((t[k] / Rational(gammamedian::factorial(static_cast<unsigned>(k)))).to_double());
        root[k] = std::pow(c, 1.0 / k);
        scaled[k] = c * std::pow(2.0 * std::numbers::pi, k);
    }
    for (std::size_t k = 3; k < t.size(); ++k) {
        INFO("k = " << k);
        CHECK(root[k] < inv_radius);
        CHECK(root[k] > root[k - 2]);
        CHECK(scaled[k] > 0.03);
        CHECK(scaled[k] < 0.2);
    }
    CHECK_THAT(root[10], WithinAbs(0.1213, 1e-4));
    CHECK(root[20] > 0.136);
    // the derivatives themselves eventually grow
    for (std::size_t k = 6; k + 1 < t.size(); ++k) {
        CHECK((t[k + 1] / t[k]).abs() > Rational(1));
    }
}

TEST_CASE("median residuals against the expansion decay", "[asymptotics][residual]") {
    const std::vector<double> xs{10.0, 20.0, 40.0, 80.0};
    for (std::size_t n : {2u, 3u, 4u}) {
        std::vector<double> r;
        for (const double x : xs) r.push_back(gammamedian::expansion_residual(n, x));
        INFO("n = " << n);
        for (std::size_t i = 1; i < r.size(); ++i) CHECK(r[i] < r[i - 1]);
    }
    const auto entries = gammamedian::check_expansion_residuals({9}, {40.0, 80.0});
    REQUIRE(entries.size() == 1);
    CHECK(entries[0].pass);
}

TEST_CASE("truncation before m_n/x^n leaves |m_n| in the scaled residual", "[asymptotics][residual]") {
    using Real50 = gammamedian::Real50;
    for (std::size_t n : {2u, 3u, 4u}) {
        const auto e = gammamedian::asymp_m(n);
        const Real50 x(80);
        const Real50 m = gammamedian::median<Real50>(x, Real50("1e-45")).m;
        const double r = (abs(m - gammamedian::eval_expansion<Real50>(e, x)) * pow(x, static_cast<int>(n))).convert_to<double>();
        const double mn = std::abs(gammamedian::golden::m_coefficients()[n - 1].to_double());
        INFO("n = " << n);
        CHECK_THAT(r, WithinRel(mn, 0.1));
    }
}
