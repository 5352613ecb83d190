#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>

#include "fracwave/fractional.hpp"
#include "test_functions.hpp"

using namespace fracwave;
using namespace fracwave::testing;

namespace {
const QuadratureSpec quad{256, QuadScheme::gauss_legendre, 1e-10};
}

TEST_SUITE("fractional") {

TEST_CASE("fractional order accepts only the open interval (0,1)") {
    CHECK_THROWS_AS(FractionalOrder(0.0), std::domain_error);
    CHECK_THROWS_AS(FractionalOrder(1.0), std::domain_error);
    CHECK_THROWS_AS(FractionalOrder(-0.3), std::domain_error);
    CHECK_THROWS_AS(FractionalOrder(1.5), std::domain_error);
    CHECK_THROWS_AS(FractionalOrder(std::nan("")), std::domain_error);
    CHECK_NOTHROW(FractionalOrder(1e-12));
    CHECK_NOTHROW(FractionalOrder(1.0 - 1e-9));
}

TEST_CASE("derived exponents") {
    for (double s : s_grid) {
        const FractionalOrder order(s);
        CHECK(order.beta() == doctest::Approx(1.0 / (2.0 - s)).epsilon(1e-15));
        CHECK(order.alpha() == doctest::Approx((1.0 - s) / (2.0 - s)).epsilon(1e-14));
        CHECK(order.alpha() + order.beta() == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(order.beta() > 0.5);
        CHECK(order.beta() < 1.0);
        CHECK(order.alpha() > 0.0);
        CHECK(order.alpha() < 0.5);
    }
}

TEST_CASE("gamma function values") {
    CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-14));
    CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-14));
    CHECK_THROWS_AS(gamma_fn(0.0), std::domain_error);
    CHECK_THROWS_AS(gamma_fn(-1.0), std::domain_error);
}

TEST_CASE("gamma function identities") {
    for (double x = 0.1; x < 0.95; x += 0.1) {
        // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x).
        const double product = gamma_fn(x) * gamma_fn(1.0 - x);
        CHECK(product ==
              doctest::Approx(std::numbers::pi / std::sin(std::numbers::pi * x)).epsilon(1e-13));
    }
    for (double x : {0.3, 1.7, 6.2, 11.0}) {
        CHECK(gamma_fn(x + 1.0) == doctest::Approx(x * gamma_fn(x)).epsilon(1e-13));
        CHECK(gamma_fn(x) == doctest::Approx(std::tgamma(x)).epsilon(1e-13));
    }
}

TEST_CASE("scaling constant") {
    CHECK(scaling_constant(FractionalOrder(0.5)) ==
          doctest::Approx(0.75 * std::sqrt(std::numbers::pi)).epsilon(1e-13));
    // Limit case s -> 0+: (2)(1)Gamma(1) = 2.
    CHECK(scaling_constant(FractionalOrder(1e-12)) == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(scaling_constant(FractionalOrder(0.25)) ==
          doctest::Approx(1.75 * 0.75 * std::tgamma(0.75)).epsilon(1e-13));
}

TEST_CASE("both operators annihilate constants") {
    const FractionalOrder order(0.3);
    const TimeFunction u = constant(7.0);
    CHECK(caputo_direct(u, order, 1.0, quad) == 0.0);
    CHECK(caputo_ibp(u, order, 1.0, quad) == 0.0);
    const QuadratureSpec mid{128, QuadScheme::midpoint, 1e-4};
    CHECK(caputo_direct(u, order, 1.0, mid) == 0.0);
}

TEST_CASE("direct route on the reference monomials") {
    const FractionalOrder half(0.5);
    // D^0.5 t   at t=1 is 1/Gamma(1.5) = 2/sqrt(pi).
    CHECK(caputo_direct(monomial(1), half, 1.0, quad) ==
          doctest::Approx(1.1283791670955126).epsilon(1e-8));
    // D^0.5 t^2 at t=1 is Gamma(3)/Gamma(2.5).
    CHECK(caputo_direct(monomial(2), half, 1.0, quad) ==
          doctest::Approx(1.5045055561273502).epsilon(1e-8));
}

TEST_CASE("monomial oracle across the grid") {
    for (double s : s_grid) {
        const FractionalOrder order(s);
        for (int p : {1, 2, 3}) {
            const TimeFunction u = monomial(p);
            for (double t : t_grid) {
                const double got = caputo_direct(u, order, t, quad);
                const double want = monomial_caputo_oracle(p, s, t);
                CHECK(std::abs(got - want) <= 1e-8 * std::abs(want));
            }
        }
    }
}

TEST_CASE("integrated-by-parts route examples") {
    const FractionalOrder half(0.5);
    // Linear input: only the boundary term survives, (2-s) * 1 * 1.
    CHECK(caputo_ibp(monomial(1), half, 1.0, quad) == doctest::Approx(1.5).epsilon(1e-12));
    // Quadratic input: boundary term vanishes and the memory integral gives
    // 2 t^{2-s}, i.e. exactly 2 at t = 1; equivalently
    // scaling_constant(0.5) * Gamma(3)/Gamma(2.5).
    const double ibp = caputo_ibp(monomial(2), half, 1.0, quad);
    CHECK(ibp == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(ibp == doctest::Approx(scaling_constant(half) *
                                 caputo_direct(monomial(2), half, 1.0, quad))
                     .epsilon(1e-10));
}

TEST_CASE("the two routes agree up to the scaling constant") {
    const std::array functions = {monomial(1), monomial(2), monomial(3), quadratic_plus_sine()};
    for (double s : s_grid) {
        const FractionalOrder order(s);
        const double factor = scaling_constant(order);
        for (const TimeFunction& u : functions) {
            for (double t : t_grid) {
                const double direct = caputo_direct(u, order, t, quad);
                const double ibp = caputo_ibp(u, order, t, quad);
                CHECK(std::abs(ibp - factor * direct) <= 1e-8 * (1.0 + std::abs(ibp)));
            }
        }
    }
}

TEST_CASE("direct route is linear") {
    const FractionalOrder order(0.6);
    const double a = 2.5, b = -1.25;
    const TimeFunction u = monomial(2);
    const TimeFunction v{[](double t) { return std::sin(t); },
                         [](double t) { return std::cos(t); },
                         [](double t) { return -std::sin(t); }};
    const TimeFunction combo{
        [&](double t) { return a * u.value(t) + b * v.value(t); },
        [&](double t) { return a * u.deriv1(t) + b * v.deriv1(t); },
        [&](double t) { return a * u.deriv2(t) + b * v.deriv2(t); },
    };
    for (double t : t_grid) {
        const double lhs = caputo_direct(combo, order, t, quad);
        const double rhs =
            a * caputo_direct(u, order, t, quad) + b * caputo_direct(v, order, t, quad);
        CHECK(std::abs(lhs - rhs) <= 1e-10);
    }
}

TEST_CASE("domain errors") {
    const FractionalOrder order(0.5);
    CHECK_THROWS_AS(caputo_direct(monomial(1), order, 0.0, quad), std::domain_error);
    CHECK_THROWS_AS(caputo_direct(monomial(1), order, -1.0, quad), std::domain_error);
    CHECK_THROWS_AS(caputo_ibp(monomial(1), order, 0.0, quad), std::domain_error);
}

TEST_CASE("midpoint scheme reaches its modest accuracy") {
    const QuadratureSpec mid{256, QuadScheme::midpoint, 1e-3};
    const FractionalOrder half(0.5);
    const double got = caputo_direct(monomial(2), half, 1.0, mid);
    CHECK(got == doctest::Approx(1.5045055561273502).epsilon(1e-3));
}

TEST_CASE("derivative consistency hook") {
    const double points[] = {0.3, 0.9, 1.7};
    CHECK(quadratic_plus_sine().consistent_derivatives(points));
    TimeFunction broken = quadratic_plus_sine();
    broken.deriv2 = [](double) { return 0.0; };
    CHECK_FALSE(broken.consistent_derivatives(points));
}

}  // TEST_SUITE
