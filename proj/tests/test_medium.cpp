#include <doctest.h>

#include <cmath>
#include <limits>

#include "fracwave/medium.hpp"

using namespace fracwave;

namespace {
constexpr double machine_eps = std::numeric_limits<double>::epsilon();
}

TEST_SUITE("medium") {

TEST_CASE("spec validation") {
    const FractionalOrder order(0.5);
    CHECK_THROWS_AS(MediumSpec(0, 1.0, order), std::domain_error);
    CHECK_THROWS_AS(MediumSpec(10, 0.0, order), std::domain_error);
    CHECK_THROWS_AS(MediumSpec(10, -2.0, order), std::domain_error);
    CHECK_THROWS_AS(MediumSpec(200'000'001, 1.0, order), std::domain_error);
    CHECK_NOTHROW(MediumSpec(1, 1.0, order));
}

TEST_CASE("single-branch geometry is trivial") {
    const MediumSpec spec(1, 1.0, FractionalOrder(0.5));
    const MediumGeometry geom = build_geometry(spec);
    CHECK(geom.b_n == 1.0);
    CHECK(geom.ell.size() == 1);
    CHECK(geom.ell[0] == 1.0);
    CHECK(geom.lambda[0] == 0.0);
    CHECK(geom.lambda[1] == 1.0);
    CHECK(geom.branch_length[0] == 1.0);
}

TEST_CASE("two-branch geometry, s = 0.5") {
    // alpha = 1/3, so b_2 = 1 + 2^{-1/3}.
    const MediumSpec spec(2, 1.0, FractionalOrder(0.5));
    const MediumGeometry geom = build_geometry(spec);
    const double b2 = 1.0 + std::pow(2.0, -1.0 / 3.0);
    CHECK(geom.b_n == doctest::Approx(b2).epsilon(1e-15));
    CHECK(geom.ell[0] == doctest::Approx(1.0 / b2).epsilon(1e-15));
    CHECK(geom.lambda[2] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(geom.branch_length[0] == 1.0);
    CHECK(geom.branch_length[1] == doctest::Approx(1.0 + geom.ell[0]).epsilon(1e-15));
}

TEST_CASE("telescoping and monotonicity across the grid") {
    for (double s : {0.1, 0.5, 0.9}) {
        const FractionalOrder order(s);
        for (std::size_t n : {10ul, 100ul, 10000ul}) {
            for (double length : {0.7, 1.0, 3.0}) {
                const MediumGeometry geom = build_geometry(MediumSpec(n, length, order));
                CHECK(std::abs(geom.lambda.back() - length) <= n * machine_eps * length);
                for (std::size_t k = 1; k < n; ++k) {
                    CHECK(geom.ell[k] < geom.ell[k - 1]);
                    CHECK(geom.lambda[k] >= geom.lambda[k - 1]);
                }
                for (std::size_t k = 1; k <= n; ++k)
                    CHECK(geom.branch_length[k - 1] ==
                          doctest::Approx(length + geom.lambda[k - 1]).epsilon(1e-15));
            }
        }
    }
}

TEST_CASE("geometry is homogeneous of degree one in the base length") {
    const FractionalOrder order(0.35);
    const MediumGeometry unit = build_geometry(MediumSpec(257, 1.0, order));
    const MediumGeometry doubled = build_geometry(MediumSpec(257, 2.0, order));
    for (std::size_t k = 0; k < unit.ell.size(); ++k)
        CHECK(doubled.ell[k] == 2.0 * unit.ell[k]);
    for (std::size_t k = 0; k < unit.lambda.size(); ++k)
        CHECK(doubled.lambda[k] == 2.0 * unit.lambda[k]);
}

TEST_CASE("delay errors for a single branch") {
    const MediumSpec spec(1, 1.0, FractionalOrder(0.7));
    const DelayErrorReport report = eta_errors(build_geometry(spec), spec);
    CHECK(report.eta.size() == 1);
    CHECK(report.eta[0] == 1.0);  // L * 1 - lambda_0
    CHECK(report.epsilon_n == 1.0);
    CHECK(std::isinf(report.upper_bound));
}

TEST_CASE("epsilon_N decays along N") {
    auto epsilon_at = [](std::size_t n, double s) {
        const MediumSpec spec(n, 1.0, FractionalOrder(s));
        return eta_errors(build_geometry(spec), spec).epsilon_n;
    };
    CHECK(epsilon_at(100, 0.5) < epsilon_at(10, 0.5));
    CHECK(epsilon_at(10000, 0.5) < epsilon_at(100, 0.5));
    for (double s : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        double prev = std::numeric_limits<double>::infinity();
        double first = 0.0;
        for (std::size_t n : {10ul, 100ul, 1000ul, 10000ul}) {
            const double eps = epsilon_at(n, s);
            CHECK(eps < prev);
            if (n == 10) first = eps;
            prev = eps;
        }
        CHECK(prev < 0.5 * first);
    }
}

TEST_CASE("explicit upper bound behaves and dominates") {
    const FractionalOrder order(0.5);
    CHECK_THROWS_AS(epsilon_upper_bound(1, order, 1.0), std::domain_error);
    const double at2 = epsilon_upper_bound(2, order, 1.0);
    CHECK(at2 > 0.0);
    CHECK(std::isfinite(at2));
    CHECK(epsilon_upper_bound(1000000, order, 1.0) < epsilon_upper_bound(1000, order, 1.0));
    CHECK(epsilon_upper_bound(1000, order, 1.0) < epsilon_upper_bound(10, order, 1.0));

    // Spot checks here; the acceptance suite sweeps N = 2..2000 exhaustively.
    for (double s : {0.1, 0.5, 0.9}) {
        const FractionalOrder ord(s);
        for (std::size_t n : {2ul, 3ul, 7ul, 50ul, 500ul, 2000ul}) {
            const MediumSpec spec(n, 1.0, ord);
            const DelayErrorReport report = eta_errors(build_geometry(spec), spec);
            CHECK(report.epsilon_n <= report.upper_bound);
        }
    }
}

TEST_CASE("the bound scales linearly in L") {
    const FractionalOrder order(0.25);
    CHECK(epsilon_upper_bound(50, order, 3.0) ==
          doctest::Approx(3.0 * epsilon_upper_bound(50, order, 1.0)).epsilon(1e-15));
}

TEST_CASE("delay errors scale linearly in L") {
    const FractionalOrder order(0.6);
    const MediumSpec unit(123, 1.0, order);
    const MediumSpec doubled(123, 2.0, order);
    const DelayErrorReport r1 = eta_errors(build_geometry(unit), unit);
    const DelayErrorReport r2 = eta_errors(build_geometry(doubled), doubled);
    CHECK(r2.epsilon_n == doctest::Approx(2.0 * r1.epsilon_n).epsilon(1e-14));
    for (std::size_t k = 0; k < r1.eta.size(); ++k)
        CHECK(r2.eta[k] == doctest::Approx(2.0 * r1.eta[k]).epsilon(1e-13));
}

TEST_CASE("partial-sum sandwich") {
    auto holds = [](std::size_t n, double s, double length) {
        const MediumSpec spec(n, length, FractionalOrder(s));
        return lambda_sandwich_check(build_geometry(spec), spec);
    };
    CHECK(holds(2, 0.5, 1.0));
    CHECK(holds(500, 0.25, 3.0));
    CHECK(holds(500, 0.75, 1.0));
    for (double s : {0.1, 0.4, 0.8})
        for (std::size_t n : {3ul, 17ul, 211ul, 1024ul}) CHECK(holds(n, s, 1.0));
}

}  // TEST_SUITE
