#pragma once

// Shared quadrature engine.
//
// Two base schemes are exposed: Gauss-Legendre (nodes computed once per
// order and cached) and composite midpoint. On top of the plain rule the
// engine provides integrate_power_composed(), which evaluates integrals of
// the form
//
//     I = \int_0^X g(v^p) dv,     g smooth, p > 0,
//
// the shape every singular-kernel integral in this library reduces to after
// its desingularizing substitution. The integrand g(v^p) is bounded but has
// algebraic endpoint behaviour at v = 0 whenever p is fractional, which
// would cap a plain Gauss rule at low algebraic accuracy. The engine maps
// v = X*y^m with a fixed integer clustering power m, turning the endpoint
// exponent into m*p + m - 1 >= 10; after that the base rule converges past
// every tolerance used in this project.

#include <cmath>
#include <stdexcept>
#include <vector>

namespace fracwave {

enum class QuadScheme {
    gauss_legendre,
    midpoint,
};

/// Node count, base scheme and target absolute tolerance of a quadrature.
/// The tolerance is advisory (fixed rules do not adapt); it is the budget
/// that callers assert against in tests.
struct QuadratureSpec {
    int node_count = 256;
    QuadScheme scheme = QuadScheme::gauss_legendre;
    double abs_tol = 1e-10;
};

/// Nodes and weights of an n-point rule on [-1, 1], ascending node order.
struct QuadRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1]. Computed by Newton iteration on
/// the Legendre recurrence, cached per order, safe to call concurrently.
const QuadRule& gauss_legendre_rule(int n);

namespace detail {

inline void validate(const QuadratureSpec& q) {
    if (q.node_count < 2)
        throw std::invalid_argument("QuadratureSpec: node_count must be >= 2");
    if (!(q.abs_tol > 0.0))
        throw std::invalid_argument("QuadratureSpec: abs_tol must be > 0");
}

// Clustering power of the v = X*y^m endpoint map in integrate_power_composed.
// With p >= 1/2 (the smallest power the library ever passes) this lifts the
// endpoint exponent to >= 10.5, far past the accuracy floor of a 256-point
// Gauss rule.
inline constexpr int endpoint_cluster_power = 8;

}  // namespace detail

/// \int_a^b f(v) dv with the base scheme, no singularity handling.
template <class F>
double integrate(F&& f, double a, double b, const QuadratureSpec& q) {
    detail::validate(q);
    if (a == b) return 0.0;
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double acc = 0.0;
    if (q.scheme == QuadScheme::gauss_legendre) {
        const QuadRule& rule = gauss_legendre_rule(q.node_count);
        for (int i = 0; i < q.node_count; ++i)
            acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
        return half * acc;
    }
    const double h = (b - a) / q.node_count;
    for (int i = 0; i < q.node_count; ++i)
        acc += f(a + (i + 0.5) * h);
    return h * acc;
}

/// \int_0^X g(v^p) dv for smooth g and p > 0, via the clustering map
/// v = X*y^m described in the file header. Exact zero when X == 0.
template <class F>
double integrate_power_composed(F&& g, double p, double X, const QuadratureSpec& q) {
    detail::validate(q);
    if (!(p > 0.0))
        throw std::invalid_argument("integrate_power_composed: power must be > 0");
    if (X < 0.0)
        throw std::invalid_argument("integrate_power_composed: upper limit must be >= 0");
    if (X == 0.0) return 0.0;

    constexpr int m = detail::endpoint_cluster_power;
    const double Xp = std::pow(X, p);
    const double mp = m * p;
    auto transformed = [&](double y) {
        return m * std::pow(y, m - 1) * g(Xp * std::pow(y, mp));
    };

    double acc = 0.0;
    if (q.scheme == QuadScheme::gauss_legendre) {
        const QuadRule& rule = gauss_legendre_rule(q.node_count);
        for (int i = 0; i < q.node_count; ++i) {
            const double y = 0.5 * (1.0 + rule.nodes[i]);
            acc += rule.weights[i] * transformed(y);
        }
        return 0.5 * X * acc;
    }
    const double h = 1.0 / q.node_count;
    for (int i = 0; i < q.node_count; ++i)
        acc += transformed((i + 0.5) * h);
    return X * h * acc;
}

}  // namespace fracwave
