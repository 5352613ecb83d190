#include "fracwave/quadrature.hpp"

#include <map>
#include <mutex>
#include <numbers>
#include <utility>

namespace fracwave {

namespace {

// P_n(x) and P_n'(x) from the three-term recurrence.
std::pair<double, double> legendre_with_deriv(int n, double x) {
    double prev = 1.0;
    double cur = x;
    for (int k = 2; k <= n; ++k) {
        const double next = ((2 * k - 1) * x * cur - (k - 1) * prev) / k;
        prev = cur;
        cur = next;
    }
    const double deriv = n * (x * cur - prev) / (x * x - 1.0);
    return {cur, deriv};
}

QuadRule compute_gauss_legendre(int n) {
    QuadRule rule;
    rule.nodes.assign(n, 0.0);
    rule.weights.assign(n, 0.0);

    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Chebyshev-like initial guess for the i-th positive root.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double deriv = 0.0;
        for (int it = 0; it < 64; ++it) {
            const auto [value, d] = legendre_with_deriv(n, x);
            deriv = d;
            const double step = value / d;
            x -= step;
            if (std::abs(step) < 1e-15) {
                // One polishing pass so the weight uses the converged root.
                const auto [pv, pd] = legendre_with_deriv(n, x);
                x -= pv / pd;
                deriv = pd;
                break;
            }
        }
        const double w = 2.0 / ((1.0 - x * x) * deriv * deriv);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

}  // namespace

const QuadRule& gauss_legendre_rule(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre_rule: order must be >= 1");
    static std::mutex mutex;
    static std::map<int, QuadRule> cache;
    std::scoped_lock lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_gauss_legendre(n)).first;
    return it->second;
}

}  // namespace fracwave
