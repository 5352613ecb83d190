#include "fracwave/medium.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace fracwave {

namespace {

// Memory guard: dense arrays only, so very large N is rejected rather than
// silently allocating gigabytes.
constexpr std::size_t max_branch_count = 100'000'000;

// Compensated accumulator for the long, slowly decreasing sums b_N and
// lambda_k; keeps the telescoping identity lambda_N = L tight for large N.
struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double x) {
        const double y = x - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

}  // namespace

MediumSpec::MediumSpec(std::size_t branch_count_, double base_length_, FractionalOrder order_)
    : branch_count(branch_count_), base_length(base_length_), order(order_) {
    if (branch_count == 0)
        throw std::domain_error("MediumSpec: branch_count must be >= 1");
    if (branch_count > max_branch_count)
        throw std::domain_error("MediumSpec: branch_count exceeds the dense-array guard");
    if (!(base_length > 0.0))
        throw std::domain_error("MediumSpec: base_length must be > 0");
}

MediumGeometry build_geometry(const MediumSpec& spec) {
    const std::size_t n = spec.branch_count;
    const double alpha = spec.order.alpha();
    const double length = spec.base_length;

    MediumGeometry geom;
    geom.base_length = length;
    geom.ell.resize(n);
    geom.lambda.resize(n + 1);
    geom.branch_length.resize(n);

    KahanSum b_sum;
    for (std::size_t k = 1; k <= n; ++k)
        b_sum.add(std::pow(static_cast<double>(k), -alpha));
    geom.b_n = b_sum.sum;

    geom.lambda[0] = 0.0;
    KahanSum lambda_sum;
    for (std::size_t k = 1; k <= n; ++k) {
        geom.branch_length[k - 1] = length + lambda_sum.sum;
        const double ell_k = length / (std::pow(static_cast<double>(k), alpha) * geom.b_n);
        geom.ell[k - 1] = ell_k;
        lambda_sum.add(ell_k);
        geom.lambda[k] = lambda_sum.sum;
    }
    return geom;
}

DelayErrorReport eta_errors(const MediumGeometry& geom, const MediumSpec& spec) {
    const std::size_t n = geom.branch_count();
    const double exponent = 1.0 - spec.order.alpha();
    const double length = spec.base_length;

    DelayErrorReport report;
    report.eta.resize(n);
    double sup = 0.0;
    for (std::size_t k = 1; k <= n; ++k) {
        const double designed = length * std::pow(static_cast<double>(k) / n, exponent);
        const double eta = designed - geom.lambda[k - 1];
        report.eta[k - 1] = eta;
        sup = std::max(sup, std::abs(eta));
    }
    report.epsilon_n = sup;
    report.upper_bound = n >= 2 ? epsilon_upper_bound(n, spec.order, length)
                                : std::numeric_limits<double>::infinity();
    return report;
}

double epsilon_upper_bound(std::size_t branch_count, const FractionalOrder& order,
                           double base_length) {
    if (branch_count < 2)
        throw std::domain_error("epsilon_upper_bound: requires N >= 2");
    const double alpha = order.alpha();
    const double n = static_cast<double>(branch_count);
    const double n_pow = std::pow(n, 1.0 - alpha);        // N^{1-alpha}
    const double n_half = std::pow(n, 0.5 * (1.0 - alpha));  // N^{(1-alpha)/2}

    const double first = 3.0 / n_half;
    const double second = std::abs(1.0 - (1.0 - 1.0 / n_half) / (1.0 - alpha / n_pow));
    const double third = std::abs((1.0 - alpha / n_pow) / (1.0 - 1.0 / n_pow) - 1.0);
    return base_length * (first + second + third);
}

bool lambda_sandwich_check(const MediumGeometry& geom, const MediumSpec& spec) {
    const std::size_t n = geom.branch_count();
    const double alpha = spec.order.alpha();
    const double exponent = 1.0 - alpha;
    const double n_pow = std::pow(static_cast<double>(n), exponent);
    const double np1_pow = std::pow(static_cast<double>(n + 1), exponent);

    for (std::size_t k = 1; k <= n; ++k) {
        const double ratio = geom.lambda[k - 1] / geom.base_length;
        const double k_pow = std::pow(static_cast<double>(k), exponent);
        const double lower = (k_pow - 1.0) / (n_pow - alpha);
        if (ratio < lower) return false;
        if (k >= 2) {
            const double km1_pow = std::pow(static_cast<double>(k - 1), exponent);
            const double upper = (km1_pow - alpha) / (np1_pow - 1.0);
            if (ratio > upper) return false;
        }
    }
    return true;
}

}  // namespace fracwave
