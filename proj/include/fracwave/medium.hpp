#pragma once

// Ramified transmission medium: N branches sharing both endpoints, branch
// k of length L + lambda_{k-1}, where
//
//   b_N      = sum_{k=1..N} k^{-alpha},
//   ell_k    = L / (k^alpha * b_N),
//   lambda_k = ell_1 + ... + ell_k          (lambda_0 = 0, lambda_N = L).
//
// The increments telescope so the longest branch exceeds the base branch by
// exactly L. A branch acts purely as a transmission delay; the designed
// delays approximate the power-law profile L*(k/N)^{1-alpha} with
// discrepancy eta_{k,N}, whose supremum epsilon_N vanishes as N grows. The
// fully explicit upper bound for epsilon_N is implemented verbatim in
// epsilon_upper_bound(), and the integral-comparison sandwich that drives
// its proof is exposed as lambda_sandwich_check().

#include <cstddef>
#include <vector>

#include "fracwave/fractional.hpp"

namespace fracwave {

/// Branch count, base length and fractional order of a ramified medium.
struct MediumSpec {
    std::size_t branch_count;
    double base_length;
    FractionalOrder order;

    MediumSpec(std::size_t branch_count, double base_length, FractionalOrder order);
};

/// Fully populated branch-length data. Immutable after construction; arrays
/// use 0-based storage for the 1-based quantities (ell[k-1] is ell_k).
struct MediumGeometry {
    double b_n = 0.0;
    std::vector<double> ell;            // ell[k-1] = ell_k, k = 1..N
    std::vector<double> lambda;         // lambda[k] = lambda_k, k = 0..N
    std::vector<double> branch_length;  // branch k has length L + lambda_{k-1}
    double base_length = 0.0;

    std::size_t branch_count() const { return ell.size(); }
};

/// Delay discrepancies eta_{k,N} = L*(k/N)^{1-alpha} - lambda_{k-1} and
/// their supremum, together with the explicit upper bound (infinite for
/// N = 1, where the bound formula degenerates).
struct DelayErrorReport {
    std::vector<double> eta;  // eta[k-1] = eta_{k,N}
    double epsilon_n = 0.0;
    double upper_bound = 0.0;
};

MediumGeometry build_geometry(const MediumSpec& spec);

DelayErrorReport eta_errors(const MediumGeometry& geom, const MediumSpec& spec);

/// The explicit bound
///   L * [ 3/N^{(1-a)/2}
///         + |1 - (1 - N^{-(1-a)/2}) / (1 - a*N^{-(1-a)})|
///         + |(1 - a*N^{-(1-a)}) / (1 - N^{-(1-a)}) - 1| ],   a = alpha.
/// Requires N >= 2 so every denominator stays away from zero.
double epsilon_upper_bound(std::size_t branch_count, const FractionalOrder& order,
                           double base_length);

/// Integral-comparison sandwich for the normalized partial sums: for every
/// k in 2..N,
///   (k^{1-a} - 1)/(N^{1-a} - a)  <=  lambda_{k-1}/L  <=
///   ((k-1)^{1-a} - a)/((N+1)^{1-a} - 1).
/// For k = 1 the partial sum is empty: lambda_0 = 0 matches the lower bound
/// exactly and the upper-bound formula does not apply (it stems from an
/// integral comparison over at least one term), so only the lower inequality
/// is checked there.
bool lambda_sandwich_check(const MediumGeometry& geom, const MediumSpec& spec);

}  // namespace fracwave
