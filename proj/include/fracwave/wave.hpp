#pragma once

// Travelling profiles and their delayed superposition over the ramified
// medium. The reference profile is a perturbed concave parabola
//
//   f_o(r) = a1 + a2*r - (a3/2)*r^2 + mu*phi(r),
//
// with phi smooth and bounded together with its first two derivatives. The
// travelling wave f(x,t) = f_o((x - c t)/L) solves the wave equation with
// speed c; wave_equation_residual() checks that identity by central finite
// differences. discrete_superposition() forms the equal-weight average of
// the N branch copies, each shifted by its delay lambda_{k-1}/c.

#include <functional>

#include "fracwave/medium.hpp"

namespace fracwave {

/// A smooth scalar function bundled with its first two analytic derivatives.
struct SmoothFunction {
    std::function<double(double)> value;
    std::function<double(double)> deriv1;
    std::function<double(double)> deriv2;
};

/// sin(r) with its derivatives: the default perturbation. Smooth, bounded,
/// and not polynomial, so O(mu) remainders are genuinely exercised.
SmoothFunction sine_perturbation();

class WaveProfile {
public:
    /// Coefficients of the perturbed parabola. Requires a2 >= 0, a3 >= 0 and
    /// mu in [0,1); a perturbation with callable derivatives is required
    /// whenever mu > 0.
    WaveProfile(double a1, double a2, double a3, double mu = 0.0,
                SmoothFunction phi = sine_perturbation());

    /// f_o(r), f_o'(r) or f_o''(r) for derivative_order in {0,1,2}.
    double eval(double r, int derivative_order) const;

    double a1() const { return a1_; }
    double a2() const { return a2_; }
    double a3() const { return a3_; }
    double mu() const { return mu_; }

    /// True when the coefficients leave the concave low-curvature regime
    /// (a2, a3 > 0 with a2/a3 >= 2). The profile still evaluates fine; the
    /// diffusion-coefficient positivity argument just no longer applies.
    bool outside_low_curvature_regime() const { return regime_flag_; }

private:
    double a1_, a2_, a3_, mu_;
    SmoothFunction phi_;
    bool regime_flag_;
};

/// f(x,t) = f_o((x - c t)/L) with speed c > 0 and reference length L > 0.
struct TravellingWave {
    WaveProfile profile;
    double speed;
    double length;

    TravellingWave(WaveProfile profile, double speed, double length);

    double eval(double x, double t) const {
        return profile.eval((x - speed * t) / length, 0);
    }
};

/// Central-difference estimate of d^2_t f - c^2 d^2_x f at (x,t) with step
/// h > 0. O(h^2) for smooth profiles, identically small for quadratics.
double wave_equation_residual(const TravellingWave& wave, double x, double t, double h);

/// (1/N) * sum_{k=1..N} f(x, t - lambda_{k-1}/c): the equally spread delayed
/// sum over the branches; the k = 1 term is the undelayed wave. The geometry
/// must have been built for the same base length as the wave, otherwise a
/// std::invalid_argument configuration error is raised. Summation is
/// pairwise, so the result does not depend on evaluation chunking.
double discrete_superposition(const TravellingWave& wave, const MediumGeometry& geom,
                              double x, double t);

}  // namespace fracwave
