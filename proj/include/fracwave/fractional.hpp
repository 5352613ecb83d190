#pragma once

// Caputo fractional derivative of order s in (0,1), evaluated by two
// independent routes:
//
//   caputo_direct  D^s u(t)  = 1/Gamma(1-s) * \int_0^t du(tau) (t-tau)^{-s} dtau
//   caputo_ibp     d^s u(t)  = (2-s) t^{1-s} du(0)
//                              + \int_0^{t^{2-s}} ddu(t - v^{beta}) dv
//
// with beta = 1/(2-s). The two are proportional:
//
//   d^s u = (2-s)(1-s)Gamma(1-s) * D^s u,
//
// the factor returned by scaling_constant(). The direct route removes the
// kernel singularity analytically with the substitution w = (t-tau)^{1-s}
// before any quadrature is applied, so accuracy is set by the smoothness of
// du, not by the endpoint blow-up.

#include <functional>
#include <span>

#include "fracwave/quadrature.hpp"

namespace fracwave {

/// Fractional order s in the open interval (0,1) together with the derived
/// exponents alpha = (1-s)/(2-s) and beta = 1/(2-s) = 1 - alpha.
class FractionalOrder {
public:
    explicit FractionalOrder(double s);

    double s() const { return s_; }
    double alpha() const { return alpha_; }
    double beta() const { return beta_; }

private:
    double s_;
    double alpha_;
    double beta_;
};

/// A smooth function of time with caller-supplied analytic first and second
/// derivatives. Nothing in the library differentiates numerically; the
/// integration-by-parts route needs ddu and the error budget stays with the
/// quadrature alone.
struct TimeFunction {
    std::function<double(double)> value;
    std::function<double(double)> deriv1;
    std::function<double(double)> deriv2;

    /// Validation hook: checks deriv1 against central differences of value
    /// and deriv2 against central differences of deriv1 at the sampled
    /// points. Not invoked on any runtime path.
    bool consistent_derivatives(std::span<const double> sample_points,
                                double tol = 1e-6) const;
};

/// Euler Gamma for x > 0, Lanczos approximation, relative error well under
/// 1e-13 on the positive axis. Throws std::domain_error for x <= 0.
double gamma_fn(double x);

/// (2-s)(1-s)Gamma(1-s), the proportionality factor between the two Caputo
/// routes.
double scaling_constant(const FractionalOrder& order);

/// Caputo derivative by direct singular-kernel quadrature (desingularized,
/// see file header). Requires t > 0.
double caputo_direct(const TimeFunction& u, const FractionalOrder& order, double t,
                     const QuadratureSpec& quad);

/// Caputo derivative (scaled variant) by the integrated-by-parts form.
/// Requires t > 0 and an analytic second derivative.
double caputo_ibp(const TimeFunction& u, const FractionalOrder& order, double t,
                  const QuadratureSpec& quad);

}  // namespace fracwave
