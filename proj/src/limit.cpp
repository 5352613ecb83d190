#include "fracwave/limit.hpp"

#include <cmath>
#include <stdexcept>

namespace fracwave {

ScaleParams::ScaleParams(double length_, double speed_, const FractionalOrder& order)
    : length(length_), speed(speed_) {
    if (!(length > 0.0)) throw std::domain_error("ScaleParams: length must be > 0");
    if (!(speed > 0.0)) throw std::domain_error("ScaleParams: speed must be > 0");
    characteristic_time = length / speed;
    delta = std::pow(characteristic_time, -order.s());
}

namespace {

// \int_0^1 f_o^{(d)}(shift + v^beta) dv.
double profile_integral(const WaveProfile& profile, int derivative_order, double shift,
                        double beta, const QuadratureSpec& quad) {
    return integrate_power_composed(
        [&](double y) { return profile.eval(shift + y, derivative_order); }, beta, 1.0, quad);
}

// \int_0^upper \int_0^1 f_o''(shift + v^beta + w^beta) dv dw by tensor
// product of the one-dimensional rule.
double double_integral(const WaveProfile& profile, double shift, double beta, double upper,
                       const QuadratureSpec& quad) {
    return integrate_power_composed(
        [&](double outer) { return profile_integral(profile, 2, shift + outer, beta, quad); },
        beta, upper, quad);
}

}  // namespace

double continuum_u(const WaveProfile& profile, const FractionalOrder& order,
                   const ScaleParams& scales, double x, double t, const QuadratureSpec& quad,
                   ContinuumDeriv which) {
    const double shift = x / scales.length - t / scales.characteristic_time;
    const double beta = order.beta();
    const double time = scales.characteristic_time;
    const double length = scales.length;
    switch (which) {
        case ContinuumDeriv::value:
            return profile_integral(profile, 0, shift, beta, quad);
        case ContinuumDeriv::time1:
            return -profile_integral(profile, 1, shift, beta, quad) / time;
        case ContinuumDeriv::time2:
            return profile_integral(profile, 2, shift, beta, quad) / (time * time);
        case ContinuumDeriv::space1:
            return profile_integral(profile, 1, shift, beta, quad) / length;
        case ContinuumDeriv::space2:
            return profile_integral(profile, 2, shift, beta, quad) / (length * length);
    }
    throw std::invalid_argument("continuum_u: unknown derivative selector");
}

double kappa(const FractionalOrder& order, double a2, double a3) {
    if (!(a3 > 0.0)) throw std::domain_error("kappa: a3 must be > 0");
    const double s = order.s();
    return (2.0 - s) * (a2 / a3 - 1.0) - (2.0 - s) * (2.0 - s) / (3.0 - s) + 1.0;
}

ResidualReport scaled_residual_at_LT(const WaveProfile& profile, const FractionalOrder& order,
                                     double kappa_value, const QuadratureSpec& quad) {
    const double s = order.s();
    const double beta = order.beta();

    ResidualReport report;
    report.term_boundary = -(2.0 - s) * profile_integral(profile, 1, 1.0, beta, quad);
    report.term_double = double_integral(profile, 0.0, beta, 1.0, quad);
    report.term_diffusion = -kappa_value * profile_integral(profile, 2, 0.0, beta, quad);
    report.total = report.term_boundary + report.term_double + report.term_diffusion;
    report.kappa_used = kappa_value;
    report.mu = profile.mu();
    return report;
}

double residual_general(const WaveProfile& profile, const FractionalOrder& order,
                        double kappa_value, const ScaleParams& scales, double x, double t,
                        const QuadratureSpec& quad) {
    if (!(t > 0.0)) throw std::domain_error("residual_general: t must be > 0");
    const double s = order.s();
    const double beta = order.beta();
    const double time = scales.characteristic_time;
    const double x_tilde = x / scales.length;
    const double t_tilde = t / time;
    const double shift = x_tilde - t_tilde;

    const double boundary = -(2.0 - s) * std::pow(t, 1.0 - s) / time *
                            profile_integral(profile, 1, x_tilde, beta, quad);
    const double memory = std::pow(time, -s) *
                          double_integral(profile, shift, beta, std::pow(t_tilde, 2.0 - s), quad);
    const double diffusion = -kappa_value * std::pow(time, -s) *
                             profile_integral(profile, 2, shift, beta, quad);
    return boundary + memory + diffusion;
}

CaputoCrosscheck caputo_of_u_crosscheck(const WaveProfile& profile, const FractionalOrder& order,
                                        const ScaleParams& scales, double x,
                                        const QuadratureSpec& quad) {
    const double s = order.s();
    const double beta = order.beta();
    const double time = scales.characteristic_time;
    const double x_tilde = x / scales.length;

    // Route (a): the assembled dimensionless integrals. du(0) comes from the
    // analytic integrand, never from differencing at t = 0.
    const double u_dot0 = -profile_integral(profile, 1, x_tilde, beta, quad) / time;
    const double memory = double_integral(profile, x_tilde - 1.0, beta, 1.0, quad);
    const double assembled =
        (2.0 - s) * std::pow(time, 1.0 - s) * u_dot0 + std::pow(time, -s) * memory;

    // Route (b): the generic operator applied to the superposition as a
    // plain function of time.
    const TimeFunction u{
        [&](double t) { return continuum_u(profile, order, scales, x, t, quad); },
        [&](double t) {
            return continuum_u(profile, order, scales, x, t, quad, ContinuumDeriv::time1);
        },
        [&](double t) {
            return continuum_u(profile, order, scales, x, t, quad, ContinuumDeriv::time2);
        },
    };
    const double via_operator = caputo_ibp(u, order, time, quad);

    return {assembled, via_operator, std::abs(assembled - via_operator)};
}

CoordinateMap dimensionless_transform(const ScaleParams& scales) {
    return {scales.length, scales.characteristic_time};
}

}  // namespace fracwave
