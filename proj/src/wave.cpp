#include "fracwave/wave.hpp"

#include <cmath>
#include <span>
#include <stdexcept>

namespace fracwave {

SmoothFunction sine_perturbation() {
    return {
        [](double r) { return std::sin(r); },
        [](double r) { return std::cos(r); },
        [](double r) { return -std::sin(r); },
    };
}

WaveProfile::WaveProfile(double a1, double a2, double a3, double mu, SmoothFunction phi)
    : a1_(a1), a2_(a2), a3_(a3), mu_(mu), phi_(std::move(phi)) {
    if (a2 < 0.0 || a3 < 0.0)
        throw std::domain_error("WaveProfile: a2 and a3 must be >= 0");
    if (!(mu >= 0.0) || mu >= 1.0)
        throw std::domain_error("WaveProfile: mu must lie in [0,1)");
    if (mu > 0.0 && (!phi_.value || !phi_.deriv1 || !phi_.deriv2))
        throw std::domain_error("WaveProfile: mu > 0 requires a perturbation with derivatives");
    regime_flag_ = !(a2 > 0.0 && a3 > 0.0 && a2 / a3 >= 2.0);
}

double WaveProfile::eval(double r, int derivative_order) const {
    switch (derivative_order) {
        case 0: {
            double v = a1_ + a2_ * r - 0.5 * a3_ * r * r;
            if (mu_ != 0.0) v += mu_ * phi_.value(r);
            return v;
        }
        case 1: {
            double v = a2_ - a3_ * r;
            if (mu_ != 0.0) v += mu_ * phi_.deriv1(r);
            return v;
        }
        case 2: {
            double v = -a3_;
            if (mu_ != 0.0) v += mu_ * phi_.deriv2(r);
            return v;
        }
        default:
            throw std::invalid_argument("WaveProfile::eval: derivative_order must be 0, 1 or 2");
    }
}

TravellingWave::TravellingWave(WaveProfile profile_, double speed_, double length_)
    : profile(std::move(profile_)), speed(speed_), length(length_) {
    if (!(speed > 0.0)) throw std::domain_error("TravellingWave: speed must be > 0");
    if (!(length > 0.0)) throw std::domain_error("TravellingWave: length must be > 0");
}

double wave_equation_residual(const TravellingWave& wave, double x, double t, double h) {
    if (!(h > 0.0)) throw std::domain_error("wave_equation_residual: h must be > 0");
    const double center = wave.eval(x, t);
    const double dtt = (wave.eval(x, t + h) - 2.0 * center + wave.eval(x, t - h)) / (h * h);
    const double dxx = (wave.eval(x + h, t) - 2.0 * center + wave.eval(x - h, t)) / (h * h);
    return dtt - wave.speed * wave.speed * dxx;
}

namespace {

double pairwise_sum(std::span<const double> values) {
    if (values.size() <= 8) {
        double acc = 0.0;
        for (double v : values) acc += v;
        return acc;
    }
    const std::size_t half = values.size() / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

}  // namespace

double discrete_superposition(const TravellingWave& wave, const MediumGeometry& geom,
                              double x, double t) {
    if (std::abs(geom.base_length - wave.length) > 1e-12 * wave.length)
        throw std::invalid_argument(
            "discrete_superposition: geometry base length does not match the wave length");

    const std::size_t n = geom.branch_count();
    std::vector<double> terms(n);
    for (std::size_t k = 1; k <= n; ++k)
        terms[k - 1] = wave.eval(x, t - geom.lambda[k - 1] / wave.speed);
    return pairwise_sum(terms) / static_cast<double>(n);
}

}  // namespace fracwave
