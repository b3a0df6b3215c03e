#include "entdyn/decoherence.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace entdyn {

ReservoirParams::ReservoirParams(double gamma0_, double lambda_) : gamma0(gamma0_), lambda(lambda_) {
    if (!(gamma0 > 0.0) || !(lambda > 0.0))
        throw std::invalid_argument("ReservoirParams: gamma0 and lambda must be positive");
}

Regime ReservoirParams::regime() const {
    if (lambda > 2.0 * gamma0) return Regime::markovian;
    if (lambda < 2.0 * gamma0) return Regime::non_markovian;
    return Regime::boundary;
}

double ReservoirParams::decay_rate() const {
    if (regime() != Regime::markovian)
        throw std::invalid_argument("decay_rate: defined only for lambda > 2*gamma0");
    return std::sqrt(lambda * lambda - 2.0 * gamma0 * lambda);
}

double ReservoirParams::oscillation_rate() const {
    if (regime() != Regime::non_markovian)
        throw std::invalid_argument("oscillation_rate: defined only for lambda < 2*gamma0");
    return std::sqrt(2.0 * gamma0 * lambda - lambda * lambda);
}

namespace {

void check_time(double t) {
    if (t < 0.0) throw std::invalid_argument("amplitude: t must be nonnegative");
}

}  // namespace

Amplitude amplitude_markovian(double t, const ReservoirParams& p) {
    check_time(t);
    const double d = p.decay_rate();
    const double h = 0.5 * d * t;
    return {std::exp(-0.5 * p.lambda * t) * (std::cosh(h) + (p.lambda / d) * std::sinh(h))};
}

Amplitude amplitude_nonmarkovian(double t, const ReservoirParams& p) {
    check_time(t);
    const double d = p.oscillation_rate();
    const double h = 0.5 * d * t;
    return {std::exp(-0.5 * p.lambda * t) * (std::cos(h) + (p.lambda / d) * std::sin(h))};
}

Amplitude amplitude(double t, const ReservoirParams& p) {
    check_time(t);
    switch (p.regime()) {
        case Regime::markovian:
            return amplitude_markovian(t, p);
        case Regime::non_markovian:
            return amplitude_nonmarkovian(t, p);
        case Regime::boundary: {
            const double h = 0.5 * p.lambda * t;
            return {std::exp(-h) * (1.0 + h)};
        }
    }
    throw std::logic_error("amplitude: unreachable");
}

double memory_kernel(double dt, const ReservoirParams& p) {
    return 0.5 * p.gamma0 * p.lambda * std::exp(-p.lambda * std::abs(dt));
}

std::vector<Amplitude> amplitude_ode_oracle(double t_max, int steps, const ReservoirParams& p) {
    if (steps < 1) throw std::invalid_argument("amplitude_ode_oracle: steps must be positive");
    if (t_max < 0.0) throw std::invalid_argument("amplitude_ode_oracle: t_max must be nonnegative");
    const double h = t_max / steps;
    const double k = 0.5 * p.gamma0 * p.lambda;

    // State y = (P, P'); y' = (P', -lambda P' - k P).
    auto deriv = [&](double P, double V, double& dP, double& dV) {
        dP = V;
        dV = -p.lambda * V - k * P;
    };

    std::vector<Amplitude> out;
    out.reserve(static_cast<size_t>(steps) + 1);
    double P = 1.0, V = 0.0;
    out.push_back({P});
    for (int i = 0; i < steps; ++i) {
        double k1p, k1v, k2p, k2v, k3p, k3v, k4p, k4v;
        deriv(P, V, k1p, k1v);
        deriv(P + 0.5 * h * k1p, V + 0.5 * h * k1v, k2p, k2v);
        deriv(P + 0.5 * h * k2p, V + 0.5 * h * k2v, k3p, k3v);
        deriv(P + h * k3p, V + h * k3v, k4p, k4v);
        P += h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
        V += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
        out.push_back({P});
    }
    return out;
}

std::vector<double> amplitude_zeros(const ReservoirParams& p, int n_max) {
    if (p.regime() != Regime::non_markovian)
        throw std::invalid_argument("amplitude_zeros: P_t has zeros only in the non-Markovian regime");
    if (n_max < 1) throw std::invalid_argument("amplitude_zeros: n_max must be positive");
    const double d = p.oscillation_rate();
    const double offset = std::atan(d / p.lambda);
    std::vector<double> zeros;
    zeros.reserve(static_cast<size_t>(n_max));
    const double eps = 1e-4 * (2.0 * std::numbers::pi / d);
    for (int n = 1; n <= n_max; ++n) {
        const double tn = (2.0 / d) * (n * std::numbers::pi - offset);
        const double left = amplitude_nonmarkovian(tn - eps, p).value;
        const double right = amplitude_nonmarkovian(tn + eps, p).value;
        if (!(left * right < 0.0))
            throw std::logic_error("amplitude_zeros: computed root does not bracket a sign change");
        zeros.push_back(tn);
    }
    return zeros;
}

}  // namespace entdyn
