#pragma once

// The scalar decoherence function P_t of a qubit coupled to a damped
// Jaynes-Cummings reservoir with Lorentzian spectral density, plus its
// memory kernel, an independent fixed-step ODE oracle and its zeros.

#include <vector>

namespace entdyn {

enum class Regime { markovian, boundary, non_markovian };

// gamma0 is the relaxation rate (1/tau_R), lambda the spectral width
// (1/tau_B). Weak coupling lambda > 2*gamma0 is Markovian; strong coupling
// lambda < 2*gamma0 is non-Markovian.
struct ReservoirParams {
    double gamma0 = 1.0;
    double lambda = 1.0;

    ReservoirParams(double gamma0_, double lambda_);

    // gamma0 fixes the time unit everywhere, so specs carry only the ratio.
    static ReservoirParams from_ratio(double lambda_over_gamma0) {
        return ReservoirParams(1.0, lambda_over_gamma0);
    }

    Regime regime() const;
    double decay_rate() const;        // d_bar = sqrt(lambda^2 - 2 gamma0 lambda), Markovian
    double oscillation_rate() const;  // d = sqrt(2 gamma0 lambda - lambda^2), non-Markovian
};

// One sample of P_t. Coherences scale by value, populations by value^2.
struct Amplitude {
    double value = 1.0;
};

Amplitude amplitude_markovian(double t, const ReservoirParams& p);
Amplitude amplitude_nonmarkovian(double t, const ReservoirParams& p);

// Regime dispatch; at lambda = 2*gamma0 uses the analytic limit
// e^{-lambda t/2} (1 + lambda t/2).
Amplitude amplitude(double t, const ReservoirParams& p);

// Reservoir correlation function f(dt) = (gamma0 lambda / 2) e^{-lambda |dt|}.
double memory_kernel(double dt, const ReservoirParams& p);

// Integrates P'' + lambda P' + (gamma0 lambda / 2) P = 0, P(0)=1, P'(0)=0
// (the local reduction of the memory-kernel equation) with classic RK4 on a
// uniform grid of `steps` intervals; returns the steps+1 samples of P.
std::vector<Amplitude> amplitude_ode_oracle(double t_max, int steps, const ReservoirParams& p);

// Zeros t_n = (2/d) [n pi - atan(d/lambda)] of the non-Markovian closed
// form, n = 1..n_max, each checked to bracket a sign change.
std::vector<double> amplitude_zeros(const ReservoirParams& p, int n_max);

}  // namespace entdyn
