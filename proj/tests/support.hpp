#pragma once

// Shared fixtures: deterministic random states and pure-state builders.

#include <random>
#include <vector>

#include "entdyn/linalg.hpp"

namespace entdyn::test {

inline DensityMatrix random_density(std::mt19937_64& rng, int qubits = 3) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    const int d = 1 << qubits;
    ComplexMatrix g(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) g(i, j) = cplx{gauss(rng), gauss(rng)};
    ComplexMatrix w = g * g.adjoint();
    const double tr = w.trace().real();
    ComplexMatrix m(d);
    for (int i = 0; i < d; ++i) {
        m(i, i) = cplx{w(i, i).real() / tr, 0.0};
        for (int j = i + 1; j < d; ++j) {
            const cplx v = 0.5 * (w(i, j) + std::conj(w(j, i))) / tr;
            m(i, j) = v;
            m(j, i) = std::conj(v);
        }
    }
    return DensityMatrix(qubits, std::move(m));
}

inline DensityMatrix pure3(const std::vector<cplx>& amps) { return DensityMatrix::pure(3, amps); }

inline std::vector<cplx> ghz_amps() {
    std::vector<cplx> v(8, 0.0);
    v[0] = v[7] = 1.0 / std::sqrt(2.0);
    return v;
}

inline std::vector<cplx> w_amps() {
    std::vector<cplx> v(8, 0.0);
    v[1] = v[2] = v[4] = 1.0 / std::sqrt(3.0);
    return v;
}

}  // namespace entdyn::test
