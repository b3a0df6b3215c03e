#pragma once

// Entanglement measures computed numerically from a density matrix:
// negativities, two-tangles, pi-tangle, Wootters concurrence, pure-state
// residual entanglement, CKW monogamy margin.

#include <array>
#include <span>

#include "entdyn/linalg.hpp"

namespace entdyn {

// ||rho^{T_q}|| - 1, clamped to >= 0 (sub-1e-12 negatives are roundoff).
double negativity(const DensityMatrix& rho, Qubit q);

// Negativity of the two-qubit reduced state; the partial transpose acts on
// the first listed qubit. Symmetric in the pair (asserted by test).
double two_tangle(const DensityMatrix& rho, Qubit first, Qubit second);

struct PiTangleReport {
    std::array<double, 3> one_vs_rest{};  // N_A(BC), N_B(AC), N_(AB)C
    std::array<double, 3> pairs{};        // N_AB, N_AC, N_BC
    std::array<double, 3> pi_abc{};       // raw, may dip slightly negative
    double pi = 0.0;
};

PiTangleReport pi_tangle(const DensityMatrix& rho);

// Wootters concurrence of a two-qubit mixed state, via singular values of
// the tau matrix tau_ij = x_i^T (sy (x) sy) x_j over subnormalized
// eigenvectors x_i; small singular values stay absolutely accurate.
double concurrence(const DensityMatrix& rho2);

// tau_ABC = 4 |d1 - 2 d2 + 4 d3| for a pure state sum a_ijk |ijk>.
double residual_pure(std::span<const cplx, 8> amplitudes);

// 4 det(rho_A) - C(rho_AB)^2 - C(rho_AC)^2.
double ckw_margin(const DensityMatrix& rho);

struct MeasureReport {
    std::array<double, 3> one_vs_rest{};
    std::array<double, 3> pairs{};
    std::array<double, 3> pi_abc{};
    double pi = 0.0;
    std::array<double, 3> concurrences{};  // C_AB, C_AC, C_BC
    double ckw = 0.0;
};

MeasureReport measure_report(const DensityMatrix& rho);

}  // namespace entdyn
