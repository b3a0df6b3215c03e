#pragma once

// Closed-form, time-dependent results for the damped GHZ/W families:
// pi-tangles, negativities, spectral decompositions, residual-entanglement
// upper bounds, the ESD condition and threshold, and the bipartite
// concurrences. The numeric engine in `measures` cross-validates all of it.

#include <array>
#include <optional>

#include "entdyn/decoherence.hpp"
#include "entdyn/linalg.hpp"
#include "entdyn/states.hpp"

namespace entdyn {

// Q(t) = sqrt(b^4 P^4 (1-P^2)^2 (1-2P^2)^2 + 4 a^2 b^2 P^6) - b^2 P^2 (1-P^2).
// The family-I one-vs-rest negativity is max(Q, 0).
double q_function(double a2, Amplitude P);

// a^2 <= (1-P^2)^3 / (1 + (1-P^2)^3): the family-I pi-tangle vanishes.
bool esd_condition(double a2, Amplitude P);

// Earliest Markovian time at which esd_condition holds, bisected to 1e-6
// relative on [0, 50/gamma0]; nullopt when the family-I tangle never dies.
std::optional<double> esd_time(double a2, const ReservoirParams& p);

struct GhzPiClosed {
    std::array<double, 3> one_vs_rest{};  // pairwise negativities are all zero
    double pi = 0.0;
};

// Families I-III per their closed forms; family IV shares the type-II
// pi-tangle with its B/C one-vs-rest entries swapped.
GhzPiClosed pi_ghz_closed(GhzFamily family, double a2, Amplitude P);

// Residual-entanglement upper bounds read off the spectral decompositions
// (families I-III).
double tau_upper_bound(GhzFamily family, double a2, Amplitude P);

struct SpectralDecomposition {
    std::vector<double> weights;
    std::vector<std::array<cplx, 8>> vectors;

    ComplexMatrix reconstruct() const;
};

SpectralDecomposition spectral_ghz(GhzFamily family, double a2, double delta, Amplitude P);

struct WPiClosed {
    std::array<double, 3> one_vs_rest{};
    std::array<double, 3> pairs{};
    double pi = 0.0;
};

// Family W1 at generic amplitudes (a,b,c nonnegative, a^2+b^2+c^2 = 1).
WPiClosed pi_w1_closed(double a, double b, double c, Amplitude P);

// Family W2 admits closed forms only at a^2 = b^2 = c^2 = 1/3. The pair
// negativity has a knee at P^2 = 2 - sqrt(2).
WPiClosed pi_w2_symmetric_closed(Amplitude P);

// Spectral decomposition of the sigma_II block of the evolved symmetric W2
// state: weights {2/3, 1/6, 1/6} on three orthonormal W-type vectors.
SpectralDecomposition sigma_w2_spectral(double delta1, double delta2);

// Bipartite concurrences {C_AB, C_AC, C_BC} of the evolved W states.
std::array<double, 3> concurrence_w_closed(WFamily family, double a, double b, double c, Amplitude P);

}  // namespace entdyn
