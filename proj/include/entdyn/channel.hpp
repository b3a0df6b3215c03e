#pragma once

// Local amplitude damping of one and three qubits. The three-qubit map has
// two implementations: the element-update tables (production path) and the
// Kraus-product conjugation (oracle path); tests keep them entrywise equal.

#include "entdyn/decoherence.hpp"
#include "entdyn/linalg.hpp"

namespace entdyn {

struct KrausPair {
    ComplexMatrix k0;  // diag(1, P)
    ComplexMatrix k1;  // sqrt(1-|P|^2) |0><1|
};

KrausPair damping_kraus(cplx P);
inline KrausPair damping_kraus(Amplitude P) { return damping_kraus(cplx{P.value, 0.0}); }

// rho00 -> rho00 + rho11 (1-|P|^2), rho01 -> rho01 P, rho11 -> rho11 |P|^2.
DensityMatrix evolve_single(const DensityMatrix& rho0, cplx P);
inline DensityMatrix evolve_single(const DensityMatrix& rho0, Amplitude P) {
    return evolve_single(rho0, cplx{P.value, 0.0});
}

// The element-update tables for real P, with the triple-excitation
// population closing the set as rho77(t) = P^6 rho77(0) and rho00 fixed by
// unit trace.
DensityMatrix evolve_three_direct(const DensityMatrix& rho0, double P);
inline DensityMatrix evolve_three_direct(const DensityMatrix& rho0, Amplitude P) {
    return evolve_three_direct(rho0, P.value);
}

// Sum over the eight operators K_i (x) K_j (x) K_k applied by conjugation.
DensityMatrix evolve_three_kraus(const DensityMatrix& rho0, double P);
inline DensityMatrix evolve_three_kraus(const DensityMatrix& rho0, Amplitude P) {
    return evolve_three_kraus(rho0, P.value);
}

}  // namespace entdyn
