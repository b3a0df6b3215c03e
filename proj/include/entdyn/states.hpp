#pragma once

// Constructors for the initial states under study: GHZ-type families I-IV,
// W-type families, their rank-2 mixture with its known residual
// entanglement curve, and a GHZ-symmetry deviation probe.

#include <array>

#include "entdyn/linalg.hpp"

namespace entdyn {

enum class GhzFamily { I = 1, II = 2, III = 3, IV = 4 };
enum class WFamily { W1 = 1, W2 = 2 };

// a|lo> + b e^{i delta}|hi> with (lo,hi) = (0,7), (1,6), (3,4), (2,5) for
// families I..IV. Amplitudes are nonnegative reals with an explicit phase.
struct GhzSpec {
    GhzFamily family = GhzFamily::I;
    double a = 0.0;
    double b = 0.0;
    double delta = 0.0;

    static GhzSpec from_a2(GhzFamily family, double a2, double delta = 0.0);
};

// W1 = a|1> + b e^{i d1}|2> + c e^{i d2}|4>;  W2 = a|6> + b e^{i d1}|5> + c e^{i d2}|3>.
struct WSpec {
    WFamily family = WFamily::W1;
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double delta1 = 0.0;
    double delta2 = 0.0;

    static WSpec from_squares(WFamily family, double a2, double b2, double c2,
                              double delta1 = 0.0, double delta2 = 0.0);
};

// p |GHZ><GHZ| + (1-p) |W><W| with the standard symmetric GHZ and W.
struct MixtureSpec {
    double p = 1.0;
};

std::array<cplx, 8> ghz_amplitudes(const GhzSpec& spec);
std::array<cplx, 8> w_amplitudes(const WSpec& spec);

DensityMatrix make_ghz(const GhzSpec& spec);
DensityMatrix make_w(const WSpec& spec);
DensityMatrix make_mixture(const MixtureSpec& spec);

// Residual entanglement of the GHZ/W mixture: zero up to
// p0 = 4*2^(1/3)/(3+4*2^(1/3)), then p^2 - (8 sqrt(6)/9) sqrt(p (1-p)^3),
// then the tangent line 1 - (1-p)(3/2 + sqrt(465)/18) from p1 on.
double tau_mixture(double p);
double tau_mixture_p0();
double tau_mixture_p1();

// Max entrywise |U rho U^dag - rho| over the six qubit permutations, the
// simultaneous flip sx(x)sx(x)sx, and z-rotations with phi1+phi2+phi3 = 0
// sampled on a fixed 8-point grid. A witness, not a supremum.
double ghz_symmetry_deviation(const DensityMatrix& rho);

}  // namespace entdyn
