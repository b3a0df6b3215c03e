#include "entdyn/states.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

namespace entdyn {

namespace {

constexpr double kNormTol = 1e-12;

std::pair<int, int> ghz_basis_pair(GhzFamily family) {
    switch (family) {
        case GhzFamily::I: return {0, 7};
        case GhzFamily::II: return {1, 6};
        case GhzFamily::III: return {3, 4};
        case GhzFamily::IV: return {2, 5};
    }
    throw std::invalid_argument("ghz_basis_pair: invalid family");
}

}  // namespace

GhzSpec GhzSpec::from_a2(GhzFamily family, double a2, double delta) {
    if (a2 < 0.0 || a2 > 1.0) throw std::invalid_argument("GhzSpec: a^2 must be in [0,1]");
    return {family, std::sqrt(a2), std::sqrt(1.0 - a2), delta};
}

WSpec WSpec::from_squares(WFamily family, double a2, double b2, double c2, double delta1, double delta2) {
    if (a2 < 0.0 || b2 < 0.0 || c2 < 0.0 || std::abs(a2 + b2 + c2 - 1.0) > kNormTol)
        throw std::invalid_argument("WSpec: squared amplitudes must be nonnegative and sum to 1");
    return {family, std::sqrt(a2), std::sqrt(b2), std::sqrt(c2), delta1, delta2};
}

std::array<cplx, 8> ghz_amplitudes(const GhzSpec& spec) {
    if (spec.a < 0.0 || spec.b < 0.0) throw std::invalid_argument("make_ghz: amplitudes must be nonnegative");
    if (std::abs(spec.a * spec.a + spec.b * spec.b - 1.0) > kNormTol)
        throw std::invalid_argument("make_ghz: amplitudes must satisfy a^2 + b^2 = 1");
    const auto [lo, hi] = ghz_basis_pair(spec.family);
    std::array<cplx, 8> v{};
    v[lo] = spec.a;
    v[hi] = spec.b * std::polar(1.0, spec.delta);
    return v;
}

std::array<cplx, 8> w_amplitudes(const WSpec& spec) {
    if (spec.a < 0.0 || spec.b < 0.0 || spec.c < 0.0)
        throw std::invalid_argument("make_w: amplitudes must be nonnegative");
    if (std::abs(spec.a * spec.a + spec.b * spec.b + spec.c * spec.c - 1.0) > kNormTol)
        throw std::invalid_argument("make_w: amplitudes must satisfy a^2 + b^2 + c^2 = 1");
    std::array<cplx, 8> v{};
    if (spec.family == WFamily::W1) {
        v[1] = spec.a;
        v[2] = spec.b * std::polar(1.0, spec.delta1);
        v[4] = spec.c * std::polar(1.0, spec.delta2);
    } else {
        v[6] = spec.a;
        v[5] = spec.b * std::polar(1.0, spec.delta1);
        v[3] = spec.c * std::polar(1.0, spec.delta2);
    }
    return v;
}

DensityMatrix make_ghz(const GhzSpec& spec) {
    const auto v = ghz_amplitudes(spec);
    return DensityMatrix::pure(3, std::vector<cplx>(v.begin(), v.end()));
}

DensityMatrix make_w(const WSpec& spec) {
    const auto v = w_amplitudes(spec);
    return DensityMatrix::pure(3, std::vector<cplx>(v.begin(), v.end()));
}

DensityMatrix make_mixture(const MixtureSpec& spec) {
    if (spec.p < 0.0 || spec.p > 1.0) throw std::invalid_argument("make_mixture: p must be in [0,1]");
    const double s2 = 1.0 / std::sqrt(2.0);
    const double s3 = 1.0 / std::sqrt(3.0);
    std::array<cplx, 8> ghz{}, w{};
    ghz[0] = s2;
    ghz[7] = s2;
    w[1] = s3;
    w[2] = s3;
    w[4] = s3;
    ComplexMatrix m(8);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            m(i, j) = spec.p * ghz[i] * std::conj(ghz[j]) + (1.0 - spec.p) * w[i] * std::conj(w[j]);
    return DensityMatrix(3, std::move(m));
}

double tau_mixture_p0() {
    const double c = 4.0 * std::cbrt(2.0);
    return c / (3.0 + c);
}

double tau_mixture_p1() { return 0.5 + 3.0 * std::sqrt(465.0) / 310.0; }

double tau_mixture(double p) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("tau_mixture: p must be in [0,1]");
    const double p0 = tau_mixture_p0();
    const double p1 = tau_mixture_p1();
    if (p <= p0) return 0.0;
    if (p <= p1) return p * p - (8.0 * std::sqrt(6.0) / 9.0) * std::sqrt(p * (1.0 - p) * (1.0 - p) * (1.0 - p));
    return 1.0 - (1.0 - p) * (1.5 + std::sqrt(465.0) / 18.0);
}

namespace {

ComplexMatrix permutation_unitary(const std::array<int, 3>& perm) {
    // Maps the bit at slot s to slot perm[s].
    ComplexMatrix u(8);
    for (int i = 0; i < 8; ++i) {
        int j = 0;
        for (int s = 0; s < 3; ++s) j |= ((i >> (2 - s)) & 1) << (2 - perm[s]);
        u(j, i) = 1.0;
    }
    return u;
}

ComplexMatrix z_rotation(double phi1, double phi2, double phi3) {
    // exp(i phi sz) = diag(e^{i phi}, e^{-i phi}) per qubit.
    ComplexMatrix u(8);
    const double phi[3] = {phi1, phi2, phi3};
    for (int i = 0; i < 8; ++i) {
        double angle = 0.0;
        for (int s = 0; s < 3; ++s) angle += ((i >> (2 - s)) & 1) ? -phi[s] : phi[s];
        u(i, i) = std::polar(1.0, angle);
    }
    return u;
}

}  // namespace

double ghz_symmetry_deviation(const DensityMatrix& rho) {
    if (rho.qubits() != 3) throw std::invalid_argument("ghz_symmetry_deviation: expected a 3-qubit state");
    std::vector<ComplexMatrix> unitaries;

    const std::array<std::array<int, 3>, 6> perms = {
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    for (const auto& p : perms) unitaries.push_back(permutation_unitary(p));

    const ComplexMatrix sx = pauli_x();
    unitaries.push_back(kron(kron(sx, sx), sx));

    // Fixed grid over the two free z-rotation angles, phi3 = -phi1 - phi2.
    const double pi = std::numbers::pi;
    for (double phi1 : {pi / 4.0, pi / 2.0, 3.0 * pi / 4.0, pi})
        for (double phi2 : {pi / 3.0, 2.0 * pi / 3.0})
            unitaries.push_back(z_rotation(phi1, phi2, -phi1 - phi2));

    double worst = 0.0;
    for (const ComplexMatrix& u : unitaries) {
        const ComplexMatrix rotated = u * rho.matrix() * u.adjoint();
        worst = std::max(worst, rotated.max_abs_diff(rho.matrix()));
    }
    return worst;
}

}  // namespace entdyn
