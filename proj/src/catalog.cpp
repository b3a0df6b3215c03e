#include "entdyn/catalog.hpp"

#include <cmath>
#include <stdexcept>

namespace entdyn {

namespace {

void check_a2(double a2) {
    if (a2 < 0.0 || a2 > 1.0) throw std::invalid_argument("a^2 must be in [0,1]");
}

double sq(double x) { return x * x; }

// sqrt(x^2 + t) - x without the cancellation that otherwise zeroes the
// result once t < eps * x^2 (t >= 0).
double sqrt_excess(double x, double t) {
    if (x <= 0.0) return std::sqrt(x * x + t) - x;
    return t / (std::sqrt(x * x + t) + x);
}

}  // namespace

double q_function(double a2, Amplitude P) {
    check_a2(a2);
    const double b2 = 1.0 - a2;
    const double p2 = P.value * P.value;
    const double u = 1.0 - p2;
    // Q = sqrt(X^2 + T) - G with X = G (1-2P^2), G = b^2 P^2 (1-P^2);
    // G - X = 2 P^2 G is formed directly to dodge the cancellation.
    const double g = b2 * p2 * u;
    const double x = g * (1.0 - 2.0 * p2);
    const double t = 4.0 * a2 * b2 * p2 * p2 * p2;
    return sqrt_excess(x, t) - 2.0 * p2 * g;
}

bool esd_condition(double a2, Amplitude P) {
    check_a2(a2);
    const double u = 1.0 - P.value * P.value;
    const double u3 = u * u * u;
    return a2 <= u3 / (1.0 + u3);
}

std::optional<double> esd_time(double a2, const ReservoirParams& p) {
    check_a2(a2);
    if (p.regime() != Regime::markovian)
        throw std::invalid_argument("esd_time: defined for the Markovian regime only");

    const double t_end = 50.0 / p.gamma0;
    auto dead = [&](double t) { return esd_condition(a2, amplitude_markovian(t, p)); };

    if (dead(0.0)) return 0.0;
    const int scan = 5000;
    double lo = 0.0, hi = -1.0;
    for (int i = 1; i <= scan; ++i) {
        const double t = t_end * i / scan;
        if (dead(t)) {
            hi = t;
            break;
        }
        lo = t;
    }
    if (hi < 0.0) return std::nullopt;
    while (hi - lo > 1e-6 * hi) {
        const double mid = 0.5 * (lo + hi);
        (dead(mid) ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

namespace {

// Type-II one-vs-rest negativities; type III is the same with a <-> b, and
// type IV shares these values with the B and C entries swapped.
void ghz2_negativities(double a2, double p2, double& n_ab, double& n_c) {
    const double b2 = 1.0 - a2;
    const double u = 1.0 - p2;
    const double p6 = p2 * p2 * p2;
    n_ab = sqrt_excess(b2 * p2 * u, 4.0 * a2 * b2 * p6);
    n_c = sqrt_excess(u * (a2 + b2 * u), 4.0 * a2 * b2 * p6);
}

}  // namespace

GhzPiClosed pi_ghz_closed(GhzFamily family, double a2, Amplitude P) {
    check_a2(a2);
    const double p2 = P.value * P.value;
    GhzPiClosed out;
    switch (family) {
        case GhzFamily::I: {
            const double n = std::max(q_function(a2, P), 0.0);
            out.one_vs_rest = {n, n, n};
            out.pi = n * n;
            return out;
        }
        case GhzFamily::II: {
            double n_ab, n_c;
            ghz2_negativities(a2, p2, n_ab, n_c);
            out.one_vs_rest = {n_ab, n_ab, n_c};
            out.pi = (2.0 * n_ab * n_ab + n_c * n_c) / 3.0;
            return out;
        }
        case GhzFamily::III: {
            double n_bc, n_a;
            ghz2_negativities(1.0 - a2, p2, n_bc, n_a);
            out.one_vs_rest = {n_a, n_bc, n_bc};
            out.pi = (n_a * n_a + 2.0 * n_bc * n_bc) / 3.0;
            return out;
        }
        case GhzFamily::IV: {
            double n_ab, n_c;
            ghz2_negativities(a2, p2, n_ab, n_c);
            out.one_vs_rest = {n_ab, n_c, n_ab};
            out.pi = (2.0 * n_ab * n_ab + n_c * n_c) / 3.0;
            return out;
        }
    }
    throw std::invalid_argument("pi_ghz_closed: invalid family");
}

namespace {

// Shared pieces of the family-I spectral decomposition, i.e. the exact
// eigensystem of the {|0>,|7>} block of the evolved state. The discriminant
// carries (1-P^2)^3 and the eigenvector component y carries P^3 (both forced
// by rho77(t) = P^6 rho77(0) and rho07(t) = P^3 rho07(0)); the
// reconstruction-vs-channel test pins both exponents.
struct Ghz1Spectrum {
    double lambda_plus, lambda_minus, x, y;
};

Ghz1Spectrum ghz1_spectrum(double a2, double P) {
    const double b2 = 1.0 - a2;
    const double p2 = P * P;
    const double u = 1.0 - p2;
    const double p6 = p2 * p2 * p2;
    const double trace2 = 1.0 - 3.0 * b2 * p2 * u;
    const double disc = std::sqrt(std::max(0.0, sq(trace2) - 4.0 * b2 * b2 * p6 * u * u * u));
    Ghz1Spectrum s;
    s.lambda_plus = 0.5 * (trace2 + disc);
    s.lambda_minus = 0.5 * (trace2 - disc);
    s.x = 1.0 - b2 * p2 * (3.0 - 3.0 * p2 + 2.0 * p2 * p2) + disc;
    s.y = 2.0 * std::sqrt(a2 * b2) * p2 * P;
    return s;
}

}  // namespace

double tau_upper_bound(GhzFamily family, double a2, Amplitude P) {
    check_a2(a2);
    const double b2 = 1.0 - a2;
    const double p2 = P.value * P.value;
    const double p4 = p2 * p2;
    switch (family) {
        case GhzFamily::I: {
            const Ghz1Spectrum s = ghz1_spectrum(a2, P.value);
            const double n2 = s.x * s.x + s.y * s.y;
            if (n2 == 0.0) return 0.0;
            return (1.0 - 3.0 * b2 * p2 * (1.0 - p2)) * 4.0 * s.x * s.x * s.y * s.y / (n2 * n2);
        }
        case GhzFamily::II:
            return 4.0 * a2 * b2 * p4 / (a2 + b2 * p2);
        case GhzFamily::III:
            return 4.0 * a2 * b2 * p4 / (a2 * p2 + b2);
        case GhzFamily::IV:
            break;
    }
    throw std::invalid_argument("tau_upper_bound: defined for families I-III");
}

ComplexMatrix SpectralDecomposition::reconstruct() const {
    ComplexMatrix m(8);
    for (size_t k = 0; k < weights.size(); ++k)
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) m(i, j) += weights[k] * vectors[k][i] * std::conj(vectors[k][j]);
    return m;
}

SpectralDecomposition spectral_ghz(GhzFamily family, double a2, double delta, Amplitude P) {
    check_a2(a2);
    const double b2 = 1.0 - a2;
    const double p2 = P.value * P.value;
    const double u = 1.0 - p2;
    const cplx phase = std::polar(1.0, delta);

    SpectralDecomposition sd;
    auto basis = [](int k) {
        std::array<cplx, 8> v{};
        v[k] = 1.0;
        return v;
    };

    switch (family) {
        case GhzFamily::I: {
            const Ghz1Spectrum s = ghz1_spectrum(a2, P.value);
            const double n = std::sqrt(s.x * s.x + s.y * s.y);
            std::array<cplx, 8> psi1{}, psi2{};
            if (n > 1e-14) {
                psi1[0] = s.x / n;
                psi1[7] = s.y / n * phase;
                psi2[0] = s.y / n;
                psi2[7] = -s.x / n * phase;
            } else {
                // x = y = 0 only when the block is diagonal with
                // rho77 >= rho00, so Lambda_+ belongs to |7>.
                psi1[7] = phase;
                psi2[0] = 1.0;
            }
            sd.weights = {s.lambda_plus, s.lambda_minus,
                          b2 * p2 * u * u, b2 * p2 * u * u, b2 * p2 * u * u,
                          b2 * p2 * p2 * u, b2 * p2 * p2 * u, b2 * p2 * p2 * u};
            sd.vectors = {psi1, psi2, basis(1), basis(2), basis(4), basis(3), basis(5), basis(6)};
            return sd;
        }
        case GhzFamily::II: {
            const double lam = p2 * (a2 + b2 * p2);
            std::array<cplx, 8> phi{};
            const double n2 = a2 + b2 * p2;
            if (n2 > 1e-28) {
                const double n = std::sqrt(n2);
                phi[1] = std::sqrt(a2) / n;
                phi[6] = std::sqrt(b2) * P.value / n * phase;
            } else {
                phi[1] = 1.0;
            }
            sd.weights = {lam, u * (a2 + b2 * u), b2 * p2 * u, b2 * p2 * u};
            sd.vectors = {phi, basis(0), basis(2), basis(4)};
            return sd;
        }
        case GhzFamily::III: {
            const double lam = p2 * (a2 * p2 + b2);
            std::array<cplx, 8> phi{};
            const double n2 = a2 * p2 + b2;
            if (n2 > 1e-28) {
                const double n = std::sqrt(n2);
                phi[3] = std::sqrt(a2) * P.value / n;
                phi[4] = std::sqrt(b2) / n * phase;
            } else {
                phi[4] = 1.0;
            }
            sd.weights = {lam, u * (a2 * u + b2), a2 * p2 * u, a2 * p2 * u};
            sd.vectors = {phi, basis(0), basis(1), basis(2)};
            return sd;
        }
        case GhzFamily::IV:
            break;
    }
    throw std::invalid_argument("spectral_ghz: decompositions cover families I-III");
}

WPiClosed pi_w1_closed(double a, double b, double c, Amplitude P) {
    if (a < 0.0 || b < 0.0 || c < 0.0 || std::abs(a * a + b * b + c * c - 1.0) > 1e-12)
        throw std::invalid_argument("pi_w1_closed: amplitudes must be nonnegative with a^2+b^2+c^2 = 1");
    const double a2 = a * a, b2 = b * b, c2 = c * c;
    const double p2 = P.value * P.value;
    const double p4 = p2 * p2;
    const double u = 1.0 - p2;

    WPiClosed out;
    out.one_vs_rest = {sqrt_excess(u, 4.0 * c2 * (a2 + b2) * p4),
                       sqrt_excess(u, 4.0 * b2 * (a2 + c2) * p4),
                       sqrt_excess(u, 4.0 * a2 * (b2 + c2) * p4)};
    const double x_ab = u + a2 * p2, x_ac = u + b2 * p2, x_bc = u + c2 * p2;
    out.pairs = {sqrt_excess(x_ab, 4.0 * b2 * c2 * p4),
                 sqrt_excess(x_ac, 4.0 * a2 * c2 * p4),
                 sqrt_excess(x_bc, 4.0 * a2 * b2 * p4)};

    // The single explicit expression for the pi-tangle; tests confirm it
    // equals the (pi_A + pi_B + pi_C)/3 assembly of the pieces above.
    out.pi = (2.0 / 3.0) *
             (2.0 * x_ab * std::sqrt(x_ab * x_ab + 4.0 * b2 * c2 * p4) +
              2.0 * x_ac * std::sqrt(x_ac * x_ac + 4.0 * a2 * c2 * p4) +
              2.0 * x_bc * std::sqrt(x_bc * x_bc + 4.0 * a2 * b2 * p4) -
              u * (std::sqrt(u * u + 4.0 * a2 * (b2 + c2) * p4) +
                   std::sqrt(u * u + 4.0 * b2 * (a2 + c2) * p4) +
                   std::sqrt(u * u + 4.0 * c2 * (a2 + b2) * p4)) -
              2.0 * (a2 * a2 + b2 * b2 + c2 * c2) * p4 - u * (3.0 + p2));
    return out;
}

WPiClosed pi_w2_symmetric_closed(Amplitude P) {
    const double p2 = P.value * P.value;
    const double p4 = p2 * p2;
    WPiClosed out;
    // sqrt(9 - 18P^2 + 17P^4) = sqrt([3(1-P^2)]^2 + 8P^4).
    const double n1 = (p2 / 3.0) * sqrt_excess(3.0 * (1.0 - p2), 8.0 * p4);
    out.one_vs_rest = {n1, n1, n1};
    const double knee = 2.0 - std::sqrt(2.0);
    double np = 0.0;
    if (p2 >= knee) {
        // sqrt(9 - 24P^2 + 20P^4) = sqrt(F^2 + 4P^4 (4P^2 - P^4 - 2)),
        // F = 3 - 4P^2 + 2P^4; the second term is >= 0 past the knee.
        const double f = 3.0 - 4.0 * p2 + 2.0 * p4;
        np = sqrt_excess(f, 4.0 * p4 * (4.0 * p2 - p4 - 2.0)) / 3.0;
    }
    out.pairs = {np, np, np};
    out.pi = n1 * n1 - 2.0 * np * np;
    return out;
}

SpectralDecomposition sigma_w2_spectral(double delta1, double delta2) {
    const cplx e1 = std::polar(1.0, -delta1);
    const cplx e2 = std::polar(1.0, -delta2);
    const double s3 = 1.0 / std::sqrt(3.0);
    const double s2 = 1.0 / std::sqrt(2.0);
    const double s6 = 1.0 / std::sqrt(6.0);

    std::array<cplx, 8> alpha1{}, alpha2{}, alpha3{};
    alpha1[1] = s3;
    alpha1[2] = s3 * e1;
    alpha1[4] = s3 * e2;
    alpha2[1] = s2;
    alpha2[4] = -s2 * e2;
    alpha3[1] = s6;
    alpha3[2] = -2.0 * s6 * e1;
    alpha3[4] = s6 * e2;

    SpectralDecomposition sd;
    sd.weights = {2.0 / 3.0, 1.0 / 6.0, 1.0 / 6.0};
    sd.vectors = {alpha1, alpha2, alpha3};
    return sd;
}

std::array<double, 3> concurrence_w_closed(WFamily family, double a, double b, double c, Amplitude P) {
    if (a < 0.0 || b < 0.0 || c < 0.0 || std::abs(a * a + b * b + c * c - 1.0) > 1e-12)
        throw std::invalid_argument("concurrence_w_closed: amplitudes must be nonnegative, normalized");
    const double p2 = P.value * P.value;
    if (family == WFamily::W1) return {2.0 * b * c * p2, 2.0 * a * c * p2, 2.0 * a * b * p2};

    const double u = 1.0 - p2;
    const double a2 = a * a, b2 = b * b, c2 = c * c;
    return {2.0 * p2 * std::max(0.0, b * c - a * std::sqrt(u * (1.0 - a2 * p2))),
            2.0 * p2 * std::max(0.0, a * c - b * std::sqrt(u * (1.0 - b2 * p2))),
            2.0 * p2 * std::max(0.0, a * b - c * std::sqrt(u * (1.0 - c2 * p2)))};
}

}  // namespace entdyn
