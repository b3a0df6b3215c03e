#include "entdyn/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace entdyn {

KrausPair damping_kraus(cplx P) {
    if (std::abs(P) > 1.0 + 1e-12) throw std::invalid_argument("damping_kraus: |P| must be <= 1");
    KrausPair k{ComplexMatrix(2), ComplexMatrix(2)};
    k.k0(0, 0) = 1.0;
    k.k0(1, 1) = P;
    k.k1(0, 1) = std::sqrt(std::max(0.0, 1.0 - std::norm(P)));
    return k;
}

DensityMatrix evolve_single(const DensityMatrix& rho0, cplx P) {
    if (rho0.qubits() != 1) throw std::invalid_argument("evolve_single: expected a 1-qubit state");
    if (std::abs(P) > 1.0 + 1e-12) throw std::invalid_argument("evolve_single: |P| must be <= 1");
    const double p2 = std::norm(P);
    ComplexMatrix m(2);
    m(0, 0) = rho0(0, 0) + rho0(1, 1) * (1.0 - p2);
    m(0, 1) = rho0(0, 1) * P;
    m(1, 0) = rho0(1, 0) * std::conj(P);
    m(1, 1) = rho0(1, 1) * p2;
    return DensityMatrix(1, std::move(m));
}

DensityMatrix evolve_three_direct(const DensityMatrix& rho0, double P) {
    if (rho0.qubits() != 3) throw std::invalid_argument("evolve_three_direct: expected a 3-qubit state");
    if (std::abs(P) > 1.0 + 1e-12) throw std::invalid_argument("evolve_three_direct: |P| must be <= 1");

    const auto& r = rho0;
    const double p1 = P;
    const double p2 = P * P;
    const double p3 = p2 * P;
    const double p4 = p2 * p2;
    const double p5 = p4 * P;
    const double p6 = p4 * p2;
    const double u = 1.0 - p2;
    const double u2 = u * u;

    ComplexMatrix m(8);

    // Populations.
    m(1, 1) = p2 * (r(1, 1) + (r(3, 3) + r(5, 5)) * u + r(7, 7) * u2);
    m(2, 2) = p2 * (r(2, 2) + (r(3, 3) + r(6, 6)) * u + r(7, 7) * u2);
    m(3, 3) = p4 * (r(3, 3) + r(7, 7) * u);
    m(4, 4) = p2 * (r(4, 4) + (r(5, 5) + r(6, 6)) * u + r(7, 7) * u2);
    m(5, 5) = p4 * (r(5, 5) + r(7, 7) * u);
    m(6, 6) = p4 * (r(6, 6) + r(7, 7) * u);
    m(7, 7) = p6 * r(7, 7);
    m(0, 0) = 1.0 - (m(1, 1) + m(2, 2) + m(3, 3) + m(4, 4) + m(5, 5) + m(6, 6) + m(7, 7));

    // Coherences feeding down from higher excitation sectors.
    m(0, 1) = p1 * (r(0, 1) + (r(2, 3) + r(4, 5)) * u + r(6, 7) * u2);
    m(0, 2) = p1 * (r(0, 2) + (r(1, 3) + r(4, 6)) * u + r(5, 7) * u2);
    m(0, 4) = p1 * (r(0, 4) + (r(1, 5) + r(2, 6)) * u + r(3, 7) * u2);
    m(0, 3) = p2 * (r(0, 3) + r(4, 7) * u);
    m(0, 5) = p2 * (r(0, 5) + r(2, 7) * u);
    m(0, 6) = p2 * (r(0, 6) + r(1, 7) * u);
    m(1, 2) = p2 * (r(1, 2) + r(5, 6) * u);
    m(1, 3) = p3 * (r(1, 3) + r(5, 7) * u);
    m(1, 4) = p2 * (r(1, 4) + r(3, 6) * u);
    m(1, 5) = p3 * (r(1, 5) + r(3, 7) * u);
    m(2, 3) = p3 * (r(2, 3) + r(6, 7) * u);
    m(2, 4) = p2 * (r(2, 4) + r(3, 5) * u);
    m(2, 6) = p3 * (r(2, 6) + r(3, 7) * u);
    m(4, 5) = p3 * (r(4, 5) + r(6, 7) * u);
    m(4, 6) = p3 * (r(4, 6) + r(5, 7) * u);

    // Coherences that only shrink.
    m(0, 7) = p3 * r(0, 7);
    m(1, 6) = p3 * r(1, 6);
    m(1, 7) = p4 * r(1, 7);
    m(2, 5) = p3 * r(2, 5);
    m(2, 7) = p4 * r(2, 7);
    m(3, 4) = p3 * r(3, 4);
    m(3, 5) = p4 * r(3, 5);
    m(3, 6) = p4 * r(3, 6);
    m(3, 7) = p5 * r(3, 7);
    m(4, 7) = p4 * r(4, 7);
    m(5, 6) = p4 * r(5, 6);
    m(5, 7) = p5 * r(5, 7);
    m(6, 7) = p5 * r(6, 7);

    // Hermitian completion.
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j) m(j, i) = std::conj(m(i, j));

    return DensityMatrix(3, std::move(m));
}

DensityMatrix evolve_three_kraus(const DensityMatrix& rho0, double P) {
    if (rho0.qubits() != 3) throw std::invalid_argument("evolve_three_kraus: expected a 3-qubit state");
    const KrausPair k = damping_kraus(cplx{P, 0.0});
    const ComplexMatrix* ks[2] = {&k.k0, &k.k1};
    ComplexMatrix out(8);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int l = 0; l < 2; ++l) {
                const ComplexMatrix K = kron(kron(*ks[i], *ks[j]), *ks[l]);
                out += K * rho0.matrix() * K.adjoint();
            }
    // Scrub roundoff asymmetry so the result is a valid DensityMatrix.
    for (int i = 0; i < 8; ++i) {
        out(i, i) = cplx{out(i, i).real(), 0.0};
        for (int j = i + 1; j < 8; ++j) {
            const cplx v = 0.5 * (out(i, j) + std::conj(out(j, i)));
            out(i, j) = v;
            out(j, i) = std::conj(v);
        }
    }
    return DensityMatrix(3, std::move(out));
}

}  // namespace entdyn
