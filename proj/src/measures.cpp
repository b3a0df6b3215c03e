#include "entdyn/measures.hpp"

#include <cmath>
#include <stdexcept>

namespace entdyn {

namespace {

double clamp_negativity(double n) { return n < 1e-12 ? std::max(n, 0.0) : n; }

int reduced_slot(Qubit q, Qubit lo, Qubit hi) { return q == lo ? 0 : (q == hi ? 1 : -1); }

}  // namespace

double negativity(const DensityMatrix& rho, Qubit q) {
    const double n = trace_norm(partial_transpose(rho, q)) - 1.0;
    return clamp_negativity(n);
}

double two_tangle(const DensityMatrix& rho, Qubit first, Qubit second) {
    if (first == second) throw std::invalid_argument("two_tangle: pair labels must differ");
    if (rho.qubits() != 3) throw std::invalid_argument("two_tangle: expected a 3-qubit state");
    const Qubit lo = slot(first) < slot(second) ? first : second;
    const Qubit hi = slot(first) < slot(second) ? second : first;
    const DensityMatrix red = partial_trace(rho, {lo, hi});
    const Qubit target = reduced_slot(first, lo, hi) == 0 ? Qubit::A : Qubit::B;
    const double n = trace_norm(partial_transpose(red, target)) - 1.0;
    return clamp_negativity(n);
}

PiTangleReport pi_tangle(const DensityMatrix& rho) {
    if (rho.qubits() != 3) throw std::invalid_argument("pi_tangle: expected a 3-qubit state");
    PiTangleReport r;
    r.one_vs_rest = {negativity(rho, Qubit::A), negativity(rho, Qubit::B), negativity(rho, Qubit::C)};
    r.pairs = {two_tangle(rho, Qubit::A, Qubit::B), two_tangle(rho, Qubit::A, Qubit::C),
               two_tangle(rho, Qubit::B, Qubit::C)};
    const auto sq = [](double x) { return x * x; };
    r.pi_abc[0] = sq(r.one_vs_rest[0]) - sq(r.pairs[0]) - sq(r.pairs[1]);
    r.pi_abc[1] = sq(r.one_vs_rest[1]) - sq(r.pairs[0]) - sq(r.pairs[2]);
    r.pi_abc[2] = sq(r.one_vs_rest[2]) - sq(r.pairs[1]) - sq(r.pairs[2]);
    r.pi = (r.pi_abc[0] + r.pi_abc[1] + r.pi_abc[2]) / 3.0;
    return r;
}

double concurrence(const DensityMatrix& rho2) {
    if (rho2.qubits() != 2) throw std::invalid_argument("concurrence: expected a 2-qubit state");
    const ComplexMatrix yy = kron(pauli_y(), pauli_y());
    const EigenSystem es = hermitian_eigensystem(rho2.matrix());

    // Subnormalized eigenvectors x_i = sqrt(w_i) v_i; tau_ij = x_i^T YY x_j.
    // Eigenvalues below solver resolution are rank noise; the square root
    // would blow them up to ~1e-8, so they are zeroed outright.
    const double floor = 1e-14 * std::max(es.values[3], 0.0);
    ComplexMatrix x(4);
    for (int k = 0; k < 4; ++k) {
        const double w = es.values[k] > floor ? std::sqrt(es.values[k]) : 0.0;
        for (int i = 0; i < 4; ++i) x(i, k) = w * es.vectors(i, k);
    }
    ComplexMatrix tau(4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            cplx s = 0.0;
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b) s += x(a, i) * yy(a, b) * x(b, j);
            tau(i, j) = s;
        }
    const std::vector<double> sv = singular_values(tau);
    return std::max(0.0, sv[0] - sv[1] - sv[2] - sv[3]);
}

double residual_pure(std::span<const cplx, 8> a) {
    double norm2 = 0.0;
    for (const cplx& v : a) norm2 += std::norm(v);
    if (std::abs(norm2 - 1.0) > 1e-12)
        throw std::invalid_argument("residual_pure: amplitudes must be normalized");

    // Indices spell |b_A b_B b_C>, e.g. a[6] = a_110.
    const cplx d1 = a[0] * a[0] * a[7] * a[7] + a[1] * a[1] * a[6] * a[6] +
                    a[2] * a[2] * a[5] * a[5] + a[4] * a[4] * a[3] * a[3];
    const cplx d2 = a[0] * a[7] * a[3] * a[4] + a[0] * a[7] * a[5] * a[2] +
                    a[0] * a[7] * a[6] * a[1] + a[3] * a[4] * a[5] * a[2] +
                    a[3] * a[4] * a[6] * a[1] + a[5] * a[2] * a[6] * a[1];
    const cplx d3 = a[0] * a[6] * a[5] * a[3] + a[7] * a[1] * a[2] * a[4];
    return 4.0 * std::abs(d1 - 2.0 * d2 + 4.0 * d3);
}

double ckw_margin(const DensityMatrix& rho) {
    if (rho.qubits() != 3) throw std::invalid_argument("ckw_margin: expected a 3-qubit state");
    const DensityMatrix rho_a = partial_trace(rho, {Qubit::A});
    const double det_a = rho_a(0, 0).real() * rho_a(1, 1).real() - std::norm(rho_a(0, 1));
    const double c_ab = concurrence(partial_trace(rho, {Qubit::A, Qubit::B}));
    const double c_ac = concurrence(partial_trace(rho, {Qubit::A, Qubit::C}));
    return 4.0 * det_a - c_ab * c_ab - c_ac * c_ac;
}

MeasureReport measure_report(const DensityMatrix& rho) {
    const PiTangleReport p = pi_tangle(rho);
    MeasureReport r;
    r.one_vs_rest = p.one_vs_rest;
    r.pairs = p.pairs;
    r.pi_abc = p.pi_abc;
    r.pi = p.pi;
    r.concurrences = {concurrence(partial_trace(rho, {Qubit::A, Qubit::B})),
                      concurrence(partial_trace(rho, {Qubit::A, Qubit::C})),
                      concurrence(partial_trace(rho, {Qubit::B, Qubit::C}))};
    r.ckw = ckw_margin(rho);
    return r;
}

}  // namespace entdyn
