#include "entdyn/linalg.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace entdyn {

namespace {

bool power_of_two(int n) { return n > 0 && std::has_single_bit(static_cast<unsigned>(n)); }

int bit_shift(int qubits, Qubit q) { return qubits - 1 - slot(q); }

}  // namespace

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) {
    if (!power_of_two(dim)) throw std::invalid_argument("ComplexMatrix: dim must be a positive power of 2");
    a_.assign(static_cast<size_t>(dim) * dim, cplx{0.0, 0.0});
}

ComplexMatrix::ComplexMatrix(int dim, std::initializer_list<cplx> entries) : ComplexMatrix(dim) {
    if (entries.size() != a_.size()) throw std::invalid_argument("ComplexMatrix: entries length must be dim^2");
    std::copy(entries.begin(), entries.end(), a_.begin());
}

ComplexMatrix ComplexMatrix::identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<double> d) {
    ComplexMatrix m(static_cast<int>(d.size()));
    int i = 0;
    for (double v : d) m(i, i) = v, ++i;
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

cplx ComplexMatrix::trace() const {
    cplx t = 0.0;
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::hermiticity_deviation() const {
    double worst = 0.0;
    for (int i = 0; i < dim_; ++i)
        for (int j = i; j < dim_; ++j)
            worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return worst;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
    if (other.dim_ != dim_) throw std::invalid_argument("max_abs_diff: dimension mismatch");
    double worst = 0.0;
    for (size_t k = 0; k < a_.size(); ++k) worst = std::max(worst, std::abs(a_[k] - other.a_[k]));
    return worst;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    if (rhs.dim_ != dim_) throw std::invalid_argument("matrix add: dimension mismatch");
    for (size_t k = 0; k < a_.size(); ++k) a_[k] += rhs.a_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
    if (rhs.dim_ != dim_) throw std::invalid_argument("matrix sub: dimension mismatch");
    for (size_t k = 0; k < a_.size(); ++k) a_[k] -= rhs.a_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
    for (auto& v : a_) v *= s;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
    if (lhs.dim_ != rhs.dim_) throw std::invalid_argument("matrix mul: dimension mismatch");
    const int n = lhs.dim_;
    ComplexMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const cplx lik = lhs(i, k);
            if (lik == cplx{0.0, 0.0}) continue;
            for (int j = 0; j < n; ++j) out(i, j) += lik * rhs(k, j);
        }
    return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const int da = a.dim(), db = b.dim();
    ComplexMatrix out(da * db);
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < da; ++j) {
            const cplx aij = a(i, j);
            if (aij == cplx{0.0, 0.0}) continue;
            for (int k = 0; k < db; ++k)
                for (int l = 0; l < db; ++l) out(i * db + k, j * db + l) = aij * b(k, l);
        }
    return out;
}

ComplexMatrix pauli_x() { return ComplexMatrix(2, {0.0, 1.0, 1.0, 0.0}); }
ComplexMatrix pauli_y() { return ComplexMatrix(2, {0.0, cplx{0.0, -1.0}, cplx{0.0, 1.0}, 0.0}); }
ComplexMatrix pauli_z() { return ComplexMatrix(2, {1.0, 0.0, 0.0, -1.0}); }

DensityMatrix::DensityMatrix(int qubits, ComplexMatrix m) : qubits_(qubits), m_(std::move(m)) {
    if (qubits < 1 || qubits > 3) throw std::invalid_argument("DensityMatrix: qubits must be 1, 2 or 3");
    if (m_.dim() != (1 << qubits)) throw std::invalid_argument("DensityMatrix: matrix dim must be 2^qubits");
    if (m_.hermiticity_deviation() > 1e-12) throw std::invalid_argument("DensityMatrix: not Hermitian");
    if (std::abs(m_.trace() - cplx{1.0, 0.0}) > 1e-12) throw std::invalid_argument("DensityMatrix: trace must be 1");
}

DensityMatrix DensityMatrix::pure(int qubits, const std::vector<cplx>& amplitudes) {
    const int d = 1 << qubits;
    if (static_cast<int>(amplitudes.size()) != d)
        throw std::invalid_argument("DensityMatrix::pure: amplitude count must be 2^qubits");
    double norm2 = 0.0;
    for (const cplx& a : amplitudes) norm2 += std::norm(a);
    if (std::abs(norm2 - 1.0) > 1e-12) throw std::invalid_argument("DensityMatrix::pure: amplitudes not normalized");
    ComplexMatrix m(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m(i, j) = amplitudes[i] * std::conj(amplitudes[j]);
    return DensityMatrix(qubits, std::move(m));
}

ComplexMatrix partial_transpose(const DensityMatrix& rho, Qubit q) {
    const int n = rho.qubits();
    if (slot(q) >= n) throw std::invalid_argument("partial_transpose: qubit label outside register");
    const int sh = bit_shift(n, q);
    const int d = rho.dim();
    ComplexMatrix out(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const int bi = (i >> sh) & 1, bj = (j >> sh) & 1;
            const int i2 = (i & ~(1 << sh)) | (bj << sh);
            const int j2 = (j & ~(1 << sh)) | (bi << sh);
            out(i2, j2) = rho(i, j);
        }
    return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::set<Qubit>& keep) {
    const int n = rho.qubits();
    if (keep.empty()) throw std::invalid_argument("partial_trace: keep-set must be nonempty");
    if (static_cast<int>(keep.size()) >= n)
        throw std::invalid_argument("partial_trace: keep-set must be a proper subset of the register");
    for (Qubit q : keep)
        if (slot(q) >= n) throw std::invalid_argument("partial_trace: qubit label outside register");

    std::vector<int> kept, traced;
    for (int s = 0; s < n; ++s)
        (keep.count(static_cast<Qubit>(s)) ? kept : traced).push_back(s);

    const int nk = static_cast<int>(kept.size());
    const int nt = static_cast<int>(traced.size());
    const int dk = 1 << nk, dt = 1 << nt;
    ComplexMatrix out(dk);

    auto full_index = [&](int kept_bits, int traced_bits) {
        int idx = 0;
        for (int s = 0; s < nk; ++s)
            idx |= ((kept_bits >> (nk - 1 - s)) & 1) << (n - 1 - kept[s]);
        for (int s = 0; s < nt; ++s)
            idx |= ((traced_bits >> (nt - 1 - s)) & 1) << (n - 1 - traced[s]);
        return idx;
    };

    for (int i = 0; i < dk; ++i)
        for (int j = 0; j < dk; ++j) {
            cplx sum = 0.0;
            for (int e = 0; e < dt; ++e) sum += rho(full_index(i, e), full_index(j, e));
            out(i, j) = sum;
        }
    return DensityMatrix(nk, std::move(out));
}

namespace {

constexpr int kJacobiMaxSweeps = 60;

double off_diagonal_norm(const ComplexMatrix& m) {
    double s = 0.0;
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j)
            if (i != j) s += std::norm(m(i, j));
    return std::sqrt(s);
}

double frobenius_norm(const ComplexMatrix& m) {
    double s = 0.0;
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) s += std::norm(m(i, j));
    return std::sqrt(s);
}

// One cyclic Jacobi pass; accumulates rotations into *vecs when given.
void jacobi_sweep(ComplexMatrix& m, ComplexMatrix* vecs) {
    const int n = m.dim();
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) {
            const cplx apq = m(p, q);
            const double r = std::abs(apq);
            if (r < 1e-300) continue;
            const cplx phase = apq / r;  // e^{i phi}
            const double app = m(p, p).real();
            const double aqq = m(q, q).real();
            const double tau = (aqq - app) / (2.0 * r);
            // Stable root of t^2 - 2 tau t - 1 = 0 for this rotation layout.
            const double t = (tau >= 0.0 ? -1.0 : 1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
            const double c = 1.0 / std::sqrt(1.0 + t * t);
            const double s = t * c;

            // Unitary: col p <- c*col_p + s*conj(phase)*col_q,
            //          col q <- -s*phase*col_p + c*col_q.
            for (int k = 0; k < n; ++k) {
                const cplx mkp = m(k, p), mkq = m(k, q);
                m(k, p) = c * mkp + s * std::conj(phase) * mkq;
                m(k, q) = -s * phase * mkp + c * mkq;
            }
            for (int k = 0; k < n; ++k) {
                const cplx mpk = m(p, k), mqk = m(q, k);
                m(p, k) = c * mpk + s * phase * mqk;
                m(q, k) = -s * std::conj(phase) * mpk + c * mqk;
            }
            m(p, q) = 0.0;
            m(q, p) = 0.0;
            m(p, p) = cplx{m(p, p).real(), 0.0};
            m(q, q) = cplx{m(q, q).real(), 0.0};
            if (vecs)
                for (int k = 0; k < n; ++k) {
                    const cplx vkp = (*vecs)(k, p), vkq = (*vecs)(k, q);
                    (*vecs)(k, p) = c * vkp + s * std::conj(phase) * vkq;
                    (*vecs)(k, q) = -s * phase * vkp + c * vkq;
                }
        }
}

EigenSystem jacobi_eigensystem(ComplexMatrix m, bool want_vectors) {
    if (m.hermiticity_deviation() > 1e-10)
        throw std::invalid_argument("hermitian eigensolver: input is not Hermitian");
    const int n = m.dim();
    // Symmetrize away the sub-tolerance asymmetry so rotations see an exactly
    // Hermitian matrix.
    for (int i = 0; i < n; ++i) {
        m(i, i) = cplx{m(i, i).real(), 0.0};
        for (int j = i + 1; j < n; ++j) {
            const cplx v = 0.5 * (m(i, j) + std::conj(m(j, i)));
            m(i, j) = v;
            m(j, i) = std::conj(v);
        }
    }
    ComplexMatrix vecs = ComplexMatrix::identity(n);
    // The spec asks for off-diagonal Frobenius norm below 1e-13; quadratic
    // convergence makes it cheap to go to machine precision, which the
    // concurrence needs (its square roots amplify eigenvalue residue).
    const double off_tol = std::max(1e-15 * frobenius_norm(m), 1e-300);
    for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
        if (off_diagonal_norm(m) < off_tol) break;
        jacobi_sweep(m, want_vectors ? &vecs : nullptr);
    }

    EigenSystem out;
    out.values.resize(n);
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return m(a, a).real() < m(b, b).real(); });
    out.vectors = ComplexMatrix(n);
    for (int k = 0; k < n; ++k) {
        out.values[k] = m(order[k], order[k]).real();
        if (want_vectors)
            for (int i = 0; i < n; ++i) out.vectors(i, k) = vecs(i, order[k]);
    }
    return out;
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
    return jacobi_eigensystem(m, false).values;
}

EigenSystem hermitian_eigensystem(const ComplexMatrix& m) {
    return jacobi_eigensystem(m, true);
}

double trace_norm(const ComplexMatrix& m) {
    double s = 0.0;
    for (double ev : hermitian_eigenvalues(m)) s += std::abs(ev);
    return s;
}

std::vector<double> singular_values(const ComplexMatrix& m) {
    const int n = m.dim();
    ComplexMatrix a = m;
    for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
        bool rotated = false;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                double gpp = 0.0, gqq = 0.0;
                cplx gpq = 0.0;
                for (int k = 0; k < n; ++k) {
                    gpp += std::norm(a(k, p));
                    gqq += std::norm(a(k, q));
                    gpq += std::conj(a(k, p)) * a(k, q);
                }
                const double r = std::abs(gpq);
                if (r <= 1e-15 * std::sqrt(gpp * gqq) || r < 1e-300) continue;
                rotated = true;
                const cplx phase = gpq / r;
                const double tau = (gqq - gpp) / (2.0 * r);
                const double t = (tau >= 0.0 ? -1.0 : 1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const cplx akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp + s * std::conj(phase) * akq;
                    a(k, q) = -s * phase * akp + c * akq;
                }
            }
        if (!rotated) break;
    }
    std::vector<double> sv(n);
    for (int j = 0; j < n; ++j) {
        double col = 0.0;
        for (int k = 0; k < n; ++k) col += std::norm(a(k, j));
        sv[j] = std::sqrt(col);
    }
    std::sort(sv.begin(), sv.end(), std::greater<>());
    return sv;
}

DensityDiagnostics validate_density(const DensityMatrix& rho) {
    DensityDiagnostics d;
    d.hermiticity_deviation = rho.matrix().hermiticity_deviation();
    d.trace_deviation = std::abs(rho.matrix().trace() - cplx{1.0, 0.0});
    d.min_eigenvalue = hermitian_eigenvalues(rho.matrix()).front();
    return d;
}

}  // namespace entdyn
