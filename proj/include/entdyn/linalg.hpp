#pragma once

// Dense complex linear algebra for small multi-qubit density matrices
// (dims up to 8). Everything here is a pure value type; no shared state.

#include <array>
#include <complex>
#include <initializer_list>
#include <set>
#include <vector>

namespace entdyn {

using cplx = std::complex<double>;

// Tensor slots: A is the most significant bit of the basis index, so for
// three qubits |i> spells |b_A b_B b_C> and |1> = |001>, |7> = |111>.
enum class Qubit : int { A = 0, B = 1, C = 2 };

inline int slot(Qubit q) { return static_cast<int>(q); }

class ComplexMatrix {
public:
    ComplexMatrix() : dim_(1), a_(1, cplx{0.0, 0.0}) {}
    explicit ComplexMatrix(int dim);
    ComplexMatrix(int dim, std::initializer_list<cplx> entries);

    static ComplexMatrix identity(int dim);
    static ComplexMatrix diagonal(std::initializer_list<double> d);

    int dim() const { return dim_; }
    cplx& operator()(int i, int j) { return a_[static_cast<size_t>(i) * dim_ + j]; }
    const cplx& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * dim_ + j]; }

    ComplexMatrix adjoint() const;
    cplx trace() const;
    double hermiticity_deviation() const;   // max_ij |m_ij - conj(m_ji)|
    double max_abs_diff(const ComplexMatrix& other) const;

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(cplx s);

    friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
    friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
    friend ComplexMatrix operator*(cplx s, ComplexMatrix m) { return m *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

private:
    int dim_;
    std::vector<cplx> a_;
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Pauli matrices and friends used across the library.
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

// A density matrix over an n-qubit register, n in {1,2,3}. The constructor
// checks Hermiticity and unit trace (1e-12); positivity is left to
// validate_density since it costs an eigensolve.
class DensityMatrix {
public:
    DensityMatrix(int qubits, ComplexMatrix m);

    static DensityMatrix pure(int qubits, const std::vector<cplx>& amplitudes);

    int qubits() const { return qubits_; }
    int dim() const { return m_.dim(); }
    const ComplexMatrix& matrix() const { return m_; }
    cplx operator()(int i, int j) const { return m_(i, j); }

private:
    int qubits_;
    ComplexMatrix m_;
};

// Entry permutation + conjugation; preserves trace and Hermiticity exactly.
ComplexMatrix partial_transpose(const DensityMatrix& rho, Qubit q);

DensityMatrix partial_trace(const DensityMatrix& rho, const std::set<Qubit>& keep);

// Eigenvalues of a Hermitian matrix, ascending. Cyclic Jacobi rotations,
// converged when the off-diagonal Frobenius norm drops below 1e-13.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

struct EigenSystem {
    std::vector<double> values;   // ascending
    ComplexMatrix vectors;        // column k is the eigenvector of values[k]
};
EigenSystem hermitian_eigensystem(const ComplexMatrix& m);

// Tr sqrt(R R^dagger) for Hermitian R: the sum of |eigenvalues|.
double trace_norm(const ComplexMatrix& m);

// Singular values, descending, via one-sided Jacobi. Small singular values
// come out with absolute (not relative-to-sigma) accuracy, which the
// concurrence needs.
std::vector<double> singular_values(const ComplexMatrix& m);

struct DensityDiagnostics {
    double hermiticity_deviation = 0.0;
    double trace_deviation = 0.0;
    double min_eigenvalue = 0.0;

    bool ok(double herm_tol = 1e-12, double trace_tol = 1e-12, double psd_slack = 1e-10) const {
        return hermiticity_deviation <= herm_tol && trace_deviation <= trace_tol &&
               min_eigenvalue >= -psd_slack;
    }
};

DensityDiagnostics validate_density(const DensityMatrix& rho);

}  // namespace entdyn
