#pragma once

// Exact small-matrix numerics for qubits: Bloch conversions, closed-form
// 2x2 Hermitian eigendecomposition, PSD square root, binary entropy.

#include <Eigen/Dense>
#include <complex>

#include "naqc/errors.hpp"

namespace naqc {

using Complex = std::complex<double>;
using Matrix2c = Eigen::Matrix2cd;
using Matrix4c = Eigen::Matrix4cd;
using Vector2c = Eigen::Vector2cd;
using Vector3 = Eigen::Vector3d;
using Matrix3 = Eigen::Matrix3d;

// Tolerance policy: algebraic identities at 1e-12, eigen/sqrt
// reconstructions at 1e-10. Eigenvalues in [-1e-10, 0] clamp to zero;
// anything more negative is rejected as an invalid state.
inline constexpr double kAlgebraTol = 1e-12;
inline constexpr double kEigenTol = 1e-10;

/// Pauli matrix for axis 0=x, 1=y, 2=z. Convention:
/// sx = [[0,1],[1,0]], sy = [[0,-i],[i,0]], sz = [[1,0],[0,-1]].
const Matrix2c& pauli(int axis);
const Matrix2c& identity2();

/// Max-norm deviation from Hermiticity, max_ij |m_ij - conj(m_ji)|.
double hermiticity_defect(const Matrix2c& m);
double hermiticity_defect(const Matrix4c& m);

/// rho = (I + n.sigma)/2. Throws BlochOutOfBall if |n| > 1 + 1e-12.
Matrix2c bloch_to_density(const Vector3& n);

/// n_i = Tr(rho sigma_i). Throws NotAState unless rho is Hermitian,
/// unit-trace and PSD within tolerance.
Vector3 density_to_bloch(const Matrix2c& rho);

/// Single-qubit state held as its Bloch vector; the density matrix is
/// derived on demand.
struct QubitState {
    Vector3 bloch;

    explicit QubitState(const Vector3& n);
    static QubitState from_density(const Matrix2c& rho);

    Matrix2c density() const { return bloch_to_density(bloch); }
    double norm() const { return bloch.norm(); }
};

struct EigenPair2 {
    Eigen::Vector2d values;  // sorted descending
    Matrix2c vectors;        // orthonormal columns, vectors.col(k) <-> values(k)
};

/// Closed-form eigendecomposition of a 2x2 Hermitian matrix.
/// Throws NotHermitian if the defect exceeds 1e-10.
EigenPair2 eigen_hermitian_2(const Matrix2c& m);

/// Hermitian PSD square root via eigendecomposition. Eigenvalues in
/// [-1e-10, 0] clamp to zero; below that throws NegativeEigenvalue.
Matrix2c matrix_sqrt_psd(const Matrix2c& m);

/// H(x) = -x log2 x - (1-x) log2(1-x) in bits, with H(0) = H(1) = 0.
/// Throws DomainError outside [0, 1].
double binary_entropy(double x);

}  // namespace naqc
