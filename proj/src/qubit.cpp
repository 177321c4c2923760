#include "naqc/qubit.hpp"

#include <cmath>

namespace naqc {

const Matrix2c& pauli(int axis) {
    static const Matrix2c sx = (Matrix2c() << Complex(0, 0), Complex(1, 0),
                                Complex(1, 0), Complex(0, 0)).finished();
    static const Matrix2c sy = (Matrix2c() << Complex(0, 0), Complex(0, -1),
                                Complex(0, 1), Complex(0, 0)).finished();
    static const Matrix2c sz = (Matrix2c() << Complex(1, 0), Complex(0, 0),
                                Complex(0, 0), Complex(-1, 0)).finished();
    switch (axis) {
        case 0: return sx;
        case 1: return sy;
        default: return sz;
    }
}

const Matrix2c& identity2() {
    static const Matrix2c id = Matrix2c::Identity();
    return id;
}

double hermiticity_defect(const Matrix2c& m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double hermiticity_defect(const Matrix4c& m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

Matrix2c bloch_to_density(const Vector3& n) {
    if (n.norm() > 1.0 + kAlgebraTol) {
        throw BlochOutOfBall("Bloch vector norm " + std::to_string(n.norm()) +
                             " exceeds 1");
    }
    Matrix2c rho = identity2();
    for (int i = 0; i < 3; ++i) rho += n(i) * pauli(i);
    return 0.5 * rho;
}

Vector3 density_to_bloch(const Matrix2c& rho) {
    if (hermiticity_defect(rho) > kEigenTol) {
        throw NotAState("density matrix is not Hermitian");
    }
    if (std::abs(rho.trace() - Complex(1, 0)) > kEigenTol) {
        throw NotAState("density matrix trace differs from 1");
    }
    Vector3 n;
    for (int i = 0; i < 3; ++i) n(i) = (rho * pauli(i)).trace().real();
    if (n.norm() > 1.0 + kEigenTol) {
        throw NotAState("density matrix has a negative eigenvalue");
    }
    return n;
}

QubitState::QubitState(const Vector3& n) : bloch(n) {
    if (n.norm() > 1.0 + kAlgebraTol) {
        throw BlochOutOfBall("Bloch vector norm " + std::to_string(n.norm()) +
                             " exceeds 1");
    }
}

QubitState QubitState::from_density(const Matrix2c& rho) {
    return QubitState(density_to_bloch(rho));
}

EigenPair2 eigen_hermitian_2(const Matrix2c& m) {
    if (hermiticity_defect(m) > kEigenTol) {
        throw NotHermitian("matrix is not Hermitian within 1e-10");
    }
    const double a = m(0, 0).real();
    const double d = m(1, 1).real();
    const Complex b = 0.5 * (m(0, 1) + std::conj(m(1, 0)));
    const double mean = 0.5 * (a + d);
    const double half = 0.5 * (a - d);
    const double rad = std::hypot(half, std::abs(b));

    EigenPair2 out;
    out.values << mean + rad, mean - rad;

    if (rad < 1e-300 || std::abs(b) == 0.0) {
        // (near-)diagonal: order the basis vectors by the diagonal
        if (a >= d) {
            out.vectors = Matrix2c::Identity();
        } else {
            out.vectors << Complex(0, 0), Complex(1, 0), Complex(1, 0),
                Complex(0, 0);
        }
        return out;
    }

    // Pick the better-conditioned null-space form for the leading vector.
    Vector2c v;
    if (half <= 0.0) {
        v << b, Complex(rad - half, 0);  // (M - l+) (b, l+ - a)^T = 0
    } else {
        v << Complex(rad + half, 0), std::conj(b);  // (l+ - d, conj b)^T
    }
    v.normalize();
    out.vectors.col(0) = v;
    out.vectors.col(1) << -std::conj(v(1)), std::conj(v(0));
    return out;
}

Matrix2c matrix_sqrt_psd(const Matrix2c& m) {
    EigenPair2 ep = eigen_hermitian_2(m);
    Eigen::Vector2d w = ep.values;
    for (int k = 0; k < 2; ++k) {
        if (w(k) < -kEigenTol) {
            throw NegativeEigenvalue("eigenvalue " + std::to_string(w(k)) +
                                     " below PSD floor");
        }
        w(k) = std::sqrt(std::max(0.0, w(k)));
    }
    Matrix2c s = ep.vectors * w.asDiagonal() * ep.vectors.adjoint();
    return 0.5 * (s + s.adjoint());
}

double binary_entropy(double x) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw DomainError("binary_entropy argument outside [0, 1]");
    }
    if (x == 0.0 || x == 1.0) return 0.0;  // 0 log 0 := 0
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

}  // namespace naqc
