#include "naqc/bipartite.hpp"

#include <cmath>
#include <string>

#include "naqc/random.hpp"

namespace naqc {

namespace {

void validate_density4(const Matrix4c& rho) {
    if (hermiticity_defect(rho) > kEigenTol) {
        throw NotAState("two-qubit matrix is not Hermitian");
    }
    if (std::abs(rho.trace() - Complex(1, 0)) > kEigenTol) {
        throw NotAState("two-qubit matrix trace differs from 1");
    }
    Eigen::SelfAdjointEigenSolver<Matrix4c> solver(rho, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -kEigenTol) {
        throw NotAState("two-qubit matrix has eigenvalue " +
                        std::to_string(solver.eigenvalues().minCoeff()));
    }
}

TwoQubitState extract_parts(const Matrix4c& rho) {
    TwoQubitState out;
    for (int i = 0; i < 3; ++i) {
        out.r(i) = (rho * kron(pauli(i), identity2())).trace().real();
        out.s(i) = (rho * kron(identity2(), pauli(i))).trace().real();
        for (int j = 0; j < 3; ++j) {
            out.T(i, j) = (rho * kron(pauli(i), pauli(j))).trace().real();
        }
    }
    return out;
}

}  // namespace

Matrix4c kron(const Matrix2c& a, const Matrix2c& b) {
    Matrix4c out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    return out;
}

Matrix2c partial_trace_alice(const Matrix4c& m) {
    Matrix2c out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out(i, j) = m(i, j) + m(2 + i, 2 + j);
    return out;
}

Matrix2c partial_trace_bob(const Matrix4c& m) {
    Matrix2c out;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            out(a, b) = m(2 * a, 2 * b) + m(2 * a + 1, 2 * b + 1);
    return out;
}

TwoQubitState TwoQubitState::from_parts(const Vector3& r, const Vector3& s,
                                        const Matrix3& T) {
    if (r.norm() > 1.0 + kAlgebraTol || s.norm() > 1.0 + kAlgebraTol) {
        throw NotAState("local Bloch vector outside the unit ball");
    }
    TwoQubitState out;
    out.r = r;
    out.s = s;
    out.T = T;
    validate_density4(out.density());
    return out;
}

TwoQubitState TwoQubitState::from_density(const Matrix4c& rho) {
    validate_density4(rho);
    return extract_parts(rho);
}

Matrix4c TwoQubitState::density() const {
    Matrix4c rho = kron(identity2(), identity2());
    for (int i = 0; i < 3; ++i) {
        rho += r(i) * kron(pauli(i), identity2());
        rho += s(i) * kron(identity2(), pauli(i));
        for (int j = 0; j < 3; ++j) {
            rho += T(i, j) * kron(pauli(i), pauli(j));
        }
    }
    return 0.25 * rho;
}

TwoQubitState werner_state(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw DomainError("Werner mixing parameter outside [0, 1]");
    }
    return TwoQubitState::from_parts(Vector3::Zero(), Vector3::Zero(),
                                     (-p) * Matrix3::Identity());
}

TwoQubitState singlet_state() { return werner_state(1.0); }

TwoQubitState psi_alpha_state(double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw DomainError("alpha outside [0, 1]");
    }
    const double u = 0.5 * std::sqrt(alpha);  // amplitude of |++> per basis ket
    const double v = std::sqrt(1.0 - alpha);
    Eigen::Vector4cd ket;
    ket << Complex(u + v, 0), Complex(u, 0), Complex(u, 0), Complex(u, 0);
    ket.normalize();
    return TwoQubitState::from_density(ket * ket.adjoint());
}

TwoQubitState product_state(const QubitState& a, const QubitState& b) {
    return TwoQubitState::from_parts(a.bloch, b.bloch,
                                     a.bloch * b.bloch.transpose());
}

TwoQubitState max_coherent_product_state() {
    const Vector3 n = Vector3::Ones() / std::sqrt(3.0);
    return product_state(QubitState(n), QubitState(n));
}

double purity(const TwoQubitState& state) {
    const Matrix4c rho = state.density();
    return (rho * rho).trace().real();
}

double linear_entropy_of_marginal(const TwoQubitState& state) {
    const Matrix2c rho_b = partial_trace_alice(state.density());
    return 1.0 - (rho_b * rho_b).trace().real();
}

Vector3 MeasurementTriad::axis_direction(Axis axis) const {
    const double st = std::sin(theta), ct = std::cos(theta);
    const double sp = std::sin(phi), cp = std::cos(phi);
    switch (axis) {
        case Axis::X: return Vector3(ct * cp, ct * sp, -st);
        case Axis::Y: return Vector3(-sp, cp, 0.0);
        default: return Vector3(st * cp, st * sp, ct);
    }
}

Vector2c MeasurementTriad::basis_ket(Axis axis, int outcome) const {
    const double c = std::cos(0.5 * theta), s = std::sin(0.5 * theta);
    const Complex e = std::exp(Complex(0, phi));
    const Vector2c zp(Complex(c, 0), e * s);
    const Vector2c zm(Complex(-s, 0), e * c);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    Vector2c ket;
    switch (axis) {
        case Axis::X:
            ket = outcome == 0 ? Vector2c((zp + zm) * inv_sqrt2)
                               : Vector2c((zp - zm) * inv_sqrt2);
            break;
        case Axis::Y:
            ket = outcome == 0 ? Vector2c((zp + Complex(0, 1) * zm) * inv_sqrt2)
                               : Vector2c((zp - Complex(0, 1) * zm) * inv_sqrt2);
            break;
        default:
            ket = outcome == 0 ? zp : zm;
            break;
    }
    return ket;
}

Matrix3 MeasurementTriad::rotation() const {
    Matrix3 rot;
    rot.col(0) = axis_direction(Axis::X);
    rot.col(1) = axis_direction(Axis::Y);
    rot.col(2) = axis_direction(Axis::Z);
    return rot;
}

DirectionalConditional conditional_for_direction(const TwoQubitState& state,
                                                 const Vector3& direction) {
    DirectionalConditional out;
    const Matrix4c rho = state.density();
    for (int outcome = 0; outcome < 2; ++outcome) {
        const double sign = outcome == 0 ? 1.0 : -1.0;
        Matrix2c proj = identity2();
        for (int i = 0; i < 3; ++i) proj += sign * direction(i) * pauli(i);
        proj *= 0.5;
        const Matrix4c pi = kron(proj, identity2());
        const Matrix4c m = pi * rho * pi;
        const double prob = m.trace().real();
        if (prob <= 1e-12) {
            ++out.dropped;
            continue;
        }
        const Matrix2c rho_b = partial_trace_alice(m) / prob;
        out.branches.push_back(
            {outcome, prob, QubitState::from_density(rho_b)});
    }
    return out;
}

ConditionalEnsemble conditional_ensemble(const TwoQubitState& state,
                                         const MeasurementTriad& triad) {
    ConditionalEnsemble out;
    for (Axis axis : {Axis::X, Axis::Y, Axis::Z}) {
        DirectionalConditional cond =
            conditional_for_direction(state, triad.axis_direction(axis));
        out.dropped += cond.dropped;
        for (const DirectionalBranch& branch : cond.branches) {
            out.branches.push_back(
                {axis, branch.outcome, branch.probability, branch.state});
        }
    }
    return out;
}

TwoQubitState local_filter(const TwoQubitState& state, double theta, Side side) {
    if (!(theta > 0.0 && theta < M_PI / 2.0)) {
        throw SingularFilter("filter angle must lie strictly inside (0, pi/2)");
    }
    Matrix2c f = Matrix2c::Zero();
    f(0, 0) = 1.0 / std::cos(theta);
    f(1, 1) = 1.0 / std::sin(theta);
    const Matrix4c g =
        side == Side::Alice ? kron(f, identity2()) : kron(identity2(), f);
    const Matrix4c m = g * state.density() * g.adjoint();
    const double tr = m.trace().real();
    if (tr < 1e-14) throw ZeroTrace("filtered state has vanishing trace");
    return TwoQubitState::from_density(m / tr);
}

TwoQubitState sample_separable(Rng& rng, int num_terms) {
    if (num_terms < 1) throw DomainError("num_terms must be >= 1");
    std::vector<double> weights(num_terms);
    double total = 0.0;
    for (double& w : weights) {
        w = -std::log(1.0 - rng.uniform());  // Dirichlet(1,...,1) via exponentials
        total += w;
    }
    Vector3 r = Vector3::Zero(), s = Vector3::Zero();
    Matrix3 T = Matrix3::Zero();
    for (double w : weights) {
        const double p = w / total;
        const Vector3 a = rng.ball();
        const Vector3 b = rng.ball();
        r += p * a;
        s += p * b;
        T += p * a * b.transpose();
    }
    return TwoQubitState::from_parts(r, s, T);
}

TwoQubitState sample_separable(int num_terms, std::uint64_t seed) {
    Rng rng(seed);
    return sample_separable(rng, num_terms);
}

TwoQubitState rotate_alice_frame(const TwoQubitState& state,
                                 const Matrix3& rotation) {
    return TwoQubitState::from_parts(rotation.transpose() * state.r, state.s,
                                     rotation.transpose() * state.T);
}

}  // namespace naqc
