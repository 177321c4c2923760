#pragma once

// Two-qubit states in Bloch-Fano form
//
//   rho = (I(x)I + r.sigma(x)I + I(x)s.sigma + sum_ij T_ij sigma_i(x)sigma_j)/4,
//
// Alice-side projective measurements in Pauli or rotated MUB triads, Bob's
// conditional ensembles, local filtering, and the named state families used
// throughout the steering module.

#include <cstdint>
#include <vector>

#include "naqc/coherence.hpp"
#include "naqc/qubit.hpp"
#include "naqc/random.hpp"

namespace naqc {

class Rng;

struct TwoQubitState {
    Vector3 r;  // Alice local Bloch vector, Tr(rho sigma_i (x) I)
    Vector3 s;  // Bob local Bloch vector, Tr(rho I (x) sigma_j)
    Matrix3 T;  // correlation matrix, T_ij = Tr(rho sigma_i (x) sigma_j)

    /// Builds from (r, s, T) and validates the derived 4x4 matrix
    /// (Hermitian, unit trace, eigenvalues >= -1e-10). Throws NotAState.
    static TwoQubitState from_parts(const Vector3& r, const Vector3& s,
                                    const Matrix3& T);

    /// Extracts (r, s, T) from a validated 4x4 density matrix.
    static TwoQubitState from_density(const Matrix4c& rho);

    Matrix4c density() const;
    QubitState alice_marginal() const { return QubitState(r); }
    QubitState bob_marginal() const { return QubitState(s); }
};

Matrix4c kron(const Matrix2c& a, const Matrix2c& b);
Matrix2c partial_trace_alice(const Matrix4c& m);
Matrix2c partial_trace_bob(const Matrix4c& m);

/// p |psi-><psi-| + (1-p)/4 I(x)I with |psi-> = (|01> - |10>)/sqrt(2).
/// In Bloch-Fano form: r = s = 0, T = diag(-p, -p, -p).
TwoQubitState werner_state(double p);
TwoQubitState singlet_state();

/// Pure state proportional to sqrt(alpha)|++> + sqrt(1-alpha)|00>,
/// normalized by its computed vector norm.
TwoQubitState psi_alpha_state(double alpha);

TwoQubitState product_state(const QubitState& a, const QubitState& b);

/// Product of two copies of the maximally coherent state n = (1,1,1)/sqrt(3).
TwoQubitState max_coherent_product_state();

double purity(const TwoQubitState& state);

/// 1 - Tr(rho_B^2); for a pure bipartite state this is the linear-entropy
/// entanglement of either marginal.
double linear_entropy_of_marginal(const TwoQubitState& state);

/// Triad of mutually unbiased projective bases for Alice, parameterized by
/// the polar/azimuthal angles of the rotated z-basis
///
///   |n_z^+> = cos(t/2)|0> + e^{i phi} sin(t/2)|1>,
///   |n_x^±> = (|n_z^+> ± |n_z^->)/sqrt(2),
///   |n_y^±> = (|n_z^+> ± i|n_z^->)/sqrt(2).
///
/// (0, 0) reproduces the Pauli eigenbases.
struct MeasurementTriad {
    double theta = 0.0;
    double phi = 0.0;

    /// Bloch direction of the outcome-0 projector for the given axis label.
    Vector3 axis_direction(Axis axis) const;

    /// Basis ket; outcome 0 is the +1 eigenstate along axis_direction.
    Vector2c basis_ket(Axis axis, int outcome) const;

    /// Rotation with columns (m_x, m_y, m_z); right-handed orthonormal.
    Matrix3 rotation() const;
};

struct ConditionalBranch {
    Axis alice_axis;
    int outcome;  // 0 or 1
    double probability;
    QubitState state;
};

/// Bob's conditional states for the six (axis, outcome) projections of a
/// triad. Branches with probability <= 1e-12 are dropped and counted.
struct ConditionalEnsemble {
    std::vector<ConditionalBranch> branches;
    int dropped = 0;
};

/// Conditional pair for a single Alice direction (projectors (I ± u.sigma)/2).
struct DirectionalBranch {
    int outcome;
    double probability;
    QubitState state;
};
struct DirectionalConditional {
    std::vector<DirectionalBranch> branches;
    int dropped = 0;
};

DirectionalConditional conditional_for_direction(const TwoQubitState& state,
                                                 const Vector3& direction);

ConditionalEnsemble conditional_ensemble(const TwoQubitState& state,
                                         const MeasurementTriad& triad);

enum class Side { Alice, Bob };

/// Applies F(theta) = diag(1/cos theta, 1/sin theta) on one side and
/// renormalizes. Throws SingularFilter unless 0 < theta < pi/2, ZeroTrace
/// if the filtered trace collapses.
TwoQubitState local_filter(const TwoQubitState& state, double theta, Side side);

/// Convex mixture of num_terms product states: Dirichlet(1,...,1) weights,
/// Bloch vectors uniform in the ball. Deterministic given the seed.
TwoQubitState sample_separable(int num_terms, std::uint64_t seed);
TwoQubitState sample_separable(Rng& rng, int num_terms);

/// Re-expresses the state with Alice's axes rotated by R (columns = new
/// axis directions): (r, s, T) -> (R^T r, s, R^T T). Measuring the rotated
/// triad on the original state is equivalent to measuring the Pauli triad
/// on the rotated state.
TwoQubitState rotate_alice_frame(const TwoQubitState& state, const Matrix3& rotation);

}  // namespace naqc
