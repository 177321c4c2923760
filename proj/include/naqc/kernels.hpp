#pragma once

// Batch kernels for the data-parallel inner loops: per-state complementarity
// sums over arrays of Bloch vectors, and the closed-form Pauli-triad
// steering functional over arrays of (r, s, T) states. A scalar reference
// implementation always exists; an AVX2 variant is selected at runtime when
// the CPU supports it. The two are equivalence-tested against each other
// and against the matrix-level ensemble pipeline.

#include <array>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "naqc/bipartite.hpp"
#include "naqc/coherence.hpp"

namespace naqc::kernels {

enum class Backend : int { Scalar = 0, Avx2 = 1 };

std::string_view backend_name(Backend b);
bool backend_supported(Backend b);

/// Fastest supported backend for this CPU.
Backend best_backend();

/// Backend used by the dispatching entry points (defaults to best_backend()).
Backend active_backend();

/// Throws DomainError if the backend is not supported on this CPU.
void set_backend(Backend b);

// --- batch containers (structure of arrays) -------------------------------

struct BlochBatch {
    std::vector<double> x, y, z;

    std::size_t size() const { return x.size(); }
    void reserve(std::size_t n);
    void push_back(const Vector3& n);
};

struct StateBatch {
    std::array<std::vector<double>, 3> r, s;
    std::array<std::vector<double>, 9> t;  // row-major, t[3*i + j] = T_ij

    std::size_t size() const { return r[0].size(); }
    void reserve(std::size_t n);
    void push_back(const Vector3& r_vec, const Vector3& s_vec, const Matrix3& T);
    void push_back(const TwoQubitState& state);
};

// Raw views handed to the per-backend kernels.
struct BlochView {
    const double* x;
    const double* y;
    const double* z;
    std::size_t n;
};

struct StateView {
    std::array<const double*, 3> r;
    std::array<const double*, 3> s;
    std::array<const double*, 9> t;
    std::size_t n;
};

BlochView view(const BlochBatch& batch);
StateView view(const StateBatch& batch);

// --- dispatching entry points ----------------------------------------------

/// out[i] = three-basis complementarity sum of the chosen measure.
void complementarity_sums(const BlochBatch& batch, Measure measure,
                          std::span<double> out);

/// out[i] = Pauli-triad steering functional (closed form). Alice outcomes
/// with probability <= 1e-12 contribute nothing, matching the ensemble
/// pipeline's dropped branches.
void steering_functionals(const StateBatch& batch, Measure measure,
                          std::span<double> out);

// --- per-backend kernels (exposed for equivalence tests) -------------------

void complementarity_sums_scalar(const BlochView& in, Measure measure, double* out);
void steering_functionals_scalar(const StateView& in, Measure measure, double* out);

#if defined(__x86_64__) || defined(__i386__)
void complementarity_sums_avx2(const BlochView& in, Measure measure, double* out);
void steering_functionals_avx2(const StateView& in, Measure measure, double* out);
#endif

}  // namespace naqc::kernels
