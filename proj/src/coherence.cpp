#include "naqc/coherence.hpp"

#include <cmath>
#include <string>

namespace naqc {

namespace {

inline void other_axes(Axis axis, int& j, int& k) {
    switch (axis) {
        case Axis::X: j = 1; k = 2; break;
        case Axis::Y: j = 0; k = 2; break;
        default: j = 0; k = 1; break;
    }
}

}  // namespace

Measure measure_from_name(std::string_view name) {
    if (name == "l1") return Measure::L1;
    if (name == "entropy") return Measure::RelativeEntropy;
    if (name == "skew") return Measure::SkewInformation;
    throw DomainError("unknown measure '" + std::string(name) +
                      "' (expected l1|entropy|skew)");
}

double relative_entropy_bound() {
    // Maximum of the three-basis entropy sum, evaluated at the symmetric
    // point n_x = n_y = n_z = 1/sqrt(3).
    static const double bound = [] {
        const double s3 = std::sqrt(3.0);
        return -s3 * ((1.0 + s3) / 2.0) * std::log2((1.0 + s3) / (2.0 * s3)) -
               s3 * ((s3 - 1.0) / 2.0) * std::log2((s3 - 1.0) / (2.0 * s3));
    }();
    return bound;
}

double measure_bound(Measure m) {
    switch (m) {
        case Measure::L1: return std::sqrt(6.0);
        case Measure::RelativeEntropy: return relative_entropy_bound();
        default: return 2.0;
    }
}

double l1_coherence(const QubitState& state, Axis axis) {
    int j, k;
    other_axes(axis, j, k);
    return std::hypot(state.bloch(j), state.bloch(k));
}

double relative_entropy_coherence(const QubitState& state, Axis axis) {
    const double n_axis = state.bloch(static_cast<int>(axis));
    const double n = std::min(1.0, state.bloch.norm());
    const double value =
        binary_entropy(0.5 * (1.0 + n_axis)) - binary_entropy(0.5 * (1.0 + n));
    return std::max(0.0, value);
}

double skew_coherence(const QubitState& state, Axis axis) {
    const double nn = std::min(1.0, state.bloch.squaredNorm());
    if (nn < 1e-24) return 0.0;  // continuous extension at n = 0
    int j, k;
    other_axes(axis, j, k);
    const double off =
        state.bloch(j) * state.bloch(j) + state.bloch(k) * state.bloch(k);
    return off * (1.0 - std::sqrt(1.0 - nn)) / nn;
}

double coherence(const QubitState& state, Axis axis, Measure measure) {
    switch (measure) {
        case Measure::L1: return l1_coherence(state, axis);
        case Measure::RelativeEntropy:
            return relative_entropy_coherence(state, axis);
        default: return skew_coherence(state, axis);
    }
}

double complementarity_sum(const QubitState& state, Measure measure) {
    return coherence(state, Axis::X, measure) +
           coherence(state, Axis::Y, measure) +
           coherence(state, Axis::Z, measure);
}

}  // namespace naqc
