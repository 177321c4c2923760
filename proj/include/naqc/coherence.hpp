#pragma once

// Single-qubit coherence measures per Pauli basis and their three-basis
// complementarity sums. For rho = (I + n.sigma)/2, with j, k the axes
// other than i:
//
//   l1:       C_i = sqrt(n_j^2 + n_k^2)                 sum <= sqrt(6)
//   entropy:  C_i = H((1+n_i)/2) - H((1+|n|)/2)          sum <= C2m
//   skew:     C_i = (n_j^2+n_k^2)(1-sqrt(1-|n|^2))/|n|^2 sum <= 2
//
// All three sums are maximised by the equal-superposition state
// n = (1,1,1)/sqrt(3).

#include <string_view>

#include "naqc/qubit.hpp"

namespace naqc {

enum class Axis : int { X = 0, Y = 1, Z = 2 };

enum class Measure : int { L1 = 0, RelativeEntropy = 1, SkewInformation = 2 };

constexpr std::string_view measure_name(Measure m) {
    switch (m) {
        case Measure::L1: return "l1";
        case Measure::RelativeEntropy: return "entropy";
        default: return "skew";
    }
}

/// Parses "l1" | "entropy" | "skew". Throws DomainError otherwise.
Measure measure_from_name(std::string_view name);

inline constexpr Measure kAllMeasures[] = {Measure::L1, Measure::RelativeEntropy,
                                           Measure::SkewInformation};

/// Upper bound of the three-basis sum of the relative entropy of
/// coherence, attained at n = (1,1,1)/sqrt(3). Evaluates to 2.2320226...;
/// the constant is computed, not hard-coded, so downstream thresholds get
/// full double precision.
double relative_entropy_bound();

/// Complementarity bound for the three-basis sum of the chosen measure.
double measure_bound(Measure m);

double l1_coherence(const QubitState& state, Axis axis);
double relative_entropy_coherence(const QubitState& state, Axis axis);
double skew_coherence(const QubitState& state, Axis axis);

double coherence(const QubitState& state, Axis axis, Measure measure);

/// Sum of the chosen measure over the x, y, z bases.
double complementarity_sum(const QubitState& state, Measure measure);

}  // namespace naqc
