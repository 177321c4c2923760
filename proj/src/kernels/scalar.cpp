// Scalar reference kernels. Straightforward per-state loops over the closed
// forms; the AVX2 variants must reproduce these to ~1e-12.

#include <cmath>

#include "naqc/kernels.hpp"

namespace naqc::kernels {

namespace {

inline double entropy_term(double x) {
    return x > 0.0 ? -x * std::log2(x) : 0.0;
}

inline double binary_h(double x) {
    return entropy_term(x) + entropy_term(1.0 - x);
}

// Coherence of Bloch vector n in basis `axis` for one measure. `nn` is the
// squared norm, pre-clamped to [0, 1].
inline double coherence_scalar(const double n[3], double nn, int axis,
                               Measure measure) {
    const int j = axis == 0 ? 1 : 0;
    const int k = axis == 2 ? 1 : 2;
    const double off = n[j] * n[j] + n[k] * n[k];
    switch (measure) {
        case Measure::L1:
            return std::sqrt(off);
        case Measure::RelativeEntropy:
            return binary_h(0.5 * (1.0 + n[axis])) -
                   binary_h(0.5 * (1.0 + std::sqrt(nn)));
        default:
            return nn < 1e-24 ? 0.0 : off * (1.0 - std::sqrt(1.0 - nn)) / nn;
    }
}

}  // namespace

void complementarity_sums_scalar(const BlochView& in, Measure measure,
                                 double* out) {
    for (std::size_t i = 0; i < in.n; ++i) {
        const double n[3] = {in.x[i], in.y[i], in.z[i]};
        const double nn =
            std::min(1.0, n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
        switch (measure) {
            case Measure::L1:
                out[i] = std::sqrt(n[1] * n[1] + n[2] * n[2]) +
                         std::sqrt(n[0] * n[0] + n[2] * n[2]) +
                         std::sqrt(n[0] * n[0] + n[1] * n[1]);
                break;
            case Measure::RelativeEntropy:
                out[i] = binary_h(0.5 * (1.0 + n[0])) +
                         binary_h(0.5 * (1.0 + n[1])) +
                         binary_h(0.5 * (1.0 + n[2])) -
                         3.0 * binary_h(0.5 * (1.0 + std::sqrt(nn)));
                break;
            default:
                out[i] = 2.0 * (1.0 - std::sqrt(1.0 - nn));
                break;
        }
    }
}

void steering_functionals_scalar(const StateView& in, Measure measure,
                                 double* out) {
    for (std::size_t i = 0; i < in.n; ++i) {
        double total = 0.0;
        for (int j = 0; j < 3; ++j) {
            for (double sign : {1.0, -1.0}) {
                const double gamma = 1.0 + sign * in.r[j][i];
                if (gamma <= 2e-12) continue;  // dropped zero-probability branch
                const double inv = 1.0 / gamma;
                double n[3];
                for (int b = 0; b < 3; ++b) {
                    n[b] = (in.s[b][i] + sign * in.t[3 * j + b][i]) * inv;
                }
                const double nn =
                    std::min(1.0, n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
                double coh = 0.0;
                for (int b = 0; b < 3; ++b) {
                    if (b == j) continue;
                    coh += coherence_scalar(n, nn, b, measure);
                }
                total += 0.5 * gamma * coh;
            }
        }
        out[i] = 0.5 * total;
    }
}

}  // namespace naqc::kernels
