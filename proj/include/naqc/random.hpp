#pragma once

// Deterministic RNG helpers. The uint64 -> double mapping is spelled out
// (rather than using std::uniform_real_distribution) so that a seed
// reproduces identical streams on every platform.

#include <cstdint>
#include <random>

#include "naqc/qubit.hpp"

namespace naqc {

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1).
    double uniform() { return (engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [lo, hi] (inclusive).
    int uniform_int(int lo, int hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(engine_() % span);
    }

    /// Uniform in the closed unit ball (rejection sampling).
    Vector3 ball() {
        while (true) {
            Vector3 v(uniform(-1.0, 1.0), uniform(-1.0, 1.0), uniform(-1.0, 1.0));
            if (v.squaredNorm() <= 1.0) return v;
        }
    }

    /// Uniform direction on the unit sphere.
    Vector3 unit() {
        while (true) {
            Vector3 v = ball();
            const double n = v.norm();
            if (n > 1e-3) return v / n;
        }
    }

  private:
    std::mt19937_64 engine_;
};

}  // namespace naqc
