#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace corepalg {

/// Seeded generator whose draws are identical on every standard library.
///
/// std::mt19937_64 has a fully specified output sequence; the distributions are built
/// here because the std:: distribution algorithms are implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal (Box-Muller, one value per call).
    double normal() {
        const double u1 = 1.0 - uniform();  // (0, 1]
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    /// Derives an independent seed for sub-tasks (per-trial sub-seeds).
    std::uint64_t split() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

}  // namespace corepalg
