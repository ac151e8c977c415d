#ifndef SUBSTOCH_RANDOM_HPP
#define SUBSTOCH_RANDOM_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "substoch/weighted_space.hpp"

// Deterministic instance generators for the randomized certification suite.
// Uniform doubles are derived from raw mt19937_64 words rather than
// std::uniform_real_distribution so streams are identical across standard
// library implementations.

namespace substoch {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [lo, hi], inclusive.
    std::size_t index(std::size_t lo, std::size_t hi) {
        return lo + static_cast<std::size_t>(uniform() * static_cast<double>(hi - lo + 1));
    }

private:
    std::mt19937_64 engine_;
};

/// Weights uniform in [0.5, 2].
SpacePtr random_space(Rng& rng, std::size_t n);

/// Entries uniform in [0, 1], then each column rescaled to mass u_j in
/// [0.1, 0.95].  Always strictly substochastic, so the spectral radius is
/// below 1 and resolvent-generated cone elements exist.
PositiveOperator random_substochastic(Rng& rng, SpacePtr space);

/// f = (I - S)^-1 x with x uniform in [0.1, 1]; then Sf = f - x <= f and
/// f >= x >> 0, so f is always a cone element with nontrivial slack.
PositiveVector random_cone_element(Rng& rng, const PositiveOperator& S);

/// Entries uniform in [lo, hi].
PositiveVector random_nonnegative(Rng& rng, SpacePtr space, double lo, double hi);

/// Flat simplex sample of length m (normalized exponentials of uniforms);
/// entries clipped to at least min_alpha and renormalized when min_alpha > 0.
std::vector<double> random_simplex(Rng& rng, std::size_t m, double min_alpha);

}  // namespace substoch

#endif
