#ifndef ST34_RANDOM_HPP
#define ST34_RANDOM_HPP

#include "st34/rational.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace st34 {

/// Seed used by every randomized check unless overridden.
inline constexpr std::uint64_t kDefaultSeed = 0xC0CE7E2;

/// Reproducible sampler. mt19937_64 output is fixed by the standard; the
/// bounded draw is done here because std::uniform_int_distribution is not
/// portable across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [lo, hi] by rejection sampling.
    long uniform(long lo, long hi)
    {
        if (lo > hi) {
            throw std::invalid_argument("empty sampling range");
        }
        const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1U;
        if (span == 0) {
            return static_cast<long>(engine_());
        }
        const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % span);
        std::uint64_t r = engine_();
        while (r >= limit) {
            r = engine_();
        }
        return lo + static_cast<long>(r % span);
    }

    std::vector<Rational> integer_point(std::size_t n, long lo, long hi)
    {
        std::vector<Rational> p;
        p.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            p.emplace_back(uniform(lo, hi));
        }
        return p;
    }

    /// Rational with numerator in [-bound, bound] and denominator in [1, bound].
    Rational rational(long bound)
    {
        const long num = uniform(-bound, bound);
        const long den = uniform(1, bound);
        return rational_reduce(num, den);
    }

    /// Independent stream derived from this one, for per-task reproducibility.
    Rng split() { return Rng(next() ^ 0x9E3779B97F4A7C15ULL); }

private:
    std::mt19937_64 engine_;
};

}  // namespace st34

#endif  // ST34_RANDOM_HPP
