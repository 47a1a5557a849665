#ifndef INTERCLUST_RNG_HPP
#define INTERCLUST_RNG_HPP

#include <cassert>
#include <cstdint>
#include <random>
#include <span>

namespace interclust {

/// Deterministic random source. All sampling goes through the helpers here so
/// that results depend only on the seed, not on library implementation details
/// of std distributions. Substreams derived from (seed, path) let independent
/// workers (restarts, sweep rows, terms) draw without sharing state.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), gen_(mix(seed)) {}

    std::uint64_t seed() const { return seed_; }

    Rng substream(std::uint64_t a, std::uint64_t b = 0) const {
        return Rng(mix(mix(seed_ ^ 0x9e3779b97f4a7c15ull) + a) ^ mix(b + 0xbf58476d1ce4e5b9ull));
    }

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform in [0,1) with 53-bit resolution.
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n). n >= 1.
    int uniform_index(int n) {
        assert(n >= 1);
        // rejection sampling to avoid modulo bias
        const std::uint64_t bound = ~0ull - (~0ull % static_cast<std::uint64_t>(n));
        std::uint64_t x;
        do { x = gen_(); } while (x >= bound);
        return static_cast<int>(x % static_cast<std::uint64_t>(n));
    }

    bool bernoulli(double p) { return uniform01() < p; }

    /// Index drawn proportionally to non-negative weights (not necessarily normalized).
    int categorical(std::span<const double> weights) {
        double total = 0;
        for (double w : weights) total += w;
        assert(total > 0);
        double u = uniform01() * total;
        double acc = 0;
        for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
            acc += weights[i];
            if (u < acc) return static_cast<int>(i);
        }
        return static_cast<int>(weights.size()) - 1;
    }

    /// Poisson draw by inversion; adequate for the moderate intensities used here.
    long poisson(double lambda) {
        if (lambda <= 0) return 0;
        long k = 0;
        double p = std::exp(-lambda), cdf = p, u = uniform01();
        while (u > cdf && k < 1000000) {
            ++k;
            p *= lambda / static_cast<double>(k);
            cdf += p;
        }
        return k;
    }

    long binomial(long n, double p) {
        long v = 0;
        for (long t = 0; t < n; ++t)
            if (uniform01() < p) ++v;
        return v;
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        // splitmix64 finalizer
        z += 0x9e3779b97f4a7c15ull;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
    std::mt19937_64 gen_;
};

}  // namespace interclust

#endif
