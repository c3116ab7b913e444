#pragma once
// Counter-based splittable random number generator.
//
// Every stream is identified by a 64-bit key; the n-th variate of a stream is
// a pure function mix(key, n), so independent substreams can be carved out of
// a master seed without any shared state.  The monotone-coupling contract of
// the sampler relies on this: the bulk cells of a configuration draw from
// substreams that do not depend on whether boundary rows are present.

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace lislab {

// SplitMix64 finalizer: bijective 64-bit mixing with good avalanche.
inline constexpr uint64_t mix64(uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Fold one word into a running key.  Chained mix64 calls keep the map
// injective enough for seeding purposes (distinct inputs -> decorrelated keys).
inline constexpr uint64_t key_combine(uint64_t key, uint64_t word) {
    return mix64(key ^ (word + 0x9E3779B97F4A7C15ull + (key << 6) + (key >> 2)));
}

// A keyed counter stream with the handful of variate types the sampler needs.
class CounterRng {
  public:
    explicit CounterRng(uint64_t key) : key_(key) {}

    uint64_t next_u64() { return mix64(key_ ^ mix64(ctr_++)); }

    // Uniform on [0,1), 53-bit resolution.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform on (0,1]; safe to feed into log().
    double next_unit_pos() { return 1.0 - next_unit(); }

    double exponential(double mean) { return -mean * std::log(next_unit_pos()); }

    // Standard normal via Box-Muller; the second value of each pair is cached.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double radius = std::sqrt(-2.0 * std::log(next_unit_pos()));
        double angle = 6.283185307179586476925286766559 * next_unit();
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

    // Poisson(lambda).  Inversion by the product method for small rates; large
    // rates are split into independent chunks of rate < 30 and summed, which
    // stays exact and avoids rejection-sampler corner cases.
    int64_t poisson(double lambda) {
        if (!(lambda >= 0.0)) throw std::invalid_argument("poisson: rate must be >= 0");
        if (lambda == 0.0) return 0;
        int64_t total = 0;
        while (lambda > 30.0) {
            total += poisson_small(25.0);
            lambda -= 25.0;
        }
        return total + poisson_small(lambda);
    }

    // Geometric on {0,1,2,...} with P(k) = (1-x) x^k, mean x/(1-x).
    int64_t geometric(double x) {
        if (x <= 0.0) return 0;
        if (x >= 1.0) throw std::invalid_argument("geometric: weight must be < 1");
        double k = std::floor(std::log(next_unit_pos()) / std::log(x));
        return static_cast<int64_t>(k);
    }

    // Bernoulli on {0,1} with P(1) = x/(1+x), mean x/(1+x).
    int64_t bernoulli_ratio(double x) {
        if (x <= 0.0) return 0;
        return next_unit() < x / (1.0 + x) ? 1 : 0;
    }

  private:
    int64_t poisson_small(double lambda) {
        double threshold = std::exp(-lambda);
        int64_t k = 0;
        double prod = next_unit_pos();
        while (prod > threshold) {
            ++k;
            prod *= next_unit_pos();
        }
        return k;
    }

    uint64_t key_;
    uint64_t ctr_ = 0;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

// Substream factory: one stream per (seed, region tag, cell coordinates).
inline CounterRng substream(uint64_t seed, uint64_t tag, uint64_t i = 0, uint64_t j = 0) {
    uint64_t key = key_combine(key_combine(key_combine(mix64(seed), tag), i), j);
    return CounterRng(key);
}

// Per-sample master seeds for a batch run.
inline uint64_t sample_seed(uint64_t master, uint64_t index) {
    return key_combine(mix64(master) ^ 0xA5A5A5A55A5A5A5Aull, index);
}

}  // namespace lislab
