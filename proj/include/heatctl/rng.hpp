#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace heatctl {

/// Seeded generator with hand-rolled draws. std::*_distribution output is
/// implementation-defined, which would break the bit-identical-given-seed
/// contracts, so only the raw mt19937_64 stream is used.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1).
    double uniform() {
        return double(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, n). n must be > 0.
    std::uint64_t bounded(std::uint64_t n) {
        // modulo bias is < 2^-40 for the sizes used here
        return next_u64() % n;
    }

    /// Standard normal (Box-Muller, one value per call; the pair's second
    /// half is cached).
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        do { u1 = uniform(); } while (u1 <= 0.0);
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double theta = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return r * std::cos(theta);
    }

    /// In-place Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = std::size_t(bounded(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    /// First k elements of a random permutation of 0..n-1 (partial
    /// Fisher-Yates), in selection order.
    std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k);

    /// Mixes extra words into a seed so sub-streams stay decorrelated.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t tag);

private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

inline std::vector<std::size_t> Rng::sample_without_replacement(std::size_t n, std::size_t k) {
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    if (k > n) k = n;
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t j = i + std::size_t(bounded(n - i));
        std::swap(idx[i], idx[j]);
    }
    idx.resize(k);
    return idx;
}

inline std::uint64_t Rng::derive(std::uint64_t seed, std::uint64_t tag) {
    // splitmix64 finalizer over seed ^ rotated tag
    std::uint64_t z = seed ^ (tag * 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace heatctl
