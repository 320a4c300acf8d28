#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace presam {

/// SplitMix64 step; used to spawn independent seed streams from one base
/// seed (noise, minibatch sampling and weight init never share a stream).
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Uniform double in [0, 1) from the top 53 bits.
inline double uniform_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Standard normal draws via Box-Muller over mt19937_64. The engine is
/// fully specified by the standard, so sequences are identical across
/// standard-library implementations (std::normal_distribution is not).
class NormalSampler {
public:
    explicit NormalSampler(std::uint64_t seed) : rng_(seed) {}

    double next() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = 1.0 - uniform_unit(rng_);  // (0, 1]
        const double u2 = uniform_unit(rng_);
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * M_PI * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

private:
    std::mt19937_64 rng_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

/// k distinct indices from {0..n-1} by partial Fisher-Yates; ascending order
/// is not guaranteed, the draw order is.
inline std::vector<std::size_t> sample_without_replacement(std::mt19937_64& rng, std::size_t n,
                                                           std::size_t k) {
    std::vector<std::size_t> pool(n);
    for (std::size_t i = 0; i < n; ++i) pool[i] = i;
    std::vector<std::size_t> out;
    out.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng() % (n - i));
        std::swap(pool[i], pool[j]);
        out.push_back(pool[i]);
    }
    return out;
}

}  // namespace presam
