#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

namespace svmcoreset {

// SplitMix64 step; used to derive independent child seeds from a base seed.
inline std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t tag) {
    return mix_seed(mix_seed(base) ^ mix_seed(tag));
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t tag1, std::uint64_t tag2) {
    return derive_seed(derive_seed(base, tag1), tag2);
}

/// Deterministic random source. All distributions are implemented explicitly
/// (not via std:: distribution objects) so sequences are reproducible across
/// standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(mix_seed(seed)) {}

    std::uint64_t next_raw() { return gen_(); }

    /// Uniform double in [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n). Rejection sampling, unbiased.
    std::int64_t uniform_int(std::int64_t n) {
        if (n <= 0) throw std::invalid_argument("uniform_int: n must be positive");
        const std::uint64_t un = static_cast<std::uint64_t>(n);
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % un;
        std::uint64_t x;
        do {
            x = gen_();
        } while (x >= limit);
        return static_cast<std::int64_t>(x % un);
    }

    /// Standard normal via Box-Muller (cosine branch only).
    double normal() {
        const double u1 = 1.0 - uniform();  // (0, 1]
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    Rng child(std::uint64_t tag) { return Rng(derive_seed(gen_(), tag)); }

private:
    std::mt19937_64 gen_;
};

/// Inverse-CDF sampler over nonnegative weights. Draw order is independent of
/// how the weights were produced, which keeps samplers point-order invariant.
class DiscreteSampler {
public:
    explicit DiscreteSampler(const Eigen::VectorXd& weights) {
        cumulative_.resize(static_cast<std::size_t>(weights.size()));
        double total = 0.0;
        for (Eigen::Index i = 0; i < weights.size(); ++i) {
            const double w = weights[i];
            if (!(w >= 0.0)) throw std::invalid_argument("DiscreteSampler: negative or NaN weight");
            total += w;
            cumulative_[static_cast<std::size_t>(i)] = total;
        }
        total_ = total;
        if (!(total_ > 0.0)) throw std::invalid_argument("DiscreteSampler: total weight must be positive");
    }

    std::int64_t draw(Rng& rng) const {
        const double target = rng.uniform() * total_;
        auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), target);
        if (it == cumulative_.end()) --it;
        return static_cast<std::int64_t>(it - cumulative_.begin());
    }

    double total() const { return total_; }

private:
    std::vector<double> cumulative_;
    double total_ = 0.0;
};

}  // namespace svmcoreset
