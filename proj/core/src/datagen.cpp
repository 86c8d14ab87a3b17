#include "svmcoreset/datagen.hpp"

#include <cmath>
#include <stdexcept>

#include "svmcoreset/rng.hpp"

namespace svmcoreset {

WeightedDataset gen_blobs(std::int64_t n, int d, double separation, std::uint64_t seed,
                          double blob_std) {
    if (n < 2) throw std::invalid_argument("gen_blobs: n must be >= 2");
    if (d < 1) throw std::invalid_argument("gen_blobs: d must be >= 1");
    Rng rng(derive_seed(seed, 0xb10b5));
    Matrix features(n, d);
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) {
        const int y = (i < n / 2) ? 1 : -1;  // first half positive, rest negative
        labels[static_cast<std::size_t>(i)] = y;
        for (int j = 0; j < d; ++j) features(i, j) = blob_std * rng.normal();
        features(i, 0) += (y > 0 ? 0.5 : -0.5) * separation;
    }
    return WeightedDataset::from_raw(features, std::move(labels), Vector::Ones(n));
}

WeightedDataset gen_pathological(std::int64_t n, std::uint64_t seed) {
    if (n < 4) throw std::invalid_argument("gen_pathological: n must be >= 4");
    Rng rng(derive_seed(seed, 0xbadc1u));
    // Cluster centers 20 standard deviations apart; the close pair sits midway
    // at distance 0.1, labels matching the cluster on its side.
    const double half_sep = 10.0;
    Matrix features(n, 2);
    std::vector<int> labels(static_cast<std::size_t>(n));
    const std::int64_t n_clustered = n - 2;
    for (std::int64_t i = 0; i < n_clustered; ++i) {
        const int y = (i < n_clustered / 2 + n_clustered % 2) ? 1 : -1;
        labels[static_cast<std::size_t>(i)] = y;
        features(i, 0) = (y > 0 ? half_sep : -half_sep) + rng.normal();
        features(i, 1) = rng.normal();
    }
    features(n - 2, 0) = 0.05;
    features(n - 2, 1) = 0.0;
    labels[static_cast<std::size_t>(n - 2)] = 1;
    features(n - 1, 0) = -0.05;
    features(n - 1, 1) = 0.0;
    labels[static_cast<std::size_t>(n - 1)] = -1;
    return WeightedDataset::from_raw(features, std::move(labels), Vector::Ones(n));
}

namespace {

std::int64_t binomial(int d, int k) {
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (d - k + i) / i;
    return r;
}

}  // namespace

WeightedDataset gen_lower_bound(int d) {
    if (d < 2 || d % 2 != 0) throw std::invalid_argument("gen_lower_bound: d must be even and >= 2");
    if (d > 16) throw std::invalid_argument("gen_lower_bound: d capped at 16 (n = C(d, d/2) blows up)");
    const int half = d / 2;
    const std::int64_t n = binomial(d, half);
    const double entry = std::sqrt(2.0 / d);

    Matrix features = Matrix::Zero(n, d);
    std::vector<int> labels(static_cast<std::size_t>(n));
    // Lexicographic enumeration of d-choose-d/2 supports, labels alternating.
    std::vector<int> support(static_cast<std::size_t>(half));
    for (int i = 0; i < half; ++i) support[static_cast<std::size_t>(i)] = i;
    std::int64_t row = 0;
    while (true) {
        const int y = (row % 2 == 0) ? 1 : -1;
        labels[static_cast<std::size_t>(row)] = y;
        for (int idx : support) features(row, idx) = y * entry;
        ++row;
        // next combination
        int i = half - 1;
        while (i >= 0 && support[static_cast<std::size_t>(i)] == d - half + i) --i;
        if (i < 0) break;
        ++support[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < half; ++j) {
            support[static_cast<std::size_t>(j)] = support[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    if (row != n) throw std::logic_error("gen_lower_bound: enumeration mismatch");
    return WeightedDataset::from_raw(features, std::move(labels), Vector::Ones(n));
}

Vector lower_bound_adversarial_query(const WeightedDataset& ds, std::int64_t row) {
    const int d = ds.dim();
    const double high = 1.0 / std::sqrt(2.0 / d);
    Vector w = Vector::Zero(d + 1);  // bias entry stays 0 (it is in every B_p)
    for (int j = 0; j < d; ++j) {
        if (ds.points()(row, j) == 0.0) w[j] = high;
    }
    return w;
}

WeightedDataset generate(const GenSpec& spec) {
    switch (spec.kind) {
        case GenKind::blobs:
            return gen_blobs(spec.n, spec.d, spec.separation, spec.seed, spec.blob_std);
        case GenKind::pathological:
            return gen_pathological(spec.n, spec.seed);
        case GenKind::lower_bound:
            return gen_lower_bound(spec.d);
    }
    throw std::invalid_argument("generate: unknown kind");
}

}  // namespace svmcoreset
