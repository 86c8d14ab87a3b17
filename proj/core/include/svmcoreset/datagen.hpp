#pragma once

#include <cstdint>

#include "svmcoreset/dataset.hpp"

namespace svmcoreset {

/// Synthetic instance descriptions accepted by the `gen` CLI.
enum class GenKind { blobs, pathological, lower_bound };

struct GenSpec {
    GenKind kind = GenKind::blobs;
    std::int64_t n = 1000;
    int d = 2;
    std::uint64_t seed = 0;
    double separation = 10.0;  // blobs: distance between the two cluster means
    double blob_std = 1.0;     // blobs: per-coordinate standard deviation
};

/// Two opposite-label Gaussian clusters with means +-(separation/2)*e_1 and
/// unit-covariance-scaled noise; n/2 points per label, unit weights.
WeightedDataset gen_blobs(std::int64_t n, int d, double separation, std::uint64_t seed,
                          double blob_std = 1.0);

/// The hard-for-uniform-sampling 2-D instance: two far-apart opposite-label
/// clusters (centers 20 cluster-stds apart) plus one opposite-label pair at
/// distance 0.1 midway between them. n >= 4, unit weights.
WeightedDataset gen_pathological(std::int64_t n, std::uint64_t seed);

/// The high-total-sensitivity instance: all C(d, d/2) support patterns where
/// exactly d/2 of the first d entries equal y*sqrt(2/d) and the rest are 0.
/// Labels alternate across the lexicographic enumeration so both labels are
/// present. d must be even, 2 <= d <= 16; n = C(d, d/2).
WeightedDataset gen_lower_bound(int d);

/// The adversarial query for one gen_lower_bound point: zero on the point's
/// nonzero entries (bias included), 1/sqrt(2/d) elsewhere among the first d.
/// At this query the point's hinge loss is 1 and every other point's is 0.
Vector lower_bound_adversarial_query(const WeightedDataset& ds, std::int64_t row);

WeightedDataset generate(const GenSpec& spec);

}  // namespace svmcoreset
