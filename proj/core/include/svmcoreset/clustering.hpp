#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "svmcoreset/dataset.hpp"
#include "svmcoreset/rng.hpp"

namespace svmcoreset {

struct ClusterConfig {
    int k = 1;
    std::uint64_t seed = 0;
    int max_iters = 50;
    double tol = 1e-6;
    int restarts = 1;  // best-of-restarts; restart r reuses seed stream derive(seed, r)
};

/// Weighted k-means result over the signed vectors y*x of one label class.
/// Every centroid's last entry equals the label, so p_delta's last entry is 0.
struct Clustering {
    int label = 0;                    // +1 / -1; 0 when the label class is empty
    int requested_k = 0;
    Matrix centroids;                 // k_eff x (d+1); k_eff <= k when points run out
    std::vector<std::int64_t> rows;   // dataset row positions of the members
    std::vector<int> assignment;      // member index -> cluster index
    Vector cluster_weights;           // U[P_y^{(i)}]
    Vector variances;                 // Var^{(i)} = sum_{p in i} u(p) * ||p_delta||_2
    double cost = 0.0;                // weighted k-means cost (squared distances)
    std::vector<double> cost_history; // cost after each assignment step
    int iterations = 0;

    bool empty() const { return rows.empty(); }
    int num_clusters() const { return static_cast<int>(centroids.rows()); }
};

/// k-means++ seeding over weighted points: first seed drawn u-weighted, each
/// following seed with probability proportional to u(p) * D(p)^2. Stops early
/// when every remaining point coincides with a chosen seed, so surplus
/// clusters stay empty. Rejects all-zero weights.
Matrix kmeanspp_seed(const Matrix& points, const Vector& weights, int k, Rng& rng);

/// Weighted Lloyd refinement from the given seeds: assignment ties break
/// toward the lowest cluster index, empty clusters reseed at the point with
/// the largest u*D^2, stops when every centroid moves less than tol.
Clustering lloyd(const Matrix& points, const Vector& weights, Matrix seeds, int max_iters,
                 double tol);

/// Seeding + Lloyd, best cost over cfg.restarts independent seedings.
Clustering weighted_kmeans(const Matrix& points, const Vector& weights, const ClusterConfig& cfg);

/// Default cluster count: ceil(log2(n)), at least 1.
int default_k(std::int64_t n);

/// Runs the pipeline independently on P_+ and P_- over signed vectors.
/// A missing label yields an empty Clustering (flagged via empty()).
std::pair<Clustering, Clustering> cluster_per_label(const WeightedDataset& ds,
                                                    const ClusterConfig& cfg);

/// p_delta = c_{assigned}(p) - y*x; the last entry is exactly 0.
Vector p_delta(const WeightedDataset& ds, const Clustering& clustering, std::int64_t member_index);

}  // namespace svmcoreset
