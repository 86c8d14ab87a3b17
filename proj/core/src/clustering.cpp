#include "svmcoreset/clustering.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace svmcoreset {

namespace {

// Squared distances from every point to the given centroid.
Vector sq_dist_to(const Matrix& points, const Eigen::RowVectorXd& c) {
    return (points.rowwise() - c).rowwise().squaredNorm();
}

struct Assignment {
    std::vector<int> cluster;
    Vector sq_dist;
};

Assignment assign_nearest(const Matrix& points, const Matrix& centroids) {
    const Eigen::Index n = points.rows();
    Assignment out;
    out.cluster.assign(static_cast<std::size_t>(n), 0);
    out.sq_dist = sq_dist_to(points, centroids.row(0));
    for (Eigen::Index c = 1; c < centroids.rows(); ++c) {
        const Vector d = sq_dist_to(points, centroids.row(c));
        for (Eigen::Index i = 0; i < n; ++i) {
            if (d[i] < out.sq_dist[i]) {  // strict: ties stay at the lower index
                out.sq_dist[i] = d[i];
                out.cluster[static_cast<std::size_t>(i)] = static_cast<int>(c);
            }
        }
    }
    return out;
}

}  // namespace

Matrix kmeanspp_seed(const Matrix& points, const Vector& weights, int k, Rng& rng) {
    const Eigen::Index n = points.rows();
    if (n == 0) throw std::invalid_argument("kmeanspp_seed: no points");
    if (k < 1) throw std::invalid_argument("kmeanspp_seed: k must be >= 1");
    if (!(weights.sum() > 0.0)) throw std::invalid_argument("kmeanspp_seed: all weights are zero");

    Matrix seeds(k, points.cols());
    DiscreteSampler first(weights);
    seeds.row(0) = points.row(first.draw(rng));
    int chosen = 1;
    Vector min_sq = sq_dist_to(points, seeds.row(0));
    while (chosen < k) {
        Vector mass = weights.cwiseProduct(min_sq);
        if (!(mass.sum() > 0.0)) break;  // every point coincides with a seed; surplus clusters stay empty
        DiscreteSampler next(mass);
        const Eigen::Index pick = next.draw(rng);
        seeds.row(chosen) = points.row(pick);
        min_sq = min_sq.cwiseMin(sq_dist_to(points, seeds.row(chosen)));
        ++chosen;
    }
    return seeds.topRows(chosen);
}

Clustering lloyd(const Matrix& points, const Vector& weights, Matrix seeds, int max_iters,
                 double tol) {
    const Eigen::Index n = points.rows();
    const Eigen::Index k = seeds.rows();
    const Eigen::Index dim = points.cols();
    if (n == 0) throw std::invalid_argument("lloyd: no points");

    Matrix centroids = std::move(seeds);
    Assignment a = assign_nearest(points, centroids);
    std::vector<double> cost_history{weights.dot(a.sq_dist)};
    int iterations = 0;
    for (int it = 0; it < max_iters; ++it) {
        ++iterations;
        // update step: u-weighted means
        Matrix sums = Matrix::Zero(k, dim);
        Vector mass = Vector::Zero(k);
        for (Eigen::Index i = 0; i < n; ++i) {
            const int c = a.cluster[static_cast<std::size_t>(i)];
            sums.row(c) += weights[i] * points.row(i);
            mass[c] += weights[i];
        }
        double max_move2 = 0.0;
        for (Eigen::Index c = 0; c < k; ++c) {
            if (mass[c] > 0.0) {
                const Eigen::RowVectorXd updated = sums.row(c) / mass[c];
                max_move2 = std::max(max_move2, (updated - centroids.row(c)).squaredNorm());
                centroids.row(c) = updated;
            } else {
                // empty cluster: reseed at the point with the largest u*D^2
                Eigen::Index best = 0;
                double best_mass = -1.0;
                for (Eigen::Index i = 0; i < n; ++i) {
                    const double m = weights[i] * a.sq_dist[i];
                    if (m > best_mass) {
                        best_mass = m;
                        best = i;
                    }
                }
                if (best_mass <= 0.0) continue;  // nothing to grab; cluster stays empty
                max_move2 = std::numeric_limits<double>::infinity();
                centroids.row(c) = points.row(best);
            }
        }
        a = assign_nearest(points, centroids);
        cost_history.push_back(weights.dot(a.sq_dist));
        if (max_move2 < tol * tol) break;
    }

    // Drop clusters that ended up empty (possible only with duplicate-heavy input).
    Vector mass = Vector::Zero(k);
    for (Eigen::Index i = 0; i < n; ++i) mass[a.cluster[static_cast<std::size_t>(i)]] += weights[i];
    std::vector<int> remap(static_cast<std::size_t>(k), -1);
    int kept = 0;
    for (Eigen::Index c = 0; c < k; ++c) {
        if (mass[c] > 0.0) remap[static_cast<std::size_t>(c)] = kept++;
    }

    Clustering out;
    out.centroids = Matrix(kept, dim);
    out.cluster_weights = Vector::Zero(kept);
    out.variances = Vector::Zero(kept);
    out.assignment.resize(static_cast<std::size_t>(n));
    out.iterations = iterations;
    out.cost_history = std::move(cost_history);

    Matrix sums = Matrix::Zero(kept, dim);
    for (Eigen::Index i = 0; i < n; ++i) {
        const int c = remap[static_cast<std::size_t>(a.cluster[static_cast<std::size_t>(i)])];
        out.assignment[static_cast<std::size_t>(i)] = c;
        sums.row(c) += weights[i] * points.row(i);
        out.cluster_weights[c] += weights[i];
    }
    for (int c = 0; c < kept; ++c) out.centroids.row(c) = sums.row(c) / out.cluster_weights[c];

    out.cost = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        const int c = out.assignment[static_cast<std::size_t>(i)];
        const double sq = (points.row(i) - out.centroids.row(c)).squaredNorm();
        out.cost += weights[i] * sq;
        out.variances[c] += weights[i] * std::sqrt(sq);
    }
    return out;
}

Clustering weighted_kmeans(const Matrix& points, const Vector& weights, const ClusterConfig& cfg) {
    Clustering best;
    bool have = false;
    for (int r = 0; r < std::max(cfg.restarts, 1); ++r) {
        Rng rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(r)));
        Matrix seeds = kmeanspp_seed(points, weights, cfg.k, rng);
        Clustering c = lloyd(points, weights, std::move(seeds), cfg.max_iters, cfg.tol);
        if (!have || c.cost < best.cost) {
            best = std::move(c);
            have = true;
        }
    }
    return best;
}

int default_k(std::int64_t n) {
    if (n <= 2) return 1;
    return static_cast<int>(std::ceil(std::log2(static_cast<double>(n))));
}

namespace {

Clustering cluster_one_label(const WeightedDataset& ds, const std::vector<std::int64_t>& rows,
                             int label, const ClusterConfig& cfg) {
    Clustering out;
    out.label = label;
    out.requested_k = cfg.k;
    if (rows.empty()) return out;

    const Eigen::Index m = static_cast<Eigen::Index>(rows.size());
    Matrix signed_pts(m, ds.dim() + 1);
    Vector w(m);
    for (Eigen::Index i = 0; i < m; ++i) {
        const std::int64_t row = rows[static_cast<std::size_t>(i)];
        signed_pts.row(i) = static_cast<double>(label) * ds.points().row(row);
        w[i] = ds.weight(row);
    }
    Clustering c = weighted_kmeans(signed_pts, w, cfg);
    c.label = label;
    c.requested_k = cfg.k;
    c.rows = rows;
    // The signed bias entry is the label for every member, hence for every
    // weighted mean; pin it exactly so p_delta's last entry is exactly 0.
    c.centroids.col(ds.dim()).setConstant(static_cast<double>(label));
    return c;
}

}  // namespace

std::pair<Clustering, Clustering> cluster_per_label(const WeightedDataset& ds,
                                                    const ClusterConfig& cfg) {
    if (ds.size() == 0) throw std::invalid_argument("cluster_per_label: empty dataset");
    if (cfg.k < 1) throw std::invalid_argument("cluster_per_label: k must be >= 1");
    ClusterConfig pos_cfg = cfg;
    pos_cfg.seed = derive_seed(cfg.seed, 0x9051ULL);
    ClusterConfig neg_cfg = cfg;
    neg_cfg.seed = derive_seed(cfg.seed, 0x9e6ULL);
    return {cluster_one_label(ds, ds.positive_rows(), +1, pos_cfg),
            cluster_one_label(ds, ds.negative_rows(), -1, neg_cfg)};
}

Vector p_delta(const WeightedDataset& ds, const Clustering& clustering, std::int64_t member_index) {
    if (member_index < 0 || member_index >= static_cast<std::int64_t>(clustering.rows.size())) {
        throw std::invalid_argument("p_delta: member index out of range");
    }
    const std::int64_t row = clustering.rows[static_cast<std::size_t>(member_index)];
    const int c = clustering.assignment[static_cast<std::size_t>(member_index)];
    Vector delta = clustering.centroids.row(c).transpose() -
                   static_cast<double>(clustering.label) * ds.points().row(row).transpose();
    delta[ds.dim()] = 0.0;  // exact by construction; pinned against rounding
    return delta;
}

}  // namespace svmcoreset
