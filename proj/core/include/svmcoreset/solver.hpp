#pragma once

#include <cstdint>
#include <optional>

#include "svmcoreset/dataset.hpp"
#include "svmcoreset/objective.hpp"

namespace svmcoreset {

struct SolverConfig {
    /// approx_svm: passes over the data (steps = epochs * n).
    /// reference_solve: number of full-batch subgradient iterations.
    int epochs = 20;
    double lambda = 1.0;
    std::uint64_t seed = 0;
    /// Ball radius for the projection of w_{1:d}; default sqrt(2*lambda*u_norm),
    /// which provably contains the optimum since F(w*) <= F(0) = lambda*W.
    std::optional<double> projection_radius;
    /// Informational approximation target xi; recorded in metadata only.
    double xi_target = 0.0;
};

struct SolveResult {
    Vector w;
    double objective = 0.0;  // F_lambda evaluated exactly at w
    int evaluations = 0;     // exact objective evaluations performed
    double projection_radius = 0.0;
    double step_rule = 0.0;  // effective Pegasos regularizer 1/(lambda*u_norm)
};

/// Stochastic subgradient (Pegasos-style) solver: points drawn proportional
/// to their weights, step 1/(lambda_eff * t) with lambda_eff = 1/(lambda*U),
/// iterate averaging over the last half of the steps, projection of w_{1:d},
/// best-seen iterate returned. Deterministic under a fixed seed and invariant
/// to point order (sampling uses the id-indexed weight distribution).
SolveResult approx_svm(const WeightedDataset& ds, const SolverConfig& cfg,
                       std::optional<double> u_norm = std::nullopt);

/// Deterministic full-batch subgradient descent with diminishing steps and
/// best-seen tracking. Slow but dependable; serves as the ground-truth proxy
/// w* for evaluation and as the long-horizon end of the xi estimate.
SolveResult reference_solve(const WeightedDataset& ds, const SolverConfig& cfg,
                            std::optional<double> u_norm = std::nullopt);

struct OptTilde {
    double value = 0.0;
    bool clamped = false;  // F - xi fell below the 1e-12*F floor
};

/// opt~_xi = max{F(w~) - xi, 1e-12 * F(w~)}; the floor guards the divisions
/// in the sensitivity bound when xi overshoots the (unobservable) true gap.
OptTilde opt_tilde(double f_value, double xi);

struct XiEstimate {
    Vector w_short;
    double f_short = 0.0;
    double f_long = 0.0;   // full-set objective of the long reference run
    double xi = 0.0;       // max{f_short - f_long, 0}
    OptTilde opt;
};

/// Estimates the short solve's optimality gap from a reference run with
/// `reference_factor` times the iteration budget, run on a weighted subsample
/// of at most `subsample_cap` points but always evaluated on the full set.
XiEstimate estimate_xi(const WeightedDataset& ds, const SolverConfig& cfg, int reference_factor = 10,
                       std::int64_t subsample_cap = 4096,
                       std::optional<double> u_norm = std::nullopt);

}  // namespace svmcoreset
