#pragma once

#include "svmcoreset/dataset.hpp"

namespace svmcoreset {

/// Parameters of the regularized SVM cost
///   f(p,w) = (1/(2*u_norm)) * ||w_{1:d}||^2 + lambda * h(p,w).
/// u_norm is frozen to the ORIGIN set's total weight when evaluating subsets,
/// so the coreset objective stays an unbiased estimator of the full one.
struct ObjectiveContext {
    double lambda = 1.0;
    double u_norm = 1.0;

    ObjectiveContext(double lambda_, double u_norm_) : lambda(lambda_), u_norm(u_norm_) {
        validate();
    }
    static ObjectiveContext for_dataset(const WeightedDataset& ds, double lambda) {
        return ObjectiveContext(lambda, ds.total_weight());
    }
    void validate() const;
};

/// h(p,w) = max{0, 1 - y<x,w>}.
double hinge_loss(const LabeledPoint& p, const Vector& w);
double hinge_loss(const Eigen::Ref<const Eigen::RowVectorXd>& x, int y, const Vector& w);

/// Per-point cost f(p,w); the bias entry w_{d+1} is excluded from the norm.
double point_cost(const LabeledPoint& p, const Vector& w, const ObjectiveContext& ctx);

/// y_i * <x_i, w> for every row.
Vector margins(const WeightedDataset& ds, const Vector& w);

/// F_lambda(S, w) = sum_p weight(p) * f(p, w). An empty collection evaluates
/// to 0 (callers treat that as a degenerate warning case).
double svm_objective(const WeightedDataset& ds, const Vector& w, const ObjectiveContext& ctx);

/// Subgradient of F at w: (W/u_norm)*[w_{1:d}; 0] - lambda * sum_{margin<1} u*y*x.
/// Points exactly at margin 1 contribute 0 (tie-break).
Vector subgradient(const WeightedDataset& ds, const Vector& w, const ObjectiveContext& ctx);

/// Objective and subgradient from one pass over the margins.
struct ObjectiveEval {
    double value = 0.0;
    Vector grad;
};
ObjectiveEval objective_with_subgradient(const WeightedDataset& ds, const Vector& w,
                                         const ObjectiveContext& ctx);

}  // namespace svmcoreset
