#include "svmcoreset/objective.hpp"

#include <stdexcept>

namespace svmcoreset {

void ObjectiveContext::validate() const {
    if (!(lambda > 0.0 && lambda <= 1.0)) {
        throw std::invalid_argument("ObjectiveContext: lambda must be in (0, 1]");
    }
    if (!(u_norm > 0.0)) throw std::invalid_argument("ObjectiveContext: u_norm must be positive");
}

double hinge_loss(const Eigen::Ref<const Eigen::RowVectorXd>& x, int y, const Vector& w) {
    if (x.size() != w.size()) throw std::invalid_argument("hinge_loss: dimension mismatch");
    const double margin = static_cast<double>(y) * x.dot(w);
    return std::max(0.0, 1.0 - margin);
}

double hinge_loss(const LabeledPoint& p, const Vector& w) { return hinge_loss(p.x, p.y, w); }

double point_cost(const LabeledPoint& p, const Vector& w, const ObjectiveContext& ctx) {
    ctx.validate();
    const Eigen::Index d = w.size() - 1;
    return 0.5 / ctx.u_norm * w.head(d).squaredNorm() + ctx.lambda * hinge_loss(p, w);
}

Vector margins(const WeightedDataset& ds, const Vector& w) {
    if (w.size() != ds.dim() + 1) throw std::invalid_argument("margins: query dimension mismatch");
    Vector m = ds.points() * w;
    for (std::int64_t i = 0; i < ds.size(); ++i) m[i] *= static_cast<double>(ds.label(i));
    return m;
}

double svm_objective(const WeightedDataset& ds, const Vector& w, const ObjectiveContext& ctx) {
    ctx.validate();
    if (ds.size() == 0) return 0.0;
    const Eigen::Index d = w.size() - 1;
    const Vector m = margins(ds, w);
    double hinge_sum = 0.0;
    for (std::int64_t i = 0; i < ds.size(); ++i) {
        hinge_sum += ds.weight(i) * std::max(0.0, 1.0 - m[i]);
    }
    const double reg = ds.total_weight() / (2.0 * ctx.u_norm) * w.head(d).squaredNorm();
    return reg + ctx.lambda * hinge_sum;
}

Vector subgradient(const WeightedDataset& ds, const Vector& w, const ObjectiveContext& ctx) {
    return objective_with_subgradient(ds, w, ctx).grad;
}

ObjectiveEval objective_with_subgradient(const WeightedDataset& ds, const Vector& w,
                                         const ObjectiveContext& ctx) {
    ctx.validate();
    const Eigen::Index d = w.size() - 1;
    ObjectiveEval out;
    out.grad = Vector::Zero(w.size());
    if (ds.size() == 0) return out;
    const Vector m = margins(ds, w);
    double hinge_sum = 0.0;
    for (std::int64_t i = 0; i < ds.size(); ++i) {
        const double gap = 1.0 - m[i];
        if (gap > 0.0) {
            hinge_sum += ds.weight(i) * gap;
            // margin < 1 strictly: at margin == 1 the hinge subgradient is taken as 0
            out.grad.noalias() -=
                (ctx.lambda * ds.weight(i) * static_cast<double>(ds.label(i))) * ds.points().row(i).transpose();
        }
    }
    const double ratio = ds.total_weight() / ctx.u_norm;
    out.grad.head(d) += ratio * w.head(d);
    out.value = 0.5 * ratio * w.head(d).squaredNorm() + ctx.lambda * hinge_sum;
    return out;
}

}  // namespace svmcoreset
