#include "svmcoreset/solver.hpp"

#include <cmath>
#include <stdexcept>

#include "svmcoreset/rng.hpp"

namespace svmcoreset {

namespace {

void project_ball(Vector& w, Eigen::Index d, double radius) {
    const double norm = w.head(d).norm();
    if (norm > radius) w.head(d) *= radius / norm;
}

}  // namespace

SolveResult approx_svm(const WeightedDataset& ds, const SolverConfig& cfg,
                       std::optional<double> u_norm) {
    if (ds.size() == 0) throw std::invalid_argument("approx_svm: empty dataset");
    const double norm_total = u_norm.value_or(ds.total_weight());
    const ObjectiveContext ctx(cfg.lambda, norm_total);
    const Eigen::Index d = ds.dim();
    const std::int64_t n = ds.size();

    // Equivalent Pegasos problem: minimizing F is minimizing
    //   (lambda_eff/2)||w_{1:d}||^2 + E_{p ~ u/W}[h(p,w)]
    // with lambda_eff = 1/(lambda * u_norm).
    const double lambda_eff = 1.0 / (cfg.lambda * norm_total);
    const double radius = cfg.projection_radius.value_or(std::sqrt(2.0 / lambda_eff));

    DiscreteSampler sampler(ds.weights());
    Rng rng(derive_seed(cfg.seed, 0x50145ULL));

    Vector w = Vector::Zero(d + 1);
    Vector avg = Vector::Zero(d + 1);
    std::int64_t avg_count = 0;

    SolveResult best;
    best.w = w;
    best.objective = svm_objective(ds, w, ctx);
    best.evaluations = 1;
    best.projection_radius = radius;
    best.step_rule = lambda_eff;

    const std::int64_t total_steps = static_cast<std::int64_t>(cfg.epochs) * n;
    const std::int64_t half = total_steps / 2;

    auto consider = [&](const Vector& candidate) {
        const double f = svm_objective(ds, candidate, ctx);
        ++best.evaluations;
        if (f < best.objective) {
            best.objective = f;
            best.w = candidate;
        }
    };

    for (std::int64_t t = 1; t <= total_steps; ++t) {
        const std::int64_t i = sampler.draw(rng);
        const double eta = 1.0 / (lambda_eff * static_cast<double>(t));
        const double margin =
            static_cast<double>(ds.label(i)) * ds.points().row(i).dot(w);
        w.head(d) *= (1.0 - eta * lambda_eff);
        if (margin < 1.0) {
            w.noalias() += (eta * static_cast<double>(ds.label(i))) * ds.points().row(i).transpose();
        }
        project_ball(w, d, radius);
        if (t > half) {
            avg += w;
            ++avg_count;
        }
        if (t % n == 0 || t == total_steps) {  // epoch boundary: score candidates
            consider(w);
            if (avg_count > 0) consider(avg / static_cast<double>(avg_count));
        }
    }
    return best;
}

SolveResult reference_solve(const WeightedDataset& ds, const SolverConfig& cfg,
                            std::optional<double> u_norm) {
    if (ds.size() == 0) throw std::invalid_argument("reference_solve: empty dataset");
    const double norm_total = u_norm.value_or(ds.total_weight());
    const ObjectiveContext ctx(cfg.lambda, norm_total);
    const Eigen::Index d = ds.dim();

    const double lambda_eff = 1.0 / (cfg.lambda * norm_total);
    const double radius = cfg.projection_radius.value_or(std::sqrt(2.0 / lambda_eff));
    // Strong convexity of F in w_{1:d} is W/u_norm.
    const double sigma = std::max(ds.total_weight() / norm_total, 1e-12);

    Vector w = Vector::Zero(d + 1);
    Vector avg = Vector::Zero(d + 1);
    std::int64_t avg_count = 0;

    SolveResult best;
    best.w = w;
    best.objective = svm_objective(ds, w, ctx);
    best.evaluations = 1;
    best.projection_radius = radius;
    best.step_rule = lambda_eff;

    const int iters = std::max(cfg.epochs, 1);
    const int half = iters / 2;
    for (int t = 1; t <= iters; ++t) {
        const ObjectiveEval eval = objective_with_subgradient(ds, w, ctx);
        ++best.evaluations;
        if (eval.value < best.objective) {
            best.objective = eval.value;
            best.w = w;
        }
        const double eta = 2.0 / (sigma * static_cast<double>(t + 1));
        w.noalias() -= eta * eval.grad;
        project_ball(w, d, radius);
        if (t > half) {
            avg += w;
            ++avg_count;
            if (t == iters || t % 64 == 0) {
                const Vector candidate = avg / static_cast<double>(avg_count);
                const double f = svm_objective(ds, candidate, ctx);
                ++best.evaluations;
                if (f < best.objective) {
                    best.objective = f;
                    best.w = candidate;
                }
            }
        }
    }
    const double f_final = svm_objective(ds, w, ctx);
    ++best.evaluations;
    if (f_final < best.objective) {
        best.objective = f_final;
        best.w = w;
    }
    return best;
}

OptTilde opt_tilde(double f_value, double xi) {
    if (xi < 0.0) throw std::invalid_argument("opt_tilde: xi must be >= 0");
    if (f_value < 0.0) throw std::invalid_argument("opt_tilde: objective values are nonnegative");
    OptTilde out;
    const double floor = 1e-12 * f_value;
    out.value = f_value - xi;
    if (out.value < floor) {
        out.value = floor;
        out.clamped = true;
    }
    return out;
}

XiEstimate estimate_xi(const WeightedDataset& ds, const SolverConfig& cfg, int reference_factor,
                       std::int64_t subsample_cap, std::optional<double> u_norm) {
    const double norm_total = u_norm.value_or(ds.total_weight());
    const ObjectiveContext ctx(cfg.lambda, norm_total);

    XiEstimate est;
    const SolveResult short_run = approx_svm(ds, cfg, norm_total);
    est.w_short = short_run.w;
    est.f_short = short_run.objective;

    SolverConfig ref_cfg = cfg;
    ref_cfg.epochs = std::max(64, cfg.epochs * 4) * std::max(reference_factor, 1);

    Vector w_long;
    if (ds.size() > subsample_cap && subsample_cap > 0) {
        // Long run on a u-weighted subsample; evaluation stays on the full set.
        DiscreteSampler sampler(ds.weights());
        Rng rng(derive_seed(cfg.seed, 0x5b5a3ULL));
        Matrix x(subsample_cap, ds.dim() + 1);
        std::vector<int> y(static_cast<std::size_t>(subsample_cap));
        for (std::int64_t i = 0; i < subsample_cap; ++i) {
            const std::int64_t row = sampler.draw(rng);
            x.row(i) = ds.points().row(row);
            y[static_cast<std::size_t>(i)] = ds.label(row);
        }
        const WeightedDataset sub(std::move(x), std::move(y), Vector::Ones(subsample_cap));
        // u_norm scaled to the subsample so its objective has the same shape.
        w_long = reference_solve(sub, ref_cfg, sub.total_weight()).w;
    } else {
        w_long = reference_solve(ds, ref_cfg, norm_total).w;
    }
    est.f_long = svm_objective(ds, w_long, ctx);
    est.xi = std::max(est.f_short - est.f_long, 0.0);
    est.opt = opt_tilde(est.f_short, est.xi);
    return est;
}

}  // namespace svmcoreset
