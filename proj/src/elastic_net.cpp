#include "epss/elastic_net.hpp"

#include "epss/curves.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace epss {

namespace {

inline double sigmoid(double x) {
    if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
    const double e = std::exp(x);
    return e / (1.0 + e);
}

inline double log1pexp(double x) {
    return x > 0.0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x));
}

inline double soft_threshold(double z, double gamma) {
    if (z > gamma) return z - gamma;
    if (z < -gamma) return z + gamma;
    return 0.0;
}

// Coordinate-descent state over standardized columns.
struct CdState {
    Eigen::MatrixXd xs; // standardized columns
    Eigen::VectorXd y;
    double intercept = 0.0; // unpenalized
    Eigen::VectorXd beta;   // standardized-scale weights
    Eigen::VectorXd eta;    // intercept + xs * beta, maintained incrementally
    Eigen::VectorXd prob;   // sigmoid(eta)

    void reset_to_null(double base_rate_logit) {
        intercept = base_rate_logit;
        beta.setZero();
        eta.setConstant(intercept);
        for (long i = 0; i < eta.size(); ++i) prob[i] = sigmoid(eta[i]);
    }

    double nll() const {
        double v = 0.0;
        for (long i = 0; i < eta.size(); ++i) v += log1pexp(eta[i]) - y[i] * eta[i];
        return v;
    }

    double nll_if_shift(long j, double delta) const {
        double v = 0.0;
        for (long i = 0; i < eta.size(); ++i) {
            const double e = eta[i] + delta * xs(i, j);
            v += log1pexp(e) - y[i] * e;
        }
        return v;
    }

    double nll_if_intercept_shift(double delta) const {
        double v = 0.0;
        for (long i = 0; i < eta.size(); ++i) {
            const double e = eta[i] + delta;
            v += log1pexp(e) - y[i] * e;
        }
        return v;
    }

    void apply_shift(long j, double delta) {
        beta[j] += delta;
        for (long i = 0; i < eta.size(); ++i) {
            eta[i] += delta * xs(i, j);
            prob[i] = sigmoid(eta[i]);
        }
    }

    void apply_intercept_shift(double delta) {
        intercept += delta;
        for (long i = 0; i < eta.size(); ++i) {
            eta[i] += delta;
            prob[i] = sigmoid(eta[i]);
        }
    }

    double penalty(double lambda, double alpha) const {
        return lambda *
               (alpha * beta.cwiseAbs().sum() + 0.5 * (1.0 - alpha) * beta.squaredNorm());
    }
};

CdState make_state(const DesignMatrix& m) {
    CdState s;
    const long n = m.rows();
    const long p = m.cols();
    s.xs.resize(n, p);
    for (long j = 0; j < p; ++j) s.xs.col(j) = (m.x.col(j).array() - m.mean[j]) / m.sd[j];
    s.y = m.y;
    s.beta = Eigen::VectorXd::Zero(p);
    s.eta = Eigen::VectorXd::Zero(n);
    s.prob = Eigen::VectorXd::Zero(n);
    return s;
}

double base_rate_logit(const DesignMatrix& m) {
    const double rate = m.positive_rate();
    return std::log(rate / (1.0 - rate));
}

// Gradient of the NLL at the null model (weights zero, base-rate intercept),
// computed with the same arithmetic the descent loop uses so the lambda_max
// boundary is consistent bit for bit.
Eigen::VectorXd null_gradient(const DesignMatrix& m) {
    CdState s = make_state(m);
    s.reset_to_null(base_rate_logit(m));
    Eigen::VectorXd g(m.cols());
    for (long j = 0; j < m.cols(); ++j) {
        double gj = 0.0;
        for (long i = 0; i < m.rows(); ++i) gj += s.xs(i, j) * (s.prob[i] - s.y[i]);
        g[j] = gj;
    }
    return g;
}

// One backtracked proximal-Newton update of coordinate j. Returns the applied
// change (0 when the step is rejected); `nll_cur` and `pen_cur` track the two
// objective terms and never let their sum increase.
double update_coordinate(CdState& s, long j, double lambda, double alpha, double& nll_cur,
                         double& pen_cur) {
    const long n = s.eta.size();
    double g = 0.0, h = 0.0;
    for (long i = 0; i < n; ++i) {
        const double w = s.prob[i] * (1.0 - s.prob[i]);
        g += s.xs(i, j) * (s.prob[i] - s.y[i]);
        h += s.xs(i, j) * s.xs(i, j) * w;
    }
    h = std::max(h, 1e-10);
    const double z = h * s.beta[j] - g;
    const double target = soft_threshold(z, lambda * alpha) / (h + lambda * (1.0 - alpha));
    double delta = target - s.beta[j];
    if (delta == 0.0) return 0.0;

    const double old = s.beta[j];
    for (int half = 0; half < 40; ++half) {
        const double candidate = old + delta;
        const double pen_new =
            pen_cur + lambda * (alpha * (std::abs(candidate) - std::abs(old)) +
                                0.5 * (1.0 - alpha) * (candidate * candidate - old * old));
        const double nll_new = s.nll_if_shift(j, delta);
        if (nll_new + pen_new <= nll_cur + pen_cur) {
            s.apply_shift(j, delta);
            nll_cur = nll_new;
            pen_cur = pen_new;
            return delta;
        }
        delta *= 0.5;
    }
    return 0.0;
}

double update_intercept(CdState& s, double& nll_cur) {
    const long n = s.eta.size();
    double g = 0.0, h = 0.0;
    for (long i = 0; i < n; ++i) {
        g += s.prob[i] - s.y[i];
        h += s.prob[i] * (1.0 - s.prob[i]);
    }
    h = std::max(h, 1e-10);
    double delta = -g / h;
    if (delta == 0.0) return 0.0;
    for (int half = 0; half < 40; ++half) {
        const double nll_new = s.nll_if_intercept_shift(delta);
        if (nll_new <= nll_cur) {
            s.apply_intercept_shift(delta);
            nll_cur = nll_new;
            return delta;
        }
        delta *= 0.5;
    }
    return 0.0;
}

CoefficientSet destandardize(const DesignMatrix& m, const CdState& s, const std::string& id) {
    CoefficientSet c;
    c.model_id = id;
    c.ref_transform = m.ref_transform;
    double intercept = s.intercept;
    for (long j = 0; j < m.cols(); ++j) {
        const double w = s.beta[j] / m.sd[j];
        c.weights.emplace_back(m.feature_names[j], w);
        intercept -= w * m.mean[j];
    }
    c.intercept = intercept;
    return c;
}

} // namespace

double lambda_max(const DesignMatrix& m, double alpha) {
    if (alpha < 0.0 || alpha > 1.0) throw std::invalid_argument("alpha must lie in [0,1]");
    if (m.cols() == 0) return 0.0;
    const double max_grad = null_gradient(m).cwiseAbs().maxCoeff();
    if (alpha == 0.0) return std::numeric_limits<double>::infinity();
    return max_grad / alpha;
}

std::vector<double> lambda_grid(double lambda_max, int count, double min_ratio) {
    if (count < 1) throw std::invalid_argument("lambda grid needs at least one point");
    if (!(lambda_max > 0.0) || !std::isfinite(lambda_max))
        throw std::invalid_argument("lambda_max must be finite and positive");
    if (!(min_ratio > 0.0) || min_ratio >= 1.0)
        throw std::invalid_argument("min_ratio must lie in (0,1)");
    std::vector<double> grid(count);
    if (count == 1) {
        grid[0] = lambda_max;
        return grid;
    }
    const double log_max = std::log(lambda_max);
    const double log_min = std::log(lambda_max * min_ratio);
    for (int i = 0; i < count; ++i)
        grid[i] = std::exp(log_max + (log_min - log_max) * double(i) / double(count - 1));
    grid[0] = lambda_max; // keep the endpoint exact
    return grid;
}

std::vector<PathEntry> fit_elastic_net_path(const DesignMatrix& m,
                                            const ElasticNetOptions& options) {
    if (options.alpha < 0.0 || options.alpha > 1.0)
        throw std::invalid_argument("alpha must lie in [0,1]");
    const double alpha = options.alpha;

    std::vector<double> grid;
    double lam_max = std::numeric_limits<double>::infinity();
    if (options.lambdas) {
        grid = *options.lambdas;
        if (grid.empty()) throw std::invalid_argument("empty lambda grid");
        for (size_t i = 0; i + 1 < grid.size(); ++i)
            if (!(grid[i] > grid[i + 1]))
                throw std::invalid_argument("lambda grid must be strictly descending");
        for (double l : grid)
            if (l < 0.0) throw std::invalid_argument("lambda must be nonnegative");
        if (alpha > 0.0) lam_max = lambda_max(m, alpha);
    } else {
        // alpha == 0 has no finite lambda_max; fall back to the lasso bound,
        // the usual grid-construction convention for pure ridge.
        lam_max = lambda_max(m, std::max(alpha, 1e-3));
        grid = lambda_grid(lam_max, options.n_lambda, options.lambda_min_ratio);
        if (alpha == 0.0) lam_max = std::numeric_limits<double>::infinity();
    }

    CdState state = make_state(m);
    const double b0 = base_rate_logit(m);
    state.reset_to_null(b0);

    std::vector<PathEntry> path;
    path.reserve(grid.size());
    const long n = m.rows();
    const long p = m.cols();

    for (size_t gi = 0; gi < grid.size(); ++gi) {
        const double lambda = grid[gi];
        if (!options.warm_start) state.reset_to_null(b0);

        PathEntry entry;
        entry.lambda = lambda;

        const bool at_null = state.beta.isZero(0.0);
        if (at_null && alpha > 0.0 && lambda >= lam_max) {
            // KKT certifies the null model; emit it exactly.
            state.reset_to_null(b0);
            if (options.record_objective)
                entry.sweep_objectives.push_back(state.nll() + state.penalty(lambda, alpha));
        } else {
            double nll_cur = state.nll();
            double pen_cur = state.penalty(lambda, alpha);
            if (options.record_objective) entry.sweep_objectives.push_back(nll_cur + pen_cur);
            for (int sweep = 0; sweep < options.max_sweeps; ++sweep) {
                double max_change = 0.0;
                for (long j = 0; j < p; ++j)
                    max_change = std::max(
                        max_change, std::abs(update_coordinate(state, j, lambda, alpha, nll_cur,
                                                               pen_cur)));
                max_change = std::max(max_change, std::abs(update_intercept(state, nll_cur)));
                if (options.record_objective) entry.sweep_objectives.push_back(nll_cur + pen_cur);
                if (max_change < options.tol) break;
            }
        }

        entry.coefficients = destandardize(m, state, "elastic-net");
        entry.active_count = 0;
        for (long j = 0; j < p; ++j)
            if (state.beta[j] != 0.0) ++entry.active_count;

        // Fresh pass for reporting, clearing incremental drift in eta.
        Eigen::VectorXd eta = Eigen::VectorXd::Constant(n, state.intercept);
        if (p > 0) eta += state.xs * state.beta;
        double nll = 0.0;
        std::vector<double> scores(size_t(n));
        std::vector<int> labels(size_t(n));
        for (long i = 0; i < n; ++i) {
            nll += log1pexp(eta[i]) - m.y[i] * eta[i];
            scores[size_t(i)] = sigmoid(eta[i]);
            labels[size_t(i)] = m.y[i] > 0.5 ? 1 : 0;
        }
        entry.log_likelihood = -nll;
        entry.bic = bic(entry.log_likelihood, entry.active_count + 1, n);
        entry.pr_auc = pr_curve(scores, labels).pr_auc;
        path.push_back(std::move(entry));
    }
    return path;
}

double bic(double log_likelihood, int k, long n) {
    if (n < 1) throw std::invalid_argument("bic: n must be at least 1");
    return double(k) * std::log(double(n)) - 2.0 * log_likelihood;
}

const PathEntry& select_model(const std::vector<PathEntry>& path) {
    if (path.empty()) throw std::invalid_argument("select_model: empty path");
    size_t best = 0;
    for (size_t i = 1; i < path.size(); ++i)
        if (path[i].bic < path[best].bic) best = i; // ties keep the larger lambda
    return path[best];
}

LogisticFit debias_refit(const std::vector<LabeledInstance>& instances, const PathEntry& entry) {
    std::vector<std::string> active;
    for (const auto& [name, w] : entry.coefficients.weights)
        if (w != 0.0) active.push_back(name);
    const DesignMatrix sub =
        build_design_matrix(instances, active, entry.coefficients.ref_transform);
    LogisticFit fit = fit_logistic(sub);
    fit.coefficients.model_id = "elastic-net-debiased";
    return fit;
}

} // namespace epss
