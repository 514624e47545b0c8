#include "epss/logistic.hpp"

#include <cmath>
#include <stdexcept>

namespace epss {

namespace {

inline double sigmoid(double x) {
    if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
    const double e = std::exp(x);
    return e / (1.0 + e);
}

// ln(1 + e^x) without overflow
inline double log1pexp(double x) {
    return x > 0.0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x));
}

double nll_of_eta(const Eigen::VectorXd& eta, const Eigen::VectorXd& y) {
    double nll = 0.0;
    for (long i = 0; i < eta.size(); ++i) nll += log1pexp(eta[i]) - y[i] * eta[i];
    return nll;
}

} // namespace

double nll_and_gradient(const DesignMatrix& m, const Eigen::VectorXd& beta,
                        Eigen::VectorXd* grad) {
    const long n = m.rows();
    const long p = m.cols();
    if (beta.size() != p + 1) throw std::invalid_argument("beta must have one entry per column plus intercept");
    Eigen::VectorXd eta = Eigen::VectorXd::Constant(n, beta[0]);
    if (p > 0) eta += m.x * beta.tail(p);
    if (grad) {
        Eigen::VectorXd residual(n);
        for (long i = 0; i < n; ++i) residual[i] = sigmoid(eta[i]) - m.y[i];
        grad->resize(p + 1);
        (*grad)[0] = residual.sum();
        if (p > 0) grad->tail(p) = m.x.transpose() * residual;
    }
    return nll_of_eta(eta, m.y);
}

double log_likelihood(const DesignMatrix& m, double intercept, const Eigen::VectorXd& weights) {
    Eigen::VectorXd beta(m.cols() + 1);
    beta[0] = intercept;
    if (m.cols() > 0) beta.tail(m.cols()) = weights;
    return -nll_and_gradient(m, beta, nullptr);
}

LogisticFit fit_logistic(const DesignMatrix& m, const FitOptions& options) {
    const long n = m.rows();
    const long p = m.cols();
    const double pos_rate = m.positive_rate();
    if (pos_rate <= 0.0 || pos_rate >= 1.0)
        throw std::invalid_argument("fit_logistic: labels contain a single class");

    Eigen::VectorXd beta = Eigen::VectorXd::Zero(p + 1);
    beta[0] = std::log(pos_rate / (1.0 - pos_rate));

    Eigen::VectorXd grad(p + 1);
    double nll = nll_and_gradient(m, beta, &grad);
    Eigen::MatrixXd xt(p + 1, n); // [1; x]^T, reused each iteration
    xt.row(0).setOnes();
    if (p > 0) xt.bottomRows(p) = m.x.transpose();

    bool converged = false;
    int iter = 0;
    Eigen::MatrixXd info(p + 1, p + 1);
    for (; iter < options.max_iterations; ++iter) {
        // Observed information: X^T W X with W = p(1-p)
        Eigen::VectorXd eta = Eigen::VectorXd::Constant(n, beta[0]);
        if (p > 0) eta += m.x * beta.tail(p);
        Eigen::VectorXd w(n);
        for (long i = 0; i < n; ++i) {
            const double mu = sigmoid(eta[i]);
            w[i] = std::max(mu * (1.0 - mu), 1e-10);
        }
        info.noalias() = xt * w.asDiagonal() * xt.transpose();
        Eigen::VectorXd step = info.ldlt().solve(grad);
        if (!step.allFinite())
            throw std::runtime_error(
                "logistic MLE failed: singular information matrix; complete separation of the "
                "classes is a likely cause");

        // Newton with step halving
        double t = 1.0;
        Eigen::VectorXd candidate;
        double new_nll = 0.0;
        for (int half = 0; half < 60; ++half) {
            candidate = beta - t * step;
            new_nll = nll_and_gradient(m, candidate, nullptr);
            if (new_nll <= nll) break;
            t *= 0.5;
        }
        const double max_change = (t * step).cwiseAbs().maxCoeff();
        beta = candidate;
        nll = nll_and_gradient(m, beta, &grad);
        if (!beta.allFinite())
            throw std::runtime_error(
                "logistic MLE diverged; complete separation of the classes is a likely cause");
        if (max_change < options.tol) {
            converged = true;
            ++iter;
            break;
        }
    }
    if (!converged)
        throw std::runtime_error("logistic MLE did not converge within " +
                                 std::to_string(options.max_iterations) +
                                 " iterations; complete separation of the classes is a likely "
                                 "cause");

    // Standard errors from the observed information at the optimum.
    Eigen::VectorXd eta = Eigen::VectorXd::Constant(n, beta[0]);
    if (p > 0) eta += m.x * beta.tail(p);
    Eigen::VectorXd w(n);
    for (long i = 0; i < n; ++i) {
        const double mu = sigmoid(eta[i]);
        w[i] = std::max(mu * (1.0 - mu), 1e-10);
    }
    info.noalias() = xt * w.asDiagonal() * xt.transpose();
    Eigen::MatrixXd covariance = info.ldlt().solve(Eigen::MatrixXd::Identity(p + 1, p + 1));

    LogisticFit fit;
    fit.iterations = iter;
    fit.log_likelihood = -nll;
    fit.intercept_se = std::sqrt(std::max(covariance(0, 0), 0.0));
    fit.coefficients.model_id = "mle";
    fit.coefficients.intercept = beta[0];
    fit.coefficients.ref_transform = m.ref_transform;
    for (long j = 0; j < p; ++j) {
        fit.coefficients.weights.emplace_back(m.feature_names[j], beta[j + 1]);
        fit.weight_se.emplace_back(m.feature_names[j],
                                   std::sqrt(std::max(covariance(j + 1, j + 1), 0.0)));
    }
    return fit;
}

} // namespace epss
