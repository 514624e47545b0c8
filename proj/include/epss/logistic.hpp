#pragma once

#include "epss/design_matrix.hpp"

#include <utility>
#include <vector>

namespace epss {

struct FitOptions {
    double tol = 1e-8; // max absolute coefficient change
    int max_iterations = 100;
};

struct LogisticFit {
    CoefficientSet coefficients;
    double log_likelihood = 0.0;
    int iterations = 0;
    double intercept_se = 0.0;
    std::vector<std::pair<std::string, double>> weight_se;
};

// Maximum-likelihood logistic regression via iteratively reweighted least
// squares (safeguarded Newton). Standard errors come from the inverse of the
// observed information matrix at the optimum. Throws on non-convergence,
// naming complete separation as the likely cause.
LogisticFit fit_logistic(const DesignMatrix& m, const FitOptions& options = {});

// Negative log-likelihood and, when `grad` is non-null, its analytic gradient
// over beta = [intercept, weights...]. Exposed for finite-difference checks.
double nll_and_gradient(const DesignMatrix& m, const Eigen::VectorXd& beta,
                        Eigen::VectorXd* grad);

// Log-likelihood of a coefficient set over the matrix rows.
double log_likelihood(const DesignMatrix& m, double intercept, const Eigen::VectorXd& weights);

} // namespace epss
