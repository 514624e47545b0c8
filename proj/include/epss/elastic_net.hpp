#pragma once

#include "epss/design_matrix.hpp"
#include "epss/logistic.hpp"

#include <optional>
#include <vector>

namespace epss {

struct ElasticNetOptions {
    double alpha = 0.5;               // L1/L2 mix; 1 = lasso, 0 = ridge
    int n_lambda = 100;               // log-spaced grid from lambda_max down
    double lambda_min_ratio = 1e-4;
    std::optional<std::vector<double>> lambdas; // explicit strictly-descending grid
    double tol = 1e-11;               // max standardized coefficient change per sweep
    int max_sweeps = 20000;
    bool warm_start = true;
    bool record_objective = false;    // keep the per-sweep penalized objective
};

struct PathEntry {
    double lambda = 0.0;
    CoefficientSet coefficients; // de-standardized, original scale
    int active_count = 0;        // nonzero weights
    double bic = 0.0;
    double pr_auc = 0.0;         // on the training rows, as fit along the path
    double log_likelihood = 0.0;
    std::vector<double> sweep_objectives;
};

// Smallest penalty for which every weight is zero: the max absolute gradient
// of the negative log-likelihood at the null model, divided by alpha.
// Infinite when alpha == 0.
double lambda_max(const DesignMatrix& m, double alpha);

std::vector<double> lambda_grid(double lambda_max, int count, double min_ratio);

// Minimizes NLL(beta) + lambda * (alpha*|beta|_1 + (1-alpha)/2*|beta|_2^2)
// over standardized columns with an unpenalized intercept, by cyclic
// coordinate descent with warm starts across the descending grid.
std::vector<PathEntry> fit_elastic_net_path(const DesignMatrix& m,
                                            const ElasticNetOptions& options = {});

// k*ln(n) - 2*log_likelihood
double bic(double log_likelihood, int k, long n);

// Minimum-BIC entry; ties resolve toward larger lambda.
const PathEntry& select_model(const std::vector<PathEntry>& path);

// Unpenalized MLE restricted to the entry's active features.
LogisticFit debias_refit(const std::vector<LabeledInstance>& instances, const PathEntry& entry);

} // namespace epss
