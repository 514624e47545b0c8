#pragma once

#include "epss/feature.hpp"

#include <string>
#include <vector>

namespace epss {

enum class RefTransform { log1p_natural };

std::string to_string(RefTransform t);
RefTransform ref_transform_from_string(const std::string& s);

// Intercept plus named weights, weights kept in declaration order. Scoring
// rejects inputs missing any weighted feature.
struct CoefficientSet {
    std::string model_id;
    double intercept = 0.0;
    std::vector<std::pair<std::string, double>> weights;
    RefTransform ref_transform = RefTransform::log1p_natural;
    std::string provenance;

    const double* weight(std::string_view name) const;
    void validate() const; // throws std::invalid_argument on non-finite values
};

struct Prediction {
    double log_odds = 0.0;
    double probability = 0.0;
};

// One additive term of the linear predictor: weight times the transformed
// observation (ln(ref_count+1) for the reference count, the raw 0/1 value
// for flags).
struct Contribution {
    std::string feature;
    double weight = 0.0;
    double observation = 0.0;
    double value = 0.0;
};

struct ScoreBreakdown {
    Prediction prediction;
    double intercept = 0.0;
    std::vector<Contribution> contributions;
};

// The published 16-variable model. Compiled in, never touches the filesystem.
const CoefficientSet& builtin_epss_v1();

double log_odds(const FeatureVector& fv, const CoefficientSet& coeffs);
double log_odds(const NamedValues& values, const CoefficientSet& coeffs);

// Logistic transform 1/(1+e^-x). Rejects non-finite input.
double probability(double log_odds);

ScoreBreakdown score(const FeatureVector& fv, const CoefficientSet& coeffs);
ScoreBreakdown score(const NamedValues& values, const CoefficientSet& coeffs);

} // namespace epss
