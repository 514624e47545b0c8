#include "epss/model.hpp"

#include <cmath>
#include <stdexcept>

namespace epss {

std::string to_string(RefTransform t) {
    switch (t) {
    case RefTransform::log1p_natural: return "log1p-natural";
    }
    throw std::logic_error("unknown ref transform");
}

RefTransform ref_transform_from_string(const std::string& s) {
    if (s == "log1p-natural") return RefTransform::log1p_natural;
    throw std::invalid_argument("unknown ref_transform '" + s + "'");
}

const double* CoefficientSet::weight(std::string_view name) const {
    for (const auto& [n, w] : weights)
        if (n == name) return &w;
    return nullptr;
}

void CoefficientSet::validate() const {
    if (!std::isfinite(intercept))
        throw std::invalid_argument("model '" + model_id + "': intercept is not finite");
    for (const auto& [name, w] : weights)
        if (!std::isfinite(w))
            throw std::invalid_argument("model '" + model_id + "': weight for '" + name +
                                        "' is not finite");
}

const CoefficientSet& builtin_epss_v1() {
    static const CoefficientSet model = [] {
        CoefficientSet m;
        m.model_id = "epss-v1";
        m.intercept = -6.18;
        m.weights = {
            {"vend_microsoft", 2.44},
            {"vend_ibm", 2.07},
            {"exp_weaponized", 2.00},
            {"vend_adobe", 1.91},
            {"vend_hp", 1.62},
            {"exp_poc_published", 1.50},
            {"vend_apache", 1.10},
            {"ref_count", 1.01},
            {"tag_code_execution", 0.57},
            {"tag_remote", 0.23},
            {"tag_denial_of_service", 0.22},
            {"tag_web", 0.06},
            {"tag_memory_corruption", -0.20},
            {"tag_local", -0.63},
            {"vend_google", -0.89},
            {"vend_apple", -1.92},
        };
        m.ref_transform = RefTransform::log1p_natural;
        m.provenance = "published coefficients; fitted on CVEs disclosed 2016-06-01..2018-06-01";
        return m;
    }();
    return model;
}

static double transformed_observation(const std::string& name, double raw,
                                      const CoefficientSet& coeffs) {
    if (name == "ref_count" && coeffs.ref_transform == RefTransform::log1p_natural) {
        if (raw < 0.0) throw std::invalid_argument("ref_count must be nonnegative");
        return std::log1p(raw);
    }
    return raw;
}

double log_odds(const NamedValues& values, const CoefficientSet& coeffs) {
    double sum = coeffs.intercept;
    for (const auto& [name, w] : coeffs.weights) {
        const double* raw = find_value(values, name);
        if (!raw)
            throw std::invalid_argument("feature '" + name +
                                        "' required by model '" + coeffs.model_id +
                                        "' is missing from the input");
        sum += w * transformed_observation(name, *raw, coeffs);
    }
    return sum;
}

double log_odds(const FeatureVector& fv, const CoefficientSet& coeffs) {
    if (!fv.valid()) throw std::invalid_argument("ref_count must be nonnegative");
    return log_odds(named_values(fv), coeffs);
}

double probability(double log_odds) {
    if (!std::isfinite(log_odds))
        throw std::invalid_argument("log-odds must be finite");
    // Complement-exact form: probability(x) + probability(-x) == 1.
    if (log_odds >= 0.0) return 1.0 / (1.0 + std::exp(-log_odds));
    const double e = std::exp(log_odds);
    return e / (1.0 + e);
}

ScoreBreakdown score(const NamedValues& values, const CoefficientSet& coeffs) {
    ScoreBreakdown out;
    out.intercept = coeffs.intercept;
    out.contributions.reserve(coeffs.weights.size());
    double sum = coeffs.intercept;
    for (const auto& [name, w] : coeffs.weights) {
        const double* raw = find_value(values, name);
        if (!raw)
            throw std::invalid_argument("feature '" + name +
                                        "' required by model '" + coeffs.model_id +
                                        "' is missing from the input");
        const double obs = transformed_observation(name, *raw, coeffs);
        const double term = w * obs;
        out.contributions.push_back({name, w, obs, term});
        sum += term;
    }
    out.prediction.log_odds = sum;
    out.prediction.probability = probability(sum);
    return out;
}

ScoreBreakdown score(const FeatureVector& fv, const CoefficientSet& coeffs) {
    if (!fv.valid()) throw std::invalid_argument("ref_count must be nonnegative");
    return score(named_values(fv), coeffs);
}

} // namespace epss
