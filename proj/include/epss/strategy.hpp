#pragma once

#include "epss/dataset.hpp"

#include <optional>
#include <string>
#include <vector>

namespace epss {

struct ConfusionCounts {
    long tp = 0;
    long fp = 0;
    long tn = 0;
    long fn = 0;

    long total() const { return tp + fp + tn + fn; }
};

// Ratios stay empty on 0/0 instead of collapsing to a silent zero.
struct StrategyMetrics {
    std::optional<double> efficiency; // tp / (tp+fp), precision
    std::optional<double> coverage;   // tp / (tp+fn), recall
    std::optional<double> fpr;        // fp / (fp+tn)
    long effort = 0;                  // tp + fp
};

struct StrategyRow {
    std::string label;
    ConfusionCounts counts;
    StrategyMetrics metrics;
};

struct CvssConfusion {
    ConfusionCounts counts;
    long excluded_missing_cvss = 0;
};

// Flag-everything-at-or-above strategy: predicted positive iff
// cvss_base >= threshold ("CVSS 7+" means >= 7.0). Instances without a CVSS
// score are excluded and counted.
CvssConfusion confusion_at_cvss(const std::vector<LabeledInstance>& instances, double threshold);

StrategyMetrics strategy_metrics(const ConfusionCounts& counts);

struct CoverageMatch {
    double cutoff = 0.0;   // largest score cutoff whose coverage meets the target
    long effort = 0;       // instances flagged at that cutoff
    double coverage = 0.0; // coverage actually achieved
};

// Throws when the target exceeds the achievable coverage.
CoverageMatch match_coverage(const std::vector<double>& scores, const std::vector<int>& labels,
                             double target_coverage);

// (reference - effort) / reference
double effort_reduction(long reference_effort, long effort);

} // namespace epss
