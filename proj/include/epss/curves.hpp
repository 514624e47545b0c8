#pragma once

#include <vector>

namespace epss {

struct RocPoint {
    double threshold; // +inf for the initial (0,0) point
    double fpr;
    double tpr;
};

struct RocCurve {
    std::vector<RocPoint> points;
    double auc = 0.0;
};

// Thresholds sweep the distinct score values descending; tied scores move as
// one group. AUC by the trapezoid rule. Requires both classes.
RocCurve roc_curve(const std::vector<double>& scores, const std::vector<int>& labels);

struct PrPoint {
    double threshold;
    double recall;
    double precision;
};

struct PrCurve {
    std::vector<PrPoint> points;
    double pr_auc = 0.0;   // average precision (step-wise, no interpolation)
    double baseline = 0.0; // positive prevalence, the random-strategy reference
};

// Requires at least one positive label.
PrCurve pr_curve(const std::vector<double>& scores, const std::vector<int>& labels);

} // namespace epss
