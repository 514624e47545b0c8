#include "epss/strategy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace epss {

CvssConfusion confusion_at_cvss(const std::vector<LabeledInstance>& instances, double threshold) {
    CvssConfusion result;
    for (const auto& inst : instances) {
        if (!inst.cvss_base) {
            ++result.excluded_missing_cvss;
            continue;
        }
        const bool flagged = *inst.cvss_base >= threshold;
        if (flagged && inst.exploited) ++result.counts.tp;
        else if (flagged) ++result.counts.fp;
        else if (inst.exploited) ++result.counts.fn;
        else ++result.counts.tn;
    }
    return result;
}

StrategyMetrics strategy_metrics(const ConfusionCounts& c) {
    if (c.tp < 0 || c.fp < 0 || c.tn < 0 || c.fn < 0)
        throw std::invalid_argument("confusion counts must be nonnegative");
    StrategyMetrics m;
    m.effort = c.tp + c.fp;
    if (c.tp + c.fp > 0) m.efficiency = double(c.tp) / double(c.tp + c.fp);
    if (c.tp + c.fn > 0) m.coverage = double(c.tp) / double(c.tp + c.fn);
    if (c.fp + c.tn > 0) m.fpr = double(c.fp) / double(c.fp + c.tn);
    return m;
}

CoverageMatch match_coverage(const std::vector<double>& scores, const std::vector<int>& labels,
                             double target_coverage) {
    if (scores.size() != labels.size())
        throw std::invalid_argument("scores and labels differ in length");
    if (!(target_coverage > 0.0) || target_coverage > 1.0)
        throw std::invalid_argument("target coverage must lie in (0,1]");
    const long positives = std::count(labels.begin(), labels.end(), 1);
    if (positives == 0) throw std::invalid_argument("match_coverage requires positive labels");

    std::vector<size_t> idx(scores.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](size_t a, size_t b) { return scores[a] > scores[b]; });

    long tp = 0, flagged = 0;
    size_t i = 0;
    while (i < idx.size()) {
        const double cutoff = scores[idx[i]];
        while (i < idx.size() && scores[idx[i]] == cutoff) {
            ++flagged;
            if (labels[idx[i]] == 1) ++tp;
            ++i;
        }
        const double coverage = double(tp) / double(positives);
        if (coverage >= target_coverage) return {cutoff, flagged, coverage};
    }
    throw std::runtime_error("coverage target " + std::to_string(target_coverage) +
                             " is unreachable");
}

double effort_reduction(long reference_effort, long effort) {
    if (reference_effort <= 0) throw std::invalid_argument("reference effort must be positive");
    return double(reference_effort - effort) / double(reference_effort);
}

} // namespace epss
