#include "epss/curves.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace epss {

namespace {

std::vector<size_t> order_by_score_desc(const std::vector<double>& scores) {
    std::vector<size_t> idx(scores.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](size_t a, size_t b) { return scores[a] > scores[b]; });
    return idx;
}

void check_inputs(const std::vector<double>& scores, const std::vector<int>& labels) {
    if (scores.size() != labels.size())
        throw std::invalid_argument("scores and labels differ in length");
    if (scores.empty()) throw std::invalid_argument("no instances to evaluate");
    for (double s : scores)
        if (!std::isfinite(s)) throw std::invalid_argument("scores must be finite");
}

} // namespace

RocCurve roc_curve(const std::vector<double>& scores, const std::vector<int>& labels) {
    check_inputs(scores, labels);
    const long positives = std::count(labels.begin(), labels.end(), 1);
    const long negatives = long(labels.size()) - positives;
    if (positives == 0 || negatives == 0)
        throw std::invalid_argument("ROC requires both classes");

    const auto idx = order_by_score_desc(scores);
    RocCurve curve;
    curve.points.push_back({std::numeric_limits<double>::infinity(), 0.0, 0.0});

    long tp = 0, fp = 0;
    double prev_fpr = 0.0, prev_tpr = 0.0;
    double area = 0.0;
    size_t i = 0;
    while (i < idx.size()) {
        const double threshold = scores[idx[i]];
        while (i < idx.size() && scores[idx[i]] == threshold) {
            if (labels[idx[i]] == 1) ++tp;
            else ++fp;
            ++i;
        }
        const double fpr = double(fp) / double(negatives);
        const double tpr = double(tp) / double(positives);
        curve.points.push_back({threshold, fpr, tpr});
        area += (fpr - prev_fpr) * (tpr + prev_tpr) * 0.5;
        prev_fpr = fpr;
        prev_tpr = tpr;
    }
    curve.auc = area;
    return curve;
}

PrCurve pr_curve(const std::vector<double>& scores, const std::vector<int>& labels) {
    check_inputs(scores, labels);
    const long positives = std::count(labels.begin(), labels.end(), 1);
    if (positives == 0) throw std::invalid_argument("PR curve requires positive labels");

    const auto idx = order_by_score_desc(scores);
    PrCurve curve;
    curve.baseline = double(positives) / double(labels.size());

    long tp = 0, fp = 0;
    double prev_recall = 0.0;
    double ap = 0.0;
    size_t i = 0;
    while (i < idx.size()) {
        const double threshold = scores[idx[i]];
        while (i < idx.size() && scores[idx[i]] == threshold) {
            if (labels[idx[i]] == 1) ++tp;
            else ++fp;
            ++i;
        }
        const double recall = double(tp) / double(positives);
        const double precision = double(tp) / double(tp + fp);
        curve.points.push_back({threshold, recall, precision});
        ap += (recall - prev_recall) * precision;
        prev_recall = recall;
    }
    curve.pr_auc = ap;
    return curve;
}

} // namespace epss
