#include "epss/calibration.hpp"

#include "epss/summary.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace epss {

WilsonInterval wilson_interval(long successes, long n, double z) {
    if (n <= 0) throw std::invalid_argument("wilson interval needs n > 0");
    if (successes < 0 || successes > n)
        throw std::invalid_argument("successes must lie in [0, n]");
    const double p = double(successes) / double(n);
    const double z2 = z * z;
    const double denom = 1.0 + z2 / double(n);
    const double center = (p + z2 / (2.0 * double(n))) / denom;
    const double half =
        z * std::sqrt(p * (1.0 - p) / double(n) + z2 / (4.0 * double(n) * double(n))) / denom;
    return {center - half, center + half};
}

CalibrationResult calibration(const std::vector<double>& scores, const std::vector<int>& labels,
                              int bins) {
    if (scores.size() != labels.size())
        throw std::invalid_argument("scores and labels differ in length");
    if (scores.empty()) throw std::invalid_argument("calibration: no instances");
    if (bins < 1) throw std::invalid_argument("calibration: bins must be positive");
    for (double s : scores)
        if (!(s >= 0.0 && s <= 1.0))
            throw std::invalid_argument("calibration: scores must lie in [0,1]");

    std::vector<double> sorted = scores;
    std::sort(sorted.begin(), sorted.end());

    // Equal-count edges; duplicate edges from tied scores merge into one bin.
    std::vector<double> edges;
    for (int b = 1; b < bins; ++b) {
        const double e = quantile(sorted, double(b) / double(bins));
        if (edges.empty() || e > edges.back()) edges.push_back(e);
    }

    CalibrationResult result;
    if (edges.size() + 1 < size_t(bins))
        result.notes.push_back("tied predictions reduced " + std::to_string(bins) + " bins to " +
                               std::to_string(edges.size() + 1));

    const size_t n_bins = edges.size() + 1;
    std::vector<long> count(n_bins, 0), positive(n_bins, 0);
    std::vector<double> sum_pred(n_bins, 0.0);
    for (size_t i = 0; i < scores.size(); ++i) {
        // bin b covers (edges[b-1], edges[b]]
        const size_t b = std::lower_bound(edges.begin(), edges.end(), scores[i]) - edges.begin();
        ++count[b];
        sum_pred[b] += scores[i];
        if (labels[i] == 1) ++positive[b];
    }

    for (size_t b = 0; b < n_bins; ++b) {
        if (count[b] == 0) {
            result.notes.push_back("bin " + std::to_string(b + 1) + " is empty; skipped");
            continue;
        }
        CalibrationBin bin;
        bin.lo = b == 0 ? 0.0 : edges[b - 1];
        bin.hi = b == n_bins - 1 ? 1.0 : edges[b];
        bin.n = count[b];
        bin.mean_predicted = sum_pred[b] / double(count[b]);
        bin.observed_rate = double(positive[b]) / double(count[b]);
        const WilsonInterval ci = wilson_interval(positive[b], count[b]);
        bin.ci_low = ci.low;
        bin.ci_high = ci.high;
        result.bins.push_back(bin);
    }
    return result;
}

} // namespace epss
