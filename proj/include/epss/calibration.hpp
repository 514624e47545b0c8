#pragma once

#include <string>
#include <vector>

namespace epss {

struct WilsonInterval {
    double low = 0.0;
    double high = 0.0;
};

// 95% by default (z = Phi^-1(0.975)).
WilsonInterval wilson_interval(long successes, long n, double z = 1.959963984540054);

struct CalibrationBin {
    double lo = 0.0; // partition edges over predicted probability
    double hi = 1.0;
    long n = 0;
    double mean_predicted = 0.0;
    double observed_rate = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
};

struct CalibrationResult {
    std::vector<CalibrationBin> bins;
    std::vector<std::string> notes; // skipped empty bins, merged tied edges
};

// Equal-count bins (deciles by default) over predicted probability; duplicate
// quantile edges merge, so heavily tied scores collapse into fewer bins. Each
// bin reports the observed exploitation rate with a 95% Wilson interval.
CalibrationResult calibration(const std::vector<double>& scores, const std::vector<int>& labels,
                              int bins = 10);

} // namespace epss
