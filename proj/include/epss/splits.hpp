#pragma once

#include "epss/dataset.hpp"

#include <cstdint>
#include <vector>

namespace epss {

struct Split {
    std::vector<size_t> train;
    std::vector<size_t> test;
    Date cut{}; // rolling origin only: train <= cut < test
};

// Rolling forecasting origin: the first cut sits `initial_train_fraction` of
// the date span past the earliest instance; each split trains on everything
// published on or before the cut and tests on (cut, cut + step]; cuts advance
// by `step_months` until the data runs out. Instances must arrive sorted by
// published_date. Throws when no split can be formed.
std::vector<Split> rolling_origin_splits(const std::vector<LabeledInstance>& instances,
                                         double initial_train_fraction = 0.5,
                                         int step_months = 3);

// Random near-equal partition, deterministic under seed; every instance tests
// exactly once.
std::vector<Split> kfold_splits(size_t n, int k, uint64_t seed);

} // namespace epss
