#include "epss/splits.hpp"

#include "epss/rng.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace epss {

std::vector<Split> rolling_origin_splits(const std::vector<LabeledInstance>& instances,
                                         double initial_train_fraction, int step_months) {
    if (instances.empty()) throw std::invalid_argument("rolling splits: no instances");
    if (!(initial_train_fraction > 0.0) || !(initial_train_fraction < 1.0))
        throw std::invalid_argument("initial_train_fraction must lie in (0,1)");
    if (step_months < 1) throw std::invalid_argument("step_months must be at least 1");
    for (size_t i = 1; i < instances.size(); ++i)
        if (instances[i].published_date < instances[i - 1].published_date)
            throw std::invalid_argument("rolling splits: instances must be sorted by date");

    const Date first = instances.front().published_date;
    const Date last = instances.back().published_date;
    const long span = days_between(first, last);
    if (span <= 0) throw std::invalid_argument("rolling splits: all instances share one date");

    Date cut = add_days(first, long(span * initial_train_fraction));
    std::vector<Split> splits;
    while (cut < last) {
        const Date window_end = add_months(cut, step_months);
        Split split;
        split.cut = cut;
        for (size_t i = 0; i < instances.size(); ++i) {
            const Date& d = instances[i].published_date;
            if (d <= cut) split.train.push_back(i);
            else if (d <= window_end) split.test.push_back(i);
        }
        if (!split.train.empty() && !split.test.empty()) splits.push_back(std::move(split));
        cut = window_end;
    }
    if (splits.empty())
        throw std::invalid_argument("rolling splits: too little data to form a single split");
    return splits;
}

std::vector<Split> kfold_splits(size_t n, int k, uint64_t seed) {
    if (k < 2) throw std::invalid_argument("kfold: k must be at least 2");
    if (size_t(k) > n) throw std::invalid_argument("kfold: k exceeds the instance count");

    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), size_t{0});
    Rng rng(seed);
    rng.shuffle(order);

    std::vector<Split> splits(size_t(k));
    for (size_t pos = 0; pos < n; ++pos) splits[pos % size_t(k)].test.push_back(order[pos]);
    for (auto& split : splits) {
        std::sort(split.test.begin(), split.test.end());
        split.train.reserve(n - split.test.size());
        size_t t = 0;
        for (size_t i = 0; i < n; ++i) {
            if (t < split.test.size() && split.test[t] == i) ++t;
            else split.train.push_back(i);
        }
    }
    return splits;
}

} // namespace epss
