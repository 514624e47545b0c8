#include "epss/feature_select.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <set>
#include <stdexcept>

namespace epss {

using nlohmann::json;

Fraction Fraction::from_decimal(const std::string& text) {
    auto dot = text.find('.');
    std::string digits = dot == std::string::npos ? text : text.substr(0, dot) + text.substr(dot + 1);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                       [](unsigned char c) { return std::isdigit(c); }))
        throw std::invalid_argument("not a nonnegative decimal: '" + text + "'");
    size_t frac_digits = dot == std::string::npos ? 0 : text.size() - dot - 1;
    if (frac_digits > 12 || digits.size() > 15)
        throw std::invalid_argument("decimal too precise: '" + text + "'");
    Fraction f;
    f.num = std::stoll(digits);
    f.den = 1;
    for (size_t i = 0; i < frac_digits; ++i) f.den *= 10;
    return f;
}

std::string Fraction::str() const {
    return std::to_string(num) + "/" + std::to_string(den);
}

void FeatureCensus::validate() const {
    if (n_exploited < 0 || n_total < n_exploited)
        throw std::invalid_argument("census: 0 <= n_exploited <= n_total violated");
    for (const auto& [name, c] : counts) {
        if (c.present_and_exploited < 0 || c.present < c.present_and_exploited ||
            c.present > n_total)
            throw std::invalid_argument("census: counts for '" + name + "' out of range");
    }
}

FeatureCensus build_census(const Dataset& dataset) {
    FeatureCensus census;
    census.n_total = long(dataset.instances.size());
    for (const auto& name : dataset.schema) census.counts[name]; // keep absent features at 0
    for (const auto& inst : dataset.instances) {
        if (inst.exploited) ++census.n_exploited;
        for (const auto& [name, value] : named_values(inst.features)) {
            if (value == 0.0) continue;
            auto& c = census.counts[name];
            ++c.present;
            if (inst.exploited) ++c.present_and_exploited;
        }
    }
    census.validate();
    return census;
}

FeatureCensus merge(const FeatureCensus& a, const FeatureCensus& b) {
    FeatureCensus out = a;
    out.n_total += b.n_total;
    out.n_exploited += b.n_exploited;
    for (const auto& [name, c] : b.counts) {
        auto& dst = out.counts[name];
        dst.present += c.present;
        dst.present_and_exploited += c.present_and_exploited;
    }
    return out;
}

void write_census_table(std::ostream& out, const FeatureCensus& census) {
    out << "feature,present,present_and_exploited,n_total,n_exploited\n";
    for (const auto& [name, c] : census.counts)
        out << name << ',' << c.present << ',' << c.present_and_exploited << ',' << census.n_total
            << ',' << census.n_exploited << '\n';
}

SelectionPolicy load_policy_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open selection policy: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw std::runtime_error("selection policy " + path + ": " + e.what());
    }
    SelectionPolicy policy;
    if (j.contains("blocklist")) {
        if (!j["blocklist"].is_array())
            throw std::runtime_error("selection policy: blocklist must be an array");
        for (const auto& e : j["blocklist"]) policy.blocklist.push_back(e.get<std::string>());
    }
    if (j.contains("allowlist")) {
        if (!j["allowlist"].is_array())
            throw std::runtime_error("selection policy: allowlist must be an array");
        policy.allowlist.emplace();
        for (const auto& e : j["allowlist"]) policy.allowlist->push_back(e.get<std::string>());
    }
    return policy;
}

const SelectionPolicy& default_policy() {
    static const SelectionPolicy policy = [] {
        SelectionPolicy p;
        p.blocklist = {
            "tag_cross_site_scripting",
            "tag_cross_site_request_forgery",
            "tag_directory_traversal",
            "tag_input_validation",
        };
        return p;
    }();
    return policy;
}

std::vector<std::string> stage1_separation(const FeatureCensus& census,
                                           const Stage1Options& options) {
    census.validate();
    std::vector<std::string> retained;
    for (const auto& [name, c] : census.counts) {
        if (c.present_and_exploited == 0) continue; // never co-occurs with the positive class
        if (options.drop_perfect_predictors && c.present_and_exploited == c.present &&
            c.present == census.n_exploited)
            continue; // feature == positive class exactly
        retained.push_back(name);
    }
    return retained;
}

std::vector<std::string> stage2_prevalence(const FeatureCensus& census, const Fraction& threshold) {
    census.validate();
    if (threshold.num <= 0 || threshold.den <= 0 || threshold.num >= threshold.den)
        throw std::invalid_argument("prevalence threshold must lie in (0,1)");
    std::vector<std::string> retained;
    for (const auto& [name, c] : census.counts) {
        // present / n_total >= num / den, in exact integer arithmetic
        if (c.present * threshold.den >= threshold.num * census.n_total) retained.push_back(name);
    }
    return retained;
}

std::vector<std::string> stage3_expert(const std::vector<std::string>& features,
                                       const SelectionPolicy& policy,
                                       std::vector<std::string>* warnings) {
    const std::set<std::string> input(features.begin(), features.end());
    auto warn_unknown = [&](const std::vector<std::string>& names, const char* which) {
        if (!warnings) return;
        for (const auto& n : names)
            if (!input.count(n))
                warnings->push_back(std::string(which) + " names unknown feature '" + n + "'");
    };
    warn_unknown(policy.blocklist, "blocklist");
    if (policy.allowlist) warn_unknown(*policy.allowlist, "allowlist");

    const std::set<std::string> blocked(policy.blocklist.begin(), policy.blocklist.end());
    std::vector<std::string> retained;
    for (const auto& name : features) {
        if (blocked.count(name)) continue;
        if (policy.allowlist &&
            std::find(policy.allowlist->begin(), policy.allowlist->end(), name) ==
                policy.allowlist->end())
            continue;
        retained.push_back(name);
    }
    if (retained.empty() && warnings) warnings->push_back("stage 3 retained no features");
    return retained;
}

SelectionResult run_selection(const FeatureCensus& census, const SelectionPolicy& policy,
                              const Fraction& prevalence_threshold, const Stage1Options& stage1) {
    SelectionResult result;
    result.after_stage1 = stage1_separation(census, stage1);

    const std::vector<std::string> by_prevalence = stage2_prevalence(census, prevalence_threshold);
    const std::set<std::string> prevalent(by_prevalence.begin(), by_prevalence.end());
    for (const auto& name : result.after_stage1)
        if (prevalent.count(name)) result.after_stage2.push_back(name);

    result.after_stage3 = stage3_expert(result.after_stage2, policy, &result.warnings);
    return result;
}

} // namespace epss
