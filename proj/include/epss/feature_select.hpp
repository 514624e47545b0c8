#pragma once

#include "epss/dataset.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace epss {

// Exact rational threshold so prevalence boundaries never hinge on binary
// rounding of values like 0.01.
struct Fraction {
    long long num = 1;
    long long den = 100;

    static Fraction from_decimal(const std::string& text); // "0.01", "1.5", "2"
    std::string str() const;
};

struct FeatureCounts {
    long long present = 0;
    long long present_and_exploited = 0;
};

struct FeatureCensus {
    std::map<std::string, FeatureCounts> counts; // feature name -> counts
    long long n_total = 0;
    long long n_exploited = 0;

    void validate() const;
};

// A feature counts as present when its value is nonzero.
FeatureCensus build_census(const Dataset& dataset);
FeatureCensus merge(const FeatureCensus& a, const FeatureCensus& b);

void write_census_table(std::ostream& out, const FeatureCensus& census);

struct SelectionPolicy {
    std::optional<std::vector<std::string>> allowlist;
    std::vector<std::string> blocklist;
};

SelectionPolicy load_policy_file(const std::string& path);

// Features detected by generic signature classes rather than per-CVE rules;
// shipped as the default stage-3 blocklist.
const SelectionPolicy& default_policy();

struct Stage1Options {
    // Dropping never-positive features is what breaks quasi-separation; the
    // mirrored perfect-positive case is dropped too by default.
    bool drop_perfect_predictors = true;
};

std::vector<std::string> stage1_separation(const FeatureCensus& census,
                                           const Stage1Options& options = {});
std::vector<std::string> stage2_prevalence(const FeatureCensus& census,
                                           const Fraction& threshold = {1, 100});
std::vector<std::string> stage3_expert(const std::vector<std::string>& features,
                                       const SelectionPolicy& policy,
                                       std::vector<std::string>* warnings = nullptr);

struct SelectionResult {
    std::vector<std::string> after_stage1;
    std::vector<std::string> after_stage2;
    std::vector<std::string> after_stage3;
    std::vector<std::string> warnings;

    const std::vector<std::string>& retained() const { return after_stage3; }
};

// stage1 then stage2 then stage3, in that fixed order.
SelectionResult run_selection(const FeatureCensus& census, const SelectionPolicy& policy,
                              const Fraction& prevalence_threshold = {1, 100},
                              const Stage1Options& stage1 = {});

} // namespace epss
