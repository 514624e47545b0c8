#pragma once

#include "epss/feature.hpp"
#include "epss/record.hpp"
#include "epss/tags.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace epss {

struct LabeledInstance {
    std::string cve_id;
    Date published_date{};
    FeatureVector features;
    bool exploited = false;
    std::optional<double> cvss_base; // carried through for strategy comparisons
};

struct DatasetSummary {
    long records_seen = 0;
    long window_incomplete = 0;
    long instances = 0;
    long positives = 0;

    double positive_rate() const { return instances > 0 ? double(positives) / instances : 0.0; }
};

struct Dataset {
    std::vector<std::string> schema; // feature columns, canonical order
    std::vector<LabeledInstance> instances;
    DatasetSummary summary;
    std::vector<Diagnostic> diagnostics;
};

struct LabelingOptions {
    int window_months = 12;
};

// The seven vendors the published model knows about; everything else is ignored.
void derive_vendor_features(const std::vector<std::string>& vendors, FeatureVector& fv);

// Exploited within (published, published + window]; nullopt when the record's
// observation window extends past the cutoff (record excluded from labeling).
std::optional<bool> label_exploited(const VulnRecord& record, const Date& cutoff,
                                    const LabelingOptions& options = {});

// All feature derivation for one record: vendor flags, exploit-code flags,
// tag flags from the rules, ref_count. Tags beyond the six canonical ones
// land in `extra` under their tag_* feature names.
FeatureVector derive_features(const VulnRecord& record, const std::vector<TagRule>& rules);

// Feature column order for a rule set: canonical 16 plus tag_* extras in rule
// order (stable for diffing).
std::vector<std::string> dataset_schema(const std::vector<TagRule>& rules);

Dataset build_dataset(const std::vector<VulnRecord>& records, const std::vector<TagRule>& rules,
                      const Date& cutoff, const LabelingOptions& options = {});

void write_dataset_csv(std::ostream& out, const Dataset& dataset);
void write_dataset_csv_header(std::ostream& out, const std::vector<std::string>& schema);
void write_dataset_csv_row(std::ostream& out, const LabeledInstance& inst,
                           const std::vector<std::string>& schema);

Dataset read_dataset_csv(std::istream& in);
Dataset read_dataset_csv_file(const std::string& path);

} // namespace epss
