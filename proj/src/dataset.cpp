#include "epss/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace epss {

void derive_vendor_features(const std::vector<std::string>& vendors, FeatureVector& fv) {
    for (const auto& v : vendors) {
        if (v == "microsoft") fv.vend_microsoft = true;
        else if (v == "ibm") fv.vend_ibm = true;
        else if (v == "adobe") fv.vend_adobe = true;
        else if (v == "hp") fv.vend_hp = true;
        else if (v == "apache") fv.vend_apache = true;
        else if (v == "google") fv.vend_google = true;
        else if (v == "apple") fv.vend_apple = true;
    }
}

std::optional<bool> label_exploited(const VulnRecord& record, const Date& cutoff,
                                    const LabelingOptions& options) {
    const Date window_end = add_months(record.published_date, options.window_months);
    if (window_end > cutoff) return std::nullopt; // observation window incomplete
    if (!record.exploited_first_seen) return false;
    const Date& seen = *record.exploited_first_seen;
    return seen > record.published_date && seen <= window_end;
}

namespace {

const std::set<std::string>& canonical_tag_features() {
    static const std::set<std::string> names = {
        "tag_code_execution", "tag_remote", "tag_denial_of_service",
        "tag_web",            "tag_memory_corruption", "tag_local",
    };
    return names;
}

} // namespace

FeatureVector derive_features(const VulnRecord& record, const std::vector<TagRule>& rules) {
    FeatureVector fv;
    derive_vendor_features(record.vendors, fv);
    fv.exp_weaponized = record.weaponized;
    fv.exp_poc_published = record.poc_published;
    fv.ref_count = reference_count(record);

    const std::set<std::string> tags = apply_tag_rules(record, rules);
    // Extras appear in rule order so all rows agree on column order.
    for (const auto& rule : rules) {
        if (!tags.count(rule.tag)) continue;
        const std::string feature = tag_feature_name(rule.tag);
        if (canonical_tag_features().count(feature))
            set_canonical(fv, feature, 1.0);
        else
            fv.extra.emplace_back(feature, 1.0);
    }
    return fv;
}

std::vector<std::string> dataset_schema(const std::vector<TagRule>& rules) {
    std::vector<std::string> schema;
    for (auto name : canonical_schema()) schema.emplace_back(name);
    for (const auto& rule : rules) {
        const std::string feature = tag_feature_name(rule.tag);
        if (!canonical_tag_features().count(feature)) schema.push_back(feature);
    }
    return schema;
}

Dataset build_dataset(const std::vector<VulnRecord>& records, const std::vector<TagRule>& rules,
                      const Date& cutoff, const LabelingOptions& options) {
    validate_tag_rules(rules);
    Dataset ds;
    ds.schema = dataset_schema(rules);
    for (const auto& record : records) {
        ++ds.summary.records_seen;
        auto label = label_exploited(record, cutoff, options);
        if (!label) {
            ++ds.summary.window_incomplete;
            continue;
        }
        LabeledInstance inst;
        inst.cve_id = record.cve_id;
        inst.published_date = record.published_date;
        inst.features = derive_features(record, rules);
        inst.exploited = *label;
        inst.cvss_base = record.cvss_base;
        ++ds.summary.instances;
        if (inst.exploited) ++ds.summary.positives;
        ds.instances.push_back(std::move(inst));
    }
    return ds;
}

namespace {

std::string format_cvss(double v) {
    // CVSS base scores carry one decimal.
    char buf[16];
    std::snprintf(buf, sizeof buf, "%.1f", v);
    return buf;
}

} // namespace

void write_dataset_csv_header(std::ostream& out, const std::vector<std::string>& schema) {
    out << "cve_id,published_date,exploited";
    for (const auto& name : schema) out << ',' << name;
    out << ",cvss_base\n";
}

void write_dataset_csv_row(std::ostream& out, const LabeledInstance& inst,
                           const std::vector<std::string>& schema) {
    out << inst.cve_id << ',' << format_date(inst.published_date) << ','
        << (inst.exploited ? 1 : 0);
    const NamedValues values = named_values(inst.features);
    for (const auto& name : schema) {
        const double* v = find_value(values, name);
        const double x = v ? *v : 0.0;
        if (x == std::floor(x) && std::abs(x) < 1e9)
            out << ',' << (long long)(x);
        else
            out << ',' << x;
    }
    out << ',';
    if (inst.cvss_base) out << format_cvss(*inst.cvss_base);
    out << '\n';
}

void write_dataset_csv(std::ostream& out, const Dataset& dataset) {
    write_dataset_csv_header(out, dataset.schema);
    for (const auto& inst : dataset.instances) write_dataset_csv_row(out, inst, dataset.schema);
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

} // namespace

Dataset read_dataset_csv(std::istream& in) {
    Dataset ds;
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("dataset: empty input");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::vector<std::string> header = split_csv_line(line);
    if (header.size() < 4 || header[0] != "cve_id" || header[1] != "published_date" ||
        header[2] != "exploited" || header.back() != "cvss_base")
        throw std::runtime_error(
            "dataset: header must be cve_id,published_date,exploited,<features...>,cvss_base");
    ds.schema.assign(header.begin() + 3, header.end() - 1);

    long line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const std::vector<std::string> cells = split_csv_line(line);
        if (cells.size() != header.size())
            throw std::runtime_error("dataset line " + std::to_string(line_no) +
                                     ": expected " + std::to_string(header.size()) + " cells");
        LabeledInstance inst;
        inst.cve_id = cells[0];
        auto date = parse_date(cells[1]);
        if (!date)
            throw std::runtime_error("dataset line " + std::to_string(line_no) + ": bad date");
        inst.published_date = *date;
        inst.exploited = cells[2] == "1";
        for (size_t i = 0; i < ds.schema.size(); ++i) {
            const std::string& cell = cells[3 + i];
            double v = 0.0;
            auto [p, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
            if (ec != std::errc{} || p != cell.data() + cell.size())
                throw std::runtime_error("dataset line " + std::to_string(line_no) +
                                         ": bad value '" + cell + "'");
            if (!set_canonical(inst.features, ds.schema[i], v))
                inst.features.extra.emplace_back(ds.schema[i], v);
        }
        const std::string& cvss = cells.back();
        if (!cvss.empty()) {
            double v = 0.0;
            auto [p, ec] = std::from_chars(cvss.data(), cvss.data() + cvss.size(), v);
            if (ec != std::errc{} || p != cvss.data() + cvss.size())
                throw std::runtime_error("dataset line " + std::to_string(line_no) +
                                         ": bad cvss_base '" + cvss + "'");
            inst.cvss_base = v;
        }
        ++ds.summary.instances;
        ++ds.summary.records_seen;
        if (inst.exploited) ++ds.summary.positives;
        ds.instances.push_back(std::move(inst));
    }
    return ds;
}

Dataset read_dataset_csv_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open dataset: " + path);
    return read_dataset_csv(in);
}

} // namespace epss
