#include "epss/record.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <set>
#include <stdexcept>

namespace epss {

using nlohmann::json;

bool valid_cve_id(std::string_view id) {
    // CVE-YYYY-NNNN with at least four sequence digits.
    if (id.size() < 13 || id.compare(0, 4, "CVE-") != 0 || id[8] != '-') return false;
    for (int i = 4; i < 8; ++i)
        if (!std::isdigit(static_cast<unsigned char>(id[i]))) return false;
    if (id.size() < 9 + 4) return false;
    for (size_t i = 9; i < id.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(id[i]))) return false;
    return true;
}

int reference_count(const VulnRecord& r) {
    std::set<std::string> urls;
    for (const auto& ref : r.references) urls.insert(ref.url);
    return int(urls.size());
}

bool ParseResult::has_errors() const {
    return std::any_of(diagnostics.begin(), diagnostics.end(),
                       [](const Diagnostic& d) { return d.severity == Severity::error; });
}

namespace {

const std::set<std::string>& known_record_fields() {
    static const std::set<std::string> fields = {
        "cve_id",    "published_date", "description", "references", "cvss_base",
        "vendors",   "poc_published",  "weaponized",  "exploited_first_seen",
    };
    return fields;
}

Date require_date(const json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_string())
        throw std::runtime_error(std::string("missing or non-string field '") + field + "'");
    auto d = parse_date(j[field].get<std::string>());
    if (!d)
        throw std::runtime_error(std::string("field '") + field + "' is not an ISO-8601 date");
    return *d;
}

} // namespace

std::optional<VulnRecord> parse_record_line(const std::string& line, long line_no,
                                            std::vector<Diagnostic>& diagnostics) {
    json j;
    try {
        j = json::parse(line);
    } catch (const json::exception& e) {
        diagnostics.push_back({line_no, Severity::error, std::string("invalid JSON: ") + e.what()});
        return std::nullopt;
    }
    if (!j.is_object()) {
        diagnostics.push_back({line_no, Severity::error, "record is not a JSON object"});
        return std::nullopt;
    }

    for (const auto& [key, _] : j.items())
        if (!known_record_fields().count(key))
            diagnostics.push_back({line_no, Severity::warning, "unknown field '" + key + "' ignored"});

    VulnRecord r;
    try {
        if (!j.contains("cve_id") || !j["cve_id"].is_string())
            throw std::runtime_error("missing or non-string field 'cve_id'");
        r.cve_id = j["cve_id"].get<std::string>();
        if (!valid_cve_id(r.cve_id))
            throw std::runtime_error("'" + r.cve_id + "' is not a valid CVE identifier");

        r.published_date = require_date(j, "published_date");

        if (!j.contains("description") || !j["description"].is_string())
            throw std::runtime_error("missing or non-string field 'description'");
        r.description = j["description"].get<std::string>();

        if (!j.contains("references") || !j["references"].is_array())
            throw std::runtime_error("missing or non-array field 'references'");
        for (const auto& ref : j["references"]) {
            Reference entry;
            if (ref.is_string()) {
                entry.url = ref.get<std::string>();
            } else if (ref.is_object() && ref.contains("url") && ref["url"].is_string()) {
                entry.url = ref["url"].get<std::string>();
                if (ref.contains("text") && ref["text"].is_string())
                    entry.text = ref["text"].get<std::string>();
            } else {
                throw std::runtime_error("reference entries must be URLs or {url, text} objects");
            }
            r.references.push_back(std::move(entry));
        }

        if (j.contains("cvss_base") && !j["cvss_base"].is_null()) {
            if (!j["cvss_base"].is_number())
                throw std::runtime_error("field 'cvss_base' must be numeric");
            r.cvss_base = j["cvss_base"].get<double>();
            if (*r.cvss_base < 0.0 || *r.cvss_base > 10.0)
                throw std::runtime_error("cvss out of range");
        }

        if (!j.contains("vendors") || !j["vendors"].is_array())
            throw std::runtime_error("missing or non-array field 'vendors'");
        for (const auto& v : j["vendors"]) {
            if (!v.is_string()) throw std::runtime_error("vendor entries must be strings");
            std::string name = v.get<std::string>();
            std::transform(name.begin(), name.end(), name.begin(),
                           [](unsigned char c) { return std::tolower(c); });
            r.vendors.push_back(std::move(name));
        }

        if (!j.contains("poc_published") || !j["poc_published"].is_boolean())
            throw std::runtime_error("missing or non-boolean field 'poc_published'");
        r.poc_published = j["poc_published"].get<bool>();

        if (!j.contains("weaponized") || !j["weaponized"].is_boolean())
            throw std::runtime_error("missing or non-boolean field 'weaponized'");
        r.weaponized = j["weaponized"].get<bool>();

        if (j.contains("exploited_first_seen") && !j["exploited_first_seen"].is_null()) {
            r.exploited_first_seen = require_date(j, "exploited_first_seen");
            if (*r.exploited_first_seen < r.published_date)
                throw std::runtime_error("exploit date before publication");
        }
    } catch (const std::exception& e) {
        diagnostics.push_back({line_no, Severity::error, e.what()});
        return std::nullopt;
    }
    return r;
}

void for_each_record(std::istream& in,
                     const std::function<void(const VulnRecord&, long line_no)>& fn,
                     std::vector<Diagnostic>& diagnostics) {
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto record = parse_record_line(line, line_no, diagnostics);
        if (record) fn(*record, line_no);
    }
}

ParseResult parse_records(std::istream& in, const Date& cutoff) {
    ParseResult result;
    for_each_record(
        in,
        [&](const VulnRecord& r, long line_no) {
            if (r.published_date > cutoff)
                result.diagnostics.push_back(
                    {line_no, Severity::warning,
                     r.cve_id + " published after the cutoff; it cannot be labeled"});
            result.records.push_back(r);
        },
        result.diagnostics);
    return result;
}

std::string record_to_json_line(const VulnRecord& r) {
    json j;
    j["cve_id"] = r.cve_id;
    j["published_date"] = format_date(r.published_date);
    j["description"] = r.description;
    json refs = json::array();
    for (const auto& ref : r.references) {
        json e;
        e["url"] = ref.url;
        if (ref.text) e["text"] = *ref.text;
        refs.push_back(std::move(e));
    }
    j["references"] = std::move(refs);
    if (r.cvss_base) j["cvss_base"] = *r.cvss_base;
    j["vendors"] = r.vendors;
    j["poc_published"] = r.poc_published;
    j["weaponized"] = r.weaponized;
    if (r.exploited_first_seen) j["exploited_first_seen"] = format_date(*r.exploited_first_seen);
    return j.dump();
}

RecordFilter RecordFilter::parse(const std::vector<std::string>& clauses) {
    RecordFilter f;
    for (const auto& text : clauses) {
        static const std::vector<std::string> ops = {"<=", ">=", "!=", "<", ">", "="};
        Clause c;
        size_t pos = std::string::npos;
        for (const auto& op : ops) {
            pos = text.find(op);
            if (pos != std::string::npos) {
                c.op = op;
                break;
            }
        }
        if (pos == std::string::npos)
            throw std::invalid_argument("filter '" + text + "': expected field<op>value");
        c.field = text.substr(0, pos);
        c.value = text.substr(pos + c.op.size());
        if (c.field == "cvss_base") {
            auto [p, ec] = std::from_chars(c.value.data(), c.value.data() + c.value.size(), c.number);
            if (ec != std::errc{} || p != c.value.data() + c.value.size())
                throw std::invalid_argument("filter '" + text + "': numeric value required");
        } else if (c.field == "vendor" || c.field == "weaponized" || c.field == "poc_published" ||
                   c.field == "has_exploit_date") {
            if (c.op != "=" && c.op != "!=")
                throw std::invalid_argument("filter '" + text + "': only = and != supported");
        } else {
            throw std::invalid_argument("filter '" + text + "': unknown field '" + c.field + "'");
        }
        f.clauses_.push_back(std::move(c));
    }
    return f;
}

bool RecordFilter::matches(const VulnRecord& r) const {
    for (const auto& c : clauses_) {
        bool ok = true;
        if (c.field == "cvss_base") {
            if (!r.cvss_base) {
                ok = false;
            } else {
                double v = *r.cvss_base;
                if (c.op == "<") ok = v < c.number;
                else if (c.op == "<=") ok = v <= c.number;
                else if (c.op == ">") ok = v > c.number;
                else if (c.op == ">=") ok = v >= c.number;
                else if (c.op == "=") ok = v == c.number;
                else ok = v != c.number;
            }
        } else {
            bool actual = false;
            if (c.field == "vendor")
                actual = std::find(r.vendors.begin(), r.vendors.end(), c.value) != r.vendors.end();
            else if (c.field == "weaponized")
                actual = r.weaponized;
            else if (c.field == "poc_published")
                actual = r.poc_published;
            else if (c.field == "has_exploit_date")
                actual = r.exploited_first_seen.has_value();
            bool wanted = c.field == "vendor" ? true : (c.value == "true" || c.value == "1");
            bool match = (actual == wanted);
            ok = (c.op == "=") ? match : !match;
        }
        if (!ok) return false;
    }
    return true;
}

} // namespace epss
