#pragma once

#include "epss/dates.hpp"

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace epss {

struct Reference {
    std::string url;
    std::optional<std::string> text; // pre-fetched out of band; never retrieved here
};

// One vulnerability as consumed from a record file (JSON object per line).
struct VulnRecord {
    std::string cve_id;
    Date published_date{};
    std::string description;
    std::vector<Reference> references;
    std::optional<double> cvss_base;
    std::vector<std::string> vendors; // lowercase, from CPE
    bool poc_published = false;
    bool weaponized = false;
    std::optional<Date> exploited_first_seen;
};

bool valid_cve_id(std::string_view id);

// Distinct reference entries (deduplicated by URL).
int reference_count(const VulnRecord& r);

enum class Severity { warning, error };

struct Diagnostic {
    long line = 0; // 1-based input line, 0 when not tied to a line
    Severity severity = Severity::error;
    std::string message;
};

struct ParseResult {
    std::vector<VulnRecord> records;
    std::vector<Diagnostic> diagnostics;

    bool has_errors() const;
};

// Parses one JSON object. Returns nullopt and appends diagnostics when the
// line is malformed or violates a record invariant; unknown fields only warn.
std::optional<VulnRecord> parse_record_line(const std::string& line, long line_no,
                                            std::vector<Diagnostic>& diagnostics);

// Parses a whole stream of line-delimited records. Records published after
// `cutoff` are kept but flagged with a warning (their observation window
// cannot be complete for any labeling pass using this cutoff).
ParseResult parse_records(std::istream& in, const Date& cutoff);

// Streaming variant: invokes `fn` per good record, collects diagnostics.
void for_each_record(std::istream& in,
                     const std::function<void(const VulnRecord&, long line_no)>& fn,
                     std::vector<Diagnostic>& diagnostics);

std::string record_to_json_line(const VulnRecord& r);

// Tiny record predicate, e.g. "cvss_base>=7", "vendor=microsoft",
// "weaponized=true", "has_exploit_date=false". Conjunction of clauses.
class RecordFilter {
public:
    static RecordFilter parse(const std::vector<std::string>& clauses);
    bool matches(const VulnRecord& r) const;

private:
    struct Clause {
        std::string field;
        std::string op;
        std::string value;
        double number = 0.0;
    };
    std::vector<Clause> clauses_;
};

} // namespace epss
