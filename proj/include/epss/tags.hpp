#pragma once

#include "epss/record.hpp"

#include <set>
#include <string>
#include <vector>

namespace epss {

// One descriptive tag with the literal phrases that signal it. Patterns are
// matched case-insensitively as substrings over whitespace-normalized text,
// so synonym spellings ("SQLi", "SQL injection") collapse into one tag.
struct TagRule {
    std::string tag;
    std::vector<std::string> patterns;
};

std::vector<TagRule> load_tag_rules_file(const std::string& path);
void validate_tag_rules(const std::vector<TagRule>& rules);

// Starter rule set covering the six model tags plus documented synonyms.
const std::vector<TagRule>& builtin_tag_rules();

// Lowercases and collapses whitespace runs to single spaces.
std::string normalize_text(std::string_view text);

// Tags whose patterns occur in the description or any reference text.
std::set<std::string> apply_tag_rules(const VulnRecord& record,
                                      const std::vector<TagRule>& rules);

// "code execution" -> "tag_code_execution"
std::string tag_feature_name(std::string_view tag);

} // namespace epss
