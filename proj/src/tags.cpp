#include "epss/tags.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <stdexcept>

namespace epss {

using nlohmann::json;

std::string normalize_text(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    bool in_space = true;
    for (char ch : text) {
        unsigned char c = static_cast<unsigned char>(ch);
        if (std::isspace(c)) {
            if (!in_space) out += ' ';
            in_space = true;
        } else {
            out += char(std::tolower(c));
            in_space = false;
        }
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    return out;
}

void validate_tag_rules(const std::vector<TagRule>& rules) {
    std::set<std::string> names;
    for (const auto& rule : rules) {
        if (rule.tag.empty()) throw std::invalid_argument("tag rule with empty tag name");
        if (rule.patterns.empty())
            throw std::invalid_argument("tag rule '" + rule.tag + "' has no patterns");
        if (!names.insert(rule.tag).second)
            throw std::invalid_argument("duplicate tag rule '" + rule.tag + "'");
        for (const auto& p : rule.patterns)
            if (normalize_text(p).empty())
                throw std::invalid_argument("tag rule '" + rule.tag + "' has an empty pattern");
    }
}

std::vector<TagRule> load_tag_rules_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open tag rule file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw std::runtime_error("tag rule file " + path + ": " + e.what());
    }
    if (!j.is_object() || !j.contains("rules") || !j["rules"].is_array())
        throw std::runtime_error("tag rule file " + path + ": expected {\"rules\": [...]}");
    std::vector<TagRule> rules;
    for (const auto& entry : j["rules"]) {
        TagRule rule;
        if (!entry.contains("tag") || !entry["tag"].is_string() || !entry.contains("patterns") ||
            !entry["patterns"].is_array())
            throw std::runtime_error("tag rule file " + path +
                                     ": rules need string 'tag' and array 'patterns'");
        rule.tag = entry["tag"].get<std::string>();
        for (const auto& p : entry["patterns"]) {
            if (!p.is_string())
                throw std::runtime_error("tag rule file " + path + ": patterns must be strings");
            rule.patterns.push_back(p.get<std::string>());
        }
        rules.push_back(std::move(rule));
    }
    validate_tag_rules(rules);
    return rules;
}

const std::vector<TagRule>& builtin_tag_rules() {
    static const std::vector<TagRule> rules = {
        {"code execution",
         {"code execution", "execute arbitrary code", "execution of arbitrary code",
          "execute code", "run arbitrary code"}},
        {"remote", {"remote"}},
        {"denial of service", {"denial of service", "denial-of-service"}},
        {"web", {"web"}},
        {"memory corruption",
         {"memory corruption", "buffer overflow", "buffer overrun", "heap overflow",
          "stack overflow", "use after free", "use-after-free", "out-of-bounds write",
          "out of bounds write"}},
        {"local", {"local"}},
    };
    return rules;
}

std::set<std::string> apply_tag_rules(const VulnRecord& record,
                                      const std::vector<TagRule>& rules) {
    std::vector<std::string> haystacks;
    haystacks.push_back(normalize_text(record.description));
    for (const auto& ref : record.references)
        if (ref.text) haystacks.push_back(normalize_text(*ref.text));

    std::set<std::string> tags;
    for (const auto& rule : rules) {
        bool hit = false;
        for (const auto& pattern : rule.patterns) {
            const std::string needle = normalize_text(pattern);
            for (const auto& hay : haystacks) {
                if (hay.find(needle) != std::string::npos) {
                    hit = true;
                    break;
                }
            }
            if (hit) break;
        }
        if (hit) tags.insert(rule.tag);
    }
    return tags;
}

std::string tag_feature_name(std::string_view tag) {
    std::string name = "tag_";
    bool prev_sep = false;
    for (char ch : tag) {
        unsigned char c = static_cast<unsigned char>(ch);
        if (std::isalnum(c)) {
            name += char(std::tolower(c));
            prev_sep = false;
        } else if (!prev_sep && name.size() > 4) {
            name += '_';
            prev_sep = true;
        }
    }
    while (!name.empty() && name.back() == '_') name.pop_back();
    return name;
}

} // namespace epss
