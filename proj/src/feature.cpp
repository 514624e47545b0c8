#include "epss/feature.hpp"

#include <cmath>

namespace epss {

const std::array<std::string_view, 16>& canonical_schema() {
    static const std::array<std::string_view, 16> names = {
        "vend_microsoft", "vend_ibm",         "vend_adobe",
        "vend_hp",        "vend_apache",      "vend_google",
        "vend_apple",     "exp_weaponized",   "exp_poc_published",
        "tag_code_execution", "tag_remote",   "tag_denial_of_service",
        "tag_web",        "tag_memory_corruption", "tag_local",
        "ref_count",
    };
    return names;
}

NamedValues named_values(const FeatureVector& fv) {
    NamedValues v;
    v.reserve(16 + fv.extra.size());
    v.emplace_back("vend_microsoft", fv.vend_microsoft ? 1.0 : 0.0);
    v.emplace_back("vend_ibm", fv.vend_ibm ? 1.0 : 0.0);
    v.emplace_back("vend_adobe", fv.vend_adobe ? 1.0 : 0.0);
    v.emplace_back("vend_hp", fv.vend_hp ? 1.0 : 0.0);
    v.emplace_back("vend_apache", fv.vend_apache ? 1.0 : 0.0);
    v.emplace_back("vend_google", fv.vend_google ? 1.0 : 0.0);
    v.emplace_back("vend_apple", fv.vend_apple ? 1.0 : 0.0);
    v.emplace_back("exp_weaponized", fv.exp_weaponized ? 1.0 : 0.0);
    v.emplace_back("exp_poc_published", fv.exp_poc_published ? 1.0 : 0.0);
    v.emplace_back("tag_code_execution", fv.tag_code_execution ? 1.0 : 0.0);
    v.emplace_back("tag_remote", fv.tag_remote ? 1.0 : 0.0);
    v.emplace_back("tag_denial_of_service", fv.tag_denial_of_service ? 1.0 : 0.0);
    v.emplace_back("tag_web", fv.tag_web ? 1.0 : 0.0);
    v.emplace_back("tag_memory_corruption", fv.tag_memory_corruption ? 1.0 : 0.0);
    v.emplace_back("tag_local", fv.tag_local ? 1.0 : 0.0);
    v.emplace_back("ref_count", double(fv.ref_count));
    for (const auto& [name, value] : fv.extra) v.emplace_back(name, value);
    return v;
}

const double* find_value(const NamedValues& values, std::string_view name) {
    for (const auto& [n, v] : values)
        if (n == name) return &v;
    return nullptr;
}

bool is_canonical_feature(std::string_view name) {
    for (auto n : canonical_schema())
        if (n == name) return true;
    return false;
}

bool set_canonical(FeatureVector& fv, std::string_view name, double value) {
    const bool on = value != 0.0;
    if (name == "vend_microsoft") fv.vend_microsoft = on;
    else if (name == "vend_ibm") fv.vend_ibm = on;
    else if (name == "vend_adobe") fv.vend_adobe = on;
    else if (name == "vend_hp") fv.vend_hp = on;
    else if (name == "vend_apache") fv.vend_apache = on;
    else if (name == "vend_google") fv.vend_google = on;
    else if (name == "vend_apple") fv.vend_apple = on;
    else if (name == "exp_weaponized") fv.exp_weaponized = on;
    else if (name == "exp_poc_published") fv.exp_poc_published = on;
    else if (name == "tag_code_execution") fv.tag_code_execution = on;
    else if (name == "tag_remote") fv.tag_remote = on;
    else if (name == "tag_denial_of_service") fv.tag_denial_of_service = on;
    else if (name == "tag_web") fv.tag_web = on;
    else if (name == "tag_memory_corruption") fv.tag_memory_corruption = on;
    else if (name == "tag_local") fv.tag_local = on;
    else if (name == "ref_count") fv.ref_count = int(std::lround(value));
    else return false;
    return true;
}

} // namespace epss
