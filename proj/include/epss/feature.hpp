#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace epss {

// The 16 inputs of the published model. The struct is closed; models trained
// on a wider tag set carry their additional flags in `extra`.
struct FeatureVector {
    bool vend_microsoft = false;
    bool vend_ibm = false;
    bool vend_adobe = false;
    bool vend_hp = false;
    bool vend_apache = false;
    bool vend_google = false;
    bool vend_apple = false;
    bool exp_weaponized = false;
    bool exp_poc_published = false;
    bool tag_code_execution = false;
    bool tag_remote = false;
    bool tag_denial_of_service = false;
    bool tag_web = false;
    bool tag_memory_corruption = false;
    bool tag_local = false;
    int ref_count = 0;

    // Extension features (name -> 0/1 or numeric value), insertion-ordered.
    std::vector<std::pair<std::string, double>> extra;

    bool valid() const { return ref_count >= 0; }
};

// Named feature values: the 16 canonical fields in schema order followed by
// any extras. Flags are encoded 0/1; ref_count keeps its raw count (the model
// transform is applied at scoring time).
using NamedValues = std::vector<std::pair<std::string, double>>;

// Canonical schema order: 7 vendor flags, 2 exploit-code flags, 6 tag flags,
// then the reference count.
const std::array<std::string_view, 16>& canonical_schema();

NamedValues named_values(const FeatureVector& fv);

// Looks a feature up by name. Returns nullptr when the schema does not carry it.
const double* find_value(const NamedValues& values, std::string_view name);

bool is_canonical_feature(std::string_view name);

// Sets a canonical field from its name; false if `name` is not canonical.
bool set_canonical(FeatureVector& fv, std::string_view name, double value);

} // namespace epss
