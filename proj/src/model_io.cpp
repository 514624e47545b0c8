#include "epss/model_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace epss {

namespace {

constexpr std::string_view kMagic = "epss-model/1";

double parse_real(std::string_view text) {
    double v = 0.0;
    auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || p != text.data() + text.size())
        throw std::runtime_error("model file: bad real value '" + std::string(text) + "'");
    return v;
}

} // namespace

std::string format_real(double value) {
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
    if (ec != std::errc{}) throw std::runtime_error("format_real failed");
    return std::string(buf, p);
}

void write_model(std::ostream& out, const CoefficientSet& model) {
    model.validate();
    out << kMagic << '\n';
    out << "model_id: " << model.model_id << '\n';
    out << "ref_transform: " << to_string(model.ref_transform) << '\n';
    out << "provenance: " << model.provenance << '\n';
    out << "intercept: " << format_real(model.intercept) << '\n';
    for (const auto& [name, w] : model.weights)
        out << "weight: " << name << ' ' << format_real(w) << '\n';
}

void write_model_file(const std::string& path, const CoefficientSet& model) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open model file for writing: " + path);
    write_model(out, model);
    if (!out) throw std::runtime_error("failed writing model file: " + path);
}

CoefficientSet read_model(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kMagic)
        throw std::runtime_error("model file: missing '" + std::string(kMagic) + "' header");
    CoefficientSet model;
    bool have_intercept = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto colon = line.find(": ");
        if (colon == std::string::npos)
            throw std::runtime_error("model file: malformed line '" + line + "'");
        std::string key = line.substr(0, colon);
        std::string value = line.substr(colon + 2);
        if (key == "model_id") {
            model.model_id = value;
        } else if (key == "ref_transform") {
            model.ref_transform = ref_transform_from_string(value);
        } else if (key == "provenance") {
            model.provenance = value;
        } else if (key == "intercept") {
            model.intercept = parse_real(value);
            have_intercept = true;
        } else if (key == "weight") {
            auto space = value.find(' ');
            if (space == std::string::npos)
                throw std::runtime_error("model file: malformed weight line '" + line + "'");
            std::string name = value.substr(0, space);
            if (model.weight(name))
                throw std::runtime_error("model file: duplicate weight '" + name + "'");
            model.weights.emplace_back(name, parse_real(value.substr(space + 1)));
        } else {
            throw std::runtime_error("model file: unknown key '" + key + "'");
        }
    }
    if (!have_intercept) throw std::runtime_error("model file: intercept missing");
    model.validate();
    return model;
}

CoefficientSet read_model_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open model file: " + path);
    return read_model(in);
}

} // namespace epss
