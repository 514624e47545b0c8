#pragma once

#include "epss/model.hpp"

#include <iosfwd>
#include <string>

namespace epss {

// Versioned key/value model document. Real values are written with 17
// significant digits so every coefficient round-trips bit-exactly.
void write_model(std::ostream& out, const CoefficientSet& model);
void write_model_file(const std::string& path, const CoefficientSet& model);

CoefficientSet read_model(std::istream& in);
CoefficientSet read_model_file(const std::string& path);

// 17-significant-digit text form used across report files.
std::string format_real(double value);

} // namespace epss
