#pragma once

#include <istream>
#include <string>

#include "ippp/dataset.hpp"

namespace ippp {

struct LibsvmParseResult {
  Dataset data;           // rows grouped by ascending integer label
  int max_feature_index;  // largest 1-based index seen; the dense dimension
};

// Parses `<label> <idx>:<val> ...` lines; `#` starts a comment, blank lines
// are skipped. Labels must be integers; indices must be positive and
// strictly increasing within a row. Violations throw with the 1-based line
// number in the message. Absent indices densify to zero.
LibsvmParseResult parse_libsvm(std::istream& in);

// Canonical text form: one row per point in class order, entries with value
// exactly zero omitted, single spaces, values printed with %.17g. Parsing
// the output reproduces the dataset; serializing a parse of canonical text
// reproduces the text.
std::string serialize_libsvm(const Dataset& data);

// Appends one trailing coordinate equal to c to every point.
Dataset lift_features(const Dataset& data, double c);

}  // namespace ippp
