#include "ippp/libsvm.hpp"

#include <cstdio>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace ippp {

namespace {

[[noreturn]] void fail(long line_no, const std::string& what) {
  throw std::runtime_error("libsvm: line " + std::to_string(line_no) + ": " +
                           what);
}

long parse_int_token(const std::string& tok, long line_no, const char* role) {
  const char* s = tok.c_str();
  char* end = nullptr;
  long v = std::strtol(s, &end, 10);
  if (end == s || *end != '\0')
    fail(line_no, std::string("non-numeric ") + role + " '" + tok + "'");
  return v;
}

double parse_value_token(const std::string& tok, long line_no) {
  const char* s = tok.c_str();
  char* end = nullptr;
  double v = std::strtod(s, &end);
  if (end == s || *end != '\0')
    fail(line_no, "non-numeric value '" + tok + "'");
  return v;
}

}  // namespace

LibsvmParseResult parse_libsvm(std::istream& in) {
  struct SparseRow {
    std::vector<std::pair<int, double>> entries;
  };
  std::map<int, std::vector<SparseRow>> by_label;
  int max_index = 0;

  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.resize(hash);
    std::istringstream tokens(line);
    std::string tok;
    if (!(tokens >> tok)) continue;

    const long label = parse_int_token(tok, line_no, "label");
    SparseRow row;
    int prev_index = 0;
    while (tokens >> tok) {
      auto colon = tok.find(':');
      if (colon == std::string::npos)
        fail(line_no, "expected index:value, got '" + tok + "'");
      const long idx =
          parse_int_token(tok.substr(0, colon), line_no, "index");
      if (idx <= 0) fail(line_no, "index " + std::to_string(idx) + " is not positive");
      if (idx <= prev_index)
        fail(line_no, "non-increasing index " + std::to_string(idx) + " after " +
                          std::to_string(prev_index));
      const double val = parse_value_token(tok.substr(colon + 1), line_no);
      row.entries.emplace_back(static_cast<int>(idx), val);
      prev_index = static_cast<int>(idx);
      max_index = std::max(max_index, prev_index);
    }
    by_label[static_cast<int>(label)].push_back(std::move(row));
  }

  LibsvmParseResult out;
  out.max_feature_index = max_index;
  for (auto& [label, rows] : by_label) {
    Matrix points = Matrix::Zero(static_cast<Eigen::Index>(rows.size()),
                                 max_index);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (auto [idx, val] : rows[i].entries)
        points(static_cast<Eigen::Index>(i), idx - 1) = val;
    out.data.classes.push_back(std::move(points));
    out.data.labels.push_back(label);
  }
  return out;
}

std::string serialize_libsvm(const Dataset& data) {
  std::string out;
  char buf[64];
  for (int k = 0; k < data.num_classes(); ++k) {
    const Matrix& points = data.classes[static_cast<std::size_t>(k)];
    for (Eigen::Index i = 0; i < points.rows(); ++i) {
      out += std::to_string(data.labels[static_cast<std::size_t>(k)]);
      for (Eigen::Index j = 0; j < points.cols(); ++j) {
        if (points(i, j) == 0.0) continue;
        std::snprintf(buf, sizeof buf, " %ld:%.17g", static_cast<long>(j + 1),
                      points(i, j));
        out += buf;
      }
      out += '\n';
    }
  }
  return out;
}

Dataset lift_features(const Dataset& data, double c) {
  if (!(c > 0.0))
    throw std::invalid_argument("lift_features: c must be > 0");
  Dataset lifted;
  lifted.labels = data.labels;
  for (const Matrix& points : data.classes) {
    Matrix grown(points.rows(), points.cols() + 1);
    grown.leftCols(points.cols()) = points;
    grown.col(points.cols()).setConstant(c);
    lifted.classes.push_back(std::move(grown));
  }
  return lifted;
}

}  // namespace ippp
