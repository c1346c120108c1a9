#ifndef ABNORM_IO_HPP
#define ABNORM_IO_HPP

// Matrix files.
//
// Canonical JSON form, row-major, each entry a [re, im] pair:
//   {"n": 2, "entries": [[[0,0],[1,0]], [[0,0],[0,0]]]}
//
// CSV form (ingestion only): a header naming every entry as re(i,j),im(i,j)
// in any order, followed by one data row.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "abnorm/errors.hpp"
#include "abnorm/linalg.hpp"
#include "json.hpp"

namespace abnorm {

using json = nlohmann::json;

namespace detail {

inline double finite_number(const json& v, const std::string& where) {
  if (!v.is_number()) throw ParseError(where + ": expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw ParseError(where + ": non-finite value");
  return d;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

/// Splits a CSV line on commas that are not inside parentheses.
inline std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : line) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(trim(cur));
  return out;
}

}  // namespace detail

inline Matrix matrix_from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("matrix document must be a JSON object");
  if (!doc.contains("n") || !doc.contains("entries")) throw ParseError("matrix document needs \"n\" and \"entries\"");
  const json& jn = doc.at("n");
  if (!jn.is_number_integer()) throw ParseError("\"n\" must be an integer");
  const long long n = jn.get<long long>();
  if (n == 0) throw DimensionError("matrix dimension n = 0");
  if (n < 0) throw ParseError("\"n\" must be positive");
  const json& rows = doc.at("entries");
  if (!rows.is_array() || static_cast<long long>(rows.size()) != n) {
    throw ParseError("\"entries\" must hold n rows");
  }
  Matrix M(n, n);
  for (long long i = 0; i < n; ++i) {
    const json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<long long>(row.size()) != n) {
      throw ParseError("ragged row " + std::to_string(i));
    }
    for (long long j = 0; j < n; ++j) {
      const json& e = row[static_cast<std::size_t>(j)];
      const std::string where = "entry (" + std::to_string(i) + "," + std::to_string(j) + ")";
      if (!e.is_array() || e.size() != 2) throw ParseError(where + ": expected [re, im]");
      M(i, j) = cplx(detail::finite_number(e[0], where), detail::finite_number(e[1], where));
    }
  }
  return M;
}

inline json matrix_to_json(const Matrix& M) {
  require_square(M, "matrix");
  json rows = json::array();
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < M.cols(); ++j) row.push_back({M(i, j).real(), M(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return {{"n", M.rows()}, {"entries", std::move(rows)}};
}

inline Matrix parse_matrix_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return matrix_from_json(doc);
}

inline Matrix parse_matrix_csv(const std::string& text) {
  std::istringstream in(text);
  std::string header_line, data_line, extra;
  while (std::getline(in, header_line) && detail::trim(header_line).empty()) {
  }
  while (std::getline(in, data_line) && detail::trim(data_line).empty()) {
  }
  while (std::getline(in, extra)) {
    if (!detail::trim(extra).empty()) throw ParseError("CSV matrix must have exactly one data row");
  }
  if (detail::trim(header_line).empty()) throw ParseError("empty CSV input");
  if (detail::trim(data_line).empty()) throw ParseError("CSV matrix has no data row");
  const auto header = detail::split_csv(header_line);
  const auto values = detail::split_csv(data_line);
  if (header.size() != values.size()) throw ParseError("CSV header and data row differ in length");

  // key: (i, j), value: (re set?, im set?) and the entry
  std::map<std::pair<long, long>, std::pair<int, cplx>> cells;
  long max_index = -1;
  for (std::size_t k = 0; k < header.size(); ++k) {
    long i = 0, j = 0;
    char part[3] = {0, 0, 0};
    char close = 0;
    if (std::sscanf(header[k].c_str(), "%2[reim](%ld,%ld%c", part, &i, &j, &close) != 4 || close != ')' ||
        (std::string(part) != "re" && std::string(part) != "im") || i < 0 || j < 0) {
      throw ParseError("bad CSV column name '" + header[k] + "'");
    }
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(values[k], &used);
    } catch (const std::exception&) {
      throw ParseError("bad CSV number '" + values[k] + "'");
    }
    if (used != values[k].size()) throw ParseError("bad CSV number '" + values[k] + "'");
    if (!std::isfinite(v)) throw ParseError("non-finite CSV value in column " + header[k]);
    auto& cell = cells[{i, j}];
    const int bit = std::string(part) == "re" ? 1 : 2;
    if (cell.first & bit) throw ParseError("duplicate CSV column '" + header[k] + "'");
    cell.first |= bit;
    cell.second += bit == 1 ? cplx(v, 0.0) : cplx(0.0, v);
    max_index = std::max({max_index, i, j});
  }
  const long n = max_index + 1;
  if (n == 0) throw DimensionError("matrix dimension n = 0");
  if (static_cast<long>(cells.size()) != n * n) throw ParseError("CSV matrix is missing entries");
  Matrix M(n, n);
  for (const auto& [ij, cell] : cells) {
    if (cell.first != 3) throw ParseError("CSV entry needs both re and im columns");
    M(ij.first, ij.second) = cell.second;
  }
  return M;
}

/// Loads JSON, or CSV when the path ends in ".csv".
inline Matrix load_matrix(const std::string& path) {
  const std::string text = detail::read_file(path);
  const bool csv = path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0;
  return csv ? parse_matrix_csv(text) : parse_matrix_json(text);
}

inline void save_matrix(const Matrix& M, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path);
  out << matrix_to_json(M).dump() << '\n';
}

}  // namespace abnorm

#endif  // ABNORM_IO_HPP
