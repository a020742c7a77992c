// Copyright 2026 The ZoloEig Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ZOLOEIG_MATRIX_MARKET_HPP
#define ZOLOEIG_MATRIX_MARKET_HPP

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "zoloeig/error.hpp"
#include "zoloeig/sparse.hpp"

namespace zoloeig {

/// Malformed Matrix Market input; the message names the offending line.
class ParseError : public DomainError {
 public:
  ParseError(const std::string& what, std::size_t line)
      : DomainError(what + " (line " + std::to_string(line) + ")") {}
};

struct MatrixMarketInfo {
  bool complex_field = false;
  std::string symmetry;  // "symmetric", "hermitian" or "general"
  std::size_t n = 0;
  std::size_t entries = 0;
  std::vector<std::string> comments;
};

namespace detail {

inline std::string lower_token(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

inline MatrixMarketInfo read_mm_header(std::istream& in, std::size_t& line_no) {
  MatrixMarketInfo info;
  std::string line;
  if (!std::getline(in, line)) throw ParseError("matrix market: empty file", 1);
  line_no = 1;
  std::istringstream head(line);
  std::string banner, object, format, field, symmetry;
  head >> banner >> object >> format >> field >> symmetry;
  if (banner != "%%MatrixMarket") throw ParseError("matrix market: missing banner", line_no);
  if (lower_token(object) != "matrix" || lower_token(format) != "coordinate")
    throw ParseError("matrix market: only coordinate matrices are supported", line_no);
  field = lower_token(field);
  symmetry = lower_token(symmetry);
  if (field == "complex")
    info.complex_field = true;
  else if (field != "real")
    throw ParseError("matrix market: unsupported field '" + field + "'", line_no);
  if (symmetry != "symmetric" && symmetry != "hermitian" && symmetry != "general")
    throw ParseError("matrix market: unsupported symmetry '" + symmetry + "'", line_no);
  info.symmetry = symmetry;

  std::size_t rows = 0, cols = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line[0] == '%') {
      info.comments.push_back(line.substr(1));
      continue;
    }
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream sizes(line);
    if (!(sizes >> rows >> cols >> info.entries))
      throw ParseError("matrix market: malformed size line", line_no);
    break;
  }
  if (rows == 0 || rows != cols)
    throw ParseError("matrix market: matrix must be square and nonempty", line_no);
  info.n = rows;
  return info;
}

}  // namespace detail

/// Header-only peek: field, symmetry, size, stored entry count, comments.
inline MatrixMarketInfo probe_matrix_market(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("matrix market: cannot open '" + path + "'");
  std::size_t line_no = 0;
  return detail::read_mm_header(in, line_no);
}

/// Reads a coordinate Matrix Market file into full-pattern CSR, expanding the
/// symmetric/hermitian qualifiers from the stored lower triangle. The result
/// must be numerically Hermitian (general files are checked).
template <class S>
SparseHermitian<S> read_matrix_market(const std::string& path,
                                      std::vector<std::string>* comments = nullptr) {
  std::ifstream in(path);
  if (!in) throw DomainError("matrix market: cannot open '" + path + "'");
  std::size_t line_no = 0;
  const MatrixMarketInfo info = detail::read_mm_header(in, line_no);
  if (info.complex_field && !is_complex_v<S>)
    throw DomainError("matrix market: complex file read into a real matrix");
  if (comments) *comments = info.comments;

  std::vector<std::tuple<std::size_t, std::size_t, S>> trip;
  trip.reserve(info.entries * 2);
  std::string line;
  std::size_t seen = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '%' || line.find_first_not_of(" \t\r") == std::string::npos)
      continue;
    std::istringstream row(line);
    std::size_t i = 0, j = 0;
    double re = 0.0, im = 0.0;
    bool ok = static_cast<bool>(row >> i >> j >> re);
    if (ok && info.complex_field) ok = static_cast<bool>(row >> im);
    if (!ok) throw ParseError("matrix market: malformed entry", line_no);
    if (i < 1 || j < 1 || i > info.n || j > info.n)
      throw ParseError("matrix market: index out of range", line_no);
    --i;
    --j;
    S v;
    if constexpr (is_complex_v<S>)
      v = S(re, im);
    else
      v = re;
    if (info.symmetry != "general") {
      if (i < j)
        throw ParseError("matrix market: upper-triangle entry in a " + info.symmetry + " file",
                         line_no);
      trip.emplace_back(i, j, v);
      if (i != j) trip.emplace_back(j, i, conj_s(v));
    } else {
      trip.emplace_back(i, j, v);
    }
    ++seen;
  }
  if (seen != info.entries)
    throw ParseError("matrix market: expected " + std::to_string(info.entries) +
                         " entries, found " + std::to_string(seen),
                     line_no);
  SparseHermitian<S> m = CsrMatrix<S>::from_triplets(info.n, std::move(trip));
  if (!is_hermitian(m, 1e-14))
    throw DomainError("matrix market: '" + path + "' is not numerically Hermitian");
  return m;
}

/// Writes the lower triangle with a symmetric (real) or hermitian (complex)
/// qualifier, 1-based indices, and enough digits to round-trip bit-exactly.
template <class S>
void write_matrix_market(const std::string& path, const SparseHermitian<S>& m,
                         const std::vector<std::string>& comments = {}) {
  std::ofstream out(path);
  if (!out) throw DomainError("matrix market: cannot write '" + path + "'");
  std::size_t lower = 0;
  for (std::size_t i = 0; i < m.n; ++i)
    for (std::size_t k = m.row_offsets[i]; k < m.row_offsets[i + 1]; ++k)
      if (m.col_indices[k] <= i) ++lower;
  out << "%%MatrixMarket matrix coordinate " << (is_complex_v<S> ? "complex" : "real") << ' '
      << (is_complex_v<S> ? "hermitian" : "symmetric") << '\n';
  for (const std::string& c : comments) out << '%' << c << '\n';
  out << m.n << ' ' << m.n << ' ' << lower << '\n';
  char buf[96];
  for (std::size_t i = 0; i < m.n; ++i)
    for (std::size_t k = m.row_offsets[i]; k < m.row_offsets[i + 1]; ++k) {
      const std::size_t j = m.col_indices[k];
      if (j > i) continue;
      if constexpr (is_complex_v<S>)
        std::snprintf(buf, sizeof buf, "%zu %zu %.17g %.17g\n", i + 1, j + 1, m.values[k].real(),
                      m.values[k].imag());
      else
        std::snprintf(buf, sizeof buf, "%zu %zu %.17g\n", i + 1, j + 1, m.values[k]);
      out << buf;
    }
  if (!out) throw DomainError("matrix market: write to '" + path + "' failed");
}

}  // namespace zoloeig

#endif  // ZOLOEIG_MATRIX_MARKET_HPP
