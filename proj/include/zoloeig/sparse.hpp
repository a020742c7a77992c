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

#ifndef ZOLOEIG_SPARSE_HPP
#define ZOLOEIG_SPARSE_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <tuple>
#include <vector>

#include "zoloeig/dense.hpp"
#include "zoloeig/error.hpp"

namespace zoloeig {

/// Square compressed-sparse-row matrix with the full (not just triangular)
/// pattern stored and column indices sorted within each row.
template <class S>
struct CsrMatrix {
  std::size_t n = 0;
  std::vector<std::size_t> row_offsets;  // n + 1 entries
  std::vector<std::size_t> col_indices;
  std::vector<S> values;

  std::size_t nnz() const { return col_indices.size(); }

  static CsrMatrix identity(std::size_t n) {
    CsrMatrix m;
    m.n = n;
    m.row_offsets.resize(n + 1);
    m.col_indices.resize(n);
    m.values.assign(n, S(1));
    for (std::size_t i = 0; i < n; ++i) {
      m.row_offsets[i] = i;
      m.col_indices[i] = i;
    }
    m.row_offsets[n] = n;
    return m;
  }

  /// Builds from (row, col, value) triplets; duplicates are summed and
  /// exact zeros dropped so the pattern carries no redundant entries.
  static CsrMatrix from_triplets(std::size_t n,
                                 std::vector<std::tuple<std::size_t, std::size_t, S>> t) {
    for (const auto& [i, j, v] : t)
      if (i >= n || j >= n) throw DomainError("CsrMatrix: triplet index out of range");
    std::sort(t.begin(), t.end(), [](const auto& x, const auto& y) {
      return std::tie(std::get<0>(x), std::get<1>(x)) < std::tie(std::get<0>(y), std::get<1>(y));
    });
    CsrMatrix m;
    m.n = n;
    m.row_offsets.assign(n + 1, 0);
    std::size_t k = 0;
    while (k < t.size()) {
      const std::size_t i = std::get<0>(t[k]), j = std::get<1>(t[k]);
      S v = std::get<2>(t[k]);
      while (k + 1 < t.size() && std::get<0>(t[k + 1]) == i && std::get<1>(t[k + 1]) == j) {
        ++k;
        v += std::get<2>(t[k]);
      }
      if (v != S(0)) {
        m.col_indices.push_back(j);
        m.values.push_back(v);
        ++m.row_offsets[i + 1];
      }
      ++k;
    }
    for (std::size_t i = 0; i < n; ++i) m.row_offsets[i + 1] += m.row_offsets[i];
    return m;
  }

  /// Value at (i, j), zero when outside the pattern.
  S at(std::size_t i, std::size_t j) const {
    for (std::size_t k = row_offsets[i]; k < row_offsets[i + 1]; ++k)
      if (col_indices[k] == j) return values[k];
    return S(0);
  }
};

/// Hermitian matrices use the same storage; hermitian-ness is a checked
/// invariant at construction boundaries, not a distinct layout.
template <class S>
using SparseHermitian = CsrMatrix<S>;

/// Entrywise Hermitian check: (i,j) equals conj((j,i)) to a relative tol.
template <class S>
bool is_hermitian(const CsrMatrix<S>& m, double tol = 1e-14) {
  double scale = 0.0;
  for (const S& v : m.values) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) return true;
  for (std::size_t i = 0; i < m.n; ++i)
    for (std::size_t k = m.row_offsets[i]; k < m.row_offsets[i + 1]; ++k) {
      const std::size_t j = m.col_indices[k];
      if (std::abs(m.values[k] - conj_s(m.at(j, i))) > tol * scale) return false;
    }
  return true;
}

/// y = M x for a dense block x.
template <class S, class V>
auto spmv(const CsrMatrix<S>& m, const Matrix<V>& x) {
  using R = promote_t<S, V>;
  if (x.rows() != m.n) throw DomainError("spmv: dimension mismatch");
  Matrix<R> y(m.n, x.cols());
  for (std::size_t c = 0; c < x.cols(); ++c) {
    const V* xc = x.col(c);
    R* yc = y.col(c);
    for (std::size_t i = 0; i < m.n; ++i) {
      R s(0);
      for (std::size_t k = m.row_offsets[i]; k < m.row_offsets[i + 1]; ++k)
        s += R(m.values[k]) * R(xc[m.col_indices[k]]);
      yc[i] = s;
    }
  }
  return y;
}

/// Hermitian definite pencil (A, B); an absent B means the identity.
template <class S>
struct SparsePencil {
  SparseHermitian<S> a_mat;
  std::optional<SparseHermitian<S>> b_mat;

  std::size_t n() const { return a_mat.n; }
  bool b_is_identity() const { return !b_mat.has_value(); }

  template <class V>
  Matrix<promote_t<S, V>> apply_b(const Matrix<V>& x) const {
    if (b_is_identity()) return x.template cast<promote_t<S, V>>();
    return spmv(*b_mat, x);
  }

  template <class V>
  Matrix<promote_t<S, V>> apply_a(const Matrix<V>& x) const {
    return spmv(a_mat, x);
  }
};

/// A - sigma B on the union pattern of A and B.
template <class S>
CsrMatrix<Complex> assemble_shifted(const SparsePencil<S>& pencil, Complex sigma) {
  const CsrMatrix<S>& a = pencil.a_mat;
  const std::size_t n = a.n;
  const CsrMatrix<S> b_ident = CsrMatrix<S>::identity(n);
  const CsrMatrix<S>& b = pencil.b_is_identity() ? b_ident : *pencil.b_mat;
  if (b.n != n) throw DomainError("assemble_shifted: dimension mismatch");

  CsrMatrix<Complex> out;
  out.n = n;
  out.row_offsets.assign(n + 1, 0);
  out.col_indices.reserve(a.nnz() + b.nnz());
  out.values.reserve(a.nnz() + b.nnz());
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t ka = a.row_offsets[i], kb = b.row_offsets[i];
    const std::size_t ea = a.row_offsets[i + 1], eb = b.row_offsets[i + 1];
    while (ka < ea || kb < eb) {
      const std::size_t ja = ka < ea ? a.col_indices[ka] : n;
      const std::size_t jb = kb < eb ? b.col_indices[kb] : n;
      if (ja < jb) {
        out.col_indices.push_back(ja);
        out.values.push_back(Complex(a.values[ka++]));
      } else if (jb < ja) {
        out.col_indices.push_back(jb);
        out.values.push_back(-sigma * Complex(b.values[kb++]));
      } else {
        out.col_indices.push_back(ja);
        out.values.push_back(Complex(a.values[ka++]) - sigma * Complex(b.values[kb++]));
      }
    }
    out.row_offsets[i + 1] = out.col_indices.size();
  }
  return out;
}

}  // namespace zoloeig

#endif  // ZOLOEIG_SPARSE_HPP
