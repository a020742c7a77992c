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

#ifndef ZOLOEIG_BAND_FACTOR_HPP
#define ZOLOEIG_BAND_FACTOR_HPP

#include <cmath>
#include <cstddef>
#include <future>
#include <vector>

#include "zoloeig/dense.hpp"
#include "zoloeig/error.hpp"
#include "zoloeig/rcm.hpp"
#include "zoloeig/sparse.hpp"

namespace zoloeig {

/// Fill statistics of one banded factorization.
struct FactorProfile {
  std::size_t bandwidth = 0;
  std::size_t stored_entries = 0;
  double min_pivot_ratio = 0.0;  // smallest |pivot| / inf-norm of its row
};

/// Unpivoted banded LU of A - sigma B under a symmetric permutation.
/// Elimination without pivoting is backed by the definite imaginary part of
/// the shifted matrix (Im(A - sigma B) = -Im(sigma) B); a pivot monitor turns
/// silent inaccuracy into an error instead.
///
/// Band layout: entry (i, j) of the permuted matrix, |i - j| <= bw, lives at
/// band[j * (2 bw + 1) + bw + i - j]; columns are contiguous.
class ShiftedFactor {
 public:
  Complex shift{0.0, 0.0};
  std::vector<std::size_t> ordering;  // new index -> old index
  FactorProfile profile;

  std::size_t dim() const { return n_; }

  /// x with (A - sigma B) x = rhs.
  Matrix<Complex> solve(const Matrix<Complex>& rhs) const {
    check_dim(rhs);
    Matrix<Complex> out(n_, rhs.cols());
    std::vector<Complex> x(n_);
    const std::size_t w = 2 * bw_ + 1;
    for (std::size_t c = 0; c < rhs.cols(); ++c) {
      const Complex* b = rhs.col(c);
      for (std::size_t i = 0; i < n_; ++i) x[i] = b[ordering[i]];
      // L x = y, unit lower triangle holds the multipliers
      for (std::size_t j = 0; j < n_; ++j) {
        const Complex xj = x[j];
        if (xj != Complex(0)) {
          const std::size_t hi = std::min(n_ - 1, j + bw_);
          const Complex* col = band_.data() + j * w + bw_ - j;
          for (std::size_t i = j + 1; i <= hi; ++i) x[i] -= col[i] * xj;
        }
      }
      // U x = y
      for (std::size_t j = n_; j-- > 0;) {
        const std::size_t w0 = j * w + bw_ - j;
        x[j] /= band_[w0 + j];
        const Complex xj = x[j];
        if (xj != Complex(0)) {
          const std::size_t lo = j > bw_ ? j - bw_ : 0;
          const Complex* col = band_.data() + w0;
          for (std::size_t i = lo; i < j; ++i) x[i] -= col[i] * xj;
        }
      }
      Complex* o = out.col(c);
      for (std::size_t i = 0; i < n_; ++i) o[ordering[i]] = x[i];
    }
    return out;
  }

  /// x with (A - sigma B)^* x = rhs, reusing the same factors.
  Matrix<Complex> adjoint_solve(const Matrix<Complex>& rhs) const {
    check_dim(rhs);
    Matrix<Complex> out(n_, rhs.cols());
    std::vector<Complex> x(n_);
    const std::size_t w = 2 * bw_ + 1;
    for (std::size_t c = 0; c < rhs.cols(); ++c) {
      const Complex* b = rhs.col(c);
      for (std::size_t i = 0; i < n_; ++i) x[i] = b[ordering[i]];
      // U^* x = y: lower triangular with entries conj(U(j,i)); the needed
      // entries (j,i) all sit in stored column i, contiguous in j.
      for (std::size_t i = 0; i < n_; ++i) {
        const std::size_t lo = i > bw_ ? i - bw_ : 0;
        const Complex* coli = band_.data() + i * w + bw_ - i;
        Complex s = x[i];
        for (std::size_t j = lo; j < i; ++j) s -= std::conj(coli[j]) * x[j];
        x[i] = s / std::conj(coli[i]);
      }
      // L^* x = y: unit upper triangular with entries conj(L(j,i))
      for (std::size_t i = n_; i-- > 0;) {
        const std::size_t hi = std::min(n_ - 1, i + bw_);
        const Complex* coli = band_.data() + i * w + bw_ - i;
        Complex s = x[i];
        for (std::size_t j = i + 1; j <= hi; ++j) s -= std::conj(coli[j]) * x[j];
        x[i] = s;
      }
      Complex* o = out.col(c);
      for (std::size_t i = 0; i < n_; ++i) o[ordering[i]] = x[i];
    }
    return out;
  }

  friend ShiftedFactor factorize(const CsrMatrix<Complex>& m,
                                 const std::vector<std::size_t>& ordering);

 private:
  void check_dim(const Matrix<Complex>& rhs) const {
    if (rhs.rows() != n_) throw DomainError("ShiftedFactor: dimension mismatch");
  }

  std::size_t n_ = 0;
  std::size_t bw_ = 0;
  std::vector<Complex> band_;
};

/// Banded LU of the sparse matrix under the given symmetric permutation.
/// Throws FactorizationError (naming the pivot position) when a pivot falls
/// below 1e-14 times the inf-norm of its row.
inline ShiftedFactor factorize(const CsrMatrix<Complex>& m,
                               const std::vector<std::size_t>& ordering) {
  const std::size_t n = m.n;
  if (ordering.size() != n) throw DomainError("factorize: ordering size mismatch");
  ShiftedFactor f;
  f.ordering = ordering;
  f.n_ = n;
  const std::size_t bw = bandwidth_under(m, ordering);
  f.bw_ = bw;
  const std::size_t w = 2 * bw + 1;
  f.band_.assign(w * n, Complex(0));

  std::vector<std::size_t> pos(n);
  for (std::size_t k = 0; k < n; ++k) pos[ordering[k]] = k;
  std::vector<double> row_norm(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = m.row_offsets[i]; k < m.row_offsets[i + 1]; ++k) {
      const std::size_t pi = pos[i], pj = pos[m.col_indices[k]];
      f.band_[pj * w + bw + pi - pj] = m.values[k];
      row_norm[pi] = std::max(row_norm[pi], std::abs(m.values[k]));
    }

  double min_ratio = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex piv = f.band_[k * w + bw];
    const double ratio = std::abs(piv) / std::max(row_norm[k], 1e-300);
    min_ratio = std::min(min_ratio, ratio);
    if (!(std::abs(piv) > 1e-14 * row_norm[k]))
      throw FactorizationError(
          "factorize: pivot " + std::to_string(k) + " below threshold (|pivot| = " +
              std::to_string(std::abs(piv)) + ")",
          k);
    const std::size_t hi = std::min(n - 1, k + bw);
    Complex* colk = f.band_.data() + k * w + bw - k;
    const Complex inv = Complex(1) / piv;
    for (std::size_t i = k + 1; i <= hi; ++i) colk[i] *= inv;
    for (std::size_t j = k + 1; j <= hi; ++j) {
      const Complex ukj = f.band_[j * w + bw + k - j];
      if (ukj == Complex(0)) continue;
      Complex* colj = f.band_.data() + j * w + bw - j;
      for (std::size_t i = k + 1; i <= hi; ++i) colj[i] -= colk[i] * ukj;
    }
  }
  f.profile.bandwidth = bw;
  f.profile.stored_entries = w * n;
  f.profile.min_pivot_ratio = min_ratio;
  return f;
}

inline Matrix<Complex> solve(const ShiftedFactor& f, const Matrix<Complex>& rhs) {
  return f.solve(rhs);
}

inline Matrix<Complex> adjoint_solve(const ShiftedFactor& f, const Matrix<Complex>& rhs) {
  return f.adjoint_solve(rhs);
}

/// The r factorizations A - sigma_j B sharing one fill-reducing ordering
/// computed from the union pattern.
struct ShiftedFactorSet {
  std::vector<ShiftedFactor> factors;
  std::vector<std::size_t> ordering;
};

template <class S>
ShiftedFactorSet build_shifted_factors(const SparsePencil<S>& pencil,
                                       const std::vector<Complex>& shifts, int threads = 0) {
  ShiftedFactorSet set;
  const CsrMatrix<Complex> probe = assemble_shifted(pencil, Complex(0.0, 1.0));
  set.ordering = reorder_rcm(probe);
  set.factors.resize(shifts.size());
  const auto work = [&](std::size_t j) {
    CsrMatrix<Complex> shifted = assemble_shifted(pencil, shifts[j]);
    set.factors[j] = factorize(shifted, set.ordering);
    set.factors[j].shift = shifts[j];
  };
  if (threads > 1 && shifts.size() > 1) {
    std::vector<std::future<void>> futs;
    for (std::size_t j = 0; j < shifts.size(); ++j)
      futs.push_back(std::async(std::launch::async, work, j));
    for (auto& f : futs) f.get();
  } else {
    for (std::size_t j = 0; j < shifts.size(); ++j) work(j);
  }
  return set;
}

}  // namespace zoloeig

#endif  // ZOLOEIG_BAND_FACTOR_HPP
