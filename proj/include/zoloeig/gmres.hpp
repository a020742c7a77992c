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

#ifndef ZOLOEIG_GMRES_HPP
#define ZOLOEIG_GMRES_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "zoloeig/dense.hpp"
#include "zoloeig/error.hpp"

namespace zoloeig {

/// Outcome of one multi-shift solve over a block of right-hand sides.
struct ShiftedSolveReport {
  std::size_t iterations = 0;                  // max Krylov dimension over columns
  std::vector<double> residuals;               // per-shift relative residual (worst column)
  std::vector<bool> converged;                 // per-shift flag
  std::vector<std::size_t> column_iterations;  // Krylov dimension per column
  std::size_t operator_applications = 0;

  bool all_converged() const {
    for (bool c : converged)
      if (!c) return false;
    return true;
  }
};

/// Multi-shift GMRES failed to reach tolerance within the iteration cap.
class GmresError : public NumericalError {
 public:
  GmresError(const std::string& what, ShiftedSolveReport rep)
      : NumericalError(what), report(std::move(rep)) {}

  ShiftedSolveReport report;
};

namespace detail {

/// Least squares min || (H + s I) y - beta e1 || for the (m+1) x m Hessenberg
/// block via Givens rotations. Returns y and the residual norm.
template <class S>
std::pair<std::vector<Complex>, double> hessenberg_shifted_ls(const Matrix<S>& h, std::size_t m,
                                                              Complex s, double beta) {
  Matrix<Complex> t(m + 1, m);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i <= std::min(j + 1, m); ++i) t(i, j) = Complex(h(i, j));
  for (std::size_t j = 0; j < m; ++j) t(j, j) += s;
  std::vector<Complex> g(m + 1, Complex(0));
  g[0] = beta;
  for (std::size_t j = 0; j < m; ++j) {
    const Complex a = t(j, j), b = t(j + 1, j);
    const double nr = std::sqrt(std::norm(a) + std::norm(b));
    if (nr == 0.0) continue;
    const Complex c = a / nr, sn = b / nr;
    for (std::size_t k = j; k < m; ++k) {
      const Complex t0 = t(j, k), t1 = t(j + 1, k);
      t(j, k) = std::conj(c) * t0 + std::conj(sn) * t1;
      t(j + 1, k) = -sn * t0 + c * t1;
    }
    const Complex g0 = g[j], g1 = g[j + 1];
    g[j] = std::conj(c) * g0 + std::conj(sn) * g1;
    g[j + 1] = -sn * g0 + c * g1;
  }
  std::vector<Complex> y(m);
  for (std::size_t i = m; i-- > 0;) {
    Complex v = g[i];
    for (std::size_t k = i + 1; k < m; ++k) v -= t(i, k) * y[k];
    y[i] = v / t(i, i);
  }
  return {std::move(y), std::abs(g[m])};
}

}  // namespace detail

/// Solves (G + s_k I) x = y for every shift s_k and every column of rhs with
/// one Arnoldi expansion per column (Krylov shift invariance): the operator is
/// applied exactly once per iteration per column, independent of the number
/// of shifts. No restarting. Solutions are complex even for a real operator.
///
/// apply_g must be linear; it receives and returns single-column blocks.
template <class S>
std::pair<std::vector<Matrix<Complex>>, ShiftedSolveReport> multishift_gmres(
    const std::function<Matrix<S>(const Matrix<S>&)>& apply_g, const std::vector<Complex>& shifts,
    const Matrix<S>& rhs, double tol, std::size_t max_iter) {
  const std::size_t n = rhs.rows(), ncol = rhs.cols(), q = shifts.size();
  if (q == 0) throw DomainError("multishift_gmres: no shifts");
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = a + 1; b < q; ++b)
      if (shifts[a] == shifts[b]) throw DomainError("multishift_gmres: shifts must be distinct");

  std::vector<Matrix<Complex>> solutions(q, Matrix<Complex>(n, ncol));
  ShiftedSolveReport report;
  report.residuals.assign(q, 0.0);
  report.converged.assign(q, true);
  report.column_iterations.assign(ncol, 0);

  for (std::size_t col = 0; col < ncol; ++col) {
    const Matrix<S> y = rhs.column(col);
    const double beta = y.col_norm(0);
    if (beta == 0.0) continue;  // zero rhs: zero solutions for every shift

    std::vector<Matrix<S>> basis;
    basis.push_back((1.0 / beta) * y);
    Matrix<S> h(max_iter + 1, max_iter);
    std::vector<double> shift_res(q, 0.0);
    std::vector<std::vector<Complex>> shift_y(q);
    std::vector<bool> shift_done(q, false);
    std::size_t m = 0;
    bool happy = false;

    while (m < max_iter) {
      Matrix<S> w = apply_g(basis[m]);
      ++report.operator_applications;
      // modified Gram-Schmidt with one reorthogonalization pass
      for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t i = 0; i <= m; ++i) {
          S hij(0);
          const S* vi = basis[i].col(0);
          S* wc = w.col(0);
          for (std::size_t t = 0; t < n; ++t) hij += conj_s(vi[t]) * wc[t];
          for (std::size_t t = 0; t < n; ++t) wc[t] -= hij * vi[t];
          h(i, m) += hij;
        }
      }
      const double wn = w.col_norm(0);
      h(m + 1, m) = S(wn);
      ++m;
      if (wn > 1e-14 * beta) {
        basis.push_back((1.0 / wn) * w);
      } else {
        happy = true;  // Krylov space is invariant; solutions are exact
      }

      bool all_done = true;
      for (std::size_t k = 0; k < q; ++k) {
        if (shift_done[k]) continue;
        auto [yk, res] = detail::hessenberg_shifted_ls(h, m, shifts[k], beta);
        shift_y[k] = std::move(yk);
        shift_res[k] = res / beta;
        if (shift_res[k] <= tol) shift_done[k] = true;  // freeze this shift
        all_done = all_done && shift_done[k];
      }
      if (all_done || happy) break;
    }

    report.column_iterations[col] = m;
    report.iterations = std::max(report.iterations, m);
    for (std::size_t k = 0; k < q; ++k) {
      Complex* xc = solutions[k].col(col);
      for (std::size_t i = 0; i < m && i < shift_y[k].size(); ++i) {
        const Complex yi = shift_y[k][i];
        const S* vi = basis[i].col(0);
        for (std::size_t t = 0; t < n; ++t) xc[t] += yi * Complex(vi[t]);
      }
      report.residuals[k] = std::max(report.residuals[k], shift_res[k]);
      if (!(shift_res[k] <= tol) && !happy) report.converged[k] = false;
    }
  }

  if (!report.all_converged())
    throw GmresError("multishift_gmres: not converged within " + std::to_string(max_iter) +
                         " iterations",
                     report);
  return {std::move(solutions), report};
}

}  // namespace zoloeig

#endif  // ZOLOEIG_GMRES_HPP
