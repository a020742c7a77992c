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

#ifndef ZOLOEIG_EIGENSOLVER_HPP
#define ZOLOEIG_EIGENSOLVER_HPP

#include <chrono>
#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "zoloeig/dense_eig.hpp"
#include "zoloeig/filter_engine.hpp"
#include "zoloeig/window.hpp"

namespace zoloeig {

struct SolveConfig {
  std::size_t n_lambda = 1;       // expected eigenvalue count in (a,b)
  std::size_t oversample_k = 1;   // extra subspace columns
  int r = 0;                      // filter order; 0 picks via choose_order
  double tol = 1e-10;             // target relative residual
  std::size_t max_subspace_iters = 5;
  double gmres_tol = 1e-12;
  std::size_t gmres_max = 50;
  std::uint64_t seed = 0;
  int threads = 0;  // 0 = serial

  std::size_t subspace_size() const { return n_lambda + oversample_k; }
};

struct SolveStats {
  std::size_t n_ss = 0;
  std::size_t n_iter = 0;
  std::size_t n_gmres = 0;      // max Krylov iterations over all columns
  std::size_t n_gmres_min = 0;  // min over all columns (0 until the first run)
  std::int64_t n_solv = 0;      // exact tally of factored-system solves
  double factorization_time = 0.0;
  double iteration_time = 0.0;
};

template <class S>
struct EigResult {
  std::vector<double> lambdas;  // ascending, inside (a, b)
  Matrix<S> vectors;            // B-orthonormal
  double residual = 0.0;        // per eq. of max_i ||A x - lambda B x|| scaling
  SolveStats stats;
  bool converged = false;
  int r = 0;
};

/// Difficulty measure of the slicing problem: the smaller gap width over the
/// interior width. An infinite endpoint defers to the other gap's width.
inline double relative_eigengap(const SpectralWindow& w) {
  const double interior = w.b_minus - w.a_plus;
  if (!(interior > 0.0)) throw DomainError("relative_eigengap: empty interior");
  const double wa = w.left_open() ? std::numeric_limits<double>::infinity() : w.a_plus - w.a_minus;
  const double wb = w.right_open() ? std::numeric_limits<double>::infinity() : w.b_plus - w.b_minus;
  const double width = std::min(wa, wb);
  if (std::isinf(width)) throw DomainError("relative_eigengap: both gaps unbounded");
  return width / interior;
}

/// max_i ||A x_i - lambda_i B x_i|| / (max(|a|,|b|) ||B x_i||).
template <class S>
double relative_residual(const SparsePencil<S>& pencil, const std::vector<double>& lambdas,
                         const Matrix<S>& vectors, const SpectralWindow& window) {
  const double scale = std::max(std::abs(window.a), std::abs(window.b));
  const Matrix<S> ax = pencil.apply_a(vectors);
  const Matrix<S> bx = pencil.apply_b(vectors);
  double worst = 0.0;
  for (std::size_t c = 0; c < lambdas.size(); ++c) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < vectors.rows(); ++i) {
      num += abs_sq(ax(i, c) - S(lambdas[c]) * bx(i, c));
      den += abs_sq(bx(i, c));
    }
    worst = std::max(worst, std::sqrt(num) / (scale * std::sqrt(den)));
  }
  return worst;
}

/// Rayleigh-Ritz extraction: projects the pencil onto span(Y) and solves the
/// small generalized problem. Ritz values ascend; the returned block is
/// B-tilde-orthonormal.
///
/// With oversampling the filtered block is rank deficient by construction
/// (columns beyond the in-window count carry only the filter's leakage), so
/// the projected B is diagonalized and near-null directions are cut before
/// the reduction; fewer than y.cols() pairs may come back. A projection with
/// no usable directions at all surfaces as an error.
template <class S>
std::pair<std::vector<double>, Matrix<S>> rayleigh_ritz(const Matrix<S>& y,
                                                        const SparsePencil<S>& pencil) {
  const std::size_t k = y.cols();
  Matrix<S> a_small = adjoint_matmul(y, pencil.apply_a(y));
  Matrix<S> b_small = adjoint_matmul(y, pencil.apply_b(y));
  for (std::size_t i = 0; i < k; ++i)  // re-hermitianize projection roundoff
    for (std::size_t j = 0; j <= i; ++j) {
      const S am = S(0.5) * (a_small(i, j) + conj_s(a_small(j, i)));
      a_small(i, j) = am;
      a_small(j, i) = conj_s(am);
      const S bm = S(0.5) * (b_small(i, j) + conj_s(b_small(j, i)));
      b_small(i, j) = bm;
      b_small(j, i) = conj_s(bm);
    }

  const DenseEig<S> bs = dense_hermitian_eig(b_small);
  const double mu_max = bs.lambdas.empty() ? 0.0 : bs.lambdas.back();
  if (!(mu_max > 0.0))
    throw NumericalError(
        "rayleigh_ritz: projected B is numerically singular (rank-deficient subspace); "
        "increase oversampling or decrease gmres_tol");
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < k; ++i)
    if (bs.lambdas[i] > 1e-13 * mu_max) kept.push_back(i);
  if (kept.empty())
    throw NumericalError(
        "rayleigh_ritz: projected B is numerically singular (rank-deficient subspace); "
        "increase oversampling or decrease gmres_tol");

  Matrix<S> w(k, kept.size());  // W with W^H B_small W = I
  for (std::size_t c = 0; c < kept.size(); ++c) {
    const double scale = 1.0 / std::sqrt(bs.lambdas[kept[c]]);
    for (std::size_t i = 0; i < k; ++i) w(i, c) = bs.vectors(i, kept[c]) * S(scale);
  }
  Matrix<S> a_reduced = adjoint_matmul(w, matmul(a_small, w));
  for (std::size_t i = 0; i < a_reduced.rows(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      const S am = S(0.5) * (a_reduced(i, j) + conj_s(a_reduced(j, i)));
      a_reduced(i, j) = am;
      a_reduced(j, i) = conj_s(am);
    }
  DenseEig<S> as = dense_hermitian_eig(a_reduced);
  return {std::move(as.lambdas), matmul(w, as.vectors)};
}

/// Filtered subspace iteration: Y = R_ab(B^{-1}A) Q, Rayleigh-Ritz, repeat
/// until the Ritz pairs inside (a,b) meet the residual target. Non-convergence
/// within the iteration cap returns a flagged partial result.
template <class S>
EigResult<S> subspace_iteration(const SparsePencil<S>& pencil, const SpectralWindow& window,
                                const SolveConfig& config) {
  window.validate();
  if (config.n_lambda < 1) throw DomainError("subspace_iteration: n_lambda must be >= 1");
  const std::size_t n = pencil.n();
  const std::size_t n_ss = config.subspace_size();
  if (n_ss > n) throw DomainError("subspace_iteration: subspace larger than the matrix");

  using clock = std::chrono::steady_clock;
  const auto seconds = [](clock::time_point t0, clock::time_point t1) {
    return std::chrono::duration<double>(t1 - t0).count();
  };

  EigResult<S> result;
  result.r = config.r > 0 ? config.r
                          : choose_order(window, std::max(config.tol * 1e-2, 1e-16)).r;

  const auto t0 = clock::now();
  const FilterOperator<S> op(pencil, build_filter_design(window, result.r), config.threads);
  const auto t1 = clock::now();

  Matrix<S> q = random_gaussian<S>(n, n_ss, config.seed);
  if (!mgs_orthonormalize(q))
    throw NumericalError("subspace_iteration: random block failed to orthonormalize");

  result.stats.n_ss = n_ss;
  std::vector<double> ritz;
  Matrix<S> ritz_vecs;
  for (std::size_t iter = 1; iter <= config.max_subspace_iters; ++iter) {
    result.stats.n_iter = iter;
    auto [y, rep] = op.apply_filter(q, config.gmres_tol, config.gmres_max);
    result.stats.n_gmres = std::max(result.stats.n_gmres, rep.iterations);
    for (std::size_t m : rep.column_iterations)
      result.stats.n_gmres_min =
          result.stats.n_gmres_min == 0 ? m : std::min(result.stats.n_gmres_min, m);
    auto [vals, small_q] = rayleigh_ritz(y, pencil);
    q = matmul(y, small_q);
    ritz = std::move(vals);

    std::vector<std::size_t> inside;
    for (std::size_t i = 0; i < ritz.size(); ++i)
      if (window.a < ritz[i] && ritz[i] < window.b) inside.push_back(i);
    result.lambdas.clear();
    result.vectors = Matrix<S>(n, inside.size());
    for (std::size_t k = 0; k < inside.size(); ++k) {
      result.lambdas.push_back(ritz[inside[k]]);
      result.vectors.set_column(k, q.column(inside[k]));
    }
    if (!inside.empty()) {
      result.residual = relative_residual(pencil, result.lambdas, result.vectors, window);
      if (result.residual <= config.tol) {
        result.converged = true;
        break;
      }
    } else {
      result.residual = std::numeric_limits<double>::infinity();
    }
  }
  const auto t2 = clock::now();
  result.stats.factorization_time = seconds(t0, t1);
  result.stats.iteration_time = seconds(t1, t2);
  result.stats.n_solv = op.inner_solve_count();
  return result;
}

}  // namespace zoloeig

#endif  // ZOLOEIG_EIGENSOLVER_HPP
