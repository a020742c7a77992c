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

#include "zoloeig/eigensolver.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <tuple>
#include <vector>

using namespace zoloeig;

namespace {

SparsePencil<double> diag_pencil(const std::vector<double>& d) {
  std::vector<std::tuple<std::size_t, std::size_t, double>> t;
  for (std::size_t i = 0; i < d.size(); ++i) t.emplace_back(i, i, d[i]);
  SparsePencil<double> p;
  p.a_mat = CsrMatrix<double>::from_triplets(d.size(), std::move(t));
  return p;
}

template <class S>
std::pair<SparsePencil<S>, std::pair<Matrix<S>, Matrix<S>>> planted_pencil(
    const std::vector<double>& lam, std::uint64_t seed) {
  const std::size_t n = lam.size();
  Matrix<S> w = random_gaussian<S>(n, n, seed);
  for (std::size_t i = 0; i < n; ++i) w(i, i) += S(2.5);
  Matrix<S> a(n, n), b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      S sa(0), sb(0);
      for (std::size_t k = 0; k < n; ++k) {
        sa += w(i, k) * S(lam[k]) * conj_s(w(j, k));
        sb += w(i, k) * conj_s(w(j, k));
      }
      a(i, j) = sa;
      b(i, j) = sb;
    }
  std::vector<std::tuple<std::size_t, std::size_t, S>> ta, tb;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ta.emplace_back(i, j, S(0.5) * (a(i, j) + conj_s(a(j, i))));
      tb.emplace_back(i, j, S(0.5) * (b(i, j) + conj_s(b(j, i))));
    }
  SparsePencil<S> p;
  p.a_mat = CsrMatrix<S>::from_triplets(n, std::move(ta));
  p.b_mat = CsrMatrix<S>::from_triplets(n, std::move(tb));
  return {std::move(p), {std::move(a), std::move(b)}};
}

}  // namespace

TEST_CASE("relative_eigengap formulas") {
  REQUIRE(relative_eigengap(window_from_gaps(2.0, 3.0, 6.0, 7.0)) ==
          Catch::Approx(1.0 / 3.0).epsilon(1e-15));
  REQUIRE(relative_eigengap(window_from_gaps(-1.1, -0.9, 0.9, 1.1)) ==
          Catch::Approx(0.2 / 1.8).epsilon(1e-12));
  const double inf = std::numeric_limits<double>::infinity();
  REQUIRE(relative_eigengap(window_from_gaps(-inf, 1.0, 3.0, 5.0)) ==
          Catch::Approx(2.0 / 2.0).epsilon(1e-15));
  SpectralWindow bad = window_from_gaps(2.0, 3.0, 6.0, 7.0);
  bad.b_minus = 2.5;  // earlier than a_plus
  REQUIRE_THROWS_AS(relative_eigengap(bad), DomainError);
}

TEST_CASE("relative_residual basics") {
  const std::vector<double> d = {1.0, 2.0, 3.0, 4.0};
  const SparsePencil<double> p = diag_pencil(d);
  const SpectralWindow w = window_from_gaps(1.2, 1.8, 3.2, 3.8);
  Matrix<double> x(4, 1);
  x(1, 0) = 1.0;  // exact eigenvector for 2.0
  REQUIRE(relative_residual(p, {2.0}, x, w) < 1e-15);

  // perturbed eigenvector: residual scales like the perturbation over max(|a|,|b|)
  Matrix<double> xp = x;
  xp(0, 0) = 1e-6;
  const double res = relative_residual(p, {2.0}, xp, w);
  const double scale = std::max(std::abs(w.a), std::abs(w.b));
  const double expected = 1e-6 / scale;  // ||(A - 2B) e1|| = |1-2| * 1e-6
  REQUIRE(res > expected / 10.0);
  REQUIRE(res < expected * 10.0);

  // scaling A and B together leaves the metric unchanged
  std::vector<double> d2;
  for (double v : d) d2.push_back(2.0 * v);
  SparsePencil<double> p2 = diag_pencil(d2);
  p2.b_mat = CsrMatrix<double>::from_triplets(
      4, {{0, 0, 2.0}, {1, 1, 2.0}, {2, 2, 2.0}, {3, 3, 2.0}});
  REQUIRE(relative_residual(p2, {2.0}, xp, w) == Catch::Approx(res).epsilon(1e-12));
}

TEST_CASE("rayleigh_ritz: exact invariant subspaces give exact Ritz pairs") {
  const std::vector<double> d = {1.0, 2.0, 3.0, 4.0, 5.0};
  const SparsePencil<double> p = diag_pencil(d);
  // Y spans the invariant subspace of {2.0, 4.0}
  Matrix<double> y(5, 2);
  y(1, 0) = 0.3;
  y(3, 0) = 0.7;
  y(1, 1) = -0.6;
  y(3, 1) = 0.2;
  const auto [vals, q] = rayleigh_ritz(y, p);
  REQUIRE(vals.size() == 2);
  REQUIRE(vals[0] == Catch::Approx(2.0).margin(1e-12));
  REQUIRE(vals[1] == Catch::Approx(4.0).margin(1e-12));
  // B-tilde-orthonormality of the returned block
  const Matrix<double> bt = adjoint_matmul(y, p.apply_b(y));
  const Matrix<double> gram = adjoint_matmul(q, matmul(bt, q));
  REQUIRE((gram - Matrix<double>::identity(2)).norm_max() < 1e-10);
}

TEST_CASE("rayleigh_ritz truncates numerically dependent directions") {
  const std::vector<double> d = {1.0, 2.0, 3.0};
  const SparsePencil<double> p = diag_pencil(d);
  Matrix<double> y(3, 2);
  y(0, 0) = 1.0;
  y(0, 1) = 1.0;
  y(1, 1) = 1e-15;  // second column essentially repeats the first
  const auto [vals, q] = rayleigh_ritz(y, p);
  REQUIRE(vals.size() == 1);
  REQUIRE(vals[0] == Catch::Approx(1.0).margin(1e-10));
}

TEST_CASE("rayleigh_ritz rejects an all-zero block") {
  const SparsePencil<double> p = diag_pencil({1.0, 2.0, 3.0});
  const Matrix<double> y(3, 2);
  REQUIRE_THROWS_AS(rayleigh_ritz(y, p), NumericalError);
}

TEST_CASE("subspace_iteration on diag(1..10) finds {3,4,5,6} in one pass") {
  std::vector<double> d(10);
  for (int i = 0; i < 10; ++i) d[i] = i + 1.0;
  const SparsePencil<double> pencil = diag_pencil(d);
  const SpectralWindow w = window_from_gaps(2.0, 3.0, 6.0, 7.0);
  SolveConfig cfg;
  cfg.n_lambda = 4;
  cfg.oversample_k = 1;  // n_ss = 5
  cfg.r = 3;
  cfg.seed = 42;
  const EigResult<double> res = subspace_iteration(pencil, w, cfg);
  REQUIRE(res.converged);
  REQUIRE(res.stats.n_iter == 1);
  REQUIRE(res.lambdas.size() == 4);
  for (int k = 0; k < 4; ++k) REQUIRE(res.lambdas[k] == Catch::Approx(k + 3.0).margin(1e-9));
  REQUIRE(res.residual <= 1e-10);
  REQUIRE(res.stats.n_ss == 5);
}

TEMPLATE_TEST_CASE("subspace_iteration matches the dense reference", "", double, Complex) {
  using S = TestType;
  std::vector<double> lam(60);
  for (int i = 0; i < 60; ++i) lam[i] = 0.25 * i;
  auto [pencil, dense] = planted_pencil<S>(lam, 1234);
  // window around eigenvalues 20..29 (values 5.0 .. 7.25)
  const SpectralWindow w = window_from_gaps(0.25 * 19, 0.25 * 20, 0.25 * 29, 0.25 * 30);
  SolveConfig cfg;
  cfg.n_lambda = 10;
  cfg.r = 4;
  cfg.seed = 7;
  const EigResult<S> res = subspace_iteration(pencil, w, cfg);
  REQUIRE(res.converged);
  REQUIRE(res.lambdas.size() == 10);
  const DenseEig<S> ref = dense_generalized_eig(dense.first, dense.second);
  std::vector<double> expect;
  for (double v : ref.lambdas)
    if (v > w.a && v < w.b) expect.push_back(v);
  REQUIRE(expect.size() == 10);
  const double tol = 1e-8 * std::max(std::abs(w.a), std::abs(w.b));
  for (std::size_t i = 0; i < 10; ++i) REQUIRE(std::abs(res.lambdas[i] - expect[i]) <= tol);
  // B-orthonormal vectors
  const Matrix<S> bx = pencil.apply_b(res.vectors);
  const Matrix<S> gram = adjoint_matmul(res.vectors, bx);
  REQUIRE((gram - Matrix<S>::identity(10)).norm_max() <= 1e-8);
}

TEST_CASE("accounting: exact solve tally bounded by the product formula") {
  std::vector<double> d(12);
  for (int i = 0; i < 12; ++i) d[i] = i + 1.0;
  const SparsePencil<double> pencil = diag_pencil(d);
  const SpectralWindow w = window_from_gaps(3.0, 4.0, 8.0, 9.0);
  SolveConfig cfg;
  cfg.n_lambda = 4;
  cfg.r = 2;
  cfg.seed = 3;
  const EigResult<double> res = subspace_iteration(pencil, w, cfg);
  REQUIRE(res.stats.n_solv > 0);
  const std::int64_t bound = static_cast<std::int64_t>(res.r) * res.stats.n_ss *
                             res.stats.n_iter * res.stats.n_gmres;
  REQUIRE(res.stats.n_solv <= bound);
}

TEST_CASE("weak filters give a flagged partial result") {
  std::vector<double> d(10);
  for (int i = 0; i < 10; ++i) d[i] = i + 1.0;
  const SparsePencil<double> pencil = diag_pencil(d);
  const SpectralWindow w = window_from_gaps(2.8, 3.2, 5.8, 6.2);  // narrow gaps
  SolveConfig cfg;
  cfg.n_lambda = 3;
  cfg.r = 1;  // far too weak for tol
  cfg.tol = 1e-12;
  cfg.max_subspace_iters = 1;
  cfg.seed = 11;
  const EigResult<double> res = subspace_iteration(pencil, w, cfg);
  REQUIRE_FALSE(res.converged);
  REQUIRE(res.stats.n_iter == 1);
}

TEST_CASE("auto order via choose_order") {
  std::vector<double> d(10);
  for (int i = 0; i < 10; ++i) d[i] = i + 1.0;
  const SparsePencil<double> pencil = diag_pencil(d);
  const SpectralWindow w = window_from_gaps(2.0, 3.0, 6.0, 7.0);
  SolveConfig cfg;
  cfg.n_lambda = 4;
  cfg.r = 0;  // auto
  cfg.seed = 1;
  const EigResult<double> res = subspace_iteration(pencil, w, cfg);
  REQUIRE(res.converged);
  REQUIRE(res.r >= 1);
  REQUIRE(res.r <= 8);
  REQUIRE(res.lambdas.size() == 4);
}

TEST_CASE("oversized subspace is rejected") {
  const SparsePencil<double> pencil = diag_pencil({1.0, 2.0, 3.0});
  SolveConfig cfg;
  cfg.n_lambda = 3;  // n_ss = 4 > n = 3
  REQUIRE_THROWS_AS(subspace_iteration(pencil, window_from_gaps(0.0, 0.9, 2.1, 3.0), cfg),
                    DomainError);
}
