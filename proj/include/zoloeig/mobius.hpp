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

#ifndef ZOLOEIG_MOBIUS_HPP
#define ZOLOEIG_MOBIUS_HPP

#include <array>
#include <cmath>

#include "zoloeig/dense.hpp"
#include "zoloeig/error.hpp"
#include "zoloeig/window.hpp"

namespace zoloeig {

/// Degree-(1,1) transform T(x) = gamma (x - alpha)/(x - beta) mapping the gap
/// endpoints onto (-1, 1, ell1, -ell1); see fit_mobius.
struct MobiusFit {
  double gamma = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double ell1 = 0.0;

  double apply(double x) const { return gamma * (x - alpha) / (x - beta); }

  /// T at x, with the x -> +-inf limit resolved to gamma.
  double apply_extended(double x) const { return std::isinf(x) ? gamma : apply(x); }
};

/// Fits the unique Moebius transform with
///   T(a-) = -1,  T(a+) = 1,  T(b-) = ell1,  T(b+) = -ell1,
/// where infinite endpoints use the limit T(-+inf) = gamma.
///
/// ell1 comes from cross-ratio invariance: the cross ratio of the four gap
/// endpoints equals that of their images, ((1+ell1)/(1-ell1))^2, a quadratic
/// with exactly one root in (0,1). The remaining parameters (gamma, gamma
/// alpha, beta) then satisfy a 3x3 linear system from three of the four
/// conditions; the fourth is verified as a residual.
inline MobiusFit fit_mobius(const SpectralWindow& w) {
  w.validate();
  const double am = w.a_minus, ap = w.a_plus, bm = w.b_minus, bp = w.b_plus;

  // Cross ratio of the gap endpoints, as its cancellation-free excess over 1:
  //   C - 1 = width_a * width_b / ((bp - am)(bm - ap)),
  // degenerating to a single-width quotient at an infinite endpoint. Then
  //   ell1 = (sqrt(C) - 1)/(sqrt(C) + 1) = (C - 1)/(sqrt(C) + 1)^2
  // stays accurate for arbitrarily narrow gaps.
  double excess;
  if (std::isinf(am))
    excess = (bp - bm) / (bm - ap);
  else if (std::isinf(bp))
    excess = (ap - am) / (bm - ap);
  else
    excess = ((ap - am) * (bp - bm)) / ((bp - am) * (bm - ap));
  if (!(excess > 0.0) || !std::isfinite(excess))
    throw DomainError("fit_mobius: window yields an infeasible cross ratio");
  const double root = std::sqrt(1.0 + excess);
  const double ell1 = excess / ((root + 1.0) * (root + 1.0));
  if (!(ell1 > 0.0 && ell1 < 1.0)) throw NumericalError("fit_mobius: ell1 outside (0,1)");

  const std::array<double, 4> targets = {-1.0, 1.0, ell1, -ell1};
  const std::array<double, 4> points = {am, ap, bm, bp};

  // Row for the condition T(x) = t, linear in (gamma, q, beta) with q = gamma*alpha:
  //   x*gamma - q + t*beta = t*x.  An infinite x degenerates to gamma = t.
  const auto make_row = [](double x, double t) -> std::array<double, 4> {
    if (std::isinf(x)) return {1.0, 0.0, 0.0, t};
    return {x, -1.0, t, t * x};
  };

  Matrix<double> m(3, 3), rhs(3, 1);
  for (int i = 0; i < 3; ++i) {
    const auto row = make_row(points[i], targets[i]);
    for (int j = 0; j < 3; ++j) m(i, j) = row[j];
    rhs(i, 0) = row[3];
  }
  const Matrix<double> sol = lu_solve(m, rhs);
  MobiusFit fit;
  fit.gamma = sol(0, 0);
  fit.beta = sol(2, 0);
  fit.ell1 = ell1;
  if (fit.gamma == 0.0) throw NumericalError("fit_mobius: degenerate transform (gamma = 0)");
  fit.alpha = sol(1, 0) / fit.gamma;

  // The linear solve is backward stable but its parameter error scales like
  // 1/gap-width. The conditions themselves evaluate to ~1e-16 absolute near
  // the solution, so a short Newton polish on three finite conditions
  // restores full accuracy.
  {
    std::array<double, 3> px, pt;
    int nf = 0;
    for (int i = 0; i < 4 && nf < 3; ++i) {
      if (std::isinf(points[i])) continue;
      px[nf] = points[i];
      pt[nf] = targets[i];
      ++nf;
    }
    for (int it = 0; it < 8 && nf == 3; ++it) {
      Matrix<double> jac(3, 3), f(3, 1);
      double worst = 0.0;
      for (int i = 0; i < 3; ++i) {
        const double dx_a = px[i] - fit.alpha, dx_b = px[i] - fit.beta;
        f(i, 0) = fit.gamma * dx_a / dx_b - pt[i];
        worst = std::max(worst, std::abs(f(i, 0)));
        jac(i, 0) = dx_a / dx_b;
        jac(i, 1) = -fit.gamma / dx_b;
        jac(i, 2) = fit.gamma * dx_a / (dx_b * dx_b);
      }
      if (worst < 1e-15) break;
      Matrix<double> step;
      try {
        step = lu_solve(jac, f);
      } catch (const NumericalError&) {
        break;
      }
      fit.gamma -= step(0, 0);
      fit.alpha -= step(1, 0);
      fit.beta -= step(2, 0);
    }
  }

  const double scale = std::max({1.0, std::abs(ap), std::abs(bm)});
  for (int i = 0; i < 4; ++i) {
    const double res = std::abs(fit.apply_extended(points[i]) - targets[i]);
    if (!(res <= 1e-10 * scale))
      throw NumericalError("fit_mobius: residual of mapping condition exceeds tolerance");
  }

  const bool alpha_in_a = fit.alpha > am && fit.alpha < ap;
  const bool alpha_in_b = fit.alpha > bm && fit.alpha < bp;
  const bool beta_in_a = fit.beta > am && fit.beta < ap;
  const bool beta_in_b = fit.beta > bm && fit.beta < bp;
  if (!((alpha_in_a && beta_in_b) || (alpha_in_b && beta_in_a)))
    throw NumericalError("fit_mobius: alpha and beta do not occupy distinct eigengaps");
  return fit;
}

}  // namespace zoloeig

#endif  // ZOLOEIG_MOBIUS_HPP
