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

#ifndef ZOLOEIG_FILTER_DESIGN_HPP
#define ZOLOEIG_FILTER_DESIGN_HPP

#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <utility>
#include <vector>

#include "zoloeig/error.hpp"
#include "zoloeig/mobius.hpp"
#include "zoloeig/specfun.hpp"
#include "zoloeig/window.hpp"
#include "zoloeig/zolotarev.hpp"

namespace zoloeig {

/// Rational filter in pole/weight form: R(x) = a0 + sum_j a_j / (x - s_j).
/// Conjugate pairs are stored explicitly so evaluation at real x is real.
struct PoleSet {
  std::vector<Complex> poles;
  std::vector<Complex> weights;
  Complex constant{0.0, 0.0};

  Complex eval(double x) const {
    Complex v = constant;
    for (std::size_t j = 0; j < poles.size(); ++j) v += weights[j] / (Complex(x) - poles[j]);
    return v;
  }
};

/// Everything needed to evaluate and apply the composed rectangular filter
///   R(x) = ( Z_outer( Zhat_inner( T(x) ) ) + 1 ) / 2
/// for a spectral window: the Moebius fit, inner/outer Zolotarev coefficient
/// sets, the inner partial fraction in pole/weight form (the r contour poles
/// with positive imaginary part; conjugates implicit), and the outer
/// partial-fraction weights used by the iterative stage.
struct FilterDesign {
  SpectralWindow window;
  MobiusFit mobius;
  ZolotarevCoeffs inner;               // order r at ell1
  double zmax = 0.0;                   // max of Z_inner over [ell1, 1]
  double m_hat = 0.0;                  // M_inner / zmax
  double ell2 = 0.0;                   // Zhat_inner(ell1; ell1)
  ZolotarevCoeffs outer;               // order r at ell2
  std::vector<double> inner_pf;        // a-hat_j, partial fractions of Z_inner
  std::vector<Complex> inner_poles;    // sigma-hat_j, Im > 0
  std::vector<Complex> inner_weights;  // w-hat_j; effective residue is m_hat * w-hat_j
  double constant_term = 0.0;          // m_hat * sum_j a-hat_j gamma / (gamma^2 + c-hat_{2j-1})
  std::vector<double> outer_pf;        // a_j, partial fractions of Z_outer
  double delta0 = 0.0;                 // measured max |S_ab - R| over sampled Omega

  int order() const { return inner.r; }
};

/// Zhat_inner(T(x)); the spectrum of the inner operator G maps through this.
inline double eval_g_scalar(const FilterDesign& d, double x) {
  if (x == d.mobius.beta) throw DomainError("eval_g_scalar: x is the pole of T");
  const double t = d.mobius.apply(x);
  if (!std::isfinite(t)) return 0.0;  // T blew up next to beta; Z vanishes at infinity
  return rescaled_eval(d.inner, t);
}

/// The composed filter R(x) = (Z_outer(Zhat_inner(T(x))) + 1) / 2.
inline double eval_filter_scalar(const FilterDesign& d, double x) {
  return 0.5 * (zolotarev_eval(d.outer, eval_g_scalar(d, x)) + 1.0);
}

/// Limit of the filter as |x| -> inf (both tails agree: T -> gamma).
inline double eval_filter_at_infinity(const FilterDesign& d) {
  return 0.5 * (zolotarev_eval(d.outer, rescaled_eval(d.inner, d.mobius.gamma)) + 1.0);
}

/// Zhat_inner(T(x)) through the pole/weight representation instead of the
/// product form; the two routes agreeing is the content of the partial
/// fraction identities.
inline double eval_g_scalar_poles(const FilterDesign& d, double x) {
  Complex acc(d.constant_term, 0.0);
  for (std::size_t j = 0; j < d.inner_poles.size(); ++j) {
    const Complex w = d.m_hat * d.inner_weights[j];
    acc += w / (Complex(x) - d.inner_poles[j]);
    acc += std::conj(w) / (Complex(x) - std::conj(d.inner_poles[j]));
  }
  return acc.real();
}

namespace detail {

/// Max |S_ab - R| over a dense sample of Omega clipped to one interior width
/// beyond the gaps, plus 1/x-mapped tail samples and the x -> inf limit.
inline double measure_filter_error(const SpectralWindow& w, const std::function<double(double)>& filt,
                                   double value_at_infinity, int per_branch = 2000) {
  double worst = std::abs(value_at_infinity);  // S = 0 at infinity
  const auto visit = [&](double x, double target) {
    const double v = std::abs(filt(x) - target);
    if (v > worst) worst = v;
  };
  const double span = std::max(w.b - w.a, 1e-30);
  for (int i = 0; i <= per_branch; ++i)
    visit(w.a_plus + (w.b_minus - w.a_plus) * i / per_branch, 1.0);
  const int half = per_branch / 2, tail = std::max(per_branch / 8, 4);
  if (!w.left_open()) {
    const double lo = w.a_minus - span;
    for (int i = 0; i <= half; ++i) visit(lo + (w.a_minus - lo) * i / half, 0.0);
    for (int i = 0; i < tail; ++i) visit(w.a_minus - span / ((i + 0.5) / tail), 0.0);
  }
  if (!w.right_open()) {
    const double hi = w.b_plus + span;
    for (int i = 0; i <= half; ++i) visit(w.b_plus + (hi - w.b_plus) * i / half, 0.0);
    for (int i = 0; i < tail; ++i) visit(w.b_plus + span / ((i + 0.5) / tail), 0.0);
  }
  return worst;
}

}  // namespace detail

/// Constructs the composed filter for a window at inner/outer order r.
inline FilterDesign build_filter_design(const SpectralWindow& window, int r) {
  if (r < 1 || r > 16) throw DomainError("build_filter_design: order must be in [1,16]");
  FilterDesign d;
  d.window = window;
  d.mobius = fit_mobius(window);
  d.inner = zolotarev_coeffs(r, d.mobius.ell1);
  d.zmax = d.inner.zmax;
  d.m_hat = d.inner.big_m / d.zmax;
  d.ell2 = (1.0 - d.inner.delta) / (1.0 + d.inner.delta);
  d.outer = zolotarev_coeffs(r, d.ell2);
  d.inner_pf = partial_fraction_weights(d.inner);
  d.outer_pf = partial_fraction_weights(d.outer);

  const double ga = d.mobius.gamma, al = d.mobius.alpha, be = d.mobius.beta;
  double ct = 0.0;
  d.inner_poles.reserve(r);
  d.inner_weights.reserve(r);
  for (int j = 0; j < r; ++j) {
    const double c_odd = d.inner.c[2 * j];
    const double rt = std::sqrt(c_odd);
    const Complex den(ga, rt);  // gamma + i sqrt(c_{2j-1})
    Complex sigma = (ga * al + Complex(0.0, rt) * be) / den;
    Complex wj = d.inner_pf[j] * (sigma - be) / (2.0 * den);
    if (sigma.imag() < 0.0) {
      sigma = std::conj(sigma);
      wj = std::conj(wj);
    }
    d.inner_poles.push_back(sigma);
    d.inner_weights.push_back(wj);
    ct += d.inner_pf[j] * ga / (ga * ga + c_odd);
  }
  d.constant_term = d.m_hat * ct;

  d.delta0 = detail::measure_filter_error(
      window, [&d](double x) { return eval_filter_scalar(d, x); }, eval_filter_at_infinity(d));
  return d;
}

/// Gonchar-type error bracket for the composed filter plus the measured error.
/// The bracket is an asymptotic diagnostic; hard decisions use `measured`.
struct ErrorEstimate {
  double rho = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  double measured = 0.0;
};

namespace detail {

inline double goncar_rho(double ell1) {
  const double mu = (1.0 - std::sqrt(ell1)) / (1.0 + std::sqrt(ell1));
  const double mu_c = std::sqrt((1.0 - mu) * (1.0 + mu));
  // K(mu') and K(mu), each through the complement interface of the other.
  const double k_mu_prime = complete_elliptic_K_complement(mu);
  const double k_mu = complete_elliptic_K_complement(mu_c);
  return std::exp(M_PI * k_mu_prime / (4.0 * k_mu));
}

inline std::pair<double, double> goncar_bracket(double rho, int degree_sq) {
  const double pw = std::exp(degree_sq * std::log(rho));
  const double lower = 2.0 / (pw + 1.0);
  const double upper = (pw > 1.0) ? 2.0 / (pw - 1.0) : std::numeric_limits<double>::infinity();
  return {lower, upper};
}

}  // namespace detail

inline ErrorEstimate error_estimate(const FilterDesign& d) {
  ErrorEstimate e;
  e.rho = detail::goncar_rho(d.mobius.ell1);
  const int deg = 2 * d.order();
  const auto [lo, hi] = detail::goncar_bracket(e.rho, deg * deg);
  e.lower = lo;
  e.upper = hi;
  e.measured = detail::measure_filter_error(
      d.window, [&d](double x) { return eval_filter_scalar(d, x); }, eval_filter_at_infinity(d));
  return e;
}

struct OrderChoice {
  int r = 0;
  double bound = 0.0;  // Gonchar upper bound at the chosen order
  bool capped = false;
};

/// Smallest r in [1,8] whose Gonchar upper bound meets eps; 8 (capped) if none.
inline OrderChoice choose_order(const SpectralWindow& window, double eps) {
  if (!(eps >= 1e-16) || !(eps < 1.0)) throw DomainError("choose_order: eps outside [1e-16, 1)");
  const MobiusFit fit = fit_mobius(window);
  const double rho = detail::goncar_rho(fit.ell1);
  OrderChoice choice;
  for (int r = 1; r <= 8; ++r) {
    const int deg = 2 * r;
    choice.r = r;
    choice.bound = detail::goncar_bracket(rho, deg * deg).second;
    if (choice.bound <= eps) return choice;
  }
  choice.capped = true;
  return choice;
}

enum class ContourKind { trapezoid, gauss_legendre };

namespace detail {

/// Gauss-Legendre nodes and weights on (-1,1) by Newton iteration.
inline void gauss_legendre_rule(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.resize(n);
  weights.resize(n);
  for (int k = 0; k < (n + 1) / 2; ++k) {
    double x = std::cos(M_PI * (k + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[k] = -x;
    nodes[n - 1 - k] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    weights[k] = w;
    weights[n - 1 - k] = w;
  }
}

}  // namespace detail

/// Rational filters from quadrature of the circle contour through (a,b):
/// trapezoid uses p equispaced angles offset from the real axis; Gauss-Legendre
/// places p/2 nodes in the angle parameter on the upper semicircle and mirrors
/// them by conjugation. Weights fold in the contour derivative so that the
/// filter approximates the indicator of (a,b).
inline PoleSet baseline_contour_poles(ContourKind kind, int p, double a, double b) {
  if (p < 2 || p % 2 != 0) throw DomainError("baseline_contour_poles: pole count must be even, >= 2");
  if (!(a < b)) throw DomainError("baseline_contour_poles: empty interval");
  const double c0 = 0.5 * (a + b), rad = 0.5 * (b - a);
  PoleSet ps;
  ps.poles.reserve(p);
  ps.weights.reserve(p);
  if (kind == ContourKind::trapezoid) {
    for (int j = 0; j < p; ++j) {
      const double th = 2.0 * M_PI * (j + 0.5) / p;
      const Complex e = std::polar(1.0, th);
      ps.poles.push_back(c0 + rad * e);
      ps.weights.push_back(-(rad / p) * e);
    }
  } else {
    std::vector<double> t, w;
    detail::gauss_legendre_rule(p / 2, t, w);
    for (int k = 0; k < p / 2; ++k) {
      const double th = 0.5 * M_PI * (1.0 + t[k]);
      const Complex e = std::polar(1.0, th);
      const Complex alpha = -(w[k] * rad / 4.0) * e;
      ps.poles.push_back(c0 + rad * e);
      ps.weights.push_back(alpha);
      ps.poles.push_back(c0 + rad * std::conj(e));
      ps.weights.push_back(std::conj(alpha));
    }
  }
  return ps;
}

}  // namespace zoloeig

#endif  // ZOLOEIG_FILTER_DESIGN_HPP
