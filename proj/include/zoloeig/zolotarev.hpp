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

#ifndef ZOLOEIG_ZOLOTAREV_HPP
#define ZOLOEIG_ZOLOTAREV_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "zoloeig/error.hpp"
#include "zoloeig/specfun.hpp"

namespace zoloeig {

/// Coefficients of the best rational sign approximant of type (2r-1, 2r)
/// on [-1,-ell] u [ell,1]:
///
///   Z(x) = M x prod_j (x^2 + c_{2j}) / prod_j (x^2 + c_{2j-1}).
///
/// M is normalized so the values on [ell,1] oscillate in [1-delta, 1+delta].
struct ZolotarevCoeffs {
  int r = 0;
  double ell = 0.0;
  std::vector<double> c;        // c_1 .. c_{2r-1}, strictly increasing
  double big_m = 0.0;           // normalization constant M
  double delta = 0.0;           // max |sign(x) - Z(x)| on the domain
  double zmax = 0.0;            // max of Z over [ell,1] (= 1 + delta)
  std::vector<double> extrema;  // the 2r+1 oscillation points in [ell,1]
};

namespace detail {

/// Unnormalized product form f(x) = x prod (x^2+c_even) / prod (x^2+c_odd).
inline double zolotarev_product_raw(const std::vector<double>& c, double x) {
  const int r = static_cast<int>((c.size() + 1) / 2);
  if (std::abs(x) > 1e100) return 1.0 / x;  // tail limit of x^{2r-1}/x^{2r}
  const double x2 = x * x;
  double v = x / (x2 + c[2 * (r - 1)]);
  for (int j = 0; j + 1 < r; ++j) v *= (x2 + c[2 * j + 1]) / (x2 + c[2 * j]);
  return v;
}

/// Golden-section refinement of a bracketed interior maximum of g on [a,b].
inline double golden_max(const std::function<double(double)>& g, double a, double b) {
  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double g1 = g(x1), g2 = g(x2);
  const double tol = 1e-15 * std::max({1.0, std::abs(a), std::abs(b)});
  for (int it = 0; it < 200 && (b - a) > tol; ++it) {
    if (g1 < g2) {
      a = x1;
      x1 = x2;
      g1 = g2;
      x2 = a + kInvPhi * (b - a);
      g2 = g(x2);
    } else {
      b = x2;
      x2 = x1;
      g2 = g1;
      x1 = b - kInvPhi * (b - a);
      g1 = g(x1);
    }
  }
  return 0.5 * (a + b);
}

/// Locates the local extrema of f on [lo,hi] by a log-spaced scan followed by
/// golden-section refinement. Returns interior extrema only, ascending.
inline std::vector<double> scan_interior_extrema(const std::function<double(double)>& f, double lo,
                                                 double hi, int samples) {
  std::vector<double> xs(samples), fs(samples);
  const double lr = std::log(hi / lo);
  for (int i = 0; i < samples; ++i) {
    xs[i] = lo * std::exp(lr * static_cast<double>(i) / (samples - 1));
    fs[i] = f(xs[i]);
  }
  xs.front() = lo;
  xs.back() = hi;
  std::vector<double> out;
  int prev_sign = 0;
  int prev_at = 0;
  for (int i = 0; i + 1 < samples; ++i) {
    const double d = fs[i + 1] - fs[i];
    const int s = (d > 0) - (d < 0);
    if (s == 0) continue;
    if (prev_sign != 0 && s != prev_sign) {
      const double a = xs[prev_at];
      const double b = xs[i + 1];
      const bool is_max = prev_sign > 0;
      const double x = is_max ? golden_max(f, a, b) : golden_max([&](double t) { return -f(t); }, a, b);
      out.push_back(x);
    }
    prev_sign = s;
    prev_at = i;
  }
  return out;
}

}  // namespace detail

/// Builds the Zolotarev coefficients for order r and parameter ell.
/// Coefficients come from the elliptic-function formula; the normalization M
/// and the oscillation error delta are measured on [ell,1] via a dense scan
/// with golden-section refinement.
inline ZolotarevCoeffs zolotarev_coeffs(int r, double ell) {
  if (r < 1 || r > 24) throw DomainError("zolotarev_coeffs: order must be in [1,24]");
  if (!(ell > 1e-12) || !(ell < 1.0)) throw DomainError("zolotarev_coeffs: ell outside (1e-12, 1)");

  ZolotarevCoeffs z;
  z.r = r;
  z.ell = ell;

  // c_j = ell^2 sn^2 / cn^2 at u = j K'/(2r), modulus ell' = sqrt(1 - ell^2).
  // The complement of ell' is ell itself, so everything is evaluated through
  // the complement interface and never forms 1 - ell'^2.
  const double kp = complete_elliptic_K_complement(ell);
  z.c.resize(2 * r - 1);
  for (int j = 1; j <= 2 * r - 1; ++j) {
    const EllipticTriple t = jacobi_elliptic_complement(j * kp / (2 * r), ell);
    z.c[j - 1] = ell * ell * (t.sn * t.sn) / (t.cn * t.cn);
  }
  for (std::size_t j = 0; j + 1 < z.c.size(); ++j)
    if (!(z.c[j] < z.c[j + 1]))
      throw NumericalError("zolotarev_coeffs: coefficients not strictly increasing");

  const auto f = [&z](double x) { return detail::zolotarev_product_raw(z.c, x); };
  std::vector<double> interior = detail::scan_interior_extrema(f, ell, 1.0, 4096);

  if (static_cast<int>(interior.size()) != 2 * r - 1) {
    // In the degenerate regime (ell -> 1, oscillation below roundoff) the scan
    // cannot resolve the extrema; any interior points serve equally well.
    const double f_lo = f(ell), f_hi = f(1.0);
    double fmin = std::min(f_lo, f_hi), fmax = std::max(f_lo, f_hi);
    for (double x : interior) {
      fmin = std::min(fmin, f(x));
      fmax = std::max(fmax, f(x));
    }
    if ((fmax - fmin) / fmax < 1e-10) {
      interior.resize(2 * r - 1);
      for (int i = 0; i < 2 * r - 1; ++i)
        interior[i] = ell * std::pow(1.0 / ell, (i + 1.0) / (2 * r));
    } else {
      throw NumericalError("zolotarev_coeffs: extremum scan found " +
                           std::to_string(interior.size()) + " interior extrema, expected " +
                           std::to_string(2 * r - 1));
    }
  }

  z.extrema.reserve(2 * r + 1);
  z.extrema.push_back(ell);
  z.extrema.insert(z.extrema.end(), interior.begin(), interior.end());
  z.extrema.push_back(1.0);

  double fmin = f(ell), fmax = f(ell);
  for (double x : z.extrema) {
    const double v = f(x);
    fmin = std::min(fmin, v);
    fmax = std::max(fmax, v);
  }
  z.big_m = 2.0 / (fmin + fmax);
  z.delta = (fmax - fmin) / (fmax + fmin);
  z.zmax = z.big_m * fmax;
  return z;
}

/// Z(x) via the normalized product form.
inline double zolotarev_eval(const ZolotarevCoeffs& z, double x) {
  if (!std::isfinite(x)) throw DomainError("zolotarev_eval: non-finite argument");
  return z.big_m * detail::zolotarev_product_raw(z.c, x);
}

/// Rescaled Zolotarev function: Z(x) / max_{[ell,1]} Z.
inline double rescaled_eval(const ZolotarevCoeffs& z, double x) { return zolotarev_eval(z, x) / z.zmax; }

/// Partial-fraction weights a_1..a_r of Z(x) = M x sum_j a_j/(x^2 + c_{2j-1}).
inline std::vector<double> partial_fraction_weights(const ZolotarevCoeffs& z) {
  const int r = z.r;
  // odd-indexed coefficients d_j = c_{2j-1}, even-indexed e_j = c_{2j}
  std::vector<double> d(r), e(r - 1);
  for (int j = 0; j < r; ++j) d[j] = z.c[2 * j];
  for (int j = 0; j + 1 < r; ++j) e[j] = z.c[2 * j + 1];

  std::vector<double> a(r, 0.0);
  if (r == 1) {
    a[0] = 1.0;
    return a;
  }
  double tail = 1.0;
  for (int j = 0; j + 1 < r; ++j) {
    double bj = e[j] - d[j];
    for (int k = 0; k + 1 < r; ++k) {
      if (k == j) continue;
      const double den = d[k] - d[j];
      if (std::abs(den) < 1e-300) throw NumericalError("partial_fraction_weights: coincident poles");
      bj *= (e[k] - d[j]) / den;
    }
    const double den = d[r - 1] - d[j];
    if (std::abs(den) < 1e-300) throw NumericalError("partial_fraction_weights: coincident poles");
    a[j] = bj / den;
    tail -= a[j];
  }
  a[r - 1] = tail;
  return a;
}

}  // namespace zoloeig

#endif  // ZOLOEIG_ZOLOTAREV_HPP
