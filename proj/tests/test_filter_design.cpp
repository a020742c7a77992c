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

#include "zoloeig/filter_design.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <random>

using namespace zoloeig;

namespace {

SpectralWindow gap_window(double full_gap) {
  const double g = full_gap / 2.0;  // documented choice: half-width around +-1
  return window_from_gaps(-1.0 - g, -1.0 + g, 1.0 - g, 1.0 + g);
}

}  // namespace

TEST_CASE("build_filter_design: Fig-4 style window at r = 9") {
  const SpectralWindow w = window_from_gaps(-1.1, -0.9, 0.9, 1.1);
  const FilterDesign d = build_filter_design(w, 9);
  REQUIRE(d.inner_poles.size() == 9);
  REQUIRE(d.inner_weights.size() == 9);
  const Complex center(0.5 * (d.mobius.alpha + d.mobius.beta), 0.0);
  const double radius = 0.5 * std::abs(d.mobius.alpha - d.mobius.beta);
  for (const Complex& p : d.inner_poles) {
    REQUIRE(p.imag() > 0.0);
    REQUIRE(std::abs(p - center) == Catch::Approx(radius).epsilon(1e-10));
  }
  // The circle through the eigengaps: radius close to 1 for this window.
  REQUIRE(radius == Catch::Approx(std::sqrt(0.99)).margin(1e-10));
}

TEST_CASE("pole/weight form equals the composed direct form") {
  const SpectralWindow w = window_from_gaps(-1.3, -0.8, 1.1, 1.7);
  const FilterDesign d = build_filter_design(w, 4);
  std::mt19937_64 rng(42);
  for (int t = 0; t < 100; ++t) {
    const double x = -4.0 + 8.0 * ((rng() >> 11) * 0x1.0p-53);
    if (std::abs(x - d.mobius.beta) < 1e-3) continue;
    const double direct = eval_g_scalar(d, x);
    const double via_poles = eval_g_scalar_poles(d, x);
    REQUIRE(via_poles == Catch::Approx(direct).margin(1e-10 * std::max(1.0, std::abs(direct))));
  }
}

TEST_CASE("pole/weight form at infinity tends to Zhat(gamma)") {
  const SpectralWindow w = window_from_gaps(-2.0, -1.5, 1.5, 2.0);
  const FilterDesign d = build_filter_design(w, 3);
  const double limit = rescaled_eval(d.inner, d.mobius.gamma);
  REQUIRE(eval_g_scalar_poles(d, 1e13) == Catch::Approx(limit).margin(1e-9));
  REQUIRE(eval_g_scalar_poles(d, -1e13) == Catch::Approx(limit).margin(1e-9));
}

TEST_CASE("ell2, zmax and m_hat are mutually consistent") {
  const SpectralWindow w = gap_window(1e-2);
  const FilterDesign d = build_filter_design(w, 3);
  REQUIRE(d.ell2 == Catch::Approx((1.0 - d.inner.delta) / (1.0 + d.inner.delta)).epsilon(1e-12));
  REQUIRE(d.zmax == Catch::Approx(1.0 + d.inner.delta).epsilon(1e-12));
  REQUIRE(d.m_hat == Catch::Approx(d.inner.big_m / d.zmax).epsilon(1e-14));
  REQUIRE(d.ell2 == Catch::Approx(rescaled_eval(d.inner, d.mobius.ell1)).epsilon(1e-12));
}

TEST_CASE("filter values sit on the right branches") {
  const SpectralWindow w = window_from_gaps(-1.2, -0.9, 0.9, 1.2);
  const FilterDesign d = build_filter_design(w, 4);
  const double mid = 0.5 * (w.a_plus + w.b_minus);
  const double inside = eval_filter_scalar(d, mid);
  REQUIRE(inside >= 1.0 - d.delta0 - 1e-14);
  REQUIRE(inside <= 1.0 + d.delta0 + 1e-14);
  for (double x : {-50.0, 80.0, 1e6}) {
    const double outside = eval_filter_scalar(d, x);
    REQUIRE(std::abs(outside) <= d.delta0 + 1e-14);
  }
  REQUIRE_THROWS_AS(eval_filter_scalar(d, d.mobius.beta), DomainError);
}

TEST_CASE("composition identity: Z_2r2(Zhat_2r1(x)) = Z_(2r1)(2r2)(x)") {
  const int pairs[][2] = {{2, 2}, {3, 3}, {2, 4}};
  for (const auto& p : pairs) {
    const int r1 = p[0], r2 = p[1];
    for (double ell1 : {1e-2, 1e-3}) {
      const ZolotarevCoeffs inner = zolotarev_coeffs(r1, ell1);
      const double ell2 = (1.0 - inner.delta) / (1.0 + inner.delta);
      const ZolotarevCoeffs outer = zolotarev_coeffs(r2, ell2);
      const ZolotarevCoeffs full = zolotarev_coeffs(2 * r1 * r2, ell1);
      double sup = 0.0;
      const double lr = std::log(1.0 / ell1);
      for (int i = 0; i < 5000; ++i) {
        const double x = ell1 * std::exp(lr * i / 4999.0);
        for (double s : {1.0, -1.0}) {
          const double composed = zolotarev_eval(outer, rescaled_eval(inner, s * x));
          const double direct = zolotarev_eval(full, s * x);
          sup = std::max(sup, std::abs(composed - direct));
        }
      }
      REQUIRE(sup <= 1e-9);
    }
  }
}

TEST_CASE("measured error decreases with order, by at least 2x per step") {
  // Window whose cross ratio puts ell1 near 0.01.
  const double g = std::sqrt(0.0392);
  const SpectralWindow w = window_from_gaps(-1.0 - g, -1.0 + g, 1.0 - g, 1.0 + g);
  double prev = 0.0;
  for (int r = 1; r <= 4; ++r) {
    const FilterDesign d = build_filter_design(w, r);
    const ErrorEstimate e = error_estimate(d);
    REQUIRE(e.measured < 1.0);
    if (r > 1) REQUIRE(e.measured * 2.0 <= prev);
    prev = e.measured;
  }
}

TEST_CASE("rho grows without bound as ell1 -> 1") {
  REQUIRE(detail::goncar_rho(0.5) > detail::goncar_rho(0.01));
  REQUIRE(detail::goncar_rho(1.0 - 1e-9) > 1e4);
  REQUIRE(detail::goncar_rho(1.0 - 1e-12) > detail::goncar_rho(1.0 - 1e-9));
}

TEST_CASE("gaps 1e-2: six factorizations reach deep below 1e-12") {
  const FilterDesign d = build_filter_design(gap_window(1e-2), 6);
  const ErrorEstimate e = error_estimate(d);
  REQUIRE(e.measured <= 1e-12);
  REQUIRE(e.rho > 1.0);
  REQUIRE(e.lower <= e.upper);
}

TEST_CASE("choose_order behaviour") {
  REQUIRE(choose_order(gap_window(1e-2), 1e-12).r <= 6);
  REQUIRE(choose_order(window_from_gaps(-1.5, -0.7, 0.7, 1.5), 0.5).r == 1);
  const OrderChoice easy = choose_order(gap_window(1e-2), 1e-10);
  const OrderChoice hard = choose_order(gap_window(1e-6), 1e-10);
  REQUIRE(hard.r > easy.r);
  REQUIRE_THROWS_AS(choose_order(gap_window(1e-2), 2.0), DomainError);
}

TEST_CASE("choose_order caps at 8 with a flag") {
  const OrderChoice c = choose_order(gap_window(1e-12), 1e-15);
  REQUIRE(c.r == 8);
  REQUIRE(c.capped);
}

TEST_CASE("baseline contour poles: geometry and midpoint value") {
  for (ContourKind kind : {ContourKind::trapezoid, ContourKind::gauss_legendre}) {
    const PoleSet ps = baseline_contour_poles(kind, 8, -1.0, 1.0);
    REQUIRE(ps.poles.size() == 8);
    for (const Complex& p : ps.poles) REQUIRE(std::abs(p.imag()) > 1e-6);
    // conjugate closure
    for (const Complex& p : ps.poles) {
      bool found = false;
      for (const Complex& q : ps.poles)
        if (std::abs(q - std::conj(p)) < 1e-12) found = true;
      REQUIRE(found);
    }
    const Complex mid = ps.eval(0.0);
    REQUIRE(std::abs(mid - Complex(1.0)) < 0.1);
    for (double x : {-2.0, -0.43, 0.78, 3.1}) {
      REQUIRE(std::abs(ps.eval(x).imag()) < 1e-12);
    }
  }
  REQUIRE_THROWS_AS(baseline_contour_poles(ContourKind::trapezoid, 7, -1.0, 1.0), DomainError);
}

TEST_CASE("composed filter beats contour baselines by 1000x at equal pole budget") {
  const SpectralWindow w = gap_window(1e-2);
  const FilterDesign zolo = build_filter_design(w, 4);
  const double zolo_err = error_estimate(zolo).measured;
  REQUIRE(zolo_err <= 1e-7);
  for (ContourKind kind : {ContourKind::trapezoid, ContourKind::gauss_legendre}) {
    const PoleSet ps = baseline_contour_poles(kind, 8, w.a, w.b);
    const double base_err = detail::measure_filter_error(
        w, [&ps](double x) { return ps.eval(x).real(); }, 0.0);
    REQUIRE(base_err >= 1e-5);
    REQUIRE(base_err >= 1e3 * zolo_err);
  }
}
