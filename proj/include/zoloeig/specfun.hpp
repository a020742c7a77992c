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

#ifndef ZOLOEIG_SPECFUN_HPP
#define ZOLOEIG_SPECFUN_HPP

#include <cmath>
#include <iostream>
#include <limits>

#include "zoloeig/error.hpp"

namespace zoloeig {

/// Values of the Jacobi elliptic functions at a common argument and modulus.
struct EllipticTriple {
  double sn;
  double cn;
  double dn;
};

namespace detail {

// A modulus this close to 1 signals an ill-posed spectral window upstream;
// clamp and keep going rather than feeding the AGM a degenerate input.
inline constexpr double kModulusClamp = 1.0 - 1e-12;

inline double clamp_modulus(double k, const char* who) {
  if (k > kModulusClamp && k < 1.0) {
    std::cerr << "zoloeig: " << who << ": modulus " << k << " clamped to " << kModulusClamp
              << " (near-degenerate eigengap?)\n";
    return kModulusClamp;
  }
  return k;
}

}  // namespace detail

/// K for the modulus whose complement is kc, i.e. K(sqrt(1-kc^2)), computed by
/// the AGM of (1, kc). Taking kc directly avoids forming 1-k^2 when k is
/// close to 1, which is exactly the regime the Zolotarev coefficients live in.
inline double complete_elliptic_K_complement(double kc) {
  if (!(kc >= 0.0) || kc > 1.0) throw DomainError("complete_elliptic_K_complement: kc outside [0,1]");
  if (kc == 0.0) return std::numeric_limits<double>::infinity();
  double a = 1.0, b = kc;
  for (int i = 0; i < 64 && std::abs(a - b) > 1e-17 * a; ++i) {
    const double am = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = am;
  }
  return M_PI / (2.0 * a);
}

/// Complete elliptic integral of the first kind,
/// K(k) = int_0^{pi/2} dtheta / sqrt(1 - k^2 sin^2 theta), for 0 <= k < 1.
inline double complete_elliptic_K(double k) {
  if (!(k >= 0.0) || k >= 1.0) throw DomainError("complete_elliptic_K: modulus outside [0,1)");
  k = detail::clamp_modulus(k, "complete_elliptic_K");
  const double kc = std::sqrt((1.0 - k) * (1.0 + k));
  return complete_elliptic_K_complement(kc);
}

/// sn, cn, dn at argument u for the modulus whose complement is kc
/// (Bulirsch's descending Landen/AGM scheme, stable for kc near 0).
inline EllipticTriple jacobi_elliptic_complement(double u, double kc) {
  if (!std::isfinite(u)) throw DomainError("jacobi_elliptic: non-finite argument");
  if (!(kc >= 0.0) || kc > 1.0) throw DomainError("jacobi_elliptic: complement outside [0,1]");
  if (kc == 0.0) {
    const double c = 1.0 / std::cosh(u);
    return {std::tanh(u), c, c};
  }
  constexpr int kMaxStages = 32;
  double em[kMaxStages], en[kMaxStages];
  double a = 1.0, b = kc, dn = 1.0;
  int l = 0;
  for (int i = 0; i < kMaxStages; ++i) {
    l = i;
    em[i] = a;
    en[i] = b;
    if (std::abs(a - b) <= 1e-15 * a) break;
    const double am = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = am;
  }
  const double c_final = 0.5 * (em[l] + en[l]);
  double phi_arg = c_final * u;
  double sn = std::sin(phi_arg);
  double cn = std::cos(phi_arg);
  // Scale the trigonometric seed back down through the Landen ladder.
  if (sn != 0.0) {
    double aa = cn / sn;
    double c = c_final * aa;
    for (int i = l; i >= 0; --i) {
      const double bb = em[i];
      aa *= c;
      c *= dn;
      dn = (en[i] + aa) / (bb + aa);
      aa = c / bb;
    }
    const double inv = 1.0 / std::sqrt(c * c + 1.0);
    sn = (sn >= 0.0) ? inv : -inv;
    cn = c * sn;
  }
  return {sn, cn, dn};
}

/// sn(u;k), cn(u;k), dn(u;k) for modulus k in [0,1].
inline EllipticTriple jacobi_elliptic(double u, double k) {
  if (!std::isfinite(u)) throw DomainError("jacobi_elliptic: non-finite argument");
  if (!(k >= 0.0) || k > 1.0) throw DomainError("jacobi_elliptic: modulus outside [0,1]");
  if (k == 1.0) return jacobi_elliptic_complement(u, 0.0);
  k = detail::clamp_modulus(k, "jacobi_elliptic");
  const double kc = std::sqrt((1.0 - k) * (1.0 + k));
  return jacobi_elliptic_complement(u, kc);
}

}  // namespace zoloeig

#endif  // ZOLOEIG_SPECFUN_HPP
