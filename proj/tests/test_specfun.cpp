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

#include "zoloeig/specfun.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <limits>

using namespace zoloeig;

namespace {

// Independent arithmetic-geometric-mean oracle: K = pi / (2 AGM(1, k')).
double agm_oracle_K(double k) {
  double a = 1.0, b = std::sqrt(1.0 - k * k);
  for (int i = 0; i < 60 && a - b > 1e-17 * a; ++i) {
    const double am = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = am;
  }
  return M_PI / (a + b);
}

}  // namespace

TEST_CASE("complete_elliptic_K at k = 0 is pi/2") {
  REQUIRE(complete_elliptic_K(0.0) == Catch::Approx(M_PI / 2).epsilon(1e-15));
}

TEST_CASE("complete_elliptic_K matches the AGM oracle") {
  // Frozen oracle values: agm_oracle_K(1/3) and agm_oracle_K(1/sqrt(2)).
  REQUIRE(complete_elliptic_K(1.0 / 3.0) == Catch::Approx(1.6173867356247324).epsilon(1e-14));
  REQUIRE(complete_elliptic_K(1.0 / std::sqrt(2.0)) ==
          Catch::Approx(1.8540746773013719).epsilon(1e-14));
  for (double k : {0.1, 0.25, 0.5, 0.8, 0.95, 0.999}) {
    REQUIRE(complete_elliptic_K(k) == Catch::Approx(agm_oracle_K(k)).epsilon(1e-14));
  }
}

TEST_CASE("complete_elliptic_K rejects out-of-domain moduli") {
  REQUIRE_THROWS_AS(complete_elliptic_K(-0.1), DomainError);
  REQUIRE_THROWS_AS(complete_elliptic_K(1.0), DomainError);
  REQUIRE_THROWS_AS(complete_elliptic_K(1.5), DomainError);
}

TEST_CASE("complete_elliptic_K is strictly increasing in k") {
  double prev = complete_elliptic_K(0.0);
  for (int i = 1; i <= 40; ++i) {
    const double k = i / 41.0;
    const double cur = complete_elliptic_K(k);
    REQUIRE(cur > prev);
    prev = cur;
  }
}

TEST_CASE("complement interface agrees with the direct one") {
  for (double k : {0.2, 0.6, 0.9}) {
    const double kc = std::sqrt(1.0 - k * k);
    REQUIRE(complete_elliptic_K_complement(kc) ==
            Catch::Approx(complete_elliptic_K(k)).epsilon(1e-14));
  }
  REQUIRE(std::isinf(complete_elliptic_K_complement(0.0)));
}

TEST_CASE("jacobi_elliptic at the origin is (0, 1, 1)") {
  for (double k : {0.0, 0.3, 0.9, 1.0}) {
    const EllipticTriple t = jacobi_elliptic(0.0, k);
    REQUIRE(t.sn == Catch::Approx(0.0).margin(1e-15));
    REQUIRE(t.cn == Catch::Approx(1.0).epsilon(1e-15));
    REQUIRE(t.dn == Catch::Approx(1.0).epsilon(1e-15));
  }
}

TEST_CASE("jacobi_elliptic degenerates to trigonometry at k = 0") {
  const EllipticTriple t = jacobi_elliptic(1.0, 0.0);
  REQUIRE(t.sn == Catch::Approx(std::sin(1.0)).margin(1e-14));
  REQUIRE(t.cn == Catch::Approx(std::cos(1.0)).margin(1e-14));
  REQUIRE(t.dn == Catch::Approx(1.0).margin(1e-14));
}

TEST_CASE("jacobi_elliptic half-argument identity sn(K/2) = 1/sqrt(1+k')") {
  const double k = 0.6;
  const double kp = 0.8;
  const double u = complete_elliptic_K(k) / 2.0;
  const EllipticTriple t = jacobi_elliptic(u, k);
  REQUIRE(t.sn == Catch::Approx(1.0 / std::sqrt(1.0 + kp)).margin(1e-12));
}

TEST_CASE("jacobi_elliptic spot values") {
  // Frozen from a 30-digit series evaluation of sn/cn/dn.
  const EllipticTriple a = jacobi_elliptic(0.7, 0.3);
  REQUIRE(a.sn == Catch::Approx(0.64064853972026228).margin(1e-13));
  REQUIRE(a.cn == Catch::Approx(0.76783425851826612).margin(1e-13));
  REQUIRE(a.dn == Catch::Approx(0.98135684150562001).margin(1e-13));
  const EllipticTriple b = jacobi_elliptic(2.1, 0.95);
  REQUIRE(b.sn == Catch::Approx(0.98745490480257063).margin(1e-13));
  REQUIRE(b.cn == Catch::Approx(0.15790126972683335).margin(1e-13));
  REQUIRE(b.dn == Catch::Approx(0.34641284893991003).margin(1e-13));
  const EllipticTriple c = jacobi_elliptic(-1.3, 0.99);
  REQUIRE(c.sn == Catch::Approx(-0.86433456617168558).margin(1e-13));
  REQUIRE(c.cn == Catch::Approx(0.5029172473884785).margin(1e-13));
  REQUIRE(c.dn == Catch::Approx(0.51748674875996592).margin(1e-13));
}

TEST_CASE("jacobi_elliptic triple identities across the fundamental domain") {
  for (double k : {0.05, 0.4, 0.6, 0.9, 0.999}) {
    const double K = complete_elliptic_K(k);
    for (int i = -16; i <= 16; ++i) {
      const double u = i * 4.0 * K / 16.0;
      const EllipticTriple t = jacobi_elliptic(u, k);
      REQUIRE(t.sn * t.sn + t.cn * t.cn == Catch::Approx(1.0).margin(1e-13));
      REQUIRE(t.dn * t.dn + k * k * t.sn * t.sn == Catch::Approx(1.0).margin(1e-13));
    }
  }
}

TEST_CASE("jacobi_elliptic periodicity sn(u + 4K) = sn(u)") {
  for (double k : {0.2, 0.7, 0.95}) {
    const double K = complete_elliptic_K(k);
    for (double u : {0.1, 0.9, 2.3, -1.7}) {
      const EllipticTriple t0 = jacobi_elliptic(u, k);
      const EllipticTriple t1 = jacobi_elliptic(u + 4.0 * K, k);
      REQUIRE(t1.sn == Catch::Approx(t0.sn).margin(1e-10));
      REQUIRE(t1.cn == Catch::Approx(t0.cn).margin(1e-10));
    }
  }
}

TEST_CASE("jacobi_elliptic quarter-period values sn(K) = 1, cn(K) = 0") {
  for (double k : {0.1, 0.5, 0.9, 0.99}) {
    const double K = complete_elliptic_K(k);
    const EllipticTriple t = jacobi_elliptic(K, k);
    REQUIRE(t.sn == Catch::Approx(1.0).margin(1e-12));
    REQUIRE(t.cn == Catch::Approx(0.0).margin(1e-12));
  }
}

TEST_CASE("jacobi_elliptic rejects non-finite arguments") {
  REQUIRE_THROWS_AS(jacobi_elliptic(std::numeric_limits<double>::quiet_NaN(), 0.5), DomainError);
  REQUIRE_THROWS_AS(jacobi_elliptic(std::numeric_limits<double>::infinity(), 0.5), DomainError);
  REQUIRE_THROWS_AS(jacobi_elliptic(1.0, -0.1), DomainError);
  REQUIRE_THROWS_AS(jacobi_elliptic(1.0, 1.1), DomainError);
}
