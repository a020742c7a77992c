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

#ifndef ZOLOEIG_HAMILTONIAN_HPP
#define ZOLOEIG_HAMILTONIAN_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <tuple>
#include <vector>

#include "zoloeig/error.hpp"
#include "zoloeig/sparse.hpp"

namespace zoloeig {

/// Test-problem recipe: H = -(1/2) Laplacian + V on the unit cube with a
/// Dirichlet boundary, V a sum of three Gaussian wells of fixed radius 0.2
/// with seeded random centers in [0,1)^3 and depths in (0,1].
struct HamiltonianSpec {
  int n = 8;  // grid points per dimension; N = n^3
  struct Well {
    std::array<double, 3> center;
    double depth;
  };
  std::array<Well, 3> wells;
  static constexpr double radius = 0.2;
  std::uint64_t seed = 0;
};

/// Draws well centers and depths from the seed. The raw mt19937_64 stream is
/// scaled directly (uniform [0,1) for centers, (0,1] for depths) so files
/// regenerate bit-identically on any platform.
inline HamiltonianSpec make_hamiltonian_spec(int n, std::uint64_t seed) {
  HamiltonianSpec spec;
  spec.n = n;
  spec.seed = seed;
  std::mt19937_64 rng(seed);
  const auto u01 = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };  // [0,1)
  for (auto& well : spec.wells) {
    for (double& c : well.center) c = u01();
    well.depth = 1.0 - u01();  // (0,1]
  }
  return spec;
}

/// 7-point stencil discretization of the spec on an n^3 interior grid with
/// spacing h = 1/(n+1); B is the identity. Interior rows have 7 nonzeros.
inline SparsePencil<double> gen_hamiltonian(const HamiltonianSpec& spec) {
  const int n = spec.n;
  if (n < 4 || n > 64) throw DomainError("gen_hamiltonian: n outside [4,64]");
  const std::size_t big_n = static_cast<std::size_t>(n) * n * n;
  const double h = 1.0 / (n + 1);
  const double inv_h2 = 1.0 / (h * h);

  std::vector<std::tuple<std::size_t, std::size_t, double>> trip;
  trip.reserve(7 * big_n);
  const auto index = [n](int i, int j, int k) {
    return static_cast<std::size_t>(i) + static_cast<std::size_t>(n) * (j + static_cast<std::size_t>(n) * k);
  };
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) {
        const std::size_t row = index(i, j, k);
        const double x = (i + 1) * h, y = (j + 1) * h, z = (k + 1) * h;
        double v = 0.0;
        for (const auto& well : spec.wells) {
          const double dx = x - well.center[0];
          const double dy = y - well.center[1];
          const double dz = z - well.center[2];
          const double r2 = dx * dx + dy * dy + dz * dz;
          v -= well.depth * std::exp(-r2 / (2.0 * HamiltonianSpec::radius * HamiltonianSpec::radius));
        }
        trip.emplace_back(row, row, 3.0 * inv_h2 + v);
        if (i > 0) trip.emplace_back(row, index(i - 1, j, k), -0.5 * inv_h2);
        if (i + 1 < n) trip.emplace_back(row, index(i + 1, j, k), -0.5 * inv_h2);
        if (j > 0) trip.emplace_back(row, index(i, j - 1, k), -0.5 * inv_h2);
        if (j + 1 < n) trip.emplace_back(row, index(i, j + 1, k), -0.5 * inv_h2);
        if (k > 0) trip.emplace_back(row, index(i, j, k - 1), -0.5 * inv_h2);
        if (k + 1 < n) trip.emplace_back(row, index(i, j, k + 1), -0.5 * inv_h2);
      }
  SparsePencil<double> pencil;
  pencil.a_mat = CsrMatrix<double>::from_triplets(big_n, std::move(trip));
  return pencil;
}

}  // namespace zoloeig

#endif  // ZOLOEIG_HAMILTONIAN_HPP
