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

#ifndef ZOLOEIG_SERIALIZE_HPP
#define ZOLOEIG_SERIALIZE_HPP

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#include "zoloeig/dense.hpp"
#include "zoloeig/eigensolver.hpp"
#include "zoloeig/error.hpp"
#include "zoloeig/filter_design.hpp"
#include "zoloeig/window.hpp"

namespace zoloeig {

/// Infinite endpoints serialize as JSON null.
inline nlohmann::json window_to_json(const SpectralWindow& w) {
  return {{"a", w.a},           {"b", w.b},           {"a_minus", w.a_minus},
          {"a_plus", w.a_plus}, {"b_minus", w.b_minus}, {"b_plus", w.b_plus}};
}

inline nlohmann::json design_to_json(const FilterDesign& d) {
  nlohmann::json j;
  j["window"] = window_to_json(d.window);
  j["gamma"] = d.mobius.gamma;
  j["alpha"] = d.mobius.alpha;
  j["beta"] = d.mobius.beta;
  j["ell1"] = d.mobius.ell1;
  j["ell2"] = d.ell2;
  j["inner"] = {{"r", d.inner.r},
                {"c", d.inner.c},
                {"M", d.inner.big_m},
                {"zmax", d.zmax},
                {"a", d.inner_pf}};
  j["outer"] = {{"r", d.outer.r}, {"c", d.outer.c}, {"M", d.outer.big_m}, {"a", d.outer_pf}};
  nlohmann::json poles = nlohmann::json::array();
  nlohmann::json weights = nlohmann::json::array();
  for (std::size_t k = 0; k < d.inner_poles.size(); ++k) {
    poles.push_back({{"re", d.inner_poles[k].real()}, {"im", d.inner_poles[k].imag()}});
    const Complex w = d.m_hat * d.inner_weights[k];  // effective residue of G
    weights.push_back({{"re", w.real()}, {"im", w.imag()}});
  }
  j["poles"] = poles;
  j["weights"] = weights;
  j["constant_term"] = d.constant_term;
  j["delta0"] = d.delta0;
  return j;
}

template <class S>
nlohmann::json result_to_json(const EigResult<S>& res, const SpectralWindow& window) {
  nlohmann::json j;
  j["lambdas"] = res.lambdas;
  j["residual"] = res.residual;
  j["converged"] = res.converged;
  j["stats"] = {{"n_ss", res.stats.n_ss},
                {"n_iter", res.stats.n_iter},
                {"n_gmres", res.stats.n_gmres},
                {"n_solv", res.stats.n_solv},
                {"t_fact_s", res.stats.factorization_time},
                {"t_iter_s", res.stats.iteration_time},
                {"t_total_s", res.stats.factorization_time + res.stats.iteration_time}};
  j["window"] = window_to_json(window);
  j["r"] = res.r;
  return j;
}

/// Error-curve CSV (columns x, R(x), S(x), error) with exactly `samples` data
/// rows spanning one interior width past the gaps (finite fallbacks at
/// unbounded endpoints).
inline void write_error_curve_csv(const std::string& path, const FilterDesign& d, int samples) {
  if (samples < 1) throw DomainError("write_error_curve_csv: need at least one sample");
  const SpectralWindow& w = d.window;
  const double span = (w.b_minus > w.a_plus) ? w.b_minus - w.a_plus : 1.0;
  const double lo = w.left_open() ? w.a_plus - 2.0 * span : w.a_minus - span;
  const double hi = w.right_open() ? w.b_minus + 2.0 * span : w.b_plus + span;
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write '" + path + "'");
  out << "x,R,S,error\n";
  char buf[160];
  for (int i = 0; i < samples; ++i) {
    const double x = samples == 1 ? lo : lo + (hi - lo) * i / (samples - 1.0);
    const double r = (x == d.mobius.beta) ? eval_filter_scalar(d, std::nextafter(x, hi)) :
                                            eval_filter_scalar(d, x);
    const double s = (x > w.a && x < w.b) ? 1.0 : 0.0;
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", x, r, s, std::abs(r - s));
    out << buf;
  }
}

/// Eigenvector block file: magic "ZEIGVEC1", u64 n, u64 k, u32 scalar tag
/// (0 = real64, 1 = complex128), then the column-major IEEE-754
/// little-endian payload.
template <class S>
void write_eigvec_binary(const std::string& path, const Matrix<S>& x) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write '" + path + "'");
  out.write("ZEIGVEC1", 8);
  const std::uint64_t n = x.rows(), k = x.cols();
  const std::uint32_t tag = is_complex_v<S> ? 1 : 0;
  out.write(reinterpret_cast<const char*>(&n), 8);
  out.write(reinterpret_cast<const char*>(&k), 8);
  out.write(reinterpret_cast<const char*>(&tag), 4);
  out.write(reinterpret_cast<const char*>(x.data()), sizeof(S) * n * k);
  if (!out) throw DomainError("write to '" + path + "' failed");
}

template <class S>
Matrix<S> read_eigvec_binary(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open '" + path + "'");
  char magic[8];
  in.read(magic, 8);
  if (std::string(magic, 8) != "ZEIGVEC1") throw DomainError("bad eigenvector file magic");
  std::uint64_t n = 0, k = 0;
  std::uint32_t tag = 0;
  in.read(reinterpret_cast<char*>(&n), 8);
  in.read(reinterpret_cast<char*>(&k), 8);
  in.read(reinterpret_cast<char*>(&tag), 4);
  if (tag != (is_complex_v<S> ? 1u : 0u)) throw DomainError("eigenvector scalar tag mismatch");
  Matrix<S> x(n, k);
  in.read(reinterpret_cast<char*>(x.data()), sizeof(S) * n * k);
  if (!in) throw DomainError("truncated eigenvector file");
  return x;
}

}  // namespace zoloeig

#endif  // ZOLOEIG_SERIALIZE_HPP
