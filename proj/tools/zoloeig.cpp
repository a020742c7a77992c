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

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zoloeig/serialize.hpp"
#include "zoloeig/zoloeig.hpp"

namespace {

using namespace zoloeig;
using nlohmann::json;
using clock_type = std::chrono::steady_clock;

double elapsed_s(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

int thread_cap_from_env() {
  const char* env = std::getenv("ZOLOEIG_THREADS");
  if (!env) return 0;
  try {
    return std::max(0, std::stoi(env));
  } catch (...) {
    return 0;
  }
}

double parse_endpoint(const std::string& tok) {
  if (tok == "inf" || tok == "+inf") return std::numeric_limits<double>::infinity();
  if (tok == "-inf") return -std::numeric_limits<double>::infinity();
  std::size_t used = 0;
  const double v = std::stod(tok, &used);
  if (used != tok.size()) throw DomainError("bad window endpoint '" + tok + "'");
  return v;
}

SpectralWindow parse_window(const std::string& spec) {
  std::vector<std::string> toks;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) toks.push_back(tok);
  if (toks.size() != 4)
    throw DomainError("--window expects four comma-separated values a-,a+,b-,b+");
  return window_from_gaps(parse_endpoint(toks[0]), parse_endpoint(toks[1]),
                          parse_endpoint(toks[2]), parse_endpoint(toks[3]));
}

void emit_manifest(const std::string& command, const json& config, const json& timings,
                   const std::vector<std::string>& outputs, std::uint64_t seed) {
  json m;
  m["command"] = command;
  m["config"] = config;
  m["timings"] = timings;
  m["outputs"] = outputs;
  m["version"] = kVersion;
  m["seed"] = seed;
  std::cout << m.dump(2) << '\n';
}

// ---------------------------------------------------------------------------
// design

int cmd_design(const std::string& window_spec, int r, double tol, const std::string& out_path,
               const std::string& curve_path, int samples) {
  const auto t0 = clock_type::now();
  const SpectralWindow window = parse_window(window_spec);
  json config = {{"window", window_spec}, {"out", out_path}};

  int chosen = r;
  if (chosen <= 0) {
    const OrderChoice choice = choose_order(window, tol);
    chosen = choice.r;
    if (choice.capped)
      std::cerr << "zoloeig: requested tolerance unreachable at the order cap; using r = 8 "
                   "(bound "
                << choice.bound << ")\n";
    config["tol"] = tol;
  }
  config["r"] = chosen;

  const FilterDesign design = build_filter_design(window, chosen);
  json j = design_to_json(design);
  const ErrorEstimate est = error_estimate(design);
  j["error_estimate"] = {
      {"rho", est.rho}, {"lower", est.lower}, {"upper", est.upper}, {"measured", est.measured}};
  std::ofstream out(out_path);
  if (!out) throw DomainError("cannot write '" + out_path + "'");
  out << j.dump(2) << '\n';

  std::vector<std::string> outputs = {out_path};
  if (!curve_path.empty()) {
    write_error_curve_csv(curve_path, design, samples);
    outputs.push_back(curve_path);
    config["curve"] = curve_path;
    config["samples"] = samples;
  }
  emit_manifest("design", config, {{"total_s", elapsed_s(t0)}}, outputs, 0);
  return 0;
}

// ---------------------------------------------------------------------------
// solve

template <class S>
int run_solve(const std::string& a_path, const std::string& b_path, const SpectralWindow& window,
              const SolveConfig& cfg, const std::string& out_path, const std::string& vec_path,
              const json& config, clock_type::time_point t0) {
  SparsePencil<S> pencil;
  pencil.a_mat = read_matrix_market<S>(a_path);
  if (!b_path.empty()) pencil.b_mat = read_matrix_market<S>(b_path);

  const EigResult<S> res = subspace_iteration(pencil, window, cfg);
  if (!res.converged)
    std::cerr << "zoloeig: not converged after " << res.stats.n_iter
              << " subspace iterations (residual " << res.residual << ")\n";

  const json j = result_to_json(res, window);
  std::ofstream out(out_path);
  if (!out) throw DomainError("cannot write '" + out_path + "'");
  out << j.dump(2) << '\n';
  std::vector<std::string> outputs = {out_path};
  if (!vec_path.empty()) {
    write_eigvec_binary(vec_path, res.vectors);
    outputs.push_back(vec_path);
  }
  const json timings = {{"total_s", elapsed_s(t0)},
                        {"t_fact_s", res.stats.factorization_time},
                        {"t_iter_s", res.stats.iteration_time}};
  emit_manifest("solve", config, timings, outputs, cfg.seed);
  return res.converged ? 0 : 3;
}

// ---------------------------------------------------------------------------
// bench

int cmd_bench(double gaps, int factorizations, const std::string& methods,
              const std::string& out_path) {
  const auto t0 = clock_type::now();
  if (!(gaps > 0.0)) throw DomainError("--gaps must be positive");
  if (factorizations < 1 || factorizations > 16)
    throw DomainError("--factorizations must be in [1,16]");
  // gap width G splits as half-width G/2 on each side of the endpoints
  const double g = gaps / 2.0;
  const SpectralWindow window = window_from_gaps(-1.0 - g, -1.0 + g, 1.0 - g, 1.0 + g);

  std::ofstream out(out_path);
  if (!out) throw DomainError("cannot write '" + out_path + "'");
  out << "method,r,poles,factorizations,linf_error\n";
  std::stringstream ss(methods);
  std::string method;
  while (std::getline(ss, method, ',')) {
    double err = 0.0;
    int r = 0, poles = 0;
    if (method == "zolo") {
      const FilterDesign d = build_filter_design(window, factorizations);
      err = error_estimate(d).measured;
      r = factorizations;
      poles = 2 * factorizations;
    } else if (method == "citz" || method == "cigq") {
      const ContourKind kind =
          method == "citz" ? ContourKind::trapezoid : ContourKind::gauss_legendre;
      const PoleSet ps = baseline_contour_poles(kind, 2 * factorizations, window.a, window.b);
      err = detail::measure_filter_error(
          window, [&ps](double x) { return ps.eval(x).real(); }, 0.0);
      r = 2 * factorizations;
      poles = 2 * factorizations;
    } else {
      throw DomainError("unknown method '" + method + "' (expected zolo, citz or cigq)");
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s,%d,%d,%d,%.17g\n", method.c_str(), r, poles,
                  factorizations, err);
    out << buf;
  }
  const json config = {
      {"gaps", gaps}, {"factorizations", factorizations}, {"methods", methods}, {"out", out_path}};
  emit_manifest("bench", config, {{"total_s", elapsed_s(t0)}}, {out_path}, 0);
  return 0;
}

// ---------------------------------------------------------------------------
// gen-ham

int cmd_gen_ham(int n, std::uint64_t seed, const std::string& out_path,
                const std::string& gap_range, std::size_t nev) {
  const auto t0 = clock_type::now();
  json config = {{"n", n}, {"seed", seed}, {"out", out_path}};

  HamiltonianSpec spec = make_hamiltonian_spec(n, seed);
  SparsePencil<double> pencil = gen_hamiltonian(spec);
  json screen;
  if (!gap_range.empty()) {
    if (n > 16)
      throw DomainError("--target-gap-range screening uses the dense reference; n must be <= 16");
    std::stringstream ss(gap_range);
    std::string lo_s, hi_s;
    std::getline(ss, lo_s, ',');
    std::getline(ss, hi_s, ',');
    const double lo = std::stod(lo_s), hi = std::stod(hi_s);
    if (!(lo > 0.0 && lo < hi)) throw DomainError("--target-gap-range expects 0 < lo < hi");
    if (nev < 1) throw DomainError("--nev must be >= 1 for gap screening");
    config["target_gap_range"] = {lo, hi};
    config["nev"] = nev;

    constexpr int kMaxAttempts = 256;
    bool accepted = false;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
      spec = make_hamiltonian_spec(n, seed + attempt);
      pencil = gen_hamiltonian(spec);
      Matrix<double> dense(pencil.n(), pencil.n());
      for (std::size_t i = 0; i < pencil.n(); ++i)
        for (std::size_t k = pencil.a_mat.row_offsets[i]; k < pencil.a_mat.row_offsets[i + 1]; ++k)
          dense(i, pencil.a_mat.col_indices[k]) = pencil.a_mat.values[k];
      const std::vector<double> lam = dense_hermitian_eigenvalues(dense);
      if (nev + 1 > lam.size()) throw DomainError("--nev too large for this matrix");
      const double delta = (lam[nev] - lam[nev - 1]) / (lam[nev - 1] - lam[0]);
      if (delta >= lo && delta <= hi) {
        screen = {{"attempts", attempt + 1},
                  {"accepted_seed", seed + attempt},
                  {"delta_lambda", delta},
                  {"lambda_1", lam[0]},
                  {"lambda_nev", lam[nev - 1]},
                  {"lambda_nev_plus_1", lam[nev]}};
        accepted = true;
        break;
      }
    }
    if (!accepted)
      throw NumericalError("gap screening exhausted " + std::to_string(kMaxAttempts) +
                           " attempts without landing in the target range");
  }

  const std::vector<std::string> comments = {
      " 3D Hamiltonian, -(1/2) Laplacian + Gaussian wells",
      " n = " + std::to_string(n) + ", seed = " + std::to_string(spec.seed)};
  write_matrix_market(out_path, pencil.a_mat, comments);
  if (!screen.empty()) config["screen"] = screen;
  emit_manifest("gen-ham", config, {{"total_s", elapsed_s(t0)}}, {out_path}, spec.seed);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zoloeig: interior eigensolver with composed Zolotarev spectrum filters"};
  app.require_subcommand(1);

  std::string window_spec, out_path, curve_path;
  int order = 0, samples = 512;
  double design_tol = 1e-12;
  CLI::App* design = app.add_subcommand("design", "construct a filter for a spectral window");
  design->add_option("--window", window_spec, "gap endpoints a-,a+,b-,b+ (inf allowed at ends)")
      ->required();
  design->add_option("--r", order, "filter order (1..16); omit to pick from --tol");
  design->add_option("--tol", design_tol, "target filter error when --r is omitted");
  design->add_option("--out", out_path, "design JSON path")->required();
  design->add_option("--curve", curve_path, "error-curve CSV path");
  design->add_option("--samples", samples, "CSV sample count");

  std::string a_path, b_path, result_path, vec_path;
  std::uint64_t seed = 0;
  std::size_t nev = 0;
  int r_solve = 0;
  double tol = 1e-10, gmres_tol = 1e-12;
  std::size_t gmres_max = 50, max_iters = 5, oversample = 1;
  CLI::App* solve = app.add_subcommand("solve", "compute eigenpairs inside a window");
  solve->add_option("--a", a_path, "Matrix Market file for A")->required();
  solve->add_option("--b", b_path, "Matrix Market file for B (identity when absent)");
  solve->add_option("--window", window_spec, "gap endpoints a-,a+,b-,b+")->required();
  solve->add_option("--nev", nev, "number of eigenvalues expected inside")->required();
  solve->add_option("--r", r_solve, "filter order (auto when omitted)");
  solve->add_option("--tol", tol, "residual target");
  solve->add_option("--seed", seed, "RNG seed for the starting block");
  solve->add_option("--gmres-tol", gmres_tol, "inner multi-shift GMRES tolerance");
  solve->add_option("--gmres-max", gmres_max, "inner GMRES iteration cap");
  solve->add_option("--max-iters", max_iters, "subspace iteration cap");
  solve->add_option("--oversample", oversample, "extra subspace columns");
  solve->add_option("--out", result_path, "result JSON path")->required();
  solve->add_option("--vectors", vec_path, "binary eigenvector block path");

  double gaps = 1e-2;
  int factorizations = 4;
  std::string methods = "zolo,citz,cigq";
  CLI::App* bench = app.add_subcommand("bench", "filter-accuracy comparison CSV");
  bench->add_option("--gaps", gaps, "full eigengap width around the endpoints")->required();
  bench->add_option("--factorizations", factorizations, "factorization budget")->required();
  bench->add_option("--methods", methods, "comma list from zolo,citz,cigq");
  bench->add_option("--out", out_path, "bench CSV path")->required();

  int grid_n = 8;
  std::string gap_range;
  std::size_t gen_nev = 88;
  CLI::App* gen = app.add_subcommand("gen-ham", "generate a 3D Hamiltonian test problem");
  gen->add_option("--n", grid_n, "grid points per dimension (4..64)")->required();
  gen->add_option("--seed", seed, "well-placement seed");
  gen->add_option("--out", out_path, "Matrix Market output path")->required();
  gen->add_option("--target-gap-range", gap_range, "lo,hi acceptance band for delta_lambda");
  gen->add_option("--nev", gen_nev, "eigenvalue count defining the screened gap");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*design) return cmd_design(window_spec, order, design_tol, out_path, curve_path, samples);
    if (*solve) {
      const auto t0 = clock_type::now();
      const SpectralWindow window = parse_window(window_spec);
      SolveConfig cfg;
      cfg.n_lambda = nev;
      cfg.oversample_k = oversample;
      cfg.r = r_solve;
      cfg.tol = tol;
      cfg.max_subspace_iters = max_iters;
      cfg.gmres_tol = gmres_tol;
      cfg.gmres_max = gmres_max;
      cfg.seed = seed;
      cfg.threads = thread_cap_from_env();
      const json config = {{"a", a_path},        {"b", b_path},
                           {"window", window_spec}, {"nev", nev},
                           {"r", r_solve},       {"tol", tol},
                           {"gmres_tol", gmres_tol}, {"threads", cfg.threads},
                           {"out", result_path}};
      const bool complex_input = probe_matrix_market(a_path).complex_field ||
                                 (!b_path.empty() && probe_matrix_market(b_path).complex_field);
      if (complex_input)
        return run_solve<Complex>(a_path, b_path, window, cfg, result_path, vec_path, config, t0);
      return run_solve<double>(a_path, b_path, window, cfg, result_path, vec_path, config, t0);
    }
    if (*bench) return cmd_bench(gaps, factorizations, methods, out_path);
    if (*gen) return cmd_gen_ham(grid_n, seed, out_path, gap_range, gen_nev);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
