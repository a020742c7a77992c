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

#include <algorithm>
#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "zoloeig/matrix_market.hpp"
#include "zoloeig/serialize.hpp"

using nlohmann::json;

namespace {

const std::string kCli = ZOLOEIG_CLI_PATH;
const std::string kData = ZOLOEIG_DATA_DIR;

std::string tmp(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

int run(const std::string& args, const std::string& stdout_file = "/dev/null") {
  const std::string cmd = kCli + " " + args + " > " + stdout_file + " 2> " + tmp("cli_err.txt");
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("cli design: circle window at r = 9 stores nine poles on one circle") {
  const std::string out = tmp("cli_design.json");
  REQUIRE(run("design --window=-1.1,-0.9,0.9,1.1 --r 9 --out " + out) == 0);
  const json j = json::parse(read_file(out));
  REQUIRE(j["poles"].size() == 9);
  REQUIRE(j["inner"]["r"] == 9);
  const double alpha = j["alpha"], beta = j["beta"];
  const double radius = std::abs(alpha - beta) / 2.0, cx = (alpha + beta) / 2.0;
  for (const auto& p : j["poles"]) {
    const double re = p["re"], im = p["im"];
    REQUIRE(im > 0.0);
    REQUIRE(std::hypot(re - cx, im) == Catch::Approx(radius).epsilon(1e-10));
  }
}

TEST_CASE("cli design: tolerance-driven order stays at or below six for 1e-2 gaps") {
  const std::string out = tmp("cli_design_tol.json");
  REQUIRE(run("design --window=-1.005,-0.995,0.995,1.005 --tol 1e-12 --out " + out) == 0);
  const json j = json::parse(read_file(out));
  REQUIRE(j["inner"]["r"].get<int>() <= 6);
  REQUIRE(j["error_estimate"]["measured"].get<double>() <= 1e-12);
}

TEST_CASE("cli design: --samples 3 emits exactly three data rows") {
  const std::string out = tmp("cli_design_s3.json");
  const std::string curve = tmp("cli_curve3.csv");
  REQUIRE(run("design --window=-1.2,-0.8,0.8,1.2 --r 3 --out " + out + " --curve " + curve +
              " --samples 3") == 0);
  const std::string text = read_file(curve);
  int lines = 0;
  for (char c : text)
    if (c == '\n') ++lines;
  REQUIRE(lines == 4);  // header + 3 samples
  REQUIRE(text.rfind("x,R,S,error\n", 0) == 0);
}

TEST_CASE("cli solve: shipped diagonal pencil yields {3,4,5,6}") {
  const std::string out = tmp("cli_solve.json");
  const std::string vec = tmp("cli_solve_vec.bin");
  const std::string manifest = tmp("cli_solve_manifest.json");
  REQUIRE(run("solve --a " + kData + "/diag10.mtx --window 2,3,6,7 --nev 4 --r 3 --seed 5 --out " +
                  out + " --vectors " + vec,
              manifest) == 0);
  const json j = json::parse(read_file(out));
  REQUIRE(j["lambdas"].size() == 4);
  for (int k = 0; k < 4; ++k)
    REQUIRE(j["lambdas"][k].get<double>() == Catch::Approx(k + 3.0).margin(1e-9));
  REQUIRE(j["residual"].get<double>() <= 1e-10);
  REQUIRE(j["converged"].get<bool>());

  // eigenvector block file round-trips
  const zoloeig::Matrix<double> x = zoloeig::read_eigvec_binary<double>(vec);
  REQUIRE(x.rows() == 10);
  REQUIRE(x.cols() == 4);
  for (int k = 0; k < 4; ++k)
    REQUIRE(std::abs(x(k + 2, k)) == Catch::Approx(1.0).margin(1e-8));

  // the manifest is a JSON document naming the outputs
  const json m = json::parse(read_file(manifest));
  REQUIRE(m["command"] == "solve");
  REQUIRE(m["outputs"].size() == 2);
  REQUIRE(m["seed"] == 5);
}

TEST_CASE("cli bench: CSV format and the expected error ordering") {
  const std::string out = tmp("cli_bench.csv");
  REQUIRE(run("bench --gaps 1e-2 --factorizations 4 --methods zolo,citz,cigq --out " + out) == 0);
  std::ifstream in(out);
  std::string header;
  std::getline(in, header);
  REQUIRE(header == "method,r,poles,factorizations,linf_error");
  double zolo_err = 0.0;
  int rows = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++rows;
    std::stringstream ss(line);
    std::string method, tok;
    std::getline(ss, method, ',');
    double err = 0.0;
    for (int f = 0; f < 4; ++f) std::getline(ss, tok, ',');
    err = std::stod(tok);
    if (method == "zolo") {
      zolo_err = err;
      REQUIRE(err <= 1e-8);
    } else {
      REQUIRE(err >= 1e-5);
    }
  }
  REQUIRE(rows == 3);
  REQUIRE(zolo_err > 0.0);
}

TEST_CASE("cli gen-ham: sizes and determinism") {
  const std::string out1 = tmp("cli_ham1.mtx");
  const std::string out2 = tmp("cli_ham2.mtx");
  REQUIRE(run("gen-ham --n 8 --seed 3 --out " + out1) == 0);
  REQUIRE(run("gen-ham --n 8 --seed 3 --out " + out2) == 0);
  const zoloeig::MatrixMarketInfo info = zoloeig::probe_matrix_market(out1);
  REQUIRE(info.n == 512);
  REQUIRE(read_file(out1) == read_file(out2));

  const std::string out3 = tmp("cli_ham3.mtx");
  REQUIRE(run("gen-ham --n 8 --seed 4 --out " + out3) == 0);
  REQUIRE(read_file(out1) != read_file(out3));
}

TEST_CASE("cli gen-ham: gap screening reports delta inside the band") {
  const std::string out = tmp("cli_ham_screen.mtx");
  const std::string manifest = tmp("cli_screen_manifest.json");
  REQUIRE(run("gen-ham --n 8 --seed 1 --out " + out +
                  " --target-gap-range 1e-4,1e-3 --nev 88",
              manifest) == 0);
  const json m = json::parse(read_file(manifest));
  const double delta = m["config"]["screen"]["delta_lambda"];
  REQUIRE(delta >= 1e-4);
  REQUIRE(delta <= 1e-3);
}

TEST_CASE("cli errors: nonzero exit and a single-line message") {
  REQUIRE(run("design --window=1,2,3 --out " + tmp("x.json")) != 0);
  const std::string err = read_file(tmp("cli_err.txt"));
  REQUIRE(err.rfind("error: ", 0) == 0);
  REQUIRE(std::count(err.begin(), err.end(), '\n') == 1);

  REQUIRE(run("solve --a /nonexistent.mtx --window 2,3,6,7 --nev 4 --out " + tmp("y.json")) != 0);
  REQUIRE(run("bench --gaps 1e-2 --factorizations 7 --methods nope --out " + tmp("z.csv")) != 0);
}
