// Copyright 2026 The qrecall Authors
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

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("qrecall_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

CliRun run(const std::string& args) {
  const fs::path out = scratch() / "stdout.txt", err = scratch() / "stderr.txt";
  const std::string cmd = std::string(QRECALL_EXE) + " " + args + " > " + out.string() + " 2> " + err.string();
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
}

std::string data(const std::string& name) { return std::string(QRECALL_TEST_DATA) + "/" + name; }

std::string first_line(const std::string& text) { return text.substr(0, text.find('\n')); }

TEST(Cli, ProbsDeltaDiagonal) {
  const CliRun r = run("probs " + data("delta_diagonal.json") + " --jobs 2");
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::string line;
  int rows = 0;
  double total = 0.0;
  while (std::getline(in, line)) {
    if (line.rfind("#", 0) == 0 || line.rfind("i,", 0) == 0) continue;
    int i, j, possible;
    char label[16];
    double p;
    ASSERT_EQ(std::sscanf(line.c_str(), "%d,%d,\"%15[^\"]\",%lf,%d", &i, &j, label, &p, &possible), 5);
    total += p;
    ++rows;
  }
  EXPECT_EQ(rows, 9);
  EXPECT_NEAR(total, 1.0, 1e-12);
  EXPECT_NE(r.out.find("# route factorized"), std::string::npos);
  EXPECT_NE(r.out.find("i,j,label,probability,possible,purity,fidelity\n"), std::string::npos);
}

TEST(Cli, ProbsIsByteIdenticalAcrossRunsAndJobCounts) {
  const CliRun a = run("probs " + data("mixed_custom.json") + " --jobs 1");
  const CliRun b = run("probs " + data("mixed_custom.json") + " --jobs 3");
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, ProbsKappaKappaHasFidelityColumn) {
  const CliRun r = run("probs " + data("fourier_kappa_memory.json"));
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("#", 0) == 0 || line.rfind("i,", 0) == 0) continue;
    const double fid = std::stod(line.substr(line.rfind(',') + 1));
    EXPECT_NEAR(fid, 1.0, 1e-9) << line;
  }
}

TEST(Cli, ProbsWritesOutFile) {
  const fs::path target = scratch() / "probs.csv";
  const CliRun r = run("probs " + data("kappa_kappa.json") + " --out " + target.string());
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(run("probs " + data("kappa_kappa.json")).out, slurp(target));
}

TEST(Cli, SchemaErrorsExitTwoWithoutOutput) {
  for (const char* name : {"malformed.json", "missing_gamma.json", "does_not_exist.json"}) {
    const CliRun r = run("probs " + data(name));
    EXPECT_EQ(r.code, 2) << name;
    EXPECT_TRUE(r.out.empty()) << name;
    EXPECT_EQ(first_line(r.err).rfind("error schema:", 0), 0u) << r.err;
  }
  const CliRun bad_flag = run("probs " + data("kappa_kappa.json") + " --route teleport");
  EXPECT_EQ(bad_flag.code, 2);
  const CliRun usage = run("frobnicate");
  EXPECT_EQ(usage.code, 2);
  EXPECT_EQ(first_line(usage.err).rfind("error usage:", 0), 0u) << usage.err;
}

TEST(Cli, ValidationErrorsExitThree) {
  const CliRun basis = run("probs " + data("non_orthonormal_basis.json"));
  EXPECT_EQ(basis.code, 3);
  EXPECT_EQ(first_line(basis.err).rfind("error not_orthonormal:", 0), 0u) << basis.err;
  const CliRun positive = run("verify " + data("not_positive.json"));
  EXPECT_EQ(positive.code, 3);
  EXPECT_EQ(first_line(positive.err).rfind("error not_positive:", 0), 0u) << positive.err;
  const CliRun guard = run("evolve " + data("oracle_too_large.json") + " --i 1 --j 1 --route oracle");
  EXPECT_EQ(guard.code, 3);
  EXPECT_EQ(first_line(guard.err).rfind("error dimension_too_large:", 0), 0u) << guard.err;
}

TEST(Cli, EvolveImpossibleExitsFour) {
  const CliRun r = run("evolve " + data("delta_zero_weight.json") + " --i 1 --j 2");
  EXPECT_EQ(r.code, 4);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(first_line(r.err).rfind("error outcome_impossible:", 0), 0u) << r.err;
  EXPECT_NE(r.err.find("probability 0"), std::string::npos) << r.err;
}

TEST(Cli, EvolveRoutesAgreeAfterRounding) {
  for (int i = 1; i <= 2; ++i) {
    for (int j = 1; j <= 2; ++j) {
      const std::string base = "evolve " + data("mixed_custom.json") + " --i " + std::to_string(i) + " --j " +
                               std::to_string(j) + " --round 1e-8 --route ";
      const CliRun fact = run(base + "factorized");
      const CliRun orac = run(base + "oracle");
      const CliRun dir = run(base + "direct");
      ASSERT_EQ(fact.code, 0) << fact.err;
      ASSERT_EQ(orac.code, 0) << orac.err;
      const auto a = nlohmann::json::parse(fact.out), b = nlohmann::json::parse(orac.out),
                 c = nlohmann::json::parse(dir.out);
      EXPECT_EQ(a["state"].dump(), b["state"].dump());
      EXPECT_EQ(a["state"].dump(), c["state"].dump());
      EXPECT_EQ(a["route"], "factorized");
      EXPECT_EQ(b["route"], "oracle");
    }
  }
}

TEST(Cli, EvolveKappaMemoryStoresRotatedInput) {
  const CliRun r = run("evolve " + data("fourier_kappa_memory.json") + " --i 2 --j 3");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["label"], "z[2,3]");
  EXPECT_NEAR(doc["probability"].get<double>(), 1.0 / 9.0, 1e-12);
  // pure input stays pure
  const auto& spectral = doc["state"]["spectral"];
  EXPECT_NEAR(spectral[0]["weight"].get<double>(), 1.0, 1e-10);
}

TEST(Cli, VerifyRandomPasses) {
  const CliRun r = run("verify --random 3 50 7");
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  for (const char* name : {"entangled_basis_orthonormal", "measured_state_factorization", "spectral_sum_formula",
                           "channel_factorization", "representation_independence", "probability_completeness",
                           "splitting_isometry"}) {
    EXPECT_NE(r.out.find(std::string("PASS ") + name), std::string::npos) << name;
  }
}

TEST(Cli, VerifyFailureExitsFive) {
  const CliRun r = run("verify --random 3 3 1 --tolerance 0");
  EXPECT_EQ(r.code, 5);
  EXPECT_EQ(first_line(r.err).rfind("error verification_failed:", 0), 0u) << r.err;
  EXPECT_NE(r.out.find("FAIL "), std::string::npos);
}

TEST(Cli, VerifyExhaustiveDeltaScenariosAtTwo) {
  for (int a = 1; a <= 2; ++a) {
    for (int b = 1; b <= 2; ++b) {
      const fs::path file = scratch() / "delta_pair.json";
      std::ofstream(file) << R"({"n": 2, "basis": "delta", "rho": {"kind": "delta", "k": )" << a
                          << R"(}, "gamma": {"kind": "delta", "k": )" << b << "}}";
      const CliRun r = run("verify " + file.string());
      EXPECT_EQ(r.code, 0) << r.out << r.err;
    }
  }
}

TEST(Cli, SampleDeterministicAndHeaderOnlyForZero) {
  const CliRun a = run("sample " + data("delta_diagonal.json") + " --count 2000 --seed 4");
  const CliRun b = run("sample " + data("delta_diagonal.json") + " --count 2000 --seed 4 --jobs 2");
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.rfind("trial,i,j\n", 0), 0u);
  EXPECT_NE(a.err.find("# max_abs_deviation"), std::string::npos);
  const CliRun c = run("sample " + data("delta_diagonal.json") + " --count 2000 --seed 5");
  EXPECT_NE(a.out, c.out);
  const CliRun zero = run("sample " + data("delta_diagonal.json") + " --count 0");
  ASSERT_EQ(zero.code, 0);
  EXPECT_EQ(zero.out, "trial,i,j\n");
}

TEST(Cli, SampleFrequenciesWithinBinomialBound) {
  const fs::path summary = scratch() / "summary.csv";
  const CliRun r = run("sample " + data("delta_diagonal.json") + " --count 100000 --seed 3 --summary " + summary.string());
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(slurp(summary));
  std::string line;
  int cells = 0;
  while (std::getline(in, line)) {
    if (line.rfind("#", 0) == 0 || line.rfind("i,", 0) == 0) continue;
    int i, j;
    double exact, empirical, deviation, bound;
    ASSERT_EQ(std::sscanf(line.c_str(), "%d,%d,%lf,%lf,%lf,%lf", &i, &j, &exact, &empirical, &deviation, &bound), 6);
    EXPECT_LE(deviation, bound) << line;
    ++cells;
  }
  EXPECT_EQ(cells, 9);
}

TEST(Cli, BenchRowsAndGuard) {
  const CliRun r = run("bench --n-list 2,3,13 --route-list factorized,direct,oracle --max-outcomes 2");
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::string line;
  int rows = -1;  // header
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 3 * 3 - 1);
  EXPECT_EQ(r.out.find("13,oracle"), std::string::npos);
  EXPECT_NE(r.err.find("n=13 route=oracle"), std::string::npos);
}

TEST(Cli, Version) {
  const CliRun r = run("--version");
  EXPECT_EQ(r.code, 0);
  EXPECT_FALSE(r.out.empty());
}

}  // namespace
