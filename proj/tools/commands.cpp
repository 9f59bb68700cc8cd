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

#include "commands.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <random>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "qrecall/channel_algebra.hpp"
#include "qrecall/error.hpp"
#include "qrecall/oracle.hpp"
#include "qrecall/random.hpp"
#include "qrecall/sampling.hpp"

#ifndef QRECALL_VERSION
#define QRECALL_VERSION "0.0.0"
#endif

namespace qrecall::cli {
namespace {

using nlohmann::json;

constexpr double kInfinity = std::numeric_limits<double>::infinity();

std::string metadata(const Scenario& scenario, std::string_view route) {
  std::ostringstream os;
  os << "# tool qrecall " << version() << '\n'
     << "# scenario_hash " << scenario.hash << '\n'
     << "# route " << route << '\n'
     << "# n " << scenario.n << '\n';
  return os.str();
}

double rounded(double x, double q) {
  if (q <= 0.0) return x;
  return std::round(x / q) * q + 0.0;  // + 0.0 folds -0 into 0
}

json complex_json(Complex z, double q) { return json::array({rounded(z.real(), q), rounded(z.imag(), q)}); }

json matrix_json(const Matrix& m, double q) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_json(m(r, c), q));
    rows.push_back(std::move(row));
  }
  return rows;
}

json state_json(const DensityOperator& state, double q) {
  Matrix m = state.matrix();
  RealVector weights = state.weights();
  Matrix vectors = state.eigenvectors();
  if (q > 0.0) {
    // Spectral data is recomputed from the rounded matrix so that equal
    // rounded matrices always produce equal dumps.
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      for (Eigen::Index c = 0; c < m.cols(); ++c) m(r, c) = {rounded(m(r, c).real(), q), rounded(m(r, c).imag(), q)};
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
    weights = solver.eigenvalues().reverse();
    vectors = solver.eigenvectors().rowwise().reverse();
  }
  json spectral = json::array();
  for (Eigen::Index k = 0; k < weights.size(); ++k) {
    json vec = json::array();
    for (Eigen::Index r = 0; r < vectors.rows(); ++r) vec.push_back(complex_json(vectors(r, k), q));
    spectral.push_back({{"weight", rounded(weights(k), q)}, {"vector", std::move(vec)}});
  }
  return {{"n", state.n()}, {"matrix", matrix_json(m, q)}, {"spectral", std::move(spectral)}};
}

class Checks {
 public:
  explicit Checks(std::optional<double> tolerance_override) : override_(tolerance_override) {
    add("entangled_basis_orthonormal", 1e-10);
    add("measured_state_factorization", 1e-9);
    add("spectral_sum_formula", 1e-9);
    add("channel_factorization", 1e-9);
    add("representation_independence", 1e-10);
    add("probability_completeness", 1e-10);
    add("splitting_isometry", 1e-10);
  }

  void record(const std::string& name, double error) {
    InvariantResult& r = report_.invariants[index_.at(name)];
    ++r.checked;
    if (!(error <= r.max_error)) r.max_error = error;  // NaN sticks
    if (!(error <= r.tolerance)) r.failed = true;
  }

  VerifyReport take() { return std::move(report_); }

 private:
  void add(const std::string& name, double tol) {
    index_[name] = report_.invariants.size();
    report_.invariants.push_back({name, override_.value_or(tol), 0.0, 0, false});
  }

  std::optional<double> override_;
  VerifyReport report_;
  std::map<std::string, std::size_t> index_;
};

double frobenius(const Matrix& a, const Matrix& b) { return (a - b).norm(); }

void check_instance(const DensityOperator& rho, const DensityOperator& gamma, const OrthonormalBasis& basis,
                    std::uint64_t seed, const LambdaOptions& options, Checks& checks) {
  const int n = basis.n();
  const int n2 = n * n;

  Matrix family(n2, n2);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      family.col((i - 1) * n + (j - 1)) = xi(basis, GroupIndex(i, n), GroupIndex(j, n)).xi.amplitudes();
  checks.record("entangled_basis_orthonormal",
                (family.adjoint() * family - Matrix::Identity(n2, n2)).cwiseAbs().maxCoeff());

  double total = 0.0;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const GroupIndex gi(i, n), gj(j, n);
      const auto f = evaluate_factorized(rho, gamma, basis, gi, gj, options);
      const auto d = evaluate_direct(rho, gamma, basis, gi, gj, options);
      total += outcome_probability(rho, gamma, basis, gi, gj);

      double factorization = std::abs(f.probability - d.probability);
      if (f.state.has_value() != d.state.has_value()) factorization = kInfinity;
      else if (f.state) factorization = std::max(factorization, frobenius(f.state->matrix(), d.state->matrix()));

      if (n <= kOracleMaxDimension) {
        OracleOptions oracle_options;
        oracle_options.tolerance = options.tolerance;
        oracle_options.impossible_threshold = options.impossible_threshold;
        const auto o = oracle_lambda(rho, gamma, basis, gi, gj, oracle_options);
        double spectral = std::abs(d.probability - o.probability);
        if (d.state.has_value() != o.conditional_state.has_value()) spectral = kInfinity;
        else if (d.state) spectral = std::max(spectral, frobenius(d.state->matrix(), o.conditional_state->matrix()));
        checks.record("spectral_sum_formula", spectral);

        if (f.state.has_value() != o.conditional_state.has_value()) factorization = kInfinity;
        else if (f.state) {
          factorization = std::max(factorization, frobenius(f.state->matrix(), o.conditional_state->matrix()));
        }
      }
      checks.record("channel_factorization", factorization);

      if (n <= kProductFormMaxDimension) {
        checks.record("measured_state_factorization", oracle_product_form_discrepancy(rho, gamma, basis, gi, gj));
      }
    }
  }
  checks.record("probability_completeness", std::abs(total - 1.0));

  // A degenerate tau: gamma's eigenbasis with weights averaged in pairs.
  RealVector paired = gamma.weights();
  for (Eigen::Index k = 0; k + 1 < paired.size(); k += 2) paired(k) = paired(k + 1) = 0.5 * (paired(k) + paired(k + 1));
  const Matrix& v = gamma.eigenvectors();
  const TraceClassOperator tau =
      TraceClassOperator::from_matrix(LinearMap(n, 1, 1, v * paired.cast<Complex>().asDiagonal() * v.adjoint()));
  const SpectralRepresentation original{tau.weights(), tau.eigenvectors()};
  const SpectralRepresentation rotated = random_equivalent_representation(tau, seed);
  checks.record("representation_independence",
                (k_tau_sum(original, rho.matrix()) - k_tau_sum(rotated, rho.matrix())).cwiseAbs().maxCoeff());

  Vector h = gamma.eigenvectors().col(0);
  h /= h.cwiseAbs().maxCoeff();
  const AmplitudeVector hv(n, 1, h);
  const AmplitudeVector probe = rho.eigenvector(0);
  const auto t = SplittingIsometry::make(hv);
  const auto branches = branch_channels(hv, rho);
  checks.record("splitting_isometry", std::max(std::abs(t.apply(probe).norm() - probe.norm()),
                                               std::abs(branches[0].probability + branches[1].probability - 1.0)));
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

}  // namespace

std::string version() { return QRECALL_VERSION; }

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string probs_table(const Scenario& scenario, Route route, int jobs) {
  LambdaOptions options;
  options.tolerance = scenario.tolerance;
  const auto dist = evaluate_outcomes(scenario.rho, scenario.gamma, scenario.basis, route, options, jobs);
  std::ostringstream os;
  os << metadata(scenario, to_string(route));
  os << "i,j,label,probability,possible,purity,fidelity\n";
  for (const auto& r : dist.records) {
    os << r.outcome.i.value() << ',' << r.outcome.j.value() << ",\"" << r.outcome.label << "\","
       << format_double(r.outcome.probability) << ',' << (r.possible ? 1 : 0) << ',';
    if (r.state) os << format_double(purity(*r.state));
    os << ',';
    if (r.state && scenario.basis.is_flat()) {
      const auto key = unitary_key(scenario.basis, r.outcome.i, r.outcome.j, scenario.gamma);
      if (key) {
        const Matrix& u = key->matrix();
        const Matrix recovered = u.adjoint() * r.state->matrix() * u;
        os << format_double(
            fidelity(DensityOperator::from_matrix(LinearMap(scenario.n, 1, 1, recovered), 1e-8), scenario.rho));
      }
    }
    os << '\n';
  }
  return os.str();
}

std::string evolve_dump(const Scenario& scenario, const EvolveRequest& request) {
  const int n = scenario.n;
  if (request.i < 1 || request.i > n || request.j < 1 || request.j > n) {
    throw Error(ErrorCode::kDimensionMismatch, "outcome indices must lie in 1.." + std::to_string(n));
  }
  const GroupIndex gi(request.i, n), gj(request.j, n);
  LambdaOptions options;
  options.tolerance = scenario.tolerance;
  const auto eval = evaluate_outcome(request.route, scenario.rho, scenario.gamma, scenario.basis, gi, gj, options);
  if (!eval.state) {
    throw Error(ErrorCode::kOutcomeImpossible,
                "outcome " + outcome_label(gi, gj) + " has probability " + format_double(eval.probability));
  }
  const double q = request.round_quantum;
  json out = {{"tool", "qrecall " + version()},
              {"scenario_hash", scenario.hash},
              {"route", std::string(to_string(request.route))},
              {"i", request.i},
              {"j", request.j},
              {"label", outcome_label(gi, gj)},
              {"probability", rounded(eval.probability, q)},
              {"state", state_json(*eval.state, q)}};
  return out.dump(2) + "\n";
}

bool VerifyReport::passed() const { return failures().empty(); }

std::vector<std::string> VerifyReport::failures() const {
  std::vector<std::string> names;
  for (const auto& r : invariants)
    if (r.failed) names.push_back(r.name);
  return names;
}

std::string VerifyReport::text() const {
  std::ostringstream os;
  for (const auto& r : invariants) {
    const char* verdict = r.failed ? "FAIL" : (r.checked == 0 ? "SKIP" : "PASS");
    os << verdict << ' ' << r.name << " checked=" << r.checked << " max_error=" << sci(r.max_error)
       << " tolerance=" << sci(r.tolerance) << '\n';
  }
  return os.str();
}

VerifyReport verify_scenario(const Scenario& scenario, std::optional<double> tolerance_override) {
  Checks checks(tolerance_override);
  LambdaOptions options;
  options.tolerance = scenario.tolerance;
  check_instance(scenario.rho, scenario.gamma, scenario.basis, scenario.seed.value_or(0), options, checks);
  return checks.take();
}

VerifyReport verify_random(int n, int count, std::uint64_t seed, std::optional<double> tolerance_override) {
  if (n < 1) throw Error(ErrorCode::kDimensionMismatch, "n must be >= 1");
  Checks checks(tolerance_override);
  std::mt19937_64 rng(seed);
  for (int t = 0; t < count; ++t) {
    const OrthonormalBasis basis = t % 3 == 0   ? OrthonormalBasis::delta(n)
                                   : t % 3 == 1 ? OrthonormalBasis::fourier(n)
                                                : random_basis(n, rng);
    const DensityOperator rho = random_density(n, rng, 1 + t % n);
    const DensityOperator gamma = random_density(n, rng, 1 + (t / 3) % n);
    check_instance(rho, gamma, basis, rng(), LambdaOptions{}, checks);
  }
  return checks.take();
}

SampleResult sample_table(const Scenario& scenario, std::size_t count, std::uint64_t seed, int jobs) {
  LambdaOptions options;
  options.tolerance = scenario.tolerance;
  const auto dist = evaluate_outcomes(scenario.rho, scenario.gamma, scenario.basis, Route::kFactorized, options, jobs);
  const auto weights = sampling_weights(dist);
  double total = 0.0;
  for (double w : weights) total += w;
  const auto draws = sample_indices(weights, seed, count);

  SampleResult result;
  std::ostringstream csv;
  csv << "trial,i,j\n";
  std::vector<std::size_t> hits(weights.size(), 0);
  for (std::size_t t = 0; t < draws.size(); ++t) {
    const auto& o = dist.records[draws[t]].outcome;
    csv << t + 1 << ',' << o.i.value() << ',' << o.j.value() << '\n';
    ++hits[draws[t]];
  }
  result.csv = csv.str();

  std::ostringstream summary;
  summary << "i,j,exact,empirical,deviation,three_sigma\n";
  for (std::size_t k = 0; k < weights.size(); ++k) {
    const double p = total > 0.0 ? weights[k] / total : 0.0;
    const double freq = count > 0 ? static_cast<double>(hits[k]) / static_cast<double>(count) : 0.0;
    const double dev = count > 0 ? std::abs(freq - p) : 0.0;
    const double bound = count > 0 ? 3.0 * std::sqrt(p * (1.0 - p) / static_cast<double>(count)) : 0.0;
    result.max_deviation = std::max(result.max_deviation, dev);
    const auto& o = dist.records[k].outcome;
    summary << o.i.value() << ',' << o.j.value() << ',' << format_double(p) << ',' << format_double(freq) << ','
            << format_double(dev) << ',' << format_double(bound) << '\n';
  }
  summary << "# samples " << count << '\n' << "# max_abs_deviation " << format_double(result.max_deviation) << '\n';
  result.summary = summary.str();
  return result;
}

std::string bench_table(const BenchRequest& request, std::vector<std::string>* skipped) {
  std::ostringstream os;
  os << "n,route,outcomes,total_seconds,seconds_per_outcome\n";
  for (int n : request.sizes) {
    if (n < 1) throw Error(ErrorCode::kDimensionMismatch, "bench sizes must be >= 1");
    std::mt19937_64 rng(request.seed);
    const DensityOperator rho = random_density(n, rng);
    const DensityOperator gamma = random_density(n, rng);
    const OrthonormalBasis basis = OrthonormalBasis::fourier(n);
    for (Route route : request.routes) {
      if (route == Route::kOracle && n > kOracleMaxDimension) {
        if (skipped) {
          skipped->push_back("n=" + std::to_string(n) + " route=oracle exceeds the oracle limit " +
                             std::to_string(kOracleMaxDimension));
        }
        continue;
      }
      const long all = static_cast<long>(n) * n;
      const long outcomes = request.max_outcomes > 0 ? std::min(all, request.max_outcomes) : all;
      const auto start = std::chrono::steady_clock::now();
      if (outcomes == all) {
        evaluate_outcomes(rho, gamma, basis, route, {}, request.jobs);
      } else {
        for (long k = 0; k < outcomes; ++k) {
          evaluate_outcome(route, rho, gamma, basis, GroupIndex(int(k / n) + 1, n), GroupIndex(int(k % n) + 1, n));
        }
      }
      const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      os << n << ',' << to_string(route) << ',' << outcomes << ',' << format_double(seconds) << ','
         << format_double(seconds / static_cast<double>(outcomes)) << '\n';
    }
  }
  return os.str();
}

}  // namespace qrecall::cli
