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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"
#include "qrecall/error.hpp"

namespace {

using namespace qrecall;
using namespace qrecall::cli;

int fail(std::string_view reason, std::string_view message, int code) {
  std::cerr << "error " << reason << ": " << message << '\n';
  return code;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw SchemaError("cannot write " + path);
  out << text;
}

Route route_from(const std::string& name) {
  const auto r = parse_route(name);
  if (!r) throw SchemaError("unknown route \"" + name + "\"");
  return *r;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simulate the teleportation-based recognition channel."};
  app.require_subcommand(1);
  app.set_version_flag("--version", version());
  int jobs = 0;
  app.add_option("--jobs", jobs, "Worker threads for outcome sweeps (default: QRECALL_JOBS or all cores)")
      ->check(CLI::NonNegativeNumber);
  app.fallthrough();

  std::string scenario_path, out_path, route_name = "factorized";

  auto* probs = app.add_subcommand("probs", "Tabulate outcome probabilities as CSV");
  probs->add_option("scenario", scenario_path, "Scenario JSON file")->required();
  probs->add_option("--route", route_name, "factorized | direct | oracle");
  probs->add_option("--out", out_path, "Write CSV here instead of stdout");

  EvolveRequest evolve_request;
  auto* evolve = app.add_subcommand("evolve", "Dump the conditional memory state for one outcome");
  evolve->add_option("scenario", scenario_path, "Scenario JSON file")->required();
  evolve->add_option("--i", evolve_request.i, "Outcome index i (1-based)")->required();
  evolve->add_option("--j", evolve_request.j, "Outcome index j (1-based)")->required();
  evolve->add_option("--route", route_name, "factorized | direct | oracle");
  evolve->add_option("--round", evolve_request.round_quantum, "Round numbers to multiples of this value")
      ->check(CLI::NonNegativeNumber);
  evolve->add_option("--out", out_path, "Write JSON here instead of stdout");

  std::vector<std::uint64_t> random_args;
  auto* verify = app.add_subcommand("verify", "Check the library invariants on a scenario or random inputs");
  verify->add_option("scenario", scenario_path, "Scenario JSON file");
  verify->add_option("--random", random_args, "n count seed")->expected(3);
  std::optional<double> check_tolerance;
  verify->add_option("--tolerance", check_tolerance, "Use this tolerance for every invariant")
      ->check(CLI::NonNegativeNumber);

  std::size_t count = 0;
  std::optional<std::uint64_t> seed;
  std::string summary_path;
  auto* sample = app.add_subcommand("sample", "Sample recognition outcomes");
  sample->add_option("scenario", scenario_path, "Scenario JSON file")->required();
  sample->add_option("--count", count, "Number of draws")->required();
  sample->add_option("--seed", seed, "Generator seed (default: scenario seed, else 0)");
  sample->add_option("--out", out_path, "Write CSV here instead of stdout");
  sample->add_option("--summary", summary_path, "Also write the frequency summary here");

  std::string n_list = "2,4,8", route_list = "factorized,oracle";
  long max_outcomes = 0;
  auto* bench = app.add_subcommand("bench", "Time the evaluation routes");
  bench->add_option("--n-list", n_list, "Comma-separated dimensions");
  bench->add_option("--route-list", route_list, "Comma-separated routes");
  bench->add_option("--max-outcomes", max_outcomes, "Evaluate at most this many outcomes per row")
      ->check(CLI::NonNegativeNumber);
  bench->add_option("--out", out_path, "Write CSV here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail("usage", e.what(), kExitSchema);
  }

  if (jobs == 0) jobs = default_jobs();

  try {
    if (*probs) {
      const Scenario scenario = load_scenario(scenario_path);
      emit(probs_table(scenario, route_from(route_name), jobs), out_path);
    } else if (*evolve) {
      evolve_request.route = route_from(route_name);
      const Scenario scenario = load_scenario(scenario_path);
      emit(evolve_dump(scenario, evolve_request), out_path);
    } else if (*verify) {
      VerifyReport report;
      if (!random_args.empty()) {
        if (!scenario_path.empty()) throw SchemaError("give either a scenario file or --random, not both");
        report = verify_random(static_cast<int>(random_args[0]), static_cast<int>(random_args[1]), random_args[2], check_tolerance);
      } else {
        if (scenario_path.empty()) throw SchemaError("verify needs a scenario file or --random n count seed");
        report = verify_scenario(load_scenario(scenario_path), check_tolerance);
      }
      if (!report.passed()) {
        std::string names;
        for (const auto& name : report.failures()) names += (names.empty() ? "" : ",") + name;
        fail("verification_failed", names, kExitVerifyFailed);
        std::cout << report.text() << std::flush;
        return kExitVerifyFailed;
      }
      std::cout << report.text() << std::flush;
    } else if (*sample) {
      const Scenario scenario = load_scenario(scenario_path);
      const auto result = sample_table(scenario, count, seed.value_or(scenario.seed.value_or(0)), jobs);
      emit(result.csv, out_path);
      if (!summary_path.empty()) emit(result.summary, summary_path);
      std::cerr << "# samples " << count << '\n'
                << "# max_abs_deviation " << format_double(result.max_deviation) << '\n';
    } else if (*bench) {
      BenchRequest request;
      for (const auto& item : split_list(n_list)) {
        try {
          request.sizes.push_back(std::stoi(item));
        } catch (const std::exception&) {
          throw SchemaError("bad n-list entry \"" + item + "\"");
        }
      }
      for (const auto& item : split_list(route_list)) request.routes.push_back(route_from(item));
      request.max_outcomes = max_outcomes;
      request.jobs = jobs;
      std::vector<std::string> skipped;
      const std::string table = bench_table(request, &skipped);
      emit(table, out_path);
      for (const auto& note : skipped) std::cerr << "# skipped " << note << '\n';
    }
  } catch (const SchemaError& e) {
    return fail("schema", e.what(), kExitSchema);
  } catch (const Error& e) {
    const int code = e.code() == ErrorCode::kOutcomeImpossible ? kExitImpossible : kExitInvalid;
    std::cerr << "error " << e.what() << '\n';
    return code;
  } catch (const std::exception& e) {
    return fail("internal", e.what(), 1);
  }
  return kExitOk;
}
