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

#include "scenario.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "qrecall/channel_algebra.hpp"
#include "qrecall/error.hpp"

namespace qrecall::cli {
namespace {

using nlohmann::json;

[[noreturn]] void schema(std::string_view where, std::string_view what) {
  throw SchemaError(std::string(where) + ": " + std::string(what));
}

const json& field(const json& obj, const char* key, std::string_view where) {
  if (!obj.is_object()) schema(where, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) schema(where, std::string("missing field \"") + key + "\"");
  return *it;
}

int as_int(const json& v, std::string_view where) {
  if (!v.is_number_integer()) schema(where, "expected an integer");
  return v.get<int>();
}

double as_double(const json& v, std::string_view where) {
  if (!v.is_number()) schema(where, "expected a number");
  return v.get<double>();
}

GroupIndex as_index(const json& v, int n, std::string_view where) {
  const int k = as_int(v, where);
  if (k < 1 || k > n) throw Error(ErrorCode::kDimensionMismatch, std::string(where) + ": index out of range");
  return GroupIndex(k, n);
}

void expect_array(const json& v, std::size_t size, std::string_view where) {
  if (!v.is_array()) schema(where, "expected an array");
  if (v.size() != size) {
    throw Error(ErrorCode::kDimensionMismatch,
                std::string(where) + ": expected " + std::to_string(size) + " entries, got " +
                    std::to_string(v.size()));
  }
}

}  // namespace

Complex parse_complex(const json& value, std::string_view where) {
  if (value.is_number()) return {value.get<double>(), 0.0};
  if (value.is_array() && value.size() == 2 && value[0].is_number() && value[1].is_number()) {
    return {value[0].get<double>(), value[1].get<double>()};
  }
  schema(where, "expected a number or an [re, im] pair");
}

AmplitudeVector parse_vector(const json& value, int n, std::string_view where) {
  expect_array(value, static_cast<std::size_t>(n), where);
  Vector v(n);
  for (int k = 0; k < n; ++k) v(k) = parse_complex(value[k], where);
  return AmplitudeVector(n, 1, std::move(v));
}

Matrix parse_matrix(const json& value, int n, std::string_view where) {
  expect_array(value, static_cast<std::size_t>(n), where);
  Matrix m(n, n);
  for (int r = 0; r < n; ++r) {
    expect_array(value[r], static_cast<std::size_t>(n), where);
    for (int c = 0; c < n; ++c) m(r, c) = parse_complex(value[r][c], where);
  }
  return m;
}

OrthonormalBasis parse_basis(const json& spec, int n, double tol) {
  if (spec.is_string()) {
    const auto name = spec.get<std::string>();
    if (name == "delta") return OrthonormalBasis::delta(n);
    if (name == "fourier") return OrthonormalBasis::fourier(n);
    schema("basis", "unknown basis \"" + name + "\"");
  }
  // custom[k] is the vector b_{k+1}
  const json& rows = field(spec, "custom", "basis");
  expect_array(rows, static_cast<std::size_t>(n), "basis.custom");
  Matrix columns(n, n);
  for (int k = 0; k < n; ++k) columns.col(k) = parse_vector(rows[k], n, "basis.custom").amplitudes();
  return OrthonormalBasis::custom(columns, tol);
}

DensityOperator parse_state(const json& spec, int n, double tol, std::string_view where) {
  const std::string kind_where = std::string(where) + ".kind";
  const json& kind_value = field(spec, "kind", where);
  if (!kind_value.is_string()) schema(kind_where, "expected a string");
  const auto kind = kind_value.get<std::string>();
  if (kind == "pure") return DensityOperator::from_pure(parse_vector(field(spec, "vector", where), n, where));
  if (kind == "mixed") {
    const json& w = field(spec, "weights", where);
    const json& v = field(spec, "vectors", where);
    if (!w.is_array() || !v.is_array()) schema(where, "weights and vectors must be arrays");
    std::vector<double> weights;
    std::vector<AmplitudeVector> vectors;
    for (const auto& x : w) weights.push_back(as_double(x, std::string(where) + ".weights"));
    for (const auto& x : v) vectors.push_back(parse_vector(x, n, std::string(where) + ".vectors"));
    return DensityOperator::from_mixture(weights, vectors, tol);
  }
  if (kind == "matrix") {
    return DensityOperator::from_matrix(LinearMap(n, 1, 1, parse_matrix(field(spec, "entries", where), n, where)),
                                        tol);
  }
  if (kind == "kappa") return kappa(n);
  if (kind == "maximally_mixed") return DensityOperator::maximally_mixed(n);
  if (kind == "delta") return DensityOperator::delta(as_index(field(spec, "k", where), n, where));
  schema(kind_where, "unknown state kind \"" + kind + "\"");
}

DensityOperator apply_channel_spec(const json& spec, const DensityOperator& rho, double tol) {
  const int n = rho.n();
  const json& kind_value = field(spec, "kind", "channels[]");
  if (!kind_value.is_string()) schema("channels[].kind", "expected a string");
  const auto kind = kind_value.get<std::string>();
  if (kind == "tau") {
    const DensityOperator tau = parse_state(field(spec, "tau", "channels[]"), n, tol, "channels[].tau");
    return k_tau_hat(tau, rho, tol);
  }
  if (kind == "shift") return shift_channel(as_index(field(spec, "j", "channels[]"), n, "channels[].j"), rho);
  if (kind == "split") {
    const AmplitudeVector h = parse_vector(field(spec, "h", "channels[]"), n, "channels[].h");
    int branch = 1;
    if (spec.contains("branch")) branch = as_int(spec["branch"], "channels[].branch");
    if (branch != 1 && branch != 2) schema("channels[].branch", "expected 1 or 2");
    auto outcomes = branch_channels(h, rho, tol);
    auto& chosen = outcomes[static_cast<std::size_t>(branch - 1)];
    if (!chosen.state) {
      throw Error(ErrorCode::kOutsideDomain, "split branch " + std::to_string(branch) + " has probability " +
                                                 std::to_string(chosen.probability));
    }
    return std::move(*chosen.state);
  }
  schema("channels[].kind", "unknown channel kind \"" + kind + "\"");
}

std::string scenario_hash(const json& doc) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : doc.dump()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Scenario parse_scenario(const json& doc) {
  if (!doc.is_object()) schema("scenario", "expected a JSON object");
  const int n = as_int(field(doc, "n", "scenario"), "n");
  if (n < 1) schema("n", "must be >= 1");
  double tol = kDefaultTolerance;
  if (doc.contains("tolerance")) {
    tol = as_double(doc["tolerance"], "tolerance");
    if (!(tol > 0.0)) schema("tolerance", "must be positive");
  }
  std::optional<std::uint64_t> seed;
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned()) schema("seed", "expected a non-negative integer");
    seed = doc["seed"].get<std::uint64_t>();
  }
  OrthonormalBasis basis = parse_basis(field(doc, "basis", "scenario"), n, tol);
  DensityOperator rho = parse_state(field(doc, "rho", "scenario"), n, tol, "rho");
  DensityOperator gamma = parse_state(field(doc, "gamma", "scenario"), n, tol, "gamma");
  if (doc.contains("channels")) {
    if (!doc["channels"].is_array()) schema("channels", "expected an array");
    for (const auto& spec : doc["channels"]) rho = apply_channel_spec(spec, rho, tol);
  }
  return Scenario{n, std::move(basis), std::move(rho), std::move(gamma), tol, seed, scenario_hash(doc)};
}

Scenario parse_scenario_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
  return parse_scenario(doc);
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("cannot read scenario file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario_text(buf.str());
}

}  // namespace qrecall::cli
