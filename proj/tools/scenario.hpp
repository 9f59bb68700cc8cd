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

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "qrecall/measurement_basis.hpp"
#include "qrecall/quantum_state.hpp"

namespace qrecall::cli {

/// Malformed input: bad JSON, missing or mistyped fields. Exit code 2.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Scenario {
  int n;
  OrthonormalBasis basis;
  DensityOperator rho;  // after the optional channel pipeline
  DensityOperator gamma;
  double tolerance;
  std::optional<std::uint64_t> seed;
  std::string hash;  // "fnv1a64:<16 hex digits>" of the canonical JSON dump
};

Complex parse_complex(const nlohmann::json& value, std::string_view where);
AmplitudeVector parse_vector(const nlohmann::json& value, int n, std::string_view where);
Matrix parse_matrix(const nlohmann::json& value, int n, std::string_view where);

OrthonormalBasis parse_basis(const nlohmann::json& spec, int n, double tol);
DensityOperator parse_state(const nlohmann::json& spec, int n, double tol, std::string_view where);
/// Applies one channel spec ("tau", "shift" or "split") to `rho`.
DensityOperator apply_channel_spec(const nlohmann::json& spec, const DensityOperator& rho, double tol);

/// Schema problems raise SchemaError, invalid states or bases raise qrecall::Error.
Scenario parse_scenario(const nlohmann::json& doc);
Scenario parse_scenario_text(std::string_view text);
Scenario load_scenario(const std::string& path);

std::string scenario_hash(const nlohmann::json& doc);

}  // namespace qrecall::cli
