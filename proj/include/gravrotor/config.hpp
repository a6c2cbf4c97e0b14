// Copyright 2026 The gravrotor Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gravrotor/atlas.hpp"

namespace gravrotor {

struct DynamicsSettings {
  double tol = 1e-6;         // relative tolerance handed to integrate_spin_up
  double duration = 30.0;    // s, normalised rotor runs
  double theta0 = 1e-6;      // rad, normalised rotor runs
  double theta0_min = 1e-10;  // fit-t0 scan
  double theta0_max = 1e-2;
  std::size_t theta0_count = 9;
  double fit_tail = 20.0;  // extra time after t0 per scan run, in units of sqrt(I/tau)

  bool operator==(const DynamicsSettings&) const = default;
};

struct RunConfig {
  SweepSpec sweep;
  DynamicsSettings dynamics;
  unsigned threads = 0;  // 0: hardware concurrency
  std::string out_dir = "out";

  bool operator==(const RunConfig&) const = default;
};

/// All problems found in a config source, one message per problem.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(std::vector<std::string> messages);
  const std::vector<std::string>& messages() const { return messages_; }

 private:
  std::vector<std::string> messages_;
};

/// Parses `key = value` lines with `#` comments. Missing keys keep their
/// defaults; unknown, duplicated or malformed keys are errors.
RunConfig parse_config(std::istream& in, std::string_view source = "<config>");
RunConfig load_config(const std::filesystem::path& path);

/// Emits every key, so parse_config(serialize_config(c)) == c.
std::string serialize_config(const RunConfig& config);

}  // namespace gravrotor
