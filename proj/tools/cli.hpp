// Copyright 2026 The epcx Authors
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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace epcx::cli {

enum ExitCode : int {
  kExitPass = 0,
  kExitVerificationFailed = 1,
  kExitUsage = 2,
  kExitBoundExhausted = 3,
};

/// Everything a run depends on. Embedded verbatim in every output document.
struct RunConfig {
  std::string subcommand;
  std::string set_spec;
  std::string bound;  // empty: the set's own bound
  std::uint64_t t = 1;
  std::uint64_t s = 1;
  std::uint64_t ell = 1;
  std::uint64_t k = 2;
  std::uint64_t x_bound = 10'000;
  std::uint64_t a_max = 1'000;
  std::uint64_t probe_budget = 1'000'000;
  std::string weights = "auto";
  std::uint64_t greedy_bit_cap = 4096;
  std::uint64_t scale_bound = 1'000'000;
  std::string mode = "exhaustive";
  std::uint64_t jobs = 0;
  std::uint64_t cycle_cap = 10'000'000;
  std::uint64_t path_cap = 10'000'000;
  std::uint64_t case_cap = 1'000'000;
  std::uint64_t n = 1'000;
  std::vector<std::uint64_t> gap_lengths;
  std::string input;
  std::string output;
  std::string format = "text";

  nlohmann::json to_json() const;
};

/// Parses argv and runs. Never throws; maps failures to exit codes.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Runs an already parsed configuration. Throws library errors.
int run_config(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace epcx::cli
