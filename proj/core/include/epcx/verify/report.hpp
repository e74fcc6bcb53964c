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

#include <chrono>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace epcx::verify {

enum class CheckStatus { kPass, kFail, kSkipped };

/// How a passing status was established.
enum class Evidence {
  kExhaustive,   // every case enumerated
  kCertificate,  // counting or inequality argument checked exactly
  kSampled,      // a capped search finished early; not a proof
  kArithmetic,   // direct recomputation of stored numbers
};

std::string to_string(CheckStatus status);
std::string to_string(Evidence evidence);
CheckStatus check_status_from_string(const std::string& text);
Evidence evidence_from_string(const std::string& text);

struct CheckRecord {
  std::string name;
  CheckStatus status = CheckStatus::kSkipped;
  Evidence evidence = Evidence::kArithmetic;
  std::string detail;
  nlohmann::json witness;  // counterexample or supporting data, may be null
  double seconds = 0.0;
};

struct VerificationReport {
  std::string subject;
  std::vector<CheckRecord> checks;

  /// True iff no check failed (skipped checks do not count).
  bool passed() const;
  const CheckRecord* find(const std::string& name) const;

  nlohmann::json to_json(bool with_timing = true) const;
  static VerificationReport from_json(const nlohmann::json& doc);
  std::string to_text() const;
};

/// Times a check body and stores the elapsed seconds in the record.
template <typename Body>
CheckRecord timed_check(const std::string& name, Body&& body) {
  const auto start = std::chrono::steady_clock::now();
  CheckRecord record = body();
  record.name = name;
  record.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return record;
}

}  // namespace epcx::verify
