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

#include "epcx/verify/report.hpp"

#include <iomanip>
#include <sstream>

#include "epcx/common.hpp"

namespace epcx::verify {

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::kPass:
      return "pass";
    case CheckStatus::kFail:
      return "fail";
    case CheckStatus::kSkipped:
      return "skipped";
  }
  throw InternalError("unknown check status");
}

std::string to_string(Evidence evidence) {
  switch (evidence) {
    case Evidence::kExhaustive:
      return "exhaustive";
    case Evidence::kCertificate:
      return "certificate";
    case Evidence::kSampled:
      return "sampled";
    case Evidence::kArithmetic:
      return "arithmetic";
  }
  throw InternalError("unknown evidence kind");
}

CheckStatus check_status_from_string(const std::string& text) {
  for (auto s : {CheckStatus::kPass, CheckStatus::kFail, CheckStatus::kSkipped}) {
    if (to_string(s) == text) return s;
  }
  throw InvalidArgument("unknown check status '" + text + "'");
}

Evidence evidence_from_string(const std::string& text) {
  for (auto e : {Evidence::kExhaustive, Evidence::kCertificate, Evidence::kSampled,
                 Evidence::kArithmetic}) {
    if (to_string(e) == text) return e;
  }
  throw InvalidArgument("unknown evidence kind '" + text + "'");
}

bool VerificationReport::passed() const {
  for (const auto& c : checks) {
    if (c.status == CheckStatus::kFail) return false;
  }
  return true;
}

const CheckRecord* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

nlohmann::json VerificationReport::to_json(bool with_timing) const {
  nlohmann::json doc;
  doc["subject"] = subject;
  doc["verdict"] = passed() ? "pass" : "fail";
  doc["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json item{{"name", c.name},
                        {"status", to_string(c.status)},
                        {"evidence", to_string(c.evidence)},
                        {"detail", c.detail},
                        {"witness", c.witness}};
    if (with_timing) item["seconds"] = c.seconds;
    doc["checks"].push_back(std::move(item));
  }
  return doc;
}

VerificationReport VerificationReport::from_json(const nlohmann::json& doc) {
  VerificationReport r;
  r.subject = doc.at("subject").get<std::string>();
  for (const auto& item : doc.at("checks")) {
    CheckRecord c;
    c.name = item.at("name").get<std::string>();
    c.status = check_status_from_string(item.at("status").get<std::string>());
    c.evidence = evidence_from_string(item.at("evidence").get<std::string>());
    c.detail = item.value("detail", "");
    c.witness = item.value("witness", nlohmann::json());
    c.seconds = item.value("seconds", 0.0);
    r.checks.push_back(std::move(c));
  }
  return r;
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  out << "verification of " << subject << "\n";
  for (const auto& c : checks) {
    out << "  [" << std::setw(7) << std::left << to_string(c.status) << "] " << c.name << " ("
        << to_string(c.evidence) << ", " << std::fixed << std::setprecision(3) << c.seconds
        << " s)";
    if (!c.detail.empty()) out << ": " << c.detail;
    out << "\n";
  }
  out << "verdict: " << (passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace epcx::verify
