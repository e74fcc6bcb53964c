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

#include <span>
#include <string>

#include "epcx/graph/weighted_multigraph.hpp"
#include "epcx/verify/report.hpp"

namespace epcx::verify::detail {

inline CheckRecord pass(Evidence ev, std::string text, nlohmann::json witness = nullptr) {
  return CheckRecord{"", CheckStatus::kPass, ev, std::move(text), std::move(witness), 0.0};
}

inline CheckRecord fail(Evidence ev, std::string text, nlohmann::json witness = nullptr) {
  return CheckRecord{"", CheckStatus::kFail, ev, std::move(text), std::move(witness), 0.0};
}

inline CheckRecord skipped(std::string text) {
  return CheckRecord{"", CheckStatus::kSkipped, Evidence::kArithmetic, std::move(text), nullptr,
                     0.0};
}

inline CheckRecord verdict(bool ok, Evidence ev, std::string text,
                           nlohmann::json witness = nullptr) {
  return ok ? pass(ev, std::move(text), std::move(witness))
            : fail(ev, std::move(text), std::move(witness));
}

/// Grid labels as [row, col] pairs, raw ids for unlabelled vertices.
inline nlohmann::json labels(const graph::WeightedMultigraph& g,
                             std::span<const std::uint32_t> vs) {
  nlohmann::json out = nlohmann::json::array();
  for (auto v : vs) {
    const auto& l = g.label(v);
    out.push_back(l ? nlohmann::json::array({l->row, l->col}) : nlohmann::json(v));
  }
  return out;
}

}  // namespace epcx::verify::detail
