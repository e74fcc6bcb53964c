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

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "epcx/construct/gadget.hpp"
#include "epcx/construct/wall.hpp"

namespace epcx::io {

using nlohmann::json;

inline constexpr int kFormatVersion = 1;
inline constexpr const char* kWitnessFormat = "epcx-witness";
inline constexpr const char* kReportFormat = "epcx-report";

/// Malformed input, with the offending line when known.
class ParseError : public InvalidArgument {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what)
      : InvalidArgument(source + (line ? ":" + std::to_string(line) : std::string()) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Integers up to 2^64-1 become JSON numbers, larger ones decimal strings.
json bigint_to_json(const BigInt& n);
BigInt bigint_from_json(const json& j);

json set_to_json(const lset::IntSet& set);
lset::IntSet set_from_json(const json& j);

json graph_to_json(const graph::WeightedMultigraph& g);
graph::WeightedMultigraph graph_from_json(const json& j);

json gadget_to_json(const construct::GadgetWitness& w, const json& config = nullptr);
json wall_to_json(const construct::WallWitness& w, const json& config = nullptr);

enum class WitnessKind { kGadget, kWall };

struct LoadedWitness {
  WitnessKind kind = WitnessKind::kGadget;
  std::optional<construct::GadgetWitness> gadget;
  std::optional<construct::WallWitness> wall;
  json config;
};

/// Rebuilds the witness from its parameters and checks that every stored
/// graph, path and number matches the rebuild.
LoadedWitness witness_from_json(const json& doc);

json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const json& doc);
LoadedWitness load_witness(const std::filesystem::path& path);

/// `u v w` triples, 1-indexed, '#' comments, blank lines ignored. The vertex
/// count is the largest endpoint seen.
graph::WeightedMultigraph parse_edge_list(std::istream& in, const std::string& source = "<input>");
graph::WeightedMultigraph read_edge_list(const std::filesystem::path& path);

/// Graphviz text: weights as edge labels, chords drawn bold and red.
std::string to_dot(const graph::WeightedMultigraph& g, const std::string& name = "G");

}  // namespace epcx::io
