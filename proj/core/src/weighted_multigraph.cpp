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

#include "epcx/graph/weighted_multigraph.hpp"

#include <algorithm>
#include <bit>

namespace epcx::graph {

std::string to_string(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::kPlain:
      return "plain";
    case EdgeKind::kGrid:
      return "grid";
    case EdgeKind::kGadgetPath:
      return "gadget-path";
    case EdgeKind::kChord:
      return "chord";
  }
  throw InternalError("unknown edge kind");
}

EdgeKind edge_kind_from_string(const std::string& text) {
  if (text == "plain") return EdgeKind::kPlain;
  if (text == "grid") return EdgeKind::kGrid;
  if (text == "gadget-path") return EdgeKind::kGadgetPath;
  if (text == "chord") return EdgeKind::kChord;
  throw InvalidArgument("unknown edge tag '" + text + "'");
}

VertexId WeightedMultigraph::add_vertex(std::optional<GridLabel> label) {
  labels_.push_back(label);
  incidence_.emplace_back();
  return static_cast<VertexId>(labels_.size() - 1);
}

EdgeId WeightedMultigraph::add_edge(VertexId u, VertexId v, BigInt weight, EdgeTag tag) {
  if (u >= vertex_count() || v >= vertex_count()) {
    throw InvalidArgument("edge endpoint out of range: " + std::to_string(u) + "-" +
                          std::to_string(v));
  }
  if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
  if (weight < 1) throw InvalidArgument("edge weight must be positive, got " + weight.str());
  auto id = static_cast<EdgeId>(edges_.size());
  edges_.push_back(Edge{u, v, std::move(weight), tag});
  incidence_[u].push_back({v, id});
  incidence_[v].push_back({u, id});
  return id;
}

BigInt WeightedMultigraph::weight_of(std::span<const EdgeId> edge_ids) const {
  BigInt total = 0;
  for (EdgeId e : edge_ids) total += edges_.at(e).weight;
  return total;
}

bool WeightedMultigraph::has_unit_weights() const {
  for (const auto& e : edges_) {
    if (e.weight != 1) return false;
  }
  return true;
}

std::optional<std::vector<std::uint64_t>> WeightedMultigraph::weights_u64() const {
  std::vector<std::uint64_t> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) {
    auto w = to_u64(e.weight);
    if (!w) return std::nullopt;
    out.push_back(*w);
  }
  return out;
}

VertexSet::VertexSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

VertexSet::VertexSet(std::size_t universe, std::span<const VertexId> members)
    : VertexSet(universe) {
  for (VertexId v : members) insert(v);
}

std::size_t VertexSet::count() const {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool VertexSet::empty() const {
  for (auto w : words_) {
    if (w) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (words_[i] & other.words_[i]) return true;
  }
  return false;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    words_[i] &= i < other.words_.size() ? other.words_[i] : 0;
  }
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size() && i < other.words_.size(); ++i) {
    words_[i] |= other.words_[i];
  }
  return *this;
}

std::vector<VertexId> VertexSet::members() const {
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w) {
      out.push_back(static_cast<VertexId>(i * 64 + std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

}  // namespace epcx::graph
