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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "epcx/common.hpp"

namespace epcx::graph {

/// 1-based (row, col) position of a grid vertex.
struct GridLabel {
  std::uint32_t row = 0;
  std::uint32_t col = 0;
  friend bool operator==(const GridLabel&, const GridLabel&) = default;
};

enum class EdgeKind {
  kPlain,       // no construction role (edge-list input)
  kGrid,        // edge of the underlying grid
  kGadgetPath,  // piece of one of the three paths replacing a grid edge
  kChord,       // wall chord e_i
};

struct EdgeTag {
  EdgeKind kind = EdgeKind::kPlain;
  /// Gadget paths: -1, 0, +1 for the paths of length x-1, x, x+1.
  int variant = 0;
  /// Gadget paths: host grid edge id. Chords: 1-based chord index i.
  std::uint32_t index = 0;
  friend bool operator==(const EdgeTag&, const EdgeTag&) = default;
};

std::string to_string(EdgeKind kind);
EdgeKind edge_kind_from_string(const std::string& text);

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  BigInt weight = 1;
  EdgeTag tag;
};

struct Incidence {
  VertexId neighbor;
  EdgeId edge;
};

/// Undirected multigraph with positive integer edge weights. Parallel edges
/// are allowed, self-loops are not.
class WeightedMultigraph {
 public:
  VertexId add_vertex(std::optional<GridLabel> label = std::nullopt);
  EdgeId add_edge(VertexId u, VertexId v, BigInt weight = 1, EdgeTag tag = {});

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Incidence> incident(VertexId v) const { return incidence_.at(v); }
  const std::optional<GridLabel>& label(VertexId v) const { return labels_.at(v); }

  /// Sum of the weights of the given edges.
  BigInt weight_of(std::span<const EdgeId> edge_ids) const;
  bool has_unit_weights() const;
  /// Weights narrowed to 64 bits, or nullopt if any weight does not fit.
  std::optional<std::vector<std::uint64_t>> weights_u64() const;

 private:
  std::vector<std::optional<GridLabel>> labels_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> incidence_;
};

/// Fixed-universe bitset over vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe);
  VertexSet(std::size_t universe, std::span<const VertexId> members);

  std::size_t universe() const { return universe_; }
  void insert(VertexId v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(VertexId v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  bool contains(VertexId v) const { return (words_[v >> 6] >> (v & 63)) & 1; }

  std::size_t count() const;
  bool empty() const;
  bool intersects(const VertexSet& other) const;
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator|=(const VertexSet& other);
  std::vector<VertexId> members() const;
  std::span<const std::uint64_t> words() const { return words_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace epcx::graph
