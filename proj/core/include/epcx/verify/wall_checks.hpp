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

#include "epcx/construct/wall.hpp"
#include "epcx/verify/gadget_checks.hpp"
#include "epcx/verify/report.hpp"

namespace epcx::verify {

struct DisjointPathsResult {
  bool found = false;   // two vertex-disjoint paths exist
  bool capped = false;  // search stopped at the path cap
  std::uint64_t paths_explored = 0;
  std::vector<VertexId> first;
  std::vector<VertexId> second;
};

/// Exhaustive search for vertex-disjoint a1-b1 and a2-b2 paths: every simple
/// a1-b1 path avoiding a2, b2 is enumerated and a2-b2 connectivity is tested
/// in what remains. Branches that already separate a2 from b2 are cut.
DisjointPathsResult two_disjoint_paths(const graph::WeightedMultigraph& g, VertexId a1,
                                       VertexId b1, VertexId a2, VertexId b2,
                                       std::uint64_t path_cap);

/// Proof that no nonempty subset sum of `weights` lies in L. Recognises the
/// scaled block {c, 2c, ..., Nc}, the interval chain of the greedy extension
/// and, for at most 20 values, plain enumeration. Returns nullopt when the
/// certificate holds, else the reason it does not.
std::optional<std::string> far_from_l_failure(const lset::IntSet& set,
                                              std::span<const BigInt> weights,
                                              std::string* method = nullptr);

/// The three parts of the claim that no two L-cycles are vertex-disjoint:
/// cycles inside W avoid L, cycles through several chords avoid L, and chord
/// cycles through different chords cross.
std::vector<CheckRecord> check_wall_disjointness(const construct::WallWitness& witness,
                                                 const VerifyOptions& options = {});

struct WallDeletionCase {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> grid_edges;
  std::vector<std::size_t> chords;  // 1-based
};

struct WallDeletionResult {
  bool passed = true;
  bool exhaustive = false;
  std::uint64_t cases = 0;
  std::uint64_t min_surviving = 0;  // fewest distinct surviving L-lengths
  std::uint32_t max_multiplicity = 0;
  std::optional<WallDeletionCase> counterexample;
};

/// Every deletion of at most `max_deleted` items (grid vertex, grid edge, or
/// chord) leaves at least `max_deleted` of the cycles Q_i + e_i intact with
/// distinct lengths. Falls back to the multiplicity argument past the cap.
WallDeletionResult check_wall_deletion(const construct::WallWitness& witness,
                                       std::size_t max_deleted,
                                       const VerifyOptions& options = {});

VerificationReport verify_wall(const construct::WallWitness& witness,
                               const VerifyOptions& options = {});

}  // namespace epcx::verify
