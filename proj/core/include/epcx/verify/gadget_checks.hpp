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

// Checks on theta-gadget witnesses.
//
// A cycle of the gadget graph is either a theta cycle (two of the three paths
// over one grid edge) or the lift of a grid cycle, using one path per grid
// edge. Lifts of one grid cycle all occupy the same grid vertices, and two
// lifts are vertex-disjoint iff their grid cycles are. So every question about
// L-cycles reduces to the "L-classes": grid cycles some lift of which has its
// length in L. The reduction is itself checked on small replicas.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "epcx/construct/gadget.hpp"
#include "epcx/verify/bit_family.hpp"
#include "epcx/verify/report.hpp"

namespace epcx::verify {

enum class VerifyMode { kExhaustive, kCertificate };

std::string to_string(VerifyMode mode);
VerifyMode verify_mode_from_string(const std::string& text);

struct VerifyOptions {
  VerifyMode mode = VerifyMode::kExhaustive;
  std::size_t jobs = 0;  // 0: all cores
  std::uint64_t cycle_cap = 10'000'000;
  std::uint64_t subset_cap = 1'000'000'000;
  std::uint64_t case_cap = 1'000'000;
  std::uint64_t path_cap = 10'000'000;
};

/// Offsets b such that a lift of a grid cycle has length a*x + b, given for
/// each of its edges the bit mask of usable variants (bit 0: -1, bit 1: 0,
/// bit 2: +1). Entry j of the result stands for b = j - a.
std::vector<bool> attainable_offsets(std::span<const std::uint8_t> variant_masks);

/// True iff L meets {a*x + b : b attainable}.
bool lift_meets_l(const lset::IntSet& set, std::uint64_t a, std::uint64_t x,
                  const std::vector<bool>& offsets);

/// True iff L meets [a*x - a, a*x + a].
bool lift_meets_l(const lset::IntSet& set, std::uint64_t a, std::uint64_t x);

struct GadgetCensus {
  std::uint64_t grid_cycles = 0;
  std::map<std::uint64_t, std::uint64_t> length_histogram;    // a -> grid cycles
  std::map<std::uint64_t, std::uint64_t> l_length_histogram;  // a -> L-classes
  std::optional<std::uint64_t> min_l_length;
  std::uint64_t l_classes_below_g = 0;
  std::vector<std::vector<VertexId>> below_g_examples;  // at most a few
  std::uint64_t theta_cycles = 0;
  std::uint64_t theta_in_l = 0;
  BitFamily class_vertices;  // grid vertices of each L-class
  BitFamily class_edges;     // grid edges of each L-class
};

/// Enumerates every cycle of the ell x ell grid, decides which ones lift to an
/// L-cycle and records theta-cycle lengths. Throws CapExceeded past the cap.
GadgetCensus classify_gadget_cycles(const construct::GadgetWitness& witness,
                                    const VerifyOptions& options = {});

struct StructureCheck {
  std::size_t ell = 0;
  std::uint64_t x = 0;
  std::uint64_t cycles = 0;
  std::uint64_t theta = 0;
  std::uint64_t lifts = 0;
  std::uint64_t expected = 0;  // 3|E| + sum over grid cycles of 3^a
  std::uint64_t unclassified = 0;
  std::uint64_t bad_lengths = 0;  // lifts outside [a*x - a, a*x + a]
  bool passed() const { return unclassified == 0 && bad_lengths == 0 && cycles == expected; }
};

/// Enumerates all cycles of the actual theta graph for (ell, x) and sorts
/// each into theta cycle or grid-cycle lift.
StructureCheck check_cycle_structure(std::size_t ell, std::uint64_t x,
                                     std::uint64_t cycle_cap = 10'000'000);

struct IntersectionResult {
  bool passed = true;
  bool exhaustive = false;           // search completed
  bool certificate_applies = false;  // t * min size > (t-1) * universe
  std::uint64_t subsets_examined = 0;
  std::vector<std::size_t> violation;  // indices with empty common intersection
};

/// Searches for t members of the family with no common element. Only t-sets
/// whose sizes sum to at most (t-1) * universe can have empty intersection;
/// larger ones are skipped. Throws CapExceeded past `subset_cap`.
IntersectionResult check_common_intersection(const BitFamily& family, std::size_t t,
                                             std::uint64_t subset_cap = 1'000'000'000);

/// Counting certificate only.
bool intersection_certificate(const BitFamily& family, std::size_t t);

struct DeletionCase {
  std::vector<VertexId> vertices;                       // deleted grid vertices
  std::vector<std::pair<EdgeId, int>> variants;         // (grid edge, variant)
};

struct DeletionResult {
  bool passed = true;
  std::uint64_t cases = 0;
  std::uint64_t failing = 0;
  std::optional<DeletionCase> counterexample;
};

/// Every reduced deletion of at most s items (grid vertex or one path
/// variant of one grid edge) leaves an L-cycle.
DeletionResult check_deletion_survival(const construct::GadgetWitness& witness,
                                       const GadgetCensus& census, std::size_t s,
                                       const VerifyOptions& options = {});

/// 2t/(2t-1) >= ((4t+1)/(4t))^2 for every t in [1, t_max], in exact rationals.
/// Returns the first t where it fails.
std::optional<std::uint64_t> scalar_certificate_failure(std::uint64_t t_max);

/// Full layered verification of a gadget witness.
VerificationReport verify_gadget(const construct::GadgetWitness& witness,
                                 const VerifyOptions& options = {});

}  // namespace epcx::verify
