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

// Theta-gadget witnesses against the fractional Erdős–Pósa property for
// L-cycles when L has lower density zero.
//
// Parameters: pick x whose g(x) is large, then a grid side ell with
//   2t*g/(2t-1) <= ell^2 <= 3t*g/(3t-2),
// and replace every edge of the ell x ell grid by paths of lengths x-1, x, x+1.
// A grid cycle of length a then lifts to cycles of every length a*x + b with
// |b| <= a, so only grid cycles of length >= g can carry an L-cycle: any t of
// them share a vertex, yet deleting s vertices leaves one intact.

#pragma once

#include <cstdint>

#include "epcx/graph/weighted_multigraph.hpp"
#include "epcx/lset/int_set.hpp"

namespace epcx::construct {

struct GadgetParameters {
  std::uint64_t t = 0;
  std::uint64_t s = 0;
  std::uint64_t x = 0;
  std::uint64_t g = 0;
  std::uint64_t ell = 0;
  // Search settings that produced the choice.
  std::uint64_t x_bound = 0;
  std::uint64_t a_max = 0;
  /// Candidates x < chosen x whose g exceeded a_max and were passed over.
  std::uint64_t undetermined_x = 0;
};

struct GadgetWitness {
  lset::IntSet set;
  GadgetParameters params;
  graph::WeightedMultigraph grid;   // ell x ell
  graph::WeightedMultigraph graph;  // theta-subdivided, unit weights
};

/// No x up to the bound yields a usable (g, ell) pair.
class NoFeasibleX : public BoundExhausted {
 public:
  NoFeasibleX(const std::string& what, std::uint64_t best_g, bool window_was_empty)
      : BoundExhausted(what), best_g_(best_g), window_was_empty_(window_was_empty) {}
  std::uint64_t best_g() const noexcept { return best_g_; }
  /// Some x passed the g test but every such x had an empty ell-window.
  bool window_was_empty() const noexcept { return window_was_empty_; }

 private:
  std::uint64_t best_g_;
  bool window_was_empty_;
};

struct EllWindow {
  std::uint64_t lo = 0;  // smallest ell with ell^2 (2t-1) >= 2t g
  std::uint64_t hi = 0;  // largest ell with ell^2 (3t-2) <= 3t g
  bool empty() const { return lo > hi; }
};

EllWindow ell_window(std::uint64_t t, std::uint64_t g);

/// g > 16 t^2 s^2, the integer form of sqrt(g) / (4t) > s.
bool g_large_enough(std::uint64_t g, std::uint64_t t, std::uint64_t s);

/// Scans x = 2, 3, ... and returns the first x with g(x) large enough and a
/// non-empty ell-window; ell is the smallest integer in the window. An x whose
/// g exceeds a_max cannot be placed in a window and is skipped (counted in
/// `undetermined_x`).
GadgetParameters choose_gadget_parameters(const lset::IntSet& set, std::uint64_t t,
                                          std::uint64_t s, std::uint64_t x_bound,
                                          std::uint64_t a_max);

/// Parameters plus the assembled grid and theta graph.
GadgetWitness construct_gadget_witness(const lset::IntSet& set, std::uint64_t t,
                                       std::uint64_t s, std::uint64_t x_bound,
                                       std::uint64_t a_max);

/// Assembles the graphs for already chosen parameters.
GadgetWitness assemble_gadget_witness(const lset::IntSet& set, const GadgetParameters& params);

}  // namespace epcx::construct
