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

// Number-theoretic searches over an IntSet. Every search takes an explicit
// bound and throws BoundExhausted instead of running forever; whenever several
// values qualify, the smallest one is returned.
//
// Two kinds of bound appear below. Positional scans (gap_witness, g_of,
// find_x) bound the *value* examined. Growth searches (far-from-L sets, lonely
// elements) produce numbers far beyond 64 bits, so their bound is a *probe
// budget*: the number of member-to-member steps the search may take.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "epcx/common.hpp"
#include "epcx/lset/int_set.hpp"

namespace epcx::lset {

using Rational = boost::multiprecision::cpp_rational;

struct DensityEstimate {
  std::uint64_t n = 0;
  std::uint64_t count = 0;  // |L ∩ [1, n]|
  Rational ratio;           // count / n, exact
};

/// g_of found no qualifying multiplier up to a_max.
class GExceedsAMax : public BoundExhausted {
 public:
  GExceedsAMax(std::uint64_t x, std::uint64_t a_max);
  std::uint64_t x() const noexcept { return x_; }
  std::uint64_t a_max() const noexcept { return a_max_; }

 private:
  std::uint64_t x_;
  std::uint64_t a_max_;
};

DensityEstimate lower_density_prefix(const IntSet& set, std::uint64_t n);

/// Smallest y <= search_bound with [y, y + length - 1] free of members.
/// nullopt means no gap was seen below the bound, not that none exists.
std::optional<BigInt> gap_witness(const IntSet& set, const BigInt& length,
                                  const BigInt& search_bound);

/// Smallest a in [1, a_max] such that [a*x - a, a*x + a] meets the set.
/// Requires x >= 2. Throws GExceedsAMax when no such a exists.
std::uint64_t g_of(const IntSet& set, std::uint64_t x, std::uint64_t a_max);

/// Smallest x <= x_bound with a*x + b outside the set for every a in [1, t]
/// and b in [-t, t].
std::uint64_t find_x(const IntSet& set, std::uint64_t t, std::uint64_t x_bound);

struct XWithG {
  std::uint64_t x = 0;
  /// Exact g(x) when `g_exact`; otherwise a_max + 1, a lower bound.
  std::uint64_t g = 0;
  bool g_exact = true;
};

/// Smallest x in [2, x_bound] with g(x) >= g_target.
XWithG find_x_with_g_at_least(const IntSet& set, std::uint64_t g_target, std::uint64_t x_bound,
                              std::uint64_t a_max);

/// Smallest y > sum(z) with [y, y + sum(z)] free of members. If z is far from
/// the set then so is z ∪ {y}.
BigInt far_from_l_extend(const IntSet& set, std::span<const BigInt> z,
                         std::uint64_t probe_budget);

/// `count` greedy extensions starting from the empty set; ascending.
std::vector<BigInt> far_from_l_set(const IntSet& set, std::size_t count,
                                   std::uint64_t probe_budget);

enum class Loneliness {
  kAtLeast,       // successor q satisfies q - p >= k
  kStrictlyMore,  // q - p > k, i.e. (p, p + k] is member-free
};

/// Smallest member p >= min_p that is k-lonely. A member with no known
/// successor is never accepted.
BigInt find_lonely(const IntSet& set, const BigInt& k, const BigInt& min_p,
                   std::uint64_t probe_budget, Loneliness mode = Loneliness::kAtLeast);

/// p_1 >= 2*alpha with (p_1, p_1 + alpha] member-free, then each p_k > p_{k-1}
/// with (p_k, p_k + sum_{i<k} p_i + alpha] member-free. Each p_k is the
/// smallest member that qualifies.
std::vector<BigInt> lonely_sequence(const IntSet& set, std::size_t count, const BigInt& alpha,
                                    std::uint64_t probe_budget);

/// The set minus every window [3^t, 3^t + t], t >= 1. The result is porous.
IntSet perturb(const IntSet& set);

}  // namespace epcx::lset
