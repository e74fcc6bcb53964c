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

#include "epcx/lset/searches.hpp"

#include <numeric>

namespace epcx::lset {

GExceedsAMax::GExceedsAMax(std::uint64_t x, std::uint64_t a_max)
    : BoundExhausted("g exceeds a_max: no multiplier a <= " + std::to_string(a_max) +
                     " reaches the set at x = " + std::to_string(x)),
      x_(x),
      a_max_(a_max) {}

DensityEstimate lower_density_prefix(const IntSet& set, std::uint64_t n) {
  if (n < 1) throw InvalidArgument("density: n must be positive");
  set.require_decidable(BigInt(n));
  std::uint64_t count = 0;
  BigInt cursor = 1;
  const BigInt limit = n;
  while (cursor <= limit) {
    std::optional<BigInt> m;
    try {
      m = set.next_member(cursor);
    } catch (const UndecidableBeyondBound&) {
      // The next member lies past the bound but [cursor, n] is decidable and empty.
      break;
    }
    if (!m || *m > limit) break;
    ++count;
    cursor = *m + 1;
  }
  return DensityEstimate{n, count, Rational(count, n)};
}

std::optional<BigInt> gap_witness(const IntSet& set, const BigInt& length,
                                  const BigInt& search_bound) {
  if (length < 1) throw InvalidArgument("gap_witness: length must be positive");
  BigInt y = 1;
  while (y <= search_bound) {
    auto m = set.next_member(y);
    if (!m || *m > y + length - 1) return y;
    y = *m + 1;
  }
  return std::nullopt;
}

std::uint64_t g_of(const IntSet& set, std::uint64_t x, std::uint64_t a_max) {
  if (x < 2) throw InvalidArgument("g_of: x must be at least 2");
  for (std::uint64_t a = 1; a <= a_max; ++a) {
    const BigInt centre = BigInt(a) * x;
    auto m = set.next_member(centre - a);
    if (m && *m <= centre + a) return a;
  }
  throw GExceedsAMax(x, a_max);
}

std::uint64_t find_x(const IntSet& set, std::uint64_t t, std::uint64_t x_bound) {
  if (t < 1) throw InvalidArgument("find_x: t must be positive");
  for (std::uint64_t x = 1; x <= x_bound; ++x) {
    bool clear = true;
    for (std::uint64_t a = 1; a <= t && clear; ++a) {
      const BigInt centre = BigInt(a) * x;
      auto m = set.next_member(centre > t ? centre - t : BigInt(1));
      clear = !m || *m > centre + t;
    }
    if (clear) return x;
  }
  throw BoundExhausted("no x below bound: every x <= " + std::to_string(x_bound) +
                       " has a member of the form a*x + b, a <= " + std::to_string(t) +
                       ", |b| <= " + std::to_string(t));
}

XWithG find_x_with_g_at_least(const IntSet& set, std::uint64_t g_target, std::uint64_t x_bound,
                              std::uint64_t a_max) {
  for (std::uint64_t x = 2; x <= x_bound; ++x) {
    try {
      std::uint64_t g = g_of(set, x, a_max);
      if (g >= g_target) return {x, g, true};
    } catch (const GExceedsAMax&) {
      if (a_max + 1 >= g_target) return {x, a_max + 1, false};
    }
  }
  throw BoundExhausted("no x below bound: no x <= " + std::to_string(x_bound) +
                       " has g(x) >= " + std::to_string(g_target));
}

namespace {

BigInt walk_to_lonely(const IntSet& set, const BigInt& need, const BigInt& from,
                      std::uint64_t probe_budget) {
  auto p = set.next_member(from);
  for (std::uint64_t probes = 0;; ++probes) {
    if (!p) {
      throw BoundExhausted("no lonely element below bound: " + set.spec() +
                           " has no member >= " + from.str());
    }
    if (probes >= probe_budget) {
      throw BoundExhausted("no lonely element below bound: probe budget of " +
                           std::to_string(probe_budget) + " exhausted at " + p->str());
    }
    auto q = set.next_member(*p + 1);
    if (!q) {
      throw BoundExhausted("no lonely element below bound: " + p->str() +
                           " is the largest known member and has no successor");
    }
    if (*q - *p >= need) return *p;
    p = std::move(q);
  }
}

}  // namespace

BigInt find_lonely(const IntSet& set, const BigInt& k, const BigInt& min_p,
                   std::uint64_t probe_budget, Loneliness mode) {
  if (k < 1) throw InvalidArgument("find_lonely: k must be positive");
  const bool strict = mode == Loneliness::kStrictlyMore;
  if (auto p = set.closed_form_lonely(k, min_p, strict)) return *p;
  return walk_to_lonely(set, strict ? k + 1 : k, min_p < 1 ? BigInt(1) : min_p, probe_budget);
}

BigInt far_from_l_extend(const IntSet& set, std::span<const BigInt> z,
                         std::uint64_t probe_budget) {
  const BigInt sum = std::accumulate(z.begin(), z.end(), BigInt(0));
  const BigInt first = sum + 1;
  auto blocker = set.next_member(first);
  if (!blocker || *blocker > first + sum) return first;
  // Every y in [sum + 1, blocker] sees the blocker. Beyond it, y = p + 1 for a
  // member p works iff p's successor is at least p + sum + 2.
  try {
    return find_lonely(set, sum + 2, *blocker, probe_budget) + 1;
  } catch (const BoundExhausted& e) {
    throw BoundExhausted(std::string("no gap below bound: ") + e.what());
  }
}

std::vector<BigInt> far_from_l_set(const IntSet& set, std::size_t count,
                                   std::uint64_t probe_budget) {
  std::vector<BigInt> out;
  out.reserve(count);
  while (out.size() < count) out.push_back(far_from_l_extend(set, out, probe_budget));
  return out;
}

std::vector<BigInt> lonely_sequence(const IntSet& set, std::size_t count, const BigInt& alpha,
                                    std::uint64_t probe_budget) {
  if (alpha < 1) throw InvalidArgument("lonely_sequence: alpha must be positive");
  std::vector<BigInt> p;
  p.reserve(count);
  BigInt running = alpha;  // sum of chosen p_i plus alpha
  BigInt min_p = 2 * alpha;
  while (p.size() < count) {
    BigInt next = find_lonely(set, running, min_p, probe_budget, Loneliness::kStrictlyMore);
    running += next;
    min_p = next + 1;
    p.push_back(std::move(next));
  }
  return p;
}

IntSet perturb(const IntSet& set) { return IntSet::perturbed(set); }

}  // namespace epcx::lset
