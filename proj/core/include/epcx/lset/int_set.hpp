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
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "epcx/common.hpp"

namespace epcx::lset {

enum class SetKind {
  kPrimes,
  kSquares,
  kPowers,
  kFactorials,
  kArithmetic,
  kExplicit,
  kFile,
  kPerturbed,
};

/// A subset L of the positive integers, given by a membership oracle.
///
/// Instances are immutable and cheap to copy (shared implementation), so they
/// can be handed to concurrent verification workers freely. Every query is a
/// pure function of its arguments.
///
/// An instance may carry an enumeration bound: the largest n whose membership
/// it can decide. Queries that need an answer past the bound throw
/// UndecidableBeyondBound rather than guessing.
class IntSet {
 public:
  static IntSet primes();
  static IntSet squares();
  /// {base^j : j >= 0}, so 1 is always a member.
  static IntSet powers(std::uint64_t base);
  /// {j! : j >= 1} = {1, 2, 6, 24, ...}.
  static IntSet factorials();
  /// {n >= 1 : n = residue (mod modulus)}.
  static IntSet arithmetic(std::uint64_t residue, std::uint64_t modulus);
  /// A finite set given in full. Decidable everywhere.
  static IntSet explicit_list(std::vector<BigInt> members);
  /// Newline-separated integers; '#' starts a comment. Decidable up to the
  /// largest listed value unless a wider coverage bound is supplied.
  static IntSet from_file(const std::filesystem::path& path);
  /// L minus the union over t >= 1 of [3^t, 3^t + t].
  static IntSet perturbed(const IntSet& inner);

  /// Copy of this set that refuses to decide anything above `bound`.
  IntSet with_bound(const BigInt& bound) const;

  SetKind kind() const;
  /// Canonical set-spec string, e.g. "powers:10" or "perturb:primes".
  std::string spec() const;
  /// Largest decidable n, or nullopt when membership is decidable everywhere.
  const std::optional<BigInt>& enumeration_bound() const;

  /// Membership. Values below 1 are never members.
  bool contains(const BigInt& n) const;
  bool contains(std::uint64_t n) const;

  /// Smallest member >= n, or nullopt when the set provably has none.
  std::optional<BigInt> next_member(const BigInt& n) const;

  /// Sorted members of [lo, hi].
  std::vector<BigInt> enumerate(const BigInt& lo, const BigInt& hi) const;

  /// Smallest member p >= min_p whose successor q satisfies q - p >= k
  /// (q - p > k when `strict`), computed in closed form. Returns nullopt when
  /// this kind has no closed form and the caller must walk the members.
  std::optional<BigInt> closed_form_lonely(const BigInt& k, const BigInt& min_p,
                                           bool strict) const;

  /// Throws UndecidableBeyondBound if n lies past the enumeration bound.
  void require_decidable(const BigInt& n) const;

  struct Impl;

 private:
  explicit IntSet(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime_u64(std::uint64_t n);

/// True iff n lies in [3^t, 3^t + t] for some t >= 1.
bool in_perturbation_window(const BigInt& n);

/// For n inside a perturbation window, the last value of that window.
BigInt perturbation_window_end(const BigInt& n);

}  // namespace epcx::lset
