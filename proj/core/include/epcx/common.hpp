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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace epcx {

/// Arbitrary-precision natural numbers. Lonely sequences and far-from-L sets
/// outgrow 64 bits after a handful of steps.
using BigInt = boost::multiprecision::cpp_int;

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input or violated precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A bounded search ran out of room before finding what it was asked for.
/// Existence arguments are asymptotic, so the caller is expected to raise the
/// bound and retry.
class BoundExhausted : public Error {
 public:
  using Error::Error;
};

/// Membership was queried past the range a bounded set can decide.
class UndecidableBeyondBound : public BoundExhausted {
 public:
  using BoundExhausted::BoundExhausted;
};

/// An exhaustive enumeration hit its configured cap.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::uint64_t partial_count)
      : Error(what), partial_count_(partial_count) {}
  std::uint64_t partial_count() const noexcept { return partial_count_; }

 private:
  std::uint64_t partial_count_;
};

/// Broken internal invariant. Never expected; its occurrence is a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

inline std::string to_string(const BigInt& n) { return n.str(); }

/// Parses a non-negative decimal integer. Throws InvalidArgument.
BigInt parse_bigint(std::string_view text);

/// Narrows to uint64 when the value fits.
std::optional<std::uint64_t> to_u64(const BigInt& n);

/// floor(sqrt(n)) for n >= 0.
BigInt isqrt(const BigInt& n);

/// ceil(sqrt(n)) for n >= 0.
BigInt ceil_sqrt(const BigInt& n);

}  // namespace epcx
