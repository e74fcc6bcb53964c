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

#include "epcx/common.hpp"

#include <limits>

namespace epcx {

BigInt parse_bigint(std::string_view text) {
  if (text.empty()) throw InvalidArgument("expected an integer, got empty text");
  BigInt value = 0;
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw InvalidArgument("expected a non-negative integer, got '" + std::string(text) + "'");
    }
    value *= 10;
    value += c - '0';
  }
  return value;
}

std::optional<std::uint64_t> to_u64(const BigInt& n) {
  if (n < 0 || n > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return static_cast<std::uint64_t>(n);
}

BigInt isqrt(const BigInt& n) {
  if (n < 0) throw InvalidArgument("isqrt of a negative number");
  return boost::multiprecision::sqrt(n);
}

BigInt ceil_sqrt(const BigInt& n) {
  BigInt r = isqrt(n);
  if (r * r < n) ++r;
  return r;
}

}  // namespace epcx
