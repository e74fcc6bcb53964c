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

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "epcx/common.hpp"

namespace epcx::verify {

/// A list of subsets of [0, universe) stored as packed bit rows.
class BitFamily {
 public:
  BitFamily() = default;
  explicit BitFamily(std::size_t universe) : universe_(universe), words_((universe + 63) / 64) {}

  std::size_t universe() const { return universe_; }
  std::size_t words() const { return words_; }
  std::size_t size() const { return sizes_.size(); }

  void add(std::span<const std::uint32_t> members) {
    const std::size_t base = bits_.size();
    bits_.resize(base + words_, 0);
    std::uint32_t count = 0;
    for (auto m : members) {
      std::uint64_t& w = bits_[base + (m >> 6)];
      const std::uint64_t bit = std::uint64_t{1} << (m & 63);
      if (!(w & bit)) ++count;
      w |= bit;
    }
    sizes_.push_back(count);
  }

  /// Appends every row of `other`, which must share the universe.
  void append(const BitFamily& other) {
    if (other.universe_ != universe_) throw InvalidArgument("bit family: universe mismatch");
    bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
    sizes_.insert(sizes_.end(), other.sizes_.begin(), other.sizes_.end());
  }

  std::span<const std::uint64_t> row(std::size_t i) const {
    return {bits_.data() + i * words_, words_};
  }
  std::uint32_t row_size(std::size_t i) const { return sizes_[i]; }

  std::vector<std::uint32_t> members(std::size_t i) const {
    std::vector<std::uint32_t> out;
    auto r = row(i);
    for (std::size_t w = 0; w < words_; ++w) {
      for (std::uint64_t bits = r[w]; bits != 0; bits &= bits - 1) {
        out.push_back(static_cast<std::uint32_t>(w * 64 + std::countr_zero(bits)));
      }
    }
    return out;
  }

  bool row_intersects(std::size_t i, std::span<const std::uint64_t> other) const {
    auto r = row(i);
    for (std::size_t w = 0; w < words_; ++w) {
      if (r[w] & other[w]) return true;
    }
    return false;
  }

 private:
  std::size_t universe_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::uint32_t> sizes_;
};

}  // namespace epcx::verify
