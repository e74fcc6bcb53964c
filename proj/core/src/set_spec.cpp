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

#include "epcx/lset/set_spec.hpp"

#include <string>
#include <vector>

namespace epcx::lset {
namespace {

std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> parts;
  if (text.empty()) return parts;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    parts.push_back(text.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return parts;
}

std::uint64_t parse_small(std::string_view text, std::string_view what) {
  auto value = to_u64(parse_bigint(text));
  if (!value) throw InvalidArgument(std::string(what) + " does not fit in 64 bits");
  return *value;
}

IntSet parse_unbounded(std::string_view spec) {
  auto colon = spec.find(':');
  std::string_view head = spec.substr(0, colon);
  std::string_view tail = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
  const bool has_arg = colon != std::string_view::npos;

  auto no_arg = [&](IntSet set) {
    if (has_arg) throw InvalidArgument("set spec '" + std::string(head) + "' takes no argument");
    return set;
  };

  if (head == "primes") return no_arg(IntSet::primes());
  if (head == "squares") return no_arg(IntSet::squares());
  if (head == "factorials") return no_arg(IntSet::factorials());
  if (head == "powers") {
    if (!has_arg) throw InvalidArgument("powers needs a base, e.g. powers:10");
    return IntSet::powers(parse_small(tail, "powers base"));
  }
  if (head == "arith") {
    auto parts = split_commas(tail);
    if (parts.size() != 2) throw InvalidArgument("arith needs <a>,<m>, e.g. arith:1,4");
    return IntSet::arithmetic(parse_small(parts[0], "arith residue"),
                              parse_small(parts[1], "arith modulus"));
  }
  if (head == "explicit") {
    if (!has_arg) throw InvalidArgument("explicit needs a list, e.g. explicit:3,5,7");
    std::vector<BigInt> members;
    for (auto part : split_commas(tail)) members.push_back(parse_bigint(part));
    return IntSet::explicit_list(std::move(members));
  }
  if (head == "file") {
    if (tail.empty()) throw InvalidArgument("file needs a path, e.g. file:members.txt");
    return IntSet::from_file(std::string(tail));
  }
  if (head == "perturb") {
    if (tail.empty()) throw InvalidArgument("perturb needs an inner spec, e.g. perturb:primes");
    return IntSet::perturbed(parse_unbounded(tail));
  }
  throw InvalidArgument("unknown set spec '" + std::string(spec) + "'");
}

}  // namespace

IntSet parse_set_spec(std::string_view spec, const std::optional<BigInt>& bound) {
  IntSet set = parse_unbounded(spec);
  // For file sets the bound replaces the default coverage (largest listed value).
  if (bound) set = set.with_bound(*bound);
  return set;
}

}  // namespace epcx::lset
