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

#include "epcx/lset/int_set.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace epcx::lset {

struct IntSet::Impl {
  SetKind kind = SetKind::kSquares;
  std::uint64_t base = 0;
  BigInt residue = 0;
  BigInt modulus = 1;
  std::vector<BigInt> members;  // sorted, unique
  std::string path;
  std::optional<IntSet> inner;
  std::optional<BigInt> bound;
};

namespace {

constexpr std::uint64_t kU64Max = std::numeric_limits<std::uint64_t>::max();

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_power_of(BigInt n, std::uint64_t base) {
  if (n < 1) return false;
  while (n > 1 && n % base == 0) n /= base;
  return n == 1;
}

bool is_factorial(BigInt n) {
  if (n < 1) return false;
  std::uint64_t j = 2;
  while (n > 1 && n % j == 0) {
    n /= j;
    ++j;
  }
  return n == 1;
}

std::string describe(const std::optional<BigInt>& bound) {
  return bound ? bound->str() : std::string("unbounded");
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::uint64_t kSmall[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : kSmall) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // These twelve bases are a deterministic witness set below 3.3 * 10^24.
  for (std::uint64_t a : kSmall) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool in_perturbation_window(const BigInt& n) {
  if (n < 3) return false;
  BigInt power = 3;
  std::uint64_t t = 1;
  while (power * 3 <= n) {
    power *= 3;
    ++t;
  }
  return n <= power + t;
}

BigInt perturbation_window_end(const BigInt& n) {
  BigInt power = 3;
  std::uint64_t t = 1;
  while (power * 3 <= n) {
    power *= 3;
    ++t;
  }
  return power + t;
}

IntSet IntSet::primes() {
  auto impl = std::make_shared<Impl>();
  impl->kind = SetKind::kPrimes;
  impl->bound = BigInt(kU64Max);
  return IntSet(std::move(impl));
}

IntSet IntSet::squares() {
  auto impl = std::make_shared<Impl>();
  impl->kind = SetKind::kSquares;
  return IntSet(std::move(impl));
}

IntSet IntSet::powers(std::uint64_t base) {
  if (base < 2) throw InvalidArgument("powers: base must be at least 2");
  auto impl = std::make_shared<Impl>();
  impl->kind = SetKind::kPowers;
  impl->base = base;
  return IntSet(std::move(impl));
}

IntSet IntSet::factorials() {
  auto impl = std::make_shared<Impl>();
  impl->kind = SetKind::kFactorials;
  return IntSet(std::move(impl));
}

IntSet IntSet::arithmetic(std::uint64_t residue, std::uint64_t modulus) {
  if (modulus < 1) throw InvalidArgument("arith: modulus must be at least 1");
  auto impl = std::make_shared<Impl>();
  impl->kind = SetKind::kArithmetic;
  impl->residue = residue % modulus;
  impl->modulus = modulus;
  return IntSet(std::move(impl));
}

IntSet IntSet::explicit_list(std::vector<BigInt> members) {
  for (const auto& m : members) {
    if (m < 1) throw InvalidArgument("explicit: members must be positive, got " + m.str());
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  auto impl = std::make_shared<Impl>();
  impl->kind = SetKind::kExplicit;
  impl->members = std::move(members);
  return IntSet(std::move(impl));
}

IntSet IntSet::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("file: cannot open '" + path.string() + "'");
  std::vector<BigInt> members;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string token;
    if (!(fields >> token)) continue;
    std::string extra;
    if (fields >> extra) {
      throw InvalidArgument(path.string() + ":" + std::to_string(line_no) +
                            ": expected one integer per line");
    }
    try {
      BigInt value = parse_bigint(token);
      if (value < 1) throw InvalidArgument("members must be positive");
      members.push_back(std::move(value));
    } catch (const InvalidArgument& e) {
      throw InvalidArgument(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  auto impl = std::make_shared<Impl>();
  impl->kind = SetKind::kFile;
  impl->path = path.string();
  impl->bound = members.empty() ? BigInt(0) : members.back();
  impl->members = std::move(members);
  return IntSet(std::move(impl));
}

IntSet IntSet::perturbed(const IntSet& inner) {
  auto impl = std::make_shared<Impl>();
  impl->kind = SetKind::kPerturbed;
  impl->inner = inner;
  impl->bound = inner.enumeration_bound();
  return IntSet(std::move(impl));
}

IntSet IntSet::with_bound(const BigInt& bound) const {
  if (bound < 1) throw InvalidArgument("enumeration bound must be positive");
  auto impl = std::make_shared<Impl>(*impl_);
  if (impl->kind == SetKind::kPerturbed) impl->inner = impl->inner->with_bound(bound);
  impl->bound = bound;
  return IntSet(std::move(impl));
}

SetKind IntSet::kind() const { return impl_->kind; }

std::string IntSet::spec() const {
  switch (impl_->kind) {
    case SetKind::kPrimes:
      return "primes";
    case SetKind::kSquares:
      return "squares";
    case SetKind::kPowers:
      return "powers:" + std::to_string(impl_->base);
    case SetKind::kFactorials:
      return "factorials";
    case SetKind::kArithmetic:
      return "arith:" + impl_->residue.str() + "," + impl_->modulus.str();
    case SetKind::kExplicit: {
      std::string out = "explicit:";
      for (std::size_t i = 0; i < impl_->members.size(); ++i) {
        if (i) out += ',';
        out += impl_->members[i].str();
      }
      return out;
    }
    case SetKind::kFile:
      return "file:" + impl_->path;
    case SetKind::kPerturbed:
      return "perturb:" + impl_->inner->spec();
  }
  throw InternalError("unknown set kind");
}

const std::optional<BigInt>& IntSet::enumeration_bound() const { return impl_->bound; }

void IntSet::require_decidable(const BigInt& n) const {
  if (impl_->bound && n > *impl_->bound) {
    throw UndecidableBeyondBound("undecidable beyond bound: " + spec() + " decides up to " +
                                 describe(impl_->bound) + ", queried " + n.str());
  }
}

bool IntSet::contains(const BigInt& n) const {
  if (n < 1) return false;
  require_decidable(n);
  const Impl& s = *impl_;
  switch (s.kind) {
    case SetKind::kPrimes: {
      auto small = to_u64(n);
      if (!small) throw UndecidableBeyondBound("primes: membership is decided below 2^64 only");
      return is_prime_u64(*small);
    }
    case SetKind::kSquares: {
      BigInt r = isqrt(n);
      return r * r == n;
    }
    case SetKind::kPowers:
      return is_power_of(n, s.base);
    case SetKind::kFactorials:
      return is_factorial(n);
    case SetKind::kArithmetic:
      return n % s.modulus == s.residue;
    case SetKind::kExplicit:
    case SetKind::kFile:
      return std::binary_search(s.members.begin(), s.members.end(), n);
    case SetKind::kPerturbed:
      return s.inner->contains(n) && !in_perturbation_window(n);
  }
  throw InternalError("unknown set kind");
}

bool IntSet::contains(std::uint64_t n) const {
  const Impl& s = *impl_;
  if (n < 1) return false;
  switch (s.kind) {
    case SetKind::kPrimes:
      require_decidable(BigInt(n));
      return is_prime_u64(n);
    case SetKind::kSquares: {
      if (s.bound) require_decidable(BigInt(n));
      auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
      while (r > 0 && static_cast<unsigned __int128>(r) * r > n) --r;
      while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= n) ++r;
      return static_cast<unsigned __int128>(r) * r == n;
    }
    case SetKind::kArithmetic: {
      if (s.bound) require_decidable(BigInt(n));
      return n % static_cast<std::uint64_t>(s.modulus) == static_cast<std::uint64_t>(s.residue);
    }
    default:
      return contains(BigInt(n));
  }
}

std::optional<BigInt> IntSet::next_member(const BigInt& n) const {
  BigInt from = n < 1 ? BigInt(1) : n;
  require_decidable(from);
  const Impl& s = *impl_;
  std::optional<BigInt> result;
  switch (s.kind) {
    case SetKind::kPrimes: {
      auto start = to_u64(from);
      if (!start) throw UndecidableBeyondBound("primes: membership is decided below 2^64 only");
      std::uint64_t limit = kU64Max;
      if (s.bound) limit = to_u64(*s.bound).value_or(kU64Max);
      std::uint64_t c = *start;
      if (c <= 2) return BigInt(2);
      if (c % 2 == 0) ++c;
      while (true) {
        if (c > limit || c < *start) {
          throw UndecidableBeyondBound("undecidable beyond bound: no prime in [" + from.str() +
                                       ", " + std::to_string(limit) + "]");
        }
        if (is_prime_u64(c)) return BigInt(c);
        if (c > kU64Max - 2) {
          throw UndecidableBeyondBound("primes: next prime lies beyond 2^64");
        }
        c += 2;
      }
    }
    case SetKind::kSquares: {
      BigInt r = ceil_sqrt(from);
      result = r * r;
      break;
    }
    case SetKind::kPowers: {
      BigInt p = 1;
      while (p < from) p *= s.base;
      result = p;
      break;
    }
    case SetKind::kFactorials: {
      BigInt f = 1;
      std::uint64_t j = 1;
      while (f < from) f *= ++j;
      result = f;
      break;
    }
    case SetKind::kArithmetic: {
      BigInt shift = (s.residue - from % s.modulus + s.modulus) % s.modulus;
      result = from + shift;
      break;
    }
    case SetKind::kExplicit:
    case SetKind::kFile: {
      auto it = std::lower_bound(s.members.begin(), s.members.end(), from);
      if (it != s.members.end()) {
        result = *it;
      } else if (!s.bound) {
        return std::nullopt;
      } else {
        throw UndecidableBeyondBound("undecidable beyond bound: " + spec() +
                                     " lists no member in [" + from.str() + ", " +
                                     s.bound->str() + "]");
      }
      break;
    }
    case SetKind::kPerturbed: {
      auto m = s.inner->next_member(from);
      while (m && in_perturbation_window(*m)) m = s.inner->next_member(perturbation_window_end(*m) + 1);
      return m;
    }
  }
  if (result && s.bound && *result > *s.bound) {
    throw UndecidableBeyondBound("undecidable beyond bound: next member of " + spec() +
                                 " after " + from.str() + " exceeds bound " + s.bound->str());
  }
  return result;
}

std::vector<BigInt> IntSet::enumerate(const BigInt& lo, const BigInt& hi) const {
  require_decidable(hi);
  std::vector<BigInt> out;
  BigInt cursor = lo < 1 ? BigInt(1) : lo;
  while (cursor <= hi) {
    // A member past `hi` may lie beyond the bound even though [lo, hi] does not.
    std::optional<BigInt> m;
    try {
      m = next_member(cursor);
    } catch (const UndecidableBeyondBound&) {
      if (impl_->bound && hi <= *impl_->bound) break;
      throw;
    }
    if (!m || *m > hi) break;
    out.push_back(*m);
    cursor = *m + 1;
  }
  return out;
}

std::optional<BigInt> IntSet::closed_form_lonely(const BigInt& k, const BigInt& min_p,
                                                 bool strict) const {
  if (k < 1) throw InvalidArgument("lonely: k must be positive");
  const BigInt need = strict ? k + 1 : k;  // required successor gap q - p
  const BigInt from = min_p < 1 ? BigInt(1) : min_p;
  const Impl& s = *impl_;
  std::optional<BigInt> p;
  switch (s.kind) {
    case SetKind::kSquares: {
      // Successor of m^2 is (m+1)^2, gap 2m + 1.
      BigInt m = std::max(ceil_sqrt(from), BigInt(1));
      BigInt by_gap = need / 2;  // smallest m with 2m + 1 >= need
      if (by_gap > m) m = by_gap;
      p = m * m;
      break;
    }
    case SetKind::kPowers: {
      BigInt q = 1;
      while (q < from || q * (s.base - 1) < need) q *= s.base;
      p = q;
      break;
    }
    case SetKind::kFactorials: {
      // Successor of j! is (j+1)!, gap j! * j.
      BigInt f = 1;
      std::uint64_t j = 1;
      while (f < from || f * j < need) f *= ++j;
      p = f;
      break;
    }
    case SetKind::kArithmetic: {
      if (s.modulus < need) {
        throw BoundExhausted("no lonely element: every gap of " + spec() + " has length " +
                             s.modulus.str());
      }
      BigInt shift = (s.residue - from % s.modulus + s.modulus) % s.modulus;
      p = from + shift;
      break;
    }
    default:
      return std::nullopt;
  }
  require_decidable(*p + need - 1);
  return p;
}

}  // namespace epcx::lset
