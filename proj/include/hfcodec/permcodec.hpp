// Copyright 2026 The hfcodec Authors
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

// Factoradics, Lehmer codes, and ranking of permutations: lexicographic
// rank within a fixed size, plus a size-free bijection Nat <-> all finite
// permutations that stacks the size blocks one after another.

#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hfcodec/error.hpp"
#include "hfcodec/natbits.hpp"

namespace hfcodec {

enum class Orientation { right_to_left, left_to_right };

/// Digits weighted by successive factorials. Right-to-left digit i has
/// weight i! and lies in [0, i].
struct FactoradicDigits {
  std::vector<Natural> digits;
  Orientation orientation = Orientation::right_to_left;

  friend bool operator==(const FactoradicDigits&, const FactoradicDigits&) = default;
};

/// A rearrangement of [0, k).
class Permutation {
 public:
  Permutation() = default;

  /// Throws errc::not_a_permutation unless every value in [0, k) occurs once.
  explicit Permutation(std::vector<std::size_t> mapping) : mapping_(std::move(mapping)) {
    std::vector<bool> seen(mapping_.size(), false);
    for (std::size_t v : mapping_) {
      if (v >= mapping_.size() || seen[v])
        throw error(errc::not_a_permutation,
                    "value " + std::to_string(v) + " repeated or out of range for size " +
                        std::to_string(mapping_.size()));
      seen[v] = true;
    }
  }

  static Permutation from_naturals(std::span<const Natural> values) {
    std::vector<std::size_t> m;
    m.reserve(values.size());
    for (const auto& v : values) {
      if (v < 0 || v >= values.size())
        throw error(errc::not_a_permutation,
                    "value " + v.str() + " out of range for size " + std::to_string(values.size()));
      m.push_back(v.convert_to<std::size_t>());
    }
    return Permutation(std::move(m));
  }

  static Permutation trusted(std::vector<std::size_t> mapping) {
    Permutation p;
    p.mapping_ = std::move(mapping);
    return p;
  }

  const std::vector<std::size_t>& mapping() const noexcept { return mapping_; }
  std::size_t size() const noexcept { return mapping_.size(); }
  std::size_t operator[](std::size_t i) const { return mapping_[i]; }
  auto begin() const noexcept { return mapping_.begin(); }
  auto end() const noexcept { return mapping_.end(); }

  std::vector<Natural> to_naturals() const {
    return std::vector<Natural>(mapping_.begin(), mapping_.end());
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> mapping_;
};

/// Digit i counts the later entries smaller than entry i; digit i <= k-1-i.
using LehmerCode = std::vector<std::size_t>;

/// A permutation size together with a lexicographic rank below size!.
struct SizedRank {
  std::size_t size = 0;
  Natural rank;

  friend bool operator==(const SizedRank&, const SizedRank&) = default;
};

// ---------------------------------------------------------------------------
// Factoradics
// ---------------------------------------------------------------------------

inline FactoradicDigits fr(const Natural& n) {
  FactoradicDigits out{{}, Orientation::right_to_left};
  if (n.is_zero()) {
    out.digits.emplace_back(0);
    return out;
  }
  Natural k = n;
  for (Natural j = 1; !k.is_zero(); ++j) {
    Natural d;
    boost::multiprecision::divide_qr(k, j, k, d);
    out.digits.push_back(std::move(d));
  }
  return out;
}

inline FactoradicDigits fl(const Natural& n) {
  FactoradicDigits out = fr(n);
  std::reverse(out.digits.begin(), out.digits.end());
  out.orientation = Orientation::left_to_right;
  return out;
}

/// Sum of ds[i] * i!; digits are not range-checked.
inline Natural rf(std::span<const Natural> ds) {
  Natural acc = 0;
  Natural fact = 1;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (i > 0) fact *= i;
    acc += ds[i] * fact;
  }
  return acc;
}

inline Natural lf(std::span<const Natural> ds) {
  std::vector<Natural> rev(ds.rbegin(), ds.rend());
  return rf(rev);
}

inline Natural from_factoradic(const FactoradicDigits& f) {
  return f.orientation == Orientation::right_to_left ? rf(f.digits) : lf(f.digits);
}

// ---------------------------------------------------------------------------
// Lehmer codes
// ---------------------------------------------------------------------------

inline LehmerCode perm2lehmer(const Permutation& ps) {
  const auto& m = ps.mapping();
  LehmerCode out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (m[j] < m[i]) ++out[i];
  return out;
}

namespace detail {

// Successive selection from the ordered pool [0, k).
inline std::vector<std::size_t> apply_lehmer(std::span<const std::size_t> code) {
  std::vector<std::size_t> pool(code.size());
  for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = i;
  std::vector<std::size_t> out;
  out.reserve(code.size());
  for (std::size_t d : code) {
    auto it = pool.begin() + static_cast<std::ptrdiff_t>(d);
    out.push_back(*it);
    pool.erase(it);
  }
  return out;
}

}  // namespace detail

inline Permutation lehmer2perm(std::span<const std::size_t> code) {
  const std::size_t k = code.size();
  for (std::size_t i = 0; i < k; ++i)
    if (code[i] > k - 1 - i)
      throw error(errc::invalid_lehmer, "digit " + std::to_string(code[i]) + " at position " +
                                            std::to_string(i) + " exceeds " +
                                            std::to_string(k - 1 - i));
  return Permutation::trusted(detail::apply_lehmer(code));
}

// ---------------------------------------------------------------------------
// Fixed-size ranking
// ---------------------------------------------------------------------------

/// The rank-th permutation of [0, size) in lexicographic order.
inline Permutation nth2perm(const SizedRank& sr) {
  if (sr.rank < 0) throw error(errc::rank_overflow, "negative rank");
  if (sr.size == 0) {
    if (!sr.rank.is_zero()) throw error(errc::rank_overflow, "rank must be 0 for size 0");
    return Permutation{};
  }
  // fr(rank) has at most `size` digits exactly when rank < size!.
  std::vector<Natural> rtl = fr(sr.rank).digits;
  if (rtl.size() > sr.size)
    throw error(errc::rank_overflow,
                "rank " + sr.rank.str() + " >= " + std::to_string(sr.size) + "!");
  LehmerCode code(sr.size, 0);
  for (std::size_t i = 0; i < rtl.size(); ++i)
    code[sr.size - 1 - i] = rtl[i].convert_to<std::size_t>();
  return Permutation::trusted(detail::apply_lehmer(code));
}

inline SizedRank perm2nth(const Permutation& ps) {
  LehmerCode code = perm2lehmer(ps);
  std::vector<Natural> digits(code.begin(), code.end());
  return {ps.size(), lf(digits)};
}

// ---------------------------------------------------------------------------
// Size-free ranking
// ---------------------------------------------------------------------------

/// 0! + 1! + ... + (n-1)!, i.e. the first rank of the size-n block.
inline Natural sf(std::size_t n) {
  Natural sum = 0;
  Natural fact = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) fact *= i;
    sum += fact;
  }
  return sum;
}

/// Splits n into the block size k with sf(k) <= n < sf(k+1) and the
/// offset n - sf(k) inside the block.
inline SizedRank to_sf(const Natural& n) {
  std::size_t k = 0;
  Natural sum = 0;   // sf(k)
  Natural fact = 1;  // k!
  while (sum + fact <= n) {
    sum += fact;
    ++k;
    fact *= k;
  }
  return {k, n - sum};
}

inline Permutation nat2perm(const Natural& n) {
  if (n.is_zero()) return Permutation{};
  return nth2perm(to_sf(n));
}

inline Natural perm2nat(const Permutation& ps) {
  SizedRank sr = perm2nth(ps);
  return sf(sr.size) + sr.rank;
}

}  // namespace hfcodec
