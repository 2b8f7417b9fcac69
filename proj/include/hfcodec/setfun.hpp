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

// One-level bijections behind Ackermann's encoding: naturals to finite
// sets, to finite functions (by differencing a set), and to run lengths.

#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "hfcodec/error.hpp"
#include "hfcodec/natbits.hpp"

namespace hfcodec {

/// Finite set of naturals held as a strictly increasing sequence.
class NatSet {
 public:
  NatSet() = default;

  /// Validates strict monotonicity; throws errc::invalid_set.
  explicit NatSet(std::vector<Natural> elems) : elems_(std::move(elems)) {
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      if (elems_[i] < 0) throw error(errc::invalid_set, "negative element " + elems_[i].str());
      if (i > 0 && elems_[i - 1] >= elems_[i])
        throw error(errc::invalid_set, "elements not strictly increasing at position " +
                                           std::to_string(i));
    }
  }

  /// For sequences already known to be strictly increasing.
  static NatSet trusted(std::vector<Natural> elems) {
    NatSet s;
    s.elems_ = std::move(elems);
    return s;
  }

  const std::vector<Natural>& elems() const noexcept { return elems_; }
  std::size_t size() const noexcept { return elems_.size(); }
  bool empty() const noexcept { return elems_.empty(); }
  auto begin() const noexcept { return elems_.begin(); }
  auto end() const noexcept { return elems_.end(); }

  friend bool operator==(const NatSet&, const NatSet&) = default;

 private:
  std::vector<Natural> elems_;
};

/// f(i) = values[i] on the domain [0, values.size()).
using FiniteFunction = std::vector<Natural>;

/// Run i has length runs[i] + 1.
using RunLengths = std::vector<Natural>;

// ---------------------------------------------------------------------------
// Sets
// ---------------------------------------------------------------------------

/// Sum of 2^e over the elements.
inline Natural set2nat(const NatSet& s) {
  std::vector<std::size_t> positions;
  positions.reserve(s.size());
  for (const auto& e : s) positions.push_back(to_size(e));
  return from_bit_positions(positions);
}

/// Exponents of the set bits of n, increasing.
inline NatSet nat2set(const Natural& n) {
  std::vector<Natural> elems;
  for (std::size_t p : set_bit_positions(n)) elems.emplace_back(p);
  return NatSet::trusted(std::move(elems));
}

// ---------------------------------------------------------------------------
// Finite functions
// ---------------------------------------------------------------------------

/// Prefix sums of values+1, each minus one; strictly increasing by construction.
inline NatSet fun2set(std::span<const Natural> f) {
  std::vector<Natural> out;
  out.reserve(f.size());
  Natural acc = -1;
  for (const auto& v : f) {
    if (v < 0) throw error(errc::invalid_digit, "negative function value " + v.str());
    acc += v + 1;
    out.push_back(acc);
  }
  return NatSet::trusted(std::move(out));
}

inline FiniteFunction set2fun(const NatSet& s) {
  FiniteFunction out;
  out.reserve(s.size());
  Natural prev = -1;
  for (const auto& x : s) {
    out.push_back(x - prev - 1);
    prev = x;
  }
  return out;
}

inline Natural fun2nat(std::span<const Natural> f) { return set2nat(fun2set(f)); }

inline FiniteFunction nat2fun(const Natural& n) { return set2fun(nat2set(n)); }

// ---------------------------------------------------------------------------
// Run-length encoding of bit strings
// ---------------------------------------------------------------------------

/// A run of m equal bits becomes the count m - 1.
inline RunLengths bits2rle(std::span<const unsigned> bits) {
  RunLengths out;
  std::size_t run = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] > 1) throw error(errc::invalid_digit, "bit " + std::to_string(bits[i]) + " is not 0 or 1");
    if (i + 1 < bits.size() && bits[i] == bits[i + 1]) {
      ++run;
    } else {
      out.emplace_back(run);
      run = 0;
    }
  }
  return out;
}

/// The last run is ones and runs alternate towards the front, so the
/// result always ends in 1 unless empty.
inline BitList rle2bits(std::span<const Natural> runs) {
  std::size_t total = 0;
  for (const auto& r : runs) total += to_size(r) + 1;
  BitList out(total);
  std::size_t pos = total;
  unsigned bit = 1;
  for (auto it = runs.rbegin(); it != runs.rend(); ++it) {
    std::size_t len = it->convert_to<std::size_t>() + 1;
    pos -= len;
    std::fill_n(out.begin() + static_cast<std::ptrdiff_t>(pos), len, bit);
    bit ^= 1U;
  }
  return out;
}

inline RunLengths nat2rle(const Natural& n) { return bits2rle(to_rbits0(n)); }

inline Natural rle2nat(std::span<const Natural> runs) { return from_rbits(rle2bits(runs)); }

}  // namespace hfcodec
