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

// Pairing functions Nat x Nat <-> Nat (Cantor, Pepis-Kalmar-Robinson,
// bit merge), k-ary tupling by bit-matrix transposition, and the
// length-tagged finite tuple codec.

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hfcodec/error.hpp"
#include "hfcodec/natbits.hpp"

namespace hfcodec {

struct NatPair {
  Natural first;
  Natural second;

  friend bool operator==(const NatPair&, const NatPair&) = default;
};

/// Fixed-arity tuple; arity is the length and is always >= 1.
using NatTuple = std::vector<Natural>;

// ---------------------------------------------------------------------------
// Cantor
// ---------------------------------------------------------------------------

inline Natural cantor_pair(const Natural& x, const Natural& y) {
  Natural s = x + y;
  return s * (s + 1) / 2 + y;
}

inline NatPair cantor_unpair(const Natural& z) {
  // w is the index of the diagonal holding z.
  Natural w = (isqrt(8 * z + 1) - 1) / 2;
  Natural second = z - w * (w + 1) / 2;
  Natural first = w - second;
  return {std::move(first), std::move(second)};
}

// ---------------------------------------------------------------------------
// Pepis-Kalmar-Robinson: 2^x * (2y + 1) - 1
// ---------------------------------------------------------------------------

inline Natural pepis_pair(const Natural& x, const Natural& y) {
  return ((2 * y + 1) << to_size(x)) - 1;
}

inline NatPair pepis_unpair(const Natural& n) {
  Natural m = n + 1;
  std::size_t x = trailing_zeros(m);
  return {Natural(x), ((m >> x) - 1) / 2};
}

// ---------------------------------------------------------------------------
// Bit merge: first on even bits, second on odd bits
// ---------------------------------------------------------------------------

inline Natural bitmerge_pair(const NatPair& p) {
  std::vector<std::size_t> positions;
  for (std::size_t i : set_bit_positions(p.first)) positions.push_back(2 * i);
  for (std::size_t j : set_bit_positions(p.second)) positions.push_back(2 * j + 1);
  return from_bit_positions(positions);
}

inline NatPair bitmerge_unpair(const Natural& n) {
  std::vector<std::size_t> evens, odds;
  for (std::size_t p : set_bit_positions(n)) (p % 2 == 0 ? evens : odds).push_back(p / 2);
  return {from_bit_positions(evens), from_bit_positions(odds)};
}

// ---------------------------------------------------------------------------
// k-ary tupling
// ---------------------------------------------------------------------------

/// Component i collects bits i, i+k, i+2k, ... of n.
inline NatTuple to_tuple(std::size_t arity, const Natural& n) {
  if (arity == 0) throw error(errc::invalid_arity, "tuple arity must be >= 1");
  std::vector<std::vector<std::size_t>> columns(arity);
  for (std::size_t p : set_bit_positions(n)) columns[p % arity].push_back(p / arity);
  NatTuple out;
  out.reserve(arity);
  for (const auto& col : columns) out.push_back(from_bit_positions(col));
  return out;
}

/// Interleaves the bits of ns, one from each component per row.
inline Natural from_tuple(std::span<const Natural> ns) {
  if (ns.empty()) throw error(errc::invalid_arity, "cannot merge an empty tuple");
  const std::size_t k = ns.size();
  std::vector<std::size_t> positions;
  for (std::size_t i = 0; i < k; ++i) {
    if (ns[i] < 0) throw error(errc::invalid_digit, "negative tuple component");
    for (std::size_t j : set_bit_positions(ns[i])) positions.push_back(j * k + i);
  }
  return from_bit_positions(positions);
}

// ---------------------------------------------------------------------------
// Finite tuples of any length
// ---------------------------------------------------------------------------

/// Encodes a tuple together with its length. [0] is rejected: it would
/// share rank 0 with the empty tuple.
inline Natural ftuple2nat(std::span<const Natural> ns) {
  if (ns.empty()) return 0;
  if (ns.size() == 1 && ns[0] == 0)
    throw error(errc::non_canonical_tuple, "[0] collides with [] at rank 0");
  return pepis_pair(Natural(ns.size() - 1), from_tuple(ns));
}

inline std::vector<Natural> nat2ftuple(const Natural& n) {
  if (n.is_zero()) return {};
  NatPair kf = pepis_unpair(n);
  return to_tuple(to_size(kf.first) + 1, kf.second);
}

}  // namespace hfcodec
