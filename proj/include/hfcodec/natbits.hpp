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

// Arbitrary-precision naturals and the digit/bit list conversions every
// codec in this library is built from.

#pragma once

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <limits>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hfcodec/error.hpp"

namespace hfcodec {

/// Unbounded non-negative integer. Negative values never escape a public
/// operation; parse_natural and the codecs reject them at the boundary.
using Natural = boost::multiprecision::cpp_int;

/// Little-endian binary digits: element i is the coefficient of 2^i.
using BitList = std::vector<unsigned>;

/// Little-endian digits in an explicit base.
struct DigitList {
  Natural base;
  std::vector<Natural> digits;

  friend bool operator==(const DigitList&, const DigitList&) = default;
};

// ---------------------------------------------------------------------------
// Word-level primitives
// ---------------------------------------------------------------------------

inline Natural exp2(std::size_t e) {
  Natural r = 0;
  boost::multiprecision::bit_set(r, static_cast<unsigned>(e));
  return r;
}

/// Number of significant bits; 0 for zero.
inline std::size_t bit_length(const Natural& n) {
  return n.is_zero() ? 0 : boost::multiprecision::msb(n) + 1;
}

inline bool test_bit(const Natural& n, std::size_t i) {
  return boost::multiprecision::bit_test(n, static_cast<unsigned>(i));
}

/// Dyadic valuation: exponent of the largest power of two dividing n > 0.
inline std::size_t trailing_zeros(const Natural& n) {
  return boost::multiprecision::lsb(n);
}

inline std::size_t to_size(const Natural& n) {
  if (n < 0 || n > std::numeric_limits<std::size_t>::max())
    throw error(errc::overflow, n.str() + " does not fit a machine size");
  return n.convert_to<std::size_t>();
}

/// Positions of the set bits of n, in increasing order.
inline std::vector<std::size_t> set_bit_positions(const Natural& n) {
  std::vector<std::size_t> out;
  if (n.is_zero()) return out;
  std::vector<std::uint64_t> words;
  boost::multiprecision::export_bits(n, std::back_inserter(words), 64, false);
  for (std::size_t w = 0; w < words.size(); ++w) {
    std::uint64_t word = words[w];
    while (word != 0) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
      word &= word - 1;
    }
  }
  return out;
}

/// Builds the natural whose set bits are exactly `positions` (any order,
/// duplicates collapse).
inline Natural from_bit_positions(std::span<const std::size_t> positions) {
  if (positions.empty()) return 0;
  std::size_t top = *std::max_element(positions.begin(), positions.end());
  std::vector<std::uint64_t> words(top / 64 + 1, 0);
  for (std::size_t p : positions) words[p / 64] |= std::uint64_t{1} << (p % 64);
  Natural r;
  boost::multiprecision::import_bits(r, words.begin(), words.end(), 64, false);
  return r;
}

/// Floor square root by Newton iteration on unbounded integers.
inline Natural isqrt(const Natural& n) {
  if (n < 2) return n;
  // 2^ceil(bits/2) is an upper bound; Newton descends monotonically from it.
  Natural x = exp2((bit_length(n) + 1) / 2);
  while (true) {
    Natural y = (x + n / x) >> 1;
    if (y >= x) return x;
    x = std::move(y);
  }
}

// ---------------------------------------------------------------------------
// Base conversions
// ---------------------------------------------------------------------------

/// Little-endian digits of n in `base`; zero is the single digit [0].
inline DigitList to_base(const Natural& base, const Natural& n) {
  if (base < 2) throw error(errc::invalid_base, "base " + base.str() + " < 2");
  DigitList out{base, {}};
  Natural q = n;
  do {
    Natural d;
    boost::multiprecision::divide_qr(q, base, q, d);
    out.digits.push_back(std::move(d));
  } while (!q.is_zero());
  return out;
}

inline Natural from_base(const Natural& base, std::span<const Natural> digits) {
  if (base < 2) throw error(errc::invalid_base, "base " + base.str() + " < 2");
  Natural acc = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    if (*it < 0 || *it >= base)
      throw error(errc::invalid_digit,
                  "digit " + it->str() + " out of range for base " + base.str());
    acc = acc * base + *it;
  }
  return acc;
}

inline Natural from_base(const DigitList& ds) { return from_base(ds.base, ds.digits); }

inline BitList to_rbits(const Natural& n) {
  BitList out;
  boost::multiprecision::export_bits(n, std::back_inserter(out), 1, false);
  if (out.empty()) out.push_back(0);
  return out;
}

/// Like to_rbits, but zero maps to the empty list.
inline BitList to_rbits0(const Natural& n) {
  if (n.is_zero()) return {};
  return to_rbits(n);
}

inline Natural from_rbits(std::span<const unsigned> bits) {
  for (unsigned b : bits)
    if (b > 1) throw error(errc::invalid_digit, "bit " + std::to_string(b) + " is not 0 or 1");
  Natural r = 0;
  if (bits.empty()) return r;
  boost::multiprecision::import_bits(r, bits.begin(), bits.end(), 1, false);
  return r;
}

/// Canonical bits of n right-padded with zeros to exactly `width` entries.
inline BitList to_maxbits(std::size_t width, const Natural& n) {
  BitList bits = to_rbits(n);
  if (bits.size() > width)
    throw error(errc::overflow, n.str() + " needs more than " + std::to_string(width) + " bits");
  bits.resize(width, 0);
  return bits;
}

/// Least x >= 1 with 2^x > n, so bitcount(0) == 1.
inline std::size_t bitcount(const Natural& n) { return std::max<std::size_t>(1, bit_length(n)); }

inline std::size_t max_bitcount(std::span<const Natural> ns) {
  std::size_t best = 0;
  for (const auto& n : ns) best = std::max(best, bitcount(n));
  return best;
}

// ---------------------------------------------------------------------------
// Text and random helpers
// ---------------------------------------------------------------------------

/// Parses a decimal or 0x-prefixed hexadecimal natural.
inline Natural parse_natural(std::string_view text) {
  auto fail = [&] {
    throw error(errc::parse_error, "not a natural number: '" + std::string(text) + "'");
  };
  if (text.empty()) fail();
  if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    std::string_view hex = text.substr(2);
    for (char c : hex)
      if (!std::isxdigit(static_cast<unsigned char>(c))) fail();
    return Natural("0x" + std::string(hex));
  }
  for (char c : text)
    if (c < '0' || c > '9') fail();
  // cpp_int reads a leading 0 as octal.
  auto first = text.find_first_not_of('0');
  if (first == std::string_view::npos) return 0;
  return Natural(std::string(text.substr(first)));
}

/// Uniform natural in [0, 2^bits).
template <class Rng>
Natural random_natural(Rng& rng, std::size_t bits) {
  std::vector<std::uint64_t> words((bits + 63) / 64);
  for (auto& w : words) w = rng();
  if (bits % 64 != 0 && !words.empty()) words.back() &= (std::uint64_t{1} << (bits % 64)) - 1;
  Natural r = 0;
  if (!words.empty())
    boost::multiprecision::import_bits(r, words.begin(), words.end(), 64, false);
  return r;
}

}  // namespace hfcodec
