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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hfcodec {

enum class errc {
  invalid_base,
  invalid_digit,
  overflow,
  invalid_arity,
  non_canonical_tuple,
  invalid_set,
  not_a_permutation,
  invalid_lehmer,
  rank_overflow,
  urelement_out_of_range,
  parse_error,
  depth_limit,
};

constexpr std::string_view to_string(errc code) noexcept {
  switch (code) {
    case errc::invalid_base: return "invalid-base";
    case errc::invalid_digit: return "invalid-digit";
    case errc::overflow: return "overflow";
    case errc::invalid_arity: return "invalid-arity";
    case errc::non_canonical_tuple: return "non-canonical-tuple";
    case errc::invalid_set: return "invalid-set";
    case errc::not_a_permutation: return "not-a-permutation";
    case errc::invalid_lehmer: return "invalid-lehmer";
    case errc::rank_overflow: return "rank-overflow";
    case errc::urelement_out_of_range: return "urelement-out-of-range";
    case errc::parse_error: return "parse-error";
    case errc::depth_limit: return "depth-limit";
  }
  return "unknown";
}

/// Raised on every precondition violation of a public codec entry point.
class error : public std::invalid_argument {
 public:
  error(errc code, const std::string& detail)
      : std::invalid_argument(std::string(to_string(code)) + ": " + detail),
        code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace hfcodec
