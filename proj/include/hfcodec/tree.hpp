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

// Rose tree with natural-number atoms, the carrier of every hereditarily
// finite structure in this library.
//
// Trees produced from large naturals can nest thousands of levels deep, so
// copy, destruction, comparison and the text format all walk the tree with
// an explicit stack rather than the call stack.
//
// Text format:
//   tree   := atom | forest
//   atom   := "a" decimal
//   forest := "(" tree ( " " tree )* ")" | "()"

#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hfcodec/error.hpp"
#include "hfcodec/natbits.hpp"

namespace hfcodec {

inline constexpr std::size_t unlimited_depth = std::numeric_limits<std::size_t>::max();

class Tree {
 public:
  /// The empty forest.
  Tree() = default;

  static Tree atom(Natural value) {
    Tree t;
    t.atom_ = true;
    t.value_ = std::move(value);
    return t;
  }

  static Tree forest(std::vector<Tree> children = {}) {
    Tree t;
    t.children_ = std::move(children);
    return t;
  }

  Tree(const Tree& other) : atom_(other.atom_), value_(other.value_) {
    std::vector<std::pair<const Tree*, Tree*>> work{{&other, this}};
    while (!work.empty()) {
      auto [src, dst] = work.back();
      work.pop_back();
      dst->children_.resize(src->children_.size());
      for (std::size_t i = 0; i < src->children_.size(); ++i) {
        const Tree& s = src->children_[i];
        Tree& d = dst->children_[i];
        d.atom_ = s.atom_;
        d.value_ = s.value_;
        if (!s.children_.empty()) work.emplace_back(&s, &d);
      }
    }
  }

  Tree(Tree&& other) noexcept
      : atom_(other.atom_), value_(std::move(other.value_)), children_(std::move(other.children_)) {
    other.children_.clear();
  }

  Tree& operator=(const Tree& other) {
    if (this != &other) {
      Tree copy(other);
      swap(copy);
    }
    return *this;
  }

  Tree& operator=(Tree&& other) noexcept {
    if (this != &other) {
      Tree tmp(std::move(other));
      swap(tmp);
    }
    return *this;
  }

  ~Tree() {
    if (children_.empty()) return;
    std::vector<Tree> pending = std::move(children_);
    children_.clear();
    while (!pending.empty()) {
      Tree t = std::move(pending.back());
      pending.pop_back();
      for (auto& c : t.children_) pending.push_back(std::move(c));
      t.children_.clear();
    }
  }

  void swap(Tree& other) noexcept {
    std::swap(atom_, other.atom_);
    value_.swap(other.value_);
    children_.swap(other.children_);
  }

  bool is_atom() const noexcept { return atom_; }
  bool is_forest() const noexcept { return !atom_; }

  /// Atom value; zero for forests.
  const Natural& value() const noexcept { return value_; }

  /// Children of a forest; empty for atoms.
  const std::vector<Tree>& children() const noexcept { return children_; }
  std::vector<Tree>& children() noexcept { return children_; }

  friend bool operator==(const Tree& a, const Tree& b) {
    std::vector<std::pair<const Tree*, const Tree*>> work{{&a, &b}};
    while (!work.empty()) {
      auto [x, y] = work.back();
      work.pop_back();
      if (x->atom_ != y->atom_) return false;
      if (x->atom_) {
        if (x->value_ != y->value_) return false;
        continue;
      }
      if (x->children_.size() != y->children_.size()) return false;
      for (std::size_t i = 0; i < x->children_.size(); ++i)
        work.emplace_back(&x->children_[i], &y->children_[i]);
    }
    return true;
  }

 private:
  bool atom_ = false;
  Natural value_ = 0;
  std::vector<Tree> children_;
};

/// Total number of nodes (atoms and forests).
inline std::size_t node_count(const Tree& t) {
  std::size_t count = 0;
  std::vector<const Tree*> work{&t};
  while (!work.empty()) {
    const Tree* n = work.back();
    work.pop_back();
    ++count;
    for (const auto& c : n->children()) work.push_back(&c);
  }
  return count;
}

/// Levels below the root; a leaf has depth 0.
inline std::size_t depth(const Tree& t) {
  std::size_t best = 0;
  std::vector<std::pair<const Tree*, std::size_t>> work{{&t, 0}};
  while (!work.empty()) {
    auto [n, d] = work.back();
    work.pop_back();
    best = std::max(best, d);
    for (const auto& c : n->children()) work.emplace_back(&c, d + 1);
  }
  return best;
}

/// Visits every atom value.
template <class F>
void for_each_atom(const Tree& t, F&& f) {
  std::vector<const Tree*> work{&t};
  while (!work.empty()) {
    const Tree* n = work.back();
    work.pop_back();
    if (n->is_atom()) f(n->value());
    for (const auto& c : n->children()) work.push_back(&c);
  }
}

// ---------------------------------------------------------------------------
// Lossless text format
// ---------------------------------------------------------------------------

inline std::string serialize(const Tree& t) {
  std::string out;
  // (node, index of the next child to emit)
  std::vector<std::pair<const Tree*, std::size_t>> work{{&t, 0}};
  while (!work.empty()) {
    auto& [node, next] = work.back();
    if (node->is_atom()) {
      out += 'a';
      out += node->value().str();
      work.pop_back();
      continue;
    }
    const auto& kids = node->children();
    if (next == 0) out += '(';
    if (next == kids.size()) {
      out += ')';
      work.pop_back();
      continue;
    }
    if (next > 0) out += ' ';
    const Tree* child = &kids[next++];
    work.emplace_back(child, 0);
  }
  return out;
}

/// Parses the text format. Whitespace between tokens is tolerated;
/// nesting deeper than `max_depth` raises errc::depth_limit.
inline Tree deserialize(std::string_view text, std::size_t max_depth = unlimited_depth) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) -> void {
    throw error(errc::parse_error, what + " at position " + std::to_string(pos));
  };
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_atom = [&]() -> Tree {
    ++pos;  // 'a'
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("expected decimal digits after 'a'");
    return Tree::atom(parse_natural(text.substr(start, pos - start)));
  };

  // Open forests, innermost last.
  std::vector<std::vector<Tree>> open;
  std::optional<Tree> result;
  skip_ws();
  while (!result) {
    if (pos >= text.size()) fail("unexpected end of input");
    char c = text[pos];
    std::optional<Tree> done;
    if (c == '(') {
      if (open.size() >= max_depth)
        throw error(errc::depth_limit, "nesting exceeds " + std::to_string(max_depth));
      open.emplace_back();
      ++pos;
    } else if (c == ')') {
      if (open.empty()) fail("unbalanced ')'");
      ++pos;
      done = Tree::forest(std::move(open.back()));
      open.pop_back();
    } else if (c == 'a') {
      done = read_atom();
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
    if (done) {
      if (open.empty()) {
        result = std::move(done);
      } else {
        open.back().push_back(std::move(*done));
        if (pos < text.size() && text[pos] != ')' &&
            !std::isspace(static_cast<unsigned char>(text[pos])))
          fail("expected ' ' or ')'");
      }
    }
    skip_ws();
  }
  if (pos != text.size()) fail("trailing input");
  return std::move(*result);
}

}  // namespace hfcodec
