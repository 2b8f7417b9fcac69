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

// Generic unranking (unfold) and ranking (fold) over rose trees, and the
// hereditarily finite codecs obtained by plugging a one-level bijection
// Nat <-> [Nat] into them.
//
// With urelement limit u, n < u unranks to Atom(n); any other n unranks to
// a forest whose children are the unranked elements of expand(n - u).
// Ranking is the mirror image: Atom(n) -> n, Forest(ts) -> u +
// collapse(ranks of ts). The recursion terminates because every element
// of expand(n - u) is strictly below n.

#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iterator>
#include <map>
#include <memory>
#include <ranges>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hfcodec/error.hpp"
#include "hfcodec/natbits.hpp"
#include "hfcodec/pairing.hpp"
#include "hfcodec/permcodec.hpp"
#include "hfcodec/setfun.hpp"
#include "hfcodec/tree.hpp"

namespace hfcodec {

template <class C>
concept TreeCodec = requires(const C& c, const Natural& n, std::span<const Natural> ranks) {
  { c.ulimit } -> std::convertible_to<const Natural&>;
  { c.expand(n) } -> std::convertible_to<std::vector<Natural>>;
  { c.collapse(ranks) } -> std::convertible_to<Natural>;
};

/// A one-level bijection Nat <-> [Nat] bundled with its urelement limit.
template <class Expand, class Collapse>
struct basic_codec {
  std::string name;
  Natural ulimit;
  Expand expand;
  Collapse collapse;
};

using Codec = basic_codec<std::function<std::vector<Natural>(const Natural&)>,
                          std::function<Natural(std::span<const Natural>)>>;

// ---------------------------------------------------------------------------
// unrank / rank
// ---------------------------------------------------------------------------

template <TreeCodec C>
Tree unrank(const C& c, const Natural& n, std::size_t max_depth = unlimited_depth) {
  struct Task {
    Natural n;
    Tree* slot;
    std::size_t depth;
  };
  Tree root;
  std::vector<Task> work;
  work.push_back({n, &root, 0});
  while (!work.empty()) {
    Task task = std::move(work.back());
    work.pop_back();
    if (task.n < c.ulimit) {
      *task.slot = Tree::atom(std::move(task.n));
      continue;
    }
    if (task.depth >= max_depth)
      throw error(errc::depth_limit, "tree depth exceeds " + std::to_string(max_depth));
    std::vector<Natural> elems = c.expand(task.n - c.ulimit);
    auto& kids = task.slot->children();
    kids.resize(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (elems[i] >= task.n)
        throw std::logic_error("codec expand does not descend: " + elems[i].str() +
                               " >= " + task.n.str());
      work.push_back({std::move(elems[i]), &kids[i], task.depth + 1});
    }
  }
  return root;
}

template <TreeCodec C>
Natural rank(const C& c, const Tree& t) {
  auto check_atom = [&](const Tree& a) -> const Natural& {
    if (a.value() < 0 || a.value() >= c.ulimit)
      throw error(errc::urelement_out_of_range,
                  "atom " + a.value().str() + " outside [0, " + c.ulimit.str() + ")");
    return a.value();
  };
  if (t.is_atom()) return check_atom(t);

  struct Frame {
    const Tree* node;
    std::vector<Natural> ranks;
    std::size_t next = 0;
  };
  std::vector<Frame> work;
  work.push_back({&t, {}});
  while (true) {
    Frame& f = work.back();
    const auto& kids = f.node->children();
    if (f.next < kids.size()) {
      const Tree& child = kids[f.next++];
      if (child.is_atom()) {
        f.ranks.push_back(check_atom(child));
      } else {
        work.push_back({&child, {}});
      }
      continue;
    }
    Natural r = c.ulimit + c.collapse(f.ranks);
    work.pop_back();
    if (work.empty()) return r;
    work.back().ranks.push_back(std::move(r));
  }
}

// ---------------------------------------------------------------------------
// Hereditarily finite codecs
// ---------------------------------------------------------------------------

/// Sets; Ackermann's encoding.
inline Codec codec_hfs(Natural ulimit = 0) {
  return {"hfs", std::move(ulimit), [](const Natural& n) { return nat2set(n).elems(); },
          [](std::span<const Natural> ranks) {
            return set2nat(NatSet(std::vector<Natural>(ranks.begin(), ranks.end())));
          }};
}

/// Functions via set differencing.
inline Codec codec_hff(Natural ulimit = 0) {
  return {"hff", std::move(ulimit), [](const Natural& n) { return nat2fun(n); },
          [](std::span<const Natural> ranks) { return fun2nat(ranks); }};
}

/// Functions via length-tagged tuples.
inline Codec codec_hff1(Natural ulimit = 0) {
  return {"hff1", std::move(ulimit), [](const Natural& n) { return nat2ftuple(n); },
          [](std::span<const Natural> ranks) { return ftuple2nat(ranks); }};
}

/// Functions via run lengths.
inline Codec codec_hff2(Natural ulimit = 0) {
  return {"hff2", std::move(ulimit), [](const Natural& n) { return nat2rle(n); },
          [](std::span<const Natural> ranks) { return rle2nat(ranks); }};
}

/// Permutations.
inline Codec codec_hfp(Natural ulimit = 0) {
  return {"hfp", std::move(ulimit), [](const Natural& n) { return nat2perm(n).to_naturals(); },
          [](std::span<const Natural> ranks) {
            return perm2nat(Permutation::from_naturals(ranks));
          }};
}

inline Tree nat2hfs(const Natural& n, const Natural& u = 0) { return unrank(codec_hfs(u), n); }
inline Tree nat2hff(const Natural& n, const Natural& u = 0) { return unrank(codec_hff(u), n); }
inline Tree nat2hff1(const Natural& n, const Natural& u = 0) { return unrank(codec_hff1(u), n); }
inline Tree nat2hff2(const Natural& n, const Natural& u = 0) { return unrank(codec_hff2(u), n); }
inline Tree nat2hfp(const Natural& n, const Natural& u = 0) { return unrank(codec_hfp(u), n); }

inline Natural hfs2nat(const Tree& t, const Natural& u = 0) { return rank(codec_hfs(u), t); }
inline Natural hff2nat(const Tree& t, const Natural& u = 0) { return rank(codec_hff(u), t); }
inline Natural hff2nat1(const Tree& t, const Natural& u = 0) { return rank(codec_hff1(u), t); }
inline Natural hff2nat2(const Tree& t, const Natural& u = 0) { return rank(codec_hff2(u), t); }
inline Natural hfp2nat(const Tree& t, const Natural& u = 0) { return rank(codec_hfp(u), t); }

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

/// Unbounded input range yielding f(start), f(start + 1), ...
template <class F>
class natural_stream : public std::ranges::view_interface<natural_stream<F>> {
 public:
  using value_type = std::decay_t<std::invoke_result_t<const F&, const Natural&>>;

  class iterator {
   public:
    using value_type = natural_stream::value_type;
    using difference_type = std::ptrdiff_t;
    using iterator_concept = std::input_iterator_tag;

    iterator() = default;
    explicit iterator(const natural_stream* s) : stream_(s), n_(s->start_) {}

    value_type operator*() const { return (*stream_->f_)(n_); }
    const Natural& index() const noexcept { return n_; }
    iterator& operator++() {
      ++n_;
      return *this;
    }
    void operator++(int) { ++n_; }

   private:
    const natural_stream* stream_ = nullptr;
    Natural n_;
  };

  natural_stream() = default;
  natural_stream(F f, Natural start)
      : f_(std::make_shared<const F>(std::move(f))), start_(std::move(start)) {}

  iterator begin() const { return iterator(this); }
  std::unreachable_sentinel_t end() const noexcept { return {}; }

 private:
  std::shared_ptr<const F> f_;  // shared so the stream stays assignable
  Natural start_;
};

template <class F>
auto enumerate_with(F f, Natural start = 0) {
  return natural_stream<F>(std::move(f), std::move(start));
}

/// Lazily unranks start, start + 1, ... under codec c.
template <TreeCodec C>
auto enumerate(C c, Natural start = 0) {
  return enumerate_with([c = std::move(c)](const Natural& n) { return unrank(c, n); },
                        std::move(start));
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

struct RenderStyle {
  std::string open;
  std::string separator;
  std::string close;
};

inline const RenderStyle set_style{"{", ",", "}"};
inline const RenderStyle fun_style{"(", " ", ")"};

/// Atoms print in decimal. When u > 1 an empty forest prints as "0", which
/// is indistinguishable from Atom 0; use serialize() for a lossless form.
inline std::string render(const RenderStyle& style, const Natural& u, const Tree& t) {
  std::string out;
  std::vector<std::pair<const Tree*, std::size_t>> work{{&t, 0}};
  while (!work.empty()) {
    auto& [node, next] = work.back();
    if (node->is_atom()) {
      if (node->value() < 0 || node->value() >= u)
        throw error(errc::urelement_out_of_range,
                    "atom " + node->value().str() + " outside [0, " + u.str() + ")");
      out += node->value().str();
      work.pop_back();
      continue;
    }
    const auto& kids = node->children();
    if (kids.empty()) {
      out += u > 1 ? std::string("0") : style.open + style.close;
      work.pop_back();
      continue;
    }
    if (next == 0) out += style.open;
    if (next == kids.size()) {
      out += style.close;
      work.pop_back();
      continue;
    }
    if (next > 0) out += style.separator;
    const Tree* child = &kids[next++];
    work.emplace_back(child, 0);
  }
  return out;
}

inline std::string set_show(const Natural& n, const Natural& u = 0) {
  return render(set_style, u, nat2hfs(n, u));
}
inline std::string fun_show(const Natural& n, const Natural& u = 0) {
  return render(fun_style, u, nat2hff(n, u));
}
inline std::string fun_show1(const Natural& n, const Natural& u = 0) {
  return render(fun_style, u, nat2hff1(n, u));
}
inline std::string fun_show2(const Natural& n, const Natural& u = 0) {
  return render(fun_style, u, nat2hff2(n, u));
}
inline std::string perm_show(const Natural& n, const Natural& u = 0) {
  return render(fun_style, u, nat2hfp(n, u));
}

// ---------------------------------------------------------------------------
// Shared-subtree DAG and DOT export
// ---------------------------------------------------------------------------

/// Tree with structurally equal subtrees merged. Node ids are topologically
/// ordered: every child id is smaller than its parent's, and the root is last.
struct Dag {
  struct Node {
    bool atom = false;
    Natural value;
    std::vector<std::size_t> children;  // ordered; repeats allowed
  };
  std::vector<Node> nodes;
  std::size_t root = 0;

  std::size_t edge_count() const {
    std::size_t e = 0;
    for (const auto& n : nodes) e += n.children.size();
    return e;
  }
};

namespace detail {

struct IdVectorHash {
  std::size_t operator()(const std::vector<std::size_t>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (std::size_t x : v) {
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace detail

/// Hash-conses t bottom-up. Forests are keyed by the ids of their children,
/// which are already canonical, so key equality is structural equality.
inline Dag to_dag(const Tree& t) {
  Dag dag;
  std::map<Natural, std::size_t> atoms;
  std::unordered_map<std::vector<std::size_t>, std::size_t, detail::IdVectorHash> forests;

  auto intern_atom = [&](const Natural& v) {
    auto [it, fresh] = atoms.try_emplace(v, dag.nodes.size());
    if (fresh) dag.nodes.push_back({true, v, {}});
    return it->second;
  };
  auto intern_forest = [&](std::vector<std::size_t> ids) {
    auto it = forests.find(ids);
    if (it != forests.end()) return it->second;
    std::size_t id = dag.nodes.size();
    dag.nodes.push_back({false, 0, ids});
    forests.emplace(std::move(ids), id);
    return id;
  };

  if (t.is_atom()) {
    dag.root = intern_atom(t.value());
    return dag;
  }
  struct Frame {
    const Tree* node;
    std::vector<std::size_t> ids;
    std::size_t next = 0;
  };
  std::vector<Frame> work;
  work.push_back({&t, {}});
  while (true) {
    Frame& f = work.back();
    const auto& kids = f.node->children();
    if (f.next < kids.size()) {
      const Tree& child = kids[f.next++];
      if (child.is_atom()) {
        f.ids.push_back(intern_atom(child.value()));
      } else {
        work.push_back({&child, {}});
      }
      continue;
    }
    std::size_t id = intern_forest(std::move(f.ids));
    work.pop_back();
    if (work.empty()) {
      dag.root = id;
      return dag;
    }
    work.back().ids.push_back(id);
  }
}

/// Serialized text of every node, indexed by node id.
inline std::vector<std::string> dag_texts(const Dag& dag) {
  std::vector<std::string> text(dag.nodes.size());
  for (std::size_t i = 0; i < dag.nodes.size(); ++i) {
    const auto& n = dag.nodes[i];
    if (n.atom) {
      text[i] = "a" + n.value.str();
      continue;
    }
    std::string s = "(";
    for (std::size_t k = 0; k < n.children.size(); ++k) {
      if (k > 0) s += ' ';
      s += text[n.children[k]];
    }
    s += ')';
    text[i] = std::move(s);
  }
  return text;
}

/// Graphviz digraph; edges run from container to element and carry the
/// 0-based child position. Each node is labelled with the first eight hex
/// digits of the FNV-1a hash of its serialized text.
inline std::string to_dot(const Dag& dag, std::string_view graph_name = "hf") {
  static constexpr char hex[] = "0123456789abcdef";
  std::vector<std::string> texts = dag_texts(dag);
  std::string out = "digraph " + std::string(graph_name) + " {\n";
  out += "  node [fontname=\"monospace\"];\n";
  for (std::size_t i = 0; i < dag.nodes.size(); ++i) {
    std::uint64_t h = detail::fnv1a64(texts[i]);
    std::string label(8, '0');
    for (int k = 7; k >= 0; --k) {
      label[static_cast<std::size_t>(k)] = hex[h & 0xF];
      h >>= 4;
    }
    out += "  n" + std::to_string(i) + " [label=\"" + label + "\"";
    out += dag.nodes[i].atom ? ", shape=box" : ", shape=ellipse";
    if (i == dag.root) out += ", peripheries=2";
    out += "];\n";
  }
  for (std::size_t i = 0; i < dag.nodes.size(); ++i) {
    const auto& kids = dag.nodes[i].children;
    for (std::size_t k = 0; k < kids.size(); ++k)
      out += "  n" + std::to_string(i) + " -> n" + std::to_string(kids[k]) + " [label=\"" +
             std::to_string(k) + "\"];\n";
  }
  out += "}\n";
  return out;
}

inline std::string to_dot(const Tree& t) { return to_dot(to_dag(t)); }

}  // namespace hfcodec
