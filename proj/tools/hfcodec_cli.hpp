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

// Command-line front end. Kept in a header so tests can drive it in-process.
//
// Exit codes: 0 success, 1 selfcheck failure, 2 usage or parse error.

#pragma once

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hfcodec/hftree.hpp"
#include "hfcodec/natbits.hpp"
#include "hfcodec/pairing.hpp"
#include "hfcodec/permcodec.hpp"
#include "hfcodec/selfcheck.hpp"
#include "hfcodec/setfun.hpp"
#include "hfcodec/tree.hpp"

namespace hfcodec::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_selfcheck_failed = 1;
inline constexpr int exit_usage = 2;
inline constexpr std::size_t default_recursion_limit = 1'000'000;

enum class CodecKind {
  set, fun, ftuple, rle, perm, factoradic_r, factoradic_l,
  pair_cantor, pair_pepis, pair_bitmerge, tuple,
  hfs, hff, hff1, hff2, hfp,
};

inline const std::map<std::string, CodecKind>& codec_names() {
  static const std::map<std::string, CodecKind> names{
      {"set", CodecKind::set},
      {"fun", CodecKind::fun},
      {"ftuple", CodecKind::ftuple},
      {"rle", CodecKind::rle},
      {"perm", CodecKind::perm},
      {"factoradic-r", CodecKind::factoradic_r},
      {"factoradic-l", CodecKind::factoradic_l},
      {"pair-cantor", CodecKind::pair_cantor},
      {"pair-pepis", CodecKind::pair_pepis},
      {"pair-bitmerge", CodecKind::pair_bitmerge},
      {"tuple", CodecKind::tuple},
      {"hfs", CodecKind::hfs},
      {"hff", CodecKind::hff},
      {"hff1", CodecKind::hff1},
      {"hff2", CodecKind::hff2},
      {"hfp", CodecKind::hfp},
  };
  return names;
}

inline bool is_hierarchical(CodecKind k) {
  return k == CodecKind::hfs || k == CodecKind::hff || k == CodecKind::hff1 ||
         k == CodecKind::hff2 || k == CodecKind::hfp;
}

/// Raised for bad command lines; reported with exit status 2.
class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  CodecKind codec = CodecKind::set;
  Natural ulimit = 0;
  std::optional<std::size_t> arity;
  std::string format;  // empty selects the codec's default
  bool sized = false;
  std::size_t max_depth = default_recursion_limit;
};

// ---------------------------------------------------------------------------
// Text helpers
// ---------------------------------------------------------------------------

inline std::string format_list(const std::vector<Natural>& xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ',';
    s += xs[i].str();
  }
  return s + "]";
}

/// "[a, b, c]" with optional spaces; elements are decimal or 0x hex.
inline std::vector<Natural> parse_list(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw error(errc::parse_error, "expected a bracketed list, got '" + std::string(text) + "'");
  std::string_view body = trim(text.substr(1, text.size() - 2));
  std::vector<Natural> out;
  if (body.empty()) return out;
  while (true) {
    auto comma = body.find(',');
    out.push_back(parse_natural(trim(body.substr(0, comma))));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return out;
}

/// Nested-bracket form of a tree: atoms as decimals, forests as [..].
inline std::string tree_to_list(const Tree& t) {
  std::string out;
  for (char c : serialize(t)) {
    switch (c) {
      case '(': out += '['; break;
      case ')': out += ']'; break;
      case ' ': out += ','; break;
      case 'a': break;
      default: out += c;
    }
  }
  return out;
}

/// Accepts either the serialize grammar or nested brackets.
inline Tree parse_tree(std::string_view text, std::size_t max_depth) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  bool list_form = i < text.size() && (text[i] == '[' || std::isdigit(static_cast<unsigned char>(text[i])));
  if (!list_form) return deserialize(text, max_depth);
  std::string s;
  while (i < text.size()) {
    char c = text[i];
    if (c == '[') {
      s += '(';
      ++i;
    } else if (c == ']') {
      s += ')';
      ++i;
    } else if (c == ',') {
      s += ' ';
      ++i;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isalnum(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      while (i < text.size() && std::isalnum(static_cast<unsigned char>(text[i]))) ++i;
      s += 'a';
      s += parse_natural(text.substr(start, i - start)).str();
    } else {
      throw error(errc::parse_error,
                  std::string("unexpected character '") + c + "' at position " + std::to_string(i));
    }
  }
  return deserialize(s, max_depth);
}

inline Codec tree_codec(CodecKind k, const Natural& u) {
  switch (k) {
    case CodecKind::hfs: return codec_hfs(u);
    case CodecKind::hff: return codec_hff(u);
    case CodecKind::hff1: return codec_hff1(u);
    case CodecKind::hff2: return codec_hff2(u);
    default: return codec_hfp(u);
  }
}

// ---------------------------------------------------------------------------
// Decoding and encoding
// ---------------------------------------------------------------------------

inline std::vector<Natural> decode_flat(const Options& o, const Natural& n) {
  switch (o.codec) {
    case CodecKind::set: return nat2set(n).elems();
    case CodecKind::fun: return nat2fun(n);
    case CodecKind::ftuple: return nat2ftuple(n);
    case CodecKind::rle: return nat2rle(n);
    case CodecKind::perm: return nat2perm(n).to_naturals();
    case CodecKind::factoradic_r: return fr(n).digits;
    case CodecKind::factoradic_l: return fl(n).digits;
    case CodecKind::pair_cantor: {
      auto p = cantor_unpair(n);
      return {p.first, p.second};
    }
    case CodecKind::pair_pepis: {
      auto p = pepis_unpair(n);
      return {p.first, p.second};
    }
    case CodecKind::pair_bitmerge: {
      auto p = bitmerge_unpair(n);
      return {p.first, p.second};
    }
    case CodecKind::tuple: return to_tuple(*o.arity, n);
    default: throw std::logic_error("not a flat codec");
  }
}

inline Natural encode_flat(const Options& o, const std::vector<Natural>& xs) {
  auto pair_of = [&]() -> NatPair {
    if (xs.size() != 2) throw usage_error("pair codecs take exactly two elements");
    return {xs[0], xs[1]};
  };
  switch (o.codec) {
    case CodecKind::set: return set2nat(NatSet(xs));
    case CodecKind::fun: return fun2nat(xs);
    case CodecKind::ftuple: return ftuple2nat(xs);
    case CodecKind::rle: return rle2nat(xs);
    case CodecKind::perm: return perm2nat(Permutation::from_naturals(xs));
    case CodecKind::factoradic_r: return rf(xs);
    case CodecKind::factoradic_l: return lf(xs);
    case CodecKind::pair_cantor: {
      auto p = pair_of();
      return cantor_pair(p.first, p.second);
    }
    case CodecKind::pair_pepis: {
      auto p = pair_of();
      return pepis_pair(p.first, p.second);
    }
    case CodecKind::pair_bitmerge: return bitmerge_pair(pair_of());
    case CodecKind::tuple:
      if (o.arity && *o.arity != xs.size())
        throw usage_error("--arity " + std::to_string(*o.arity) + " does not match " +
                          std::to_string(xs.size()) + " elements");
      return from_tuple(xs);
    default: throw std::logic_error("not a flat codec");
  }
}

inline std::string show_flat(const Options& o, const std::vector<Natural>& xs) {
  const RenderStyle& st = o.codec == CodecKind::set ? set_style : fun_style;
  std::string s = st.open;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += st.separator;
    s += xs[i].str();
  }
  return s + st.close;
}

/// Text for rank n; the sized perm form takes its own path.
inline std::string decode_text(const Options& o, const Natural& n) {
  if (is_hierarchical(o.codec)) {
    Tree t = unrank(tree_codec(o.codec, o.ulimit), n, o.max_depth);
    const std::string& f = o.format.empty() ? "tree" : o.format;
    if (f == "tree") return serialize(t);
    if (f == "list") return tree_to_list(t);
    if (f == "show")
      return render(o.codec == CodecKind::hfs ? set_style : fun_style, o.ulimit, t);
    if (f == "dot") return to_dot(t);
    return n.str();
  }
  const std::string& f = o.format.empty() ? "list" : o.format;
  if (f == "tree" || f == "dot") throw usage_error("format '" + f + "' needs a hierarchical codec");
  if (f == "decimal") return n.str();
  auto xs = decode_flat(o, n);
  return f == "show" ? show_flat(o, xs) : format_list(xs);
}

inline Natural encode_text(const Options& o, std::string_view text) {
  if (is_hierarchical(o.codec))
    return rank(tree_codec(o.codec, o.ulimit), parse_tree(text, o.max_depth));
  return encode_flat(o, parse_list(text));
}

// ---------------------------------------------------------------------------
// Command dispatch
// ---------------------------------------------------------------------------

inline std::size_t recursion_limit_from_env() {
  const char* v = std::getenv("HFCODEC_RECURSION_LIMIT");
  if (v == nullptr || *v == '\0') return default_recursion_limit;
  Natural n = parse_natural(v);
  if (n == 0) throw usage_error("HFCODEC_RECURSION_LIMIT must be positive");
  return n > std::numeric_limits<std::size_t>::max() ? unlimited_depth : n.convert_to<std::size_t>();
}

inline std::string join(const std::vector<std::string>& parts, std::size_t from) {
  std::string s;
  for (std::size_t i = from; i < parts.size(); ++i) {
    if (i > from) s += ' ';
    s += parts[i];
  }
  return s;
}

inline std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

struct RawOptions {
  std::vector<std::string> args;
  std::string codec;
  std::string ulimit = "0";
  std::optional<std::size_t> arity;
  std::string format;
  bool sized = false;
};

// Resolves the codec name (flag or first positional) and validates flags.
// Returns the positionals that follow the codec.
inline std::vector<std::string> resolve(const RawOptions& raw, Options& o) {
  std::vector<std::string> rest = raw.args;
  std::string name = raw.codec;
  if (name.empty()) {
    if (rest.empty()) throw usage_error("missing codec name");
    name = rest.front();
    rest.erase(rest.begin());
  }
  auto it = codec_names().find(name);
  if (it == codec_names().end()) throw usage_error("unknown codec '" + name + "'");
  o.codec = it->second;
  o.ulimit = parse_natural(raw.ulimit);
  o.arity = raw.arity;
  o.format = raw.format;
  o.sized = raw.sized;
  if (o.codec == CodecKind::tuple && o.arity && *o.arity == 0)
    throw usage_error("--arity must be at least 1");
  if (o.codec != CodecKind::tuple && o.arity) throw usage_error("--arity applies to tuple only");
  if (o.sized && o.codec != CodecKind::perm) throw usage_error("--sized applies to perm only");
  if (o.ulimit != 0 && !is_hierarchical(o.codec))
    throw usage_error("--ulimit applies to hierarchical codecs only");
  return rest;
}

inline void cmd_decode(const RawOptions& raw, Options o, std::ostream& out) {
  auto rest = resolve(raw, o);
  if (o.sized) {
    auto words = split_ws(join(rest, 0));
    if (words.size() != 2) throw usage_error("--sized decode takes a size and a rank");
    std::size_t k = to_size(parse_natural(words[0]));
    Permutation p = nth2perm({k, parse_natural(words[1])});
    if (o.format == "decimal") {
      out << perm2nat(p) << '\n';
      return;
    }
    Options plain = o;
    out << (o.format == "show" ? show_flat(plain, p.to_naturals()) : format_list(p.to_naturals()))
        << '\n';
    return;
  }
  if (rest.size() != 1) throw usage_error("decode takes exactly one natural");
  if (o.codec == CodecKind::tuple && !o.arity) throw usage_error("tuple needs --arity");
  out << decode_text(o, parse_natural(rest[0])) << '\n';
}

inline void cmd_encode(const RawOptions& raw, Options o, std::ostream& out) {
  auto rest = resolve(raw, o);
  if (rest.empty()) throw usage_error("encode takes a structure");
  std::string text = join(rest, 0);
  if (o.sized) {
    SizedRank sr = perm2nth(Permutation::from_naturals(parse_list(text)));
    out << sr.size << ' ' << sr.rank << '\n';
    return;
  }
  out << encode_text(o, text) << '\n';
}

inline void cmd_enumerate(const RawOptions& raw, Options o, std::ostream& out) {
  auto rest = resolve(raw, o);
  if (rest.size() > 2) throw usage_error("enumerate takes [from] [count]");
  if (o.codec == CodecKind::tuple && !o.arity) throw usage_error("tuple needs --arity");
  if (o.sized) throw usage_error("--sized is not supported by enumerate");
  Natural from = rest.size() > 0 ? parse_natural(rest[0]) : Natural(0);
  std::optional<Natural> count;
  if (rest.size() > 1) count = parse_natural(rest[1]);
  auto items = enumerate_with([&o](const Natural& n) { return decode_text(o, n); }, from);
  for (auto it = items.begin(); !count || it.index() - from < *count; ++it) {
    out << *it << '\n';
    out.flush();
    if (!out) return;  // downstream closed
  }
}

/// Parses argv and runs one subcommand. Output goes to `out`, diagnostics to `err`.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bijective encodings of naturals as sets, functions, permutations and trees",
               "hfcodec"};
  app.require_subcommand(1);

  RawOptions raw;
  std::map<std::string, CLI::App*> subs;
  auto add_codec_command = [&](const std::string& name, const std::string& help) {
    CLI::App* s = app.add_subcommand(name, help);
    // Operands are taken from remaining() so "[1,2]" is not split into a list.
    s->allow_extras();
    s->add_option("--codec", raw.codec, "codec name")
        ->check(CLI::IsMember([] {
          std::vector<std::string> v;
          for (const auto& [k, _] : codec_names()) v.push_back(k);
          return v;
        }()));
    s->add_option("--ulimit", raw.ulimit, "urelement limit for hierarchical codecs (default 0)");
    s->add_option("--arity", raw.arity, "tuple arity");
    s->add_flag("--sized", raw.sized, "perm works with size/rank pairs 'k r'");
    subs[name] = s;
    return s;
  };
  add_codec_command("decode", "print the structure of rank n")
      ->add_option("--format", raw.format, "output format")
      ->check(CLI::IsMember({"list", "show", "tree", "dot", "decimal"}));
  add_codec_command("encode", "print the rank of a structure");
  add_codec_command("enumerate", "print structures for n = from, from+1, ...")
      ->add_option("--format", raw.format, "output format")
      ->check(CLI::IsMember({"list", "show", "tree", "decimal"}));
  add_codec_command("show", "decode with the brace/paren rendering");
  add_codec_command("dot", "decode as a Graphviz graph with shared subtrees merged");

  std::uint64_t max_n = 1000, seed = 13;
  std::string inject;
  bool serial = false;
  CLI::App* sc = app.add_subcommand("selfcheck", "verify every round-trip law and golden example");
  sc->add_option("max_n", max_n, "exhaustive range upper bound (default 1000)");
  sc->add_option("seed", seed, "seed for random trials (default 13)");
  sc->add_option("--inject-fault", inject, "")->group("");
  sc->add_flag("--serial", serial, "run laws one at a time");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (sc->parsed()) {
      SelfcheckConfig cfg;
      cfg.max_n = max_n;
      cfg.seed = seed;
      cfg.inject_fault = inject;
      cfg.parallel = !serial;
      auto results = run_selfcheck(cfg);
      out << format_selfcheck(results);
      bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
      return ok ? exit_ok : exit_selfcheck_failed;
    }
    for (const auto& [name, s] : subs) {
      if (!s->parsed()) continue;
      raw.args = s->remaining();
      for (const auto& a : raw.args)
        if (a.size() > 1 && a[0] == '-' && !std::isdigit(static_cast<unsigned char>(a[1])))
          throw usage_error("unknown option '" + a + "'");
    }
    Options o;
    o.max_depth = recursion_limit_from_env();
    if (subs["decode"]->parsed()) {
      cmd_decode(raw, o, out);
    } else if (subs["encode"]->parsed()) {
      cmd_encode(raw, o, out);
    } else if (subs["enumerate"]->parsed()) {
      cmd_enumerate(raw, o, out);
    } else if (subs["show"]->parsed()) {
      raw.format = "show";
      cmd_decode(raw, o, out);
    } else if (subs["dot"]->parsed()) {
      raw.format = "dot";
      Options probe;
      resolve(raw, probe);
      if (!is_hierarchical(probe.codec)) throw usage_error("dot needs a hierarchical codec");
      cmd_decode(raw, o, out);
    }
  } catch (const usage_error& e) {
    err << "hfcodec: " << e.what() << '\n';
    return exit_usage;
  } catch (const error& e) {
    err << "hfcodec: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_ok;
}

}  // namespace hfcodec::cli
