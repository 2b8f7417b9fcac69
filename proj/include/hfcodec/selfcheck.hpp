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

// Runtime verification of every round-trip law and worked example. Each law
// checks an exhaustive range [0, max_n] plus a handful of seeded random
// 256-bit values; laws are independent and run concurrently, but results
// are reported in registration order.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <future>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hfcodec/hftree.hpp"
#include "hfcodec/natbits.hpp"
#include "hfcodec/pairing.hpp"
#include "hfcodec/permcodec.hpp"
#include "hfcodec/setfun.hpp"

namespace hfcodec {

struct SelfcheckConfig {
  std::uint64_t max_n = 1000;
  std::uint64_t seed = 13;
  std::size_t random_trials = 20;
  std::size_t random_bits = 256;
  /// Name of a law whose first check is forced to fail.
  std::string inject_fault;
  bool parallel = true;
};

class LawFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Passed to each law; records the first failed check.
class LawContext {
 public:
  LawContext(const SelfcheckConfig& cfg, bool faulty)
      : cfg_(cfg), faulty_(faulty), rng_(cfg.seed) {}

  const SelfcheckConfig& config() const { return cfg_; }

  template <class Describe>
  void check(bool ok, Describe&& describe) {
    if (faulty_) {
      faulty_ = false;
      ok = !ok;
    }
    if (!ok) throw LawFailure(describe());
  }

  /// 0..max_n followed by the seeded random values.
  std::vector<Natural> samples() {
    std::vector<Natural> out;
    for (std::uint64_t n = 0; n <= cfg_.max_n; ++n) out.emplace_back(n);
    for (std::size_t i = 0; i < cfg_.random_trials; ++i)
      out.push_back(random_natural(rng_, cfg_.random_bits));
    return out;
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  const SelfcheckConfig& cfg_;
  bool faulty_;
  std::mt19937_64 rng_;
};

struct Law {
  std::string name;
  std::function<void(LawContext&)> run;
};

struct LawResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

namespace detail {

inline std::string str(const std::vector<Natural>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + "]";
}

template <class C>
Law tree_law(std::string name, C codec) {
  return {name, [codec](LawContext& ctx) {
            for (const auto& n : ctx.samples()) {
              Tree t = unrank(codec, n);
              Natural back = rank(codec, t);
              ctx.check(back == n, [&] {
                return codec.name + " u=" + codec.ulimit.str() + " rank(unrank(" + n.str() +
                       ")) = " + back.str();
              });
            }
          }};
}

}  // namespace detail

inline std::vector<Law> standard_laws() {
  using detail::str;
  std::vector<Law> laws;

  laws.push_back({"golden-examples", [](LawContext& ctx) {
    auto eq = [&](const auto& got, const auto& want, const char* what) {
      ctx.check(got == want, [&] { return std::string(what); });
    };
    std::vector<Natural> cantor, pepis;
    for (int i = 0; i <= 3; ++i)
      for (int j = 0; j <= 3; ++j) {
        cantor.push_back(cantor_pair(i, j));
        pepis.push_back(pepis_pair(i, j));
      }
    eq(str(cantor), std::string("[0,2,5,9,1,4,8,13,3,7,12,18,6,11,17,24]"), "cantor table");
    eq(str(pepis), std::string("[0,2,4,6,1,5,9,13,3,11,19,27,7,23,39,55]"), "pepis table");
    eq(pepis_pair(1, 10), Natural(41), "pepis_pair(1,10)");
    eq(pepis_pair(10, 1), Natural(3071), "pepis_pair(10,1)");
    eq(bitmerge_unpair(2008), NatPair{60, 26}, "bitmerge_unpair(2008)");
    eq(str(to_tuple(3, 42)), std::string("[2,1,2]"), "to_tuple(3,42)");
    eq(ftuple2nat(nat2ftuple(21295)), Natural(21295), "ftuple 21295");
    eq(str(nat2ftuple(21295)), std::string("[1,0,2,1,3]"), "nat2ftuple(21295)");
    eq(str(nat2fun(2008)), std::string("[3,0,1,0,0,0,0]"), "nat2fun(2008)");
    eq(str(fr(42).digits), std::string("[0,0,0,3,1]"), "fr(42)");
    eq(str(fl(42).digits), std::string("[1,3,0,0,0]"), "fl(42)");
    eq(str(nth2perm({8, 2008}).to_naturals()), std::string("[0,3,6,5,4,7,1,2]"), "nth2perm(8,2008)");
    eq(str(nat2perm(2008).to_naturals()), std::string("[1,4,3,2,0,5,6]"), "nat2perm(2008)");
    eq(set_show(42), std::string("{{{}},{{},{{}}},{{},{{{}}}}}"), "setShow 42");
    eq(fun_show(1234567890, 10), std::string("(3 2 0 1 7 0 1 2 0 2 2)"), "funShow 1234567890");
    eq(fun_show1(1234567890, 10), std::string("(((((0 3)) (((2 0 1))) 1)))"), "funShow1 1234567890");
    eq(fun_show2(1234567890, 10), std::string("(2 0 1 1 0 0 6 1 0 0 1 1 1 0 1 0)"),
       "funShow2 1234567890");
  }});

  laws.push_back({"base-roundtrip", [](LawContext& ctx) {
    for (const auto& n : ctx.samples())
      for (int b : {2, 3, 8, 16, 32}) {
        DigitList ds = to_base(b, n);
        ctx.check(from_base(ds) == n && (n == 0 || ds.digits.back() != 0),
                  [&] { return "base " + std::to_string(b) + " at " + n.str(); });
      }
  }});

  laws.push_back({"bitcount-search", [](LawContext& ctx) {
    for (std::uint64_t n = 0; n <= ctx.config().max_n; ++n) {
      std::size_t x = 1;
      while ((std::uint64_t{1} << x) <= n) ++x;
      ctx.check(bitcount(n) == x, [&] { return "bitcount(" + std::to_string(n) + ")"; });
    }
  }});

  laws.push_back({"pairing-jkl", [](LawContext& ctx) {
    for (const auto& z : ctx.samples()) {
      NatPair c = cantor_unpair(z), p = pepis_unpair(z), b = bitmerge_unpair(z);
      ctx.check(cantor_pair(c.first, c.second) == z, [&] { return "cantor at " + z.str(); });
      ctx.check(pepis_pair(p.first, p.second) == z, [&] { return "pepis at " + z.str(); });
      ctx.check(bitmerge_pair(b) == z, [&] { return "bitmerge at " + z.str(); });
    }
  }});

  laws.push_back({"tuple-roundtrip", [](LawContext& ctx) {
    for (const auto& n : ctx.samples()) {
      NatPair b = bitmerge_unpair(n);
      ctx.check(to_tuple(2, n) == NatTuple{b.first, b.second},
                [&] { return "to_tuple(2) vs bitmerge at " + n.str(); });
      for (std::size_t k = 1; k <= 8; ++k)
        ctx.check(from_tuple(to_tuple(k, n)) == n,
                  [&] { return "arity " + std::to_string(k) + " at " + n.str(); });
    }
  }});

  laws.push_back({"ftuple-roundtrip", [](LawContext& ctx) {
    for (const auto& n : ctx.samples())
      ctx.check(ftuple2nat(nat2ftuple(n)) == n, [&] { return "at " + n.str(); });
  }});

  laws.push_back({"set-roundtrip", [](LawContext& ctx) {
    for (const auto& n : ctx.samples())
      ctx.check(set2nat(nat2set(n)) == n, [&] { return "at " + n.str(); });
  }});

  laws.push_back({"fun-roundtrip", [](LawContext& ctx) {
    for (const auto& n : ctx.samples()) {
      FiniteFunction f = nat2fun(n);
      ctx.check(fun2nat(f) == n, [&] { return "at " + n.str(); });
      ctx.check(nat2fun(fun2nat(f)) == f, [&] { return "function " + str(f); });
    }
  }});

  laws.push_back({"fun2set-monotone", [](LawContext& ctx) {
    auto& rng = ctx.rng();
    for (std::size_t i = 0; i < 200 + ctx.config().max_n; ++i) {
      std::vector<Natural> f(rng() % 10);
      for (auto& v : f) v = rng() % 4;
      const NatSet fs = fun2set(f);
      const auto& s = fs.elems();
      bool increasing = std::adjacent_find(s.begin(), s.end(), std::greater_equal<>()) == s.end();
      ctx.check(increasing && s.size() == f.size(), [&] { return "function " + str(f); });
    }
  }});

  laws.push_back({"rle-roundtrip", [](LawContext& ctx) {
    for (const auto& n : ctx.samples())
      ctx.check(rle2nat(nat2rle(n)) == n, [&] { return "at " + n.str(); });
    auto& rng = ctx.rng();
    for (std::size_t i = 0; i < 200; ++i) {
      std::vector<Natural> runs(rng() % 8);
      for (auto& r : runs) r = rng() % 5;
      ctx.check(nat2rle(rle2nat(runs)) == runs, [&] { return "runs " + str(runs); });
    }
  }});

  laws.push_back({"factoradic-roundtrip", [](LawContext& ctx) {
    for (const auto& n : ctx.samples()) {
      ctx.check(rf(fr(n).digits) == n, [&] { return "fr at " + n.str(); });
      ctx.check(lf(fl(n).digits) == n, [&] { return "fl at " + n.str(); });
    }
  }});

  laws.push_back({"perm-lexicographic", [](LawContext& ctx) {
    for (std::size_t k = 0; k <= 6; ++k) {
      std::vector<std::size_t> p(k);
      for (std::size_t i = 0; i < k; ++i) p[i] = i;
      std::size_t r = 0;
      do {
        Permutation got = nth2perm({k, r});
        ctx.check(got.mapping() == p, [&] {
          return "nth2perm(" + std::to_string(k) + "," + std::to_string(r) + ")";
        });
        ctx.check(perm2nth(got) == SizedRank{k, r}, [&] { return "perm2nth at size " + std::to_string(k); });
        ++r;
      } while (std::next_permutation(p.begin(), p.end()));
    }
  }});

  laws.push_back({"perm-roundtrip", [](LawContext& ctx) {
    for (const auto& n : ctx.samples())
      ctx.check(perm2nat(nat2perm(n)) == n, [&] { return "at " + n.str(); });
  }});

  laws.push_back({"sf-sum", [](LawContext& ctx) {
    Natural direct = 0, fact = 1;
    for (std::size_t n = 0; n <= 30; ++n) {
      ctx.check(sf(n) == direct, [&] { return "sf(" + std::to_string(n) + ")"; });
      if (n > 0) fact *= n;
      direct += fact;
    }
  }});

  for (int u : {0, 10}) {
    laws.push_back(detail::tree_law("hfs-roundtrip-u" + std::to_string(u), codec_hfs(u)));
    laws.push_back(detail::tree_law("hff-roundtrip-u" + std::to_string(u), codec_hff(u)));
    laws.push_back(detail::tree_law("hff1-roundtrip-u" + std::to_string(u), codec_hff1(u)));
    laws.push_back(detail::tree_law("hff2-roundtrip-u" + std::to_string(u), codec_hff2(u)));
    laws.push_back(detail::tree_law("hfp-roundtrip-u" + std::to_string(u), codec_hfp(u)));
  }

  laws.push_back({"tree-format-and-atoms", [](LawContext& ctx) {
    for (int u : {0, 2, 10}) {
      for (const auto& c : {codec_hfs(u), codec_hff(u), codec_hff1(u), codec_hff2(u), codec_hfp(u)}) {
        for (const auto& n : ctx.samples()) {
          Tree t = unrank(c, n);
          bool atoms_ok = true;
          for_each_atom(t, [&](const Natural& a) { atoms_ok = atoms_ok && a < u; });
          ctx.check(atoms_ok, [&] { return c.name + " atom bound at " + n.str(); });
          ctx.check(deserialize(serialize(t)) == t,
                    [&] { return c.name + " serialize round trip at " + n.str(); });
        }
      }
    }
  }});

  return laws;
}

inline std::vector<LawResult> run_selfcheck(const SelfcheckConfig& cfg,
                                            const std::vector<Law>& laws = standard_laws()) {
  auto run_one = [&cfg](const Law& law) {
    LawContext ctx(cfg, law.name == cfg.inject_fault);
    LawResult r{law.name, true, {}};
    try {
      law.run(ctx);
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = e.what();
    }
    return r;
  };
  std::vector<LawResult> results;
  if (!cfg.parallel) {
    for (const auto& law : laws) results.push_back(run_one(law));
    return results;
  }
  std::vector<std::future<LawResult>> pending;
  for (const auto& law : laws) pending.push_back(std::async(std::launch::async, run_one, std::cref(law)));
  for (auto& f : pending) results.push_back(f.get());
  return results;
}

/// One line per law, then a summary line.
inline std::string format_selfcheck(const std::vector<LawResult>& results) {
  std::ostringstream out;
  std::size_t passed = 0;
  for (const auto& r : results) {
    if (r.passed) {
      ++passed;
      out << "PASS " << r.name << '\n';
    } else {
      out << "FAIL " << r.name << ": " << r.detail << '\n';
    }
  }
  out << passed << "/" << results.size() << " laws passed\n";
  return out.str();
}

}  // namespace hfcodec
