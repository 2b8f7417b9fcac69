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

// Acceptance suite: one PASS/FAIL line per criterion, each with a pinned
// wall-clock budget. Exits nonzero if any criterion fails.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <ranges>
#include <sstream>
#include <string>
#include <vector>

#include "hfcodec/hftree.hpp"
#include "hfcodec/natbits.hpp"
#include "hfcodec/pairing.hpp"
#include "hfcodec/permcodec.hpp"
#include "hfcodec/setfun.hpp"
#include "oracles.hpp"

using namespace hfcodec;

namespace {

// Collects failed checks for one criterion; keeps the first few messages.
class Checker {
 public:
  template <class A, class B>
  void eq(const A& got, const B& want, const std::string& what) {
    ++checks_;
    if (!(got == want)) fail(what);
  }
  void ok(bool cond, const std::string& what) {
    ++checks_;
    if (!cond) fail(what);
  }
  void fail(const std::string& what) {
    if (failures_++ < 5) messages_.push_back(what);
  }
  std::size_t failures() const { return failures_; }
  std::size_t checks() const { return checks_; }
  std::string summary() const {
    std::string s;
    for (const auto& m : messages_) s += (s.empty() ? "" : "; ") + m;
    if (failures_ > messages_.size())
      s += "; and " + std::to_string(failures_ - messages_.size()) + " more";
    return s;
  }

 private:
  std::size_t checks_ = 0, failures_ = 0;
  std::vector<std::string> messages_;
};

std::string str(const std::vector<Natural>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + "]";
}

std::vector<Natural> N(std::initializer_list<int> xs) { return {xs.begin(), xs.end()}; }

// Constructor notation "F [F [],A 2]" to the serialize grammar.
Tree H(const std::string& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.compare(i, 3, "F [") == 0) {
      out += '(';
      i += 2;
    } else if (s.compare(i, 2, "A ") == 0) {
      out += 'a';
      i += 1;
    } else if (s[i] == ']') {
      out += ')';
    } else if (s[i] == ',') {
      out += ' ';
    } else if (s[i] != ' ') {
      out += s[i];
    }
  }
  return deserialize(out);
}

std::vector<Codec> tree_codecs(const Natural& u) {
  return {codec_hfs(u), codec_hff(u), codec_hff1(u), codec_hff2(u), codec_hfp(u)};
}

std::vector<Natural> random_values(std::uint64_t seed, std::size_t count, std::size_t bits) {
  std::mt19937_64 rng(seed);
  std::vector<Natural> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_natural(rng, bits));
  return out;
}

// ---------------------------------------------------------------------------

void golden(Checker& c) {
  std::vector<Natural> cantor, pepis;
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 3; ++j) {
      cantor.push_back(cantor_pair(i, j));
      pepis.push_back(pepis_pair(i, j));
    }
  c.eq(cantor, N({0, 2, 5, 9, 1, 4, 8, 13, 3, 7, 12, 18, 6, 11, 17, 24}), "cantor table");
  c.eq(pepis, N({0, 2, 4, 6, 1, 5, 9, 13, 3, 11, 19, 27, 7, 23, 39, 55}), "pepis table");
  c.eq(pepis_pair(1, 10), 41, "pepis_pair(1,10)");
  c.eq(pepis_pair(10, 1), 3071, "pepis_pair(10,1)");
  c.eq(pepis_unpair(41), NatPair{1, 10}, "pepis_unpair(41)");
  c.eq(pepis_unpair(3071), NatPair{10, 1}, "pepis_unpair(3071)");
  c.eq(bitmerge_unpair(2008), NatPair{60, 26}, "bitmerge_unpair(2008)");
  c.eq(bitmerge_pair({60, 26}), 2008, "bitmerge_pair(60,26)");
  c.eq(to_tuple(3, 42), N({2, 1, 2}), "to_tuple(3,42)");
  c.eq(from_tuple(N({2, 1, 2})), 42, "from_tuple([2,1,2])");
  c.eq(ftuple2nat(N({1, 0, 2, 1, 3})), 21295, "ftuple2nat");
  c.eq(nat2ftuple(21295), N({1, 0, 2, 1, 3}), "nat2ftuple(21295)");
  std::vector<std::vector<Natural>> ft = {
      {},        N({0, 0}), N({1}), N({0, 0, 0}), N({2}), N({1, 0}), N({3}), N({0, 0, 0, 0}),
      N({4}),    N({0, 1}), N({5}), N({1, 0, 0}), N({6}), N({1, 1}), N({7}), N({0, 0, 0, 0, 0})};
  for (int n = 0; n < 16; ++n) c.eq(nat2ftuple(n), ft[static_cast<std::size_t>(n)], "nat2ftuple list");
  c.eq(fun2set(N({1, 0, 2, 1, 2})).elems(), N({1, 2, 5, 7, 10}), "fun2set");
  c.eq(set2fun(NatSet(N({1, 2, 5, 7, 10}))), N({1, 0, 2, 1, 2}), "set2fun");
  c.eq(nat2fun(2008), N({3, 0, 1, 0, 0, 0, 0}), "nat2fun(2008)");
  c.eq(fun2nat(N({3, 0, 1, 0, 0, 0, 0})), 2008, "fun2nat");
  c.eq(fr(42).digits, N({0, 0, 0, 3, 1}), "fr(42)");
  c.eq(fl(42).digits, N({1, 3, 0, 0, 0}), "fl(42)");
  c.eq(rf(N({0, 0, 0, 3, 1})), 42, "rf");
  c.eq(lf(N({1, 3, 0, 0, 0})), 42, "lf");
  c.eq(nth2perm({5, 42}).to_naturals(), N({1, 4, 0, 2, 3}), "nth2perm(5,42)");
  c.eq(perm2nth(Permutation({1, 4, 0, 2, 3})), SizedRank{5, 42}, "perm2nth(5,42)");
  c.eq(nth2perm({8, 2008}).to_naturals(), N({0, 3, 6, 5, 4, 7, 1, 2}), "nth2perm(8,2008)");
  c.eq(perm2nth(Permutation({0, 3, 6, 5, 4, 7, 1, 2})), SizedRank{8, 2008}, "perm2nth(8,2008)");
  c.eq(nat2perm(2008).to_naturals(), N({1, 4, 3, 2, 0, 5, 6}), "nat2perm(2008)");
  c.eq(perm2nat(Permutation({1, 4, 3, 2, 0, 5, 6})), 2008, "perm2nat");
  c.eq(nat2hfs(42), H("F [F [F []],F [F [],F [F []]],F [F [],F [F [F []]]]]"), "nat2hfs(42)");
  c.eq(set_show(42), std::string("{{{}},{{},{{}}},{{},{{{}}}}}"), "setShow 42");

  c.eq(nat2hff(0), H("F []"), "nat2hff(0)");
  c.eq(nat2hff(1), H("F [F []]"), "nat2hff(1)");
  c.eq(nat2hff(42), H("F [F [F []],F [F []],F [F []]]"), "nat2hff(42)");
  c.eq(nat2hff(12345), H("F [F [],F [F [F []]],F [],F [],F [F [F []],F []],F []]"), "nat2hff(12345)");
  c.eq(nat2hff1(0), H("F []"), "nat2hff1(0)");
  c.eq(nat2hff1(1), H("F [F [],F []]"), "nat2hff1(1)");
  c.eq(nat2hff1(42), H("F [F [F [F [],F [],F []],F []]]"), "nat2hff1(42)");
  c.eq(nat2hff1(12345), H("F [F [F [F [F [F [],F []]],F []]],F [F [],F [],F [F [],F []]]]"),
       "nat2hff1(12345)");
  c.eq(nat2hff2(0), H("F []"), "nat2hff2(0)");
  c.eq(nat2hff2(1), H("F [F []]"), "nat2hff2(1)");
  c.eq(nat2hff2(42), H("F [F [],F [],F [],F [],F [],F []]"), "nat2hff2(42)");
  c.eq(nat2hff2(12345), H("F [F [],F [F []],F [F [],F []],F [F [],F [],F []],F [F []]]"),
       "nat2hff2(12345)");
  for (int n : {0, 1, 42, 12345}) {
    c.eq(hff2nat(nat2hff(n)), n, "hff2nat inverse");
    c.eq(hff2nat1(nat2hff1(n)), n, "hff2nat1 inverse");
    c.eq(hff2nat2(nat2hff2(n)), n, "hff2nat2 inverse");
  }

  c.eq(fun_show(1234567890, 10), std::string("(3 2 0 1 7 0 1 2 0 2 2)"), "funShow");
  c.eq(fun_show1(1234567890, 10), std::string("(((((0 3)) (((2 0 1))) 1)))"), "funShow1");
  c.eq(fun_show2(1234567890, 10), std::string("(2 0 1 1 0 0 6 1 0 0 1 1 1 0 1 0)"), "funShow2");
  c.eq(perm_show(1234567890, 10),
       std::string("(1 6 (0 1 3 2) 2 0 3 (0 1 2 3) 7 8 5 9 4 (0 2 1 3))"),
       "permShow 1234567890 at ulimit 10 gives " + perm_show(1234567890, 10));

  std::vector<Tree> first5;
  for (const Tree& t : enumerate(codec_hfs()) | std::views::take(5)) first5.push_back(t);
  c.eq(first5,
       std::vector<Tree>{H("F []"), H("F [F []]"), H("F [F [F []]]"), H("F [F [],F [F []]]"),
                         H("F [F [F [F []]]]")},
       "first 5 of the HFS stream");
}

void round_trips(Checker& c) {
  auto flat = random_values(2008, 200, 256);
  std::vector<Natural> exhaustive;
  for (int n = 0; n <= 10000; ++n) exhaustive.emplace_back(n);
  auto each = [&](const std::vector<Natural>& xs, const std::string& law,
                  const std::function<Natural(const Natural&)>& f) {
    for (const auto& n : xs)
      if (f(n) != n) {
        c.fail(law + " at " + n.str());
        return;
      }
    c.ok(true, law);
  };
  for (const auto* xs : {&exhaustive, &flat}) {
    each(*xs, "set", [](const Natural& n) { return set2nat(nat2set(n)); });
    each(*xs, "fun", [](const Natural& n) { return fun2nat(nat2fun(n)); });
    each(*xs, "rle", [](const Natural& n) { return rle2nat(nat2rle(n)); });
    each(*xs, "ftuple", [](const Natural& n) { return ftuple2nat(nat2ftuple(n)); });
    each(*xs, "perm", [](const Natural& n) { return perm2nat(nat2perm(n)); });
    each(*xs, "fr", [](const Natural& n) { return rf(fr(n).digits); });
    each(*xs, "fl", [](const Natural& n) { return lf(fl(n).digits); });
    each(*xs, "cantor", [](const Natural& n) {
      auto p = cantor_unpair(n);
      return cantor_pair(p.first, p.second);
    });
    each(*xs, "pepis", [](const Natural& n) {
      auto p = pepis_unpair(n);
      return pepis_pair(p.first, p.second);
    });
    each(*xs, "bitmerge", [](const Natural& n) { return bitmerge_pair(bitmerge_unpair(n)); });
    for (std::size_t k : {1, 2, 3, 5, 8})
      each(*xs, "tuple arity " + std::to_string(k),
           [k](const Natural& n) { return from_tuple(to_tuple(k, n)); });
  }
  // Reverse direction on structures built from the forward images.
  for (int n = 0; n <= 10000; n += 7) {
    auto f = nat2fun(n);
    c.eq(set2fun(fun2set(f)), f, "set2fun . fun2set");
    Permutation p = nat2perm(n);
    c.eq(nat2perm(perm2nat(p)), p, "nat2perm . perm2nat");
  }

  auto tree_rand = random_values(42, 200, 256);
  for (int u : {0, 10}) {
    for (const auto& codec : tree_codecs(u)) {
      std::string law = codec.name + " u=" + std::to_string(u);
      bool good = true;
      for (int n = 0; n <= 2000 && good; ++n)
        if (rank(codec, unrank(codec, n)) != n) {
          c.fail(law + " at " + std::to_string(n));
          good = false;
        }
      for (const auto& n : tree_rand) {
        if (!good) break;
        if (rank(codec, unrank(codec, n)) != n) {
          c.fail(law + " at " + n.str());
          good = false;
        }
      }
      if (good) c.ok(true, law);
    }
  }
}

void oracles(Checker& c) {
  for (int n = 0; n <= 10000; ++n) {
    auto b = bitmerge_unpair(n);
    c.ok(to_tuple(2, n) == NatTuple{b.first, b.second}, "to_tuple(2) at " + std::to_string(n));
  }
  for (int z = 0; z <= 5000; ++z) {
    auto [x, y] = oracle::cantor_unpair_search(z);
    c.ok(cantor_unpair(z) == NatPair{x, y}, "cantor_unpair at " + std::to_string(z));
  }
  for (std::size_t k = 0; k <= 6; ++k) {
    auto perms = oracle::lexicographic_perms(k);
    for (std::size_t r = 0; r < perms.size(); ++r)
      c.ok(nth2perm({k, r}).mapping() == perms[r],
           "nth2perm(" + std::to_string(k) + "," + std::to_string(r) + ")");
    c.ok(oracle::factorial(k) == perms.size(), "k! permutations");
  }
  for (std::size_t n = 0; n <= 30; ++n)
    c.eq(sf(n), oracle::sum_of_factorials(n), "sf(" + std::to_string(n) + ")");
  for (int n = 0; n <= 10000; ++n)
    c.ok(bitcount(n) == oracle::bitcount_search(n), "bitcount(" + std::to_string(n) + ")");
}

void structure(Checker& c) {
  std::mt19937_64 rng(1234);
  for (int i = 0; i < 10000; ++i) {
    std::vector<Natural> f(rng() % 12);
    for (auto& v : f) v = random_natural(rng, 1 + rng() % 70);
    const NatSet fs = fun2set(f);
      const auto& s = fs.elems();
    bool increasing = s.size() == f.size();
    for (std::size_t j = 1; j < s.size(); ++j) increasing = increasing && s[j - 1] < s[j];
    c.ok(increasing, "fun2set not strictly increasing for " + str(f));
  }
  for (std::size_t k = 0; k <= 6; ++k)
    for (const auto& m : oracle::lexicographic_perms(k)) {
      LehmerCode code = perm2lehmer(Permutation(m));
      for (std::size_t i = 0; i < k; ++i)
        c.ok(code[i] <= k - 1 - i, "Lehmer digit bound at size " + std::to_string(k));
    }
  for (int u : {0, 2, 10})
    for (const auto& codec : tree_codecs(u))
      for (int n = 0; n < 1000; ++n) {
        Tree t = unrank(codec, n);
        bool bound = true;
        for_each_atom(t, [&](const Natural& a) { bound = bound && a < u; });
        c.ok(bound, codec.name + " atom bound at " + std::to_string(n));
        c.ok(deserialize(serialize(t)) == t,
             codec.name + " serialize round trip at " + std::to_string(n));
      }
}

int run_cli_selfcheck() {
  std::string cmd = std::string(HFCODEC_CLI_PATH) + " selfcheck > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

void scale(Checker& c) {
  auto big = random_values(4096, 1, 4096).front();
  big |= hfcodec::exp2(4095);  // force the full width
  auto t0 = std::chrono::steady_clock::now();
  for (int u : {0, 10})
    for (const auto& codec : tree_codecs(u)) {
      Tree t = unrank(codec, big);
      c.eq(rank(codec, t), big, codec.name + " 4096-bit round trip u=" + std::to_string(u));
    }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.ok(secs < 10.0, "4096-bit round trips took " + std::to_string(secs) + " s, budget 10 s");
  int code = run_cli_selfcheck();
  c.eq(code, 0, "hfcodec selfcheck exit status " + std::to_string(code));
}

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<void(Checker&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "golden examples", 1.0, golden},
      {2, "round-trip laws", 60.0, round_trips},
      {3, "oracle equivalences", 60.0, oracles},
      {4, "structural invariants", 60.0, structure},
      {5, "scale and robustness", 120.0, scale},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Checker c;
    auto t0 = std::chrono::steady_clock::now();
    try {
      cr.body(c);
    } catch (const std::exception& e) {
      c.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > cr.budget_seconds)
      c.fail("took " + std::to_string(secs) + " s, budget " + std::to_string(cr.budget_seconds) + " s");
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3f s", secs);
    if (c.failures() == 0) {
      std::cout << "PASS [" << cr.id << "] " << cr.title << " (" << c.checks() << " checks, "
                << timing << ")\n";
    } else {
      ++failed;
      std::cout << "FAIL [" << cr.id << "] " << cr.title << " (" << timing << "): " << c.summary()
                << "\n";
    }
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
            << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
