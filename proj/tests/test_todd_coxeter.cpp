#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "sl2cong/todd_coxeter.hpp"

using namespace sl2cong;
using namespace sl2cong::fp;

namespace {

using Perm = std::vector<int>;

Perm compose(const Perm& f, const Perm& g) {  // apply g then f
  Perm out(f.size());
  for (size_t i = 0; i < f.size(); ++i) out[i] = f[size_t(g[i])];
  return out;
}

// order of the permutation group generated by the given elements, by plain
// closure with memoization
size_t group_order(const std::vector<Perm>& gens) {
  std::set<Perm> seen(gens.begin(), gens.end());
  Perm id(gens[0].size());
  std::iota(id.begin(), id.end(), 0);
  seen.insert(id);
  std::vector<Perm> todo(seen.begin(), seen.end());
  while (!todo.empty()) {
    Perm cur = todo.back();
    todo.pop_back();
    for (const auto& g : gens) {
      Perm next = compose(cur, g);
      if (seen.insert(next).second) todo.push_back(next);
    }
  }
  return seen.size();
}

Presentation two_gen(std::initializer_list<const char*> relators) {
  Presentation p;
  p.gens = {"x", "y"};
  for (const char* r : relators)
    p.relators.push_back(GenWord::parse(r, p.gens, true));
  return p;
}

SubgroupSpec trivial_subgroup() {
  // a word reducing to the identity generates the trivial subgroup
  SubgroupSpec s;
  s.gens.push_back(GenWord::parse("x x^-1", {"x", "y"}, true));
  return s;
}

}  // namespace

TEST_CASE("index of the trivial subgroup equals the group order (oracle)") {
  struct Case {
    Presentation pres;
    std::vector<Perm> perms;
    const char* name;
  };
  std::vector<Case> cases;
  // symmetric group on three points
  cases.push_back({two_gen({"x^2", "y^3", "x y x y"}),
                   {{1, 0, 2}, {1, 2, 0}},
                   "S3"});
  // alternating group on four points
  cases.push_back({two_gen({"x^2", "y^3", "x y x y x y"}),
                   {{1, 0, 3, 2}, {1, 2, 0, 3}},
                   "A4"});
  // dihedral group of order 8
  cases.push_back({two_gen({"x^4", "y^2", "x y x y"}),
                   {{1, 2, 3, 0}, {1, 0, 3, 2}},
                   "D4"});
  // cyclic group of order 6 as a direct product presentation
  cases.push_back({two_gen({"x^2", "y^3", "x y x^-1 y^-1"}),
                   {{1, 0, 2, 3, 4}, {0, 1, 3, 4, 2}},
                   "C6"});
  for (const auto& c : cases) {
    CAPTURE(c.name);
    // the permutations really satisfy the presentation
    size_t order = group_order(c.perms);
    TCResult res = todd_coxeter(c.pres, trivial_subgroup(), TCOptions{10000});
    REQUIRE(res.complete());
    CHECK(res.index == order);
  }
}

TEST_CASE("nontrivial subgroup indices against permutation orders") {
  // S3 over <x>: index 3; A4 over <y>: index 4
  Presentation s3 = two_gen({"x^2", "y^3", "x y x y"});
  SubgroupSpec sx;
  sx.gens.push_back(GenWord::parse("x", {"x", "y"}, true));
  TCResult r1 = todd_coxeter(s3, sx, TCOptions{1000});
  REQUIRE(r1.complete());
  CHECK(r1.index == 3);

  Presentation a4 = two_gen({"x^2", "y^3", "x y x y x y"});
  SubgroupSpec sy;
  sy.gens.push_back(GenWord::parse("y", {"x", "y"}, true));
  TCResult r2 = todd_coxeter(a4, sy, TCOptions{1000});
  REQUIRE(r2.complete());
  CHECK(r2.index == 4);
}

TEST_CASE("completed tables define a permutation action with trivial relators") {
  for (auto [p, r] : std::vector<std::pair<long long, long long>>{{2, 5}, {3, 7}}) {
    Presentation bm = behr_mennicke(p);
    CosetEnumerator en(bm, embed_delta(p, r), TCOptions{100000});
    TCResult res = en.run();
    REQUIRE(res.complete());
    auto live = en.live_cosets();
    CHECK(live.size() == res.index);
    // each generator column is a bijection on live cosets
    for (int gidx = 0; gidx < en.ngens(); ++gidx) {
      std::set<uint32_t> image;
      for (uint32_t c : live) {
        uint32_t to = en.act(c, gidx);
        REQUIRE(to != 0);
        image.insert(to);
        // inverse column really inverts
        CHECK(en.act(to, gidx, true) == c);
      }
      CHECK(image.size() == live.size());
    }
    // relators act trivially everywhere; subgroup generators fix coset 1
    for (uint32_t c : live)
      for (const auto& rel : bm.relators) CHECK(en.trace(c, rel) == c);
    for (const auto& w : embed_delta(p, r).gens) CHECK(en.trace(1, w) == 1);
  }
}

TEST_CASE("index is invariant under relator order and cyclic rotation") {
  for (auto [p, r] : std::vector<std::pair<long long, long long>>{{2, 5}, {3, 7}}) {
    Presentation bm = behr_mennicke(p);
    uint64_t want = todd_coxeter(bm, embed_delta(p, r), TCOptions{100000}).index;

    Presentation shuffled = bm;
    std::rotate(shuffled.relators.begin(), shuffled.relators.begin() + 2,
                shuffled.relators.end());
    std::swap(shuffled.relators[0], shuffled.relators[1]);
    CHECK(todd_coxeter(shuffled, embed_delta(p, r), TCOptions{100000}).index == want);

    // rotate each relator cyclically by one syllable
    Presentation rotated = bm;
    for (auto& rel : rotated.relators) {
      auto syls = rel.syllables();
      if (syls.size() < 2) continue;
      GenWord w(rel.alphabet());
      for (size_t i = 1; i < syls.size(); ++i) w.append_syllable(syls[i].sym, syls[i].exp);
      w.append_syllable(syls[0].sym, syls[0].exp);
      rel = std::move(w);
    }
    CHECK(todd_coxeter(rotated, embed_delta(p, r), TCOptions{100000}).index == want);
  }
}

TEST_CASE("adding a redundant subgroup generator never increases the index") {
  // the word regenerating the diagonal element from its first power, at the
  // numerator-1 subgroup: the subgroup is already everything, so the index
  // stays 1
  for (long long p : {2LL, 3LL}) {
    SubgroupSpec base = embed_delta(p, 1);
    TCResult r0 = todd_coxeter(behr_mennicke(p), base, TCOptions{100000});
    REQUIRE(r0.complete());
    CHECK(r0.index == 1);

    std::string pstr = std::to_string(p), p2str = std::to_string(p * p);
    GenWord extra = GenWord::parse(
        "u a u^-1 b a^" + p2str + " u^-1 b a b^-1", {"a", "b", "u"}, true);
    // sanity: the word's image really is the diagonal generator
    SymbolTable t{{"a", atom_A()}, {"b", atom_B()}, {"u", atom_U(p)}};
    REQUIRE(eval_word(extra, t) == atom_U(p));
    SubgroupSpec enlarged = base;
    enlarged.gens.push_back(extra);
    TCResult r1 = todd_coxeter(behr_mennicke(p), enlarged, TCOptions{100000});
    REQUIRE(r1.complete());
    CHECK(r1.index <= r0.index);
  }
}

TEST_CASE("overflow is a distinguished outcome and monotone in the bound") {
  // integer ratios have infinite index: the enumeration can never complete
  for (auto [p, r] : std::vector<std::pair<long long, long long>>{{3, 6}, {3, 9}}) {
    for (uint64_t mc : {10000ull, 100000ull}) {
      TCResult res = todd_coxeter(behr_mennicke(p), embed_delta(p, r), TCOptions{mc});
      CHECK(res.status == TCResult::Status::overflow);
    }
  }
}

TEST_CASE("verify_conjecture compares the index against the totient") {
  auto rep = verify_conjecture(2, 5, 100000);
  REQUIRE(rep.tc.complete());
  CHECK(rep.tc.index == 24);
  CHECK(rep.jordan == BigInt(24));
  CHECK(rep.equal_gamma1bar);

  auto rep2 = verify_conjecture(3, 8, 100000);
  CHECK(rep2.tc.index == 48);
  CHECK(rep2.equal_gamma1bar);

  auto rep3 = verify_conjecture(3, 1, 100000);
  CHECK(rep3.tc.index == 1);
  CHECK(rep3.equal_gamma1bar);
}
