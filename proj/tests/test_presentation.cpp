#include <doctest.h>

#include "sl2cong/presentation.hpp"

using namespace sl2cong;
using namespace sl2cong::fp;

TEST_CASE("built-in presentations") {
  Presentation p2 = behr_mennicke(2);
  CHECK(p2.gens == std::vector<std::string>{"a", "b", "u"});
  REQUIRE(p2.relators.size() == 5);
  // the conjugation relator carries the exponent p^2
  CHECK(p2.relators[4].str() == "u^-1 a u a^-4");
  Presentation p3 = behr_mennicke(3);
  CHECK(p3.relators[4].str() == "u^-1 a u a^-9");
  CHECK_THROWS_AS(behr_mennicke(5), std::domain_error);
}

TEST_CASE("matrix images kill every relator") {
  for (long long p : {2LL, 3LL}) {
    SymbolTable t{{"a", atom_A()}, {"b", atom_B()}, {"u", atom_U(p)}};
    CHECK_NOTHROW(sanity_check(behr_mennicke(p), t));
  }
  // and a broken assignment is caught
  SymbolTable bad{{"a", atom_A()}, {"b", atom_B()}, {"u", atom_U(5)}};
  CHECK_THROWS_AS(sanity_check(behr_mennicke(2), bad), std::runtime_error);
}

TEST_CASE("presentation file round trip") {
  for (long long p : {2LL, 3LL}) {
    std::string text = behr_mennicke_text(p);
    Presentation loaded = load_presentation(text);
    CHECK(print_presentation(loaded) == text);
    CHECK(loaded.gens == behr_mennicke(p).gens);
    REQUIRE(loaded.relators.size() == behr_mennicke(p).relators.size());
    for (size_t i = 0; i < loaded.relators.size(); ++i)
      CHECK(loaded.relators[i].str() == behr_mennicke(p).relators[i].str());
  }
}

TEST_CASE("parser diagnostics carry line and column") {
  try {
    load_presentation("gens: a\nrel: a b\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(std::string(e.what()).find("unknown symbol") != std::string::npos);
  }
  CHECK_THROWS_AS(load_presentation("rel: a\n"), ParseError);
  CHECK_THROWS_AS(load_presentation("gens: a\nwat: b\n"), ParseError);
  CHECK_THROWS_AS(load_presentation(""), ParseError);
  // comments and blank lines are fine
  CHECK_NOTHROW(load_presentation("# comment\n\ngens: x\nrel: x^4\n"));
}

TEST_CASE("subgroup embedding evaluates to the upper unipotent") {
  SymbolTable t2{{"a", atom_A()}, {"b", atom_B()}, {"u", atom_U(2)}};
  SubgroupSpec s = embed_delta(2, 5);
  REQUIRE(s.gens.size() == 2);
  CHECK(s.gens[0].str() == "a");
  CHECK(s.gens[1].str() == "u^-1 b a^-10 b^-1 u");
  CHECK(eval_word(s.gens[1], t2) == Mat2(1, Rational(5, 2), 0, 1));

  SymbolTable t3{{"a", atom_A()}, {"b", atom_B()}, {"u", atom_U(3)}};
  CHECK(eval_word(embed_delta(3, 1).gens[1], t3) == Mat2(1, Rational(1, 3), 0, 1));

  // the word always lands inside the target congruence subgroup
  for (auto [p, r] : std::vector<std::pair<long long, long long>>{{2, 5}, {3, 7}, {3, 11}}) {
    SymbolTable t{{"a", atom_A()}, {"b", atom_B()}, {"u", atom_U(p)}};
    Mat2 q = eval_word(embed_delta(p, r).gens[1], t);
    CHECK(is_member(q, p, BigInt(r), Subgroup::gamma1bar));
  }
}
