#include <doctest.h>

#include <random>

#include "smi/parse.hpp"
#include "smi/strict.hpp"

using namespace smi;

namespace {

StrictObject S(const std::string& s) { return to_strict_object(parse_formula(s)); }

Formula random_formula(std::mt19937_64& rng, int depth, int letter_pool) {
  int pick = static_cast<int>(rng() % 100);
  if (depth == 0 || pick < 35) {
    if (pick % 7 == 0) return Formula::bot();
    if (pick % 7 == 1) return Formula::top();
    return Formula::letter(std::string(1, static_cast<char>('a' + rng() % letter_pool)));
  }
  Formula l = random_formula(rng, depth - 1, letter_pool);
  Formula r = random_formula(rng, depth - 1, letter_pool);
  return pick % 2 ? Formula::disj(l, r) : Formula::conj(l, r);
}

// One random application of an object equation: re-association or a unit
// law, in either direction.
Formula random_congruence_step(const Formula& a, std::mt19937_64& rng, int fuel = 12) {
  if (fuel == 0) return a;
  int pick = static_cast<int>(rng() % 8);
  switch (a.tag()) {
    case Formula::Tag::Or: {
      Formula l = a.left(), r = a.right();
      if (pick == 0 && l.tag() == Formula::Tag::Or)
        return Formula::disj(l.left(), Formula::disj(l.right(), r));
      if (pick == 1 && r.tag() == Formula::Tag::Or)
        return Formula::disj(Formula::disj(l, r.left()), r.right());
      if (pick == 2 && r.tag() == Formula::Tag::Bot) return l;
      if (pick == 3 && l.tag() == Formula::Tag::Bot) return r;
      if (rng() % 2) return Formula::disj(random_congruence_step(l, rng, fuel - 1), r);
      return Formula::disj(l, random_congruence_step(r, rng, fuel - 1));
    }
    case Formula::Tag::And: {
      Formula l = a.left(), r = a.right();
      if (pick == 0 && l.tag() == Formula::Tag::And)
        return Formula::conj(l.left(), Formula::conj(l.right(), r));
      if (pick == 1 && r.tag() == Formula::Tag::And)
        return Formula::conj(Formula::conj(l, r.left()), r.right());
      if (pick == 2 && r.tag() == Formula::Tag::Top) return l;
      if (pick == 3 && l.tag() == Formula::Tag::Top) return r;
      if (rng() % 2) return Formula::conj(random_congruence_step(l, rng, fuel - 1), r);
      return Formula::conj(l, random_congruence_step(r, rng, fuel - 1));
    }
    default:
      if (pick == 4) return Formula::conj(a, Formula::top());
      if (pick == 5) return Formula::disj(a, Formula::bot());
      if (pick == 6) return Formula::conj(Formula::top(), a);
      if (pick == 7) return Formula::disj(Formula::bot(), a);
      return a;
  }
}

}  // namespace

TEST_CASE("strict normal forms") {
  CHECK(S("p/\\top") == S("p"));
  CHECK(S("(p\\/bot)/\\(q\\/bot)") == S("p/\\q"));
  CHECK(S("bot/\\bot") != S("bot"));
  CHECK(S("top\\/top") != S("top"));
  CHECK(S("bot\\/bot") == S("bot"));
  CHECK(S("top/\\top") == S("top"));
  CHECK(S("p\\/(q\\/r)") == S("(p\\/q)\\/r"));
  CHECK(S("p\\/(q\\/r)") != S("p\\/(r\\/q)"));
}

TEST_CASE("strict objects keep or-top and and-bot material") {
  StrictObject x = S("(p/\\q)\\/(bot/\\bot)");
  REQUIRE(x.is_or());
  CHECK(x.children().size() == 2);
  CHECK(x.children()[1] == S("bot/\\bot"));
  CHECK(strict_nu(x) == S("p/\\q"));
}

TEST_CASE("strict nu collapses adjacent unit runs only") {
  CHECK(strict_nu(S("p\\/top\\/top")) == S("p\\/top"));
  CHECK(strict_nu(S("top\\/p\\/top")) == S("top\\/p\\/top"));
  CHECK(strict_nu(S("top\\/(bot/\\bot)\\/top")) == S("top"));
  CHECK(strict_nu(S("bot/\\bot/\\bot")) == S("bot/\\bot"));
}

TEST_CASE("object congruence steps do not change the reduced strict object") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 1000; ++i) {
    Formula a = random_formula(rng, 5, 3);
    Formula b = random_congruence_step(a, rng);
    CHECK(to_strict_object(nu(a)) == to_strict_object(nu(b)));
  }
}

TEST_CASE("purity agrees between formulas and strict objects") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 500; ++i) {
    Formula a = random_formula(rng, 5, 3);
    Purity pf = purity(a);
    Purity ps = purity(to_strict_object(a));
    CHECK(pf.bot_pure == ps.bot_pure);
    CHECK(pf.top_pure == ps.top_pure);
  }
}

TEST_CASE("total order is a strict weak order on samples") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    StrictObject a = to_strict_object(random_formula(rng, 4, 3));
    StrictObject b = to_strict_object(random_formula(rng, 4, 3));
    StrictObject c = to_strict_object(random_formula(rng, 4, 3));
    CHECK(strict_cmp(a, a) == 0);
    CHECK(strict_cmp(a, b) == -strict_cmp(b, a));
    if (strict_cmp(a, b) < 0 && strict_cmp(b, c) < 0) CHECK(strict_cmp(a, c) < 0);
  }
}

TEST_CASE("round trip through formulas") {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 300; ++i) {
    StrictObject x = to_strict_object(random_formula(rng, 5, 4));
    CHECK(to_strict_object(to_formula(x)) == x);
    CHECK(to_strict_object(parse_formula(x.str())) == x);
  }
}
