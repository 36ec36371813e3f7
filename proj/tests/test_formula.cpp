#include <doctest.h>

#include <random>

#include "smi/formula.hpp"
#include "smi/parse.hpp"

using namespace smi;

namespace {

Formula F(const std::string& s) { return parse_formula(s); }

// Independent fixpoint oracle: apply the six unit rewrite rules at randomly
// chosen redexes until none is left.
std::optional<Formula> rewrite_once(const Formula& a, int& countdown) {
  if (a.tag() == Formula::Tag::Or) {
    const Formula l = a.left(), r = a.right();
    if (countdown-- == 0) {
      if (r.tag() == Formula::Tag::Bot) return l;
    }
    if (countdown-- == 0) {
      if (l.tag() == Formula::Tag::Bot) return r;
    }
    if (countdown-- == 0) {
      if (l.tag() == Formula::Tag::Top && r.tag() == Formula::Tag::Top) return Formula::top();
    }
    if (auto s = rewrite_once(l, countdown)) return Formula::disj(*s, r);
    if (auto s = rewrite_once(r, countdown)) return Formula::disj(l, *s);
  }
  if (a.tag() == Formula::Tag::And) {
    const Formula l = a.left(), r = a.right();
    if (countdown-- == 0) {
      if (r.tag() == Formula::Tag::Top) return l;
    }
    if (countdown-- == 0) {
      if (l.tag() == Formula::Tag::Top) return r;
    }
    if (countdown-- == 0) {
      if (l.tag() == Formula::Tag::Bot && r.tag() == Formula::Tag::Bot) return Formula::bot();
    }
    if (auto s = rewrite_once(l, countdown)) return Formula::conj(*s, r);
    if (auto s = rewrite_once(r, countdown)) return Formula::conj(l, *s);
  }
  return std::nullopt;
}

std::optional<Formula> rewrite_at(const Formula& a, int k) {
  int c = k;
  return rewrite_once(a, c);
}

// All one-step successors (the countdown indexes candidate redex sites).
std::vector<Formula> successors(const Formula& a) {
  std::vector<Formula> out;
  for (int k = 0; k < 1024; ++k)
    if (auto s = rewrite_at(a, k)) out.push_back(*s);
  return out;
}

Formula random_fixpoint(Formula a, std::mt19937_64& rng) {
  for (;;) {
    std::vector<Formula> nexts = successors(a);
    if (nexts.empty()) return a;
    a = nexts[rng() % nexts.size()];
  }
}

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

}  // namespace

TEST_CASE("letters collects occurrences") {
  CHECK(letters(F("bot")).empty());
  CHECK(letters(F("p\\/(q/\\p)")) == LetterBag{"p", "p", "q"});
  CHECK(letters(F("(p\\/s)/\\(q\\/t)")) == LetterBag{"p", "q", "s", "t"});
}

TEST_CASE("nu eliminates units") {
  CHECK(nu(F("p\\/bot")) == F("p"));
  CHECK(nu(F("bot/\\bot")) == F("bot"));
  CHECK(nu(F("(p/\\top)\\/(bot/\\bot)")) == F("p"));
  CHECK(nu(F("p")) == F("p"));
  CHECK(nu(F("p\\/top")) == F("p\\/top"));
  CHECK(nu(F("top\\/(p\\/top)")) == F("top\\/(p\\/top)"));
}

TEST_CASE("nu collapses unit pairs across associations") {
  CHECK(nu(F("p\\/(top\\/top)")) == F("p\\/top"));
  CHECK(nu(F("(p\\/top)\\/top")) == F("p\\/top"));
  CHECK(nu(F("(top\\/bot)\\/top")) == F("top"));
  CHECK(nu(F("bot/\\(bot/\\bot)")) == F("bot/\\bot"));
}

TEST_CASE("nu is idempotent and a fixpoint of the rules") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    Formula a = random_formula(rng, 5, 4);
    Formula n = nu(a);
    CHECK(nu(n) == n);
    if (!successors(n).empty()) FAIL("nu left a redex in ", n.str());
  }
}

TEST_CASE("randomized rule order reaches a single fixpoint") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    Formula a = random_formula(rng, 6, 3);
    Formula f1 = random_fixpoint(a, rng);
    Formula f2 = random_fixpoint(a, rng);
    CHECK(f1 == f2);
  }
}

TEST_CASE("letterless formulas reduce to a unit") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    Formula a = random_formula(rng, 5, 1);
    if (!letters(a).empty()) continue;
    Formula n = nu(a);
    CHECK((n == Formula::bot() || n == Formula::top()));
  }
}

TEST_CASE("purity") {
  CHECK(purity(F("bot")).bot_pure == false);
  CHECK(purity(F("bot")).top_pure == true);
  CHECK(purity(F("p/\\bot")).bot_pure == false);
  CHECK(purity(F("p/\\bot")).top_pure == true);
  CHECK(purity(F("p\\/bot")).bot_pure == true);
  CHECK(purity(F("p\\/bot")).top_pure == true);
}

namespace {

// Second route to the bot-purity characterization: scan conjunctions.
bool not_bot_pure_scan(const Formula& a) {
  if (nu(a) == Formula::bot()) return true;
  switch (a.tag()) {
    case Formula::Tag::And: {
      Formula l = a.left(), r = a.right();
      if (nu(l) == Formula::bot() && !letters(r).empty()) return true;
      if (nu(r) == Formula::bot() && !letters(l).empty()) return true;
      return not_bot_pure_scan(l) || not_bot_pure_scan(r);
    }
    case Formula::Tag::Or: return not_bot_pure_scan(a.left()) || not_bot_pure_scan(a.right());
    default: return false;
  }
}

}  // namespace

TEST_CASE("bot-purity matches the conjunction-scan characterization") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 1000; ++i) {
    Formula a = random_formula(rng, 5, 3);
    CHECK(purity(a).bot_pure == !not_bot_pure_scan(a));
  }
}

TEST_CASE("diversified") {
  CHECK_FALSE(is_diversified(F("p\\/p")));
  CHECK(is_diversified(F("(p/\\q)\\/r")));
  CHECK(is_diversified(F("bot\\/bot")));
}
