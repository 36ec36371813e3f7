#include <doctest.h>

#include <random>

#include "smi/formset.hpp"
#include "smi/parse.hpp"

using namespace smi;

namespace {

FormMultiset M(const std::string& s) { return to_form_multiset(parse_formula(s)); }

Formula random_unitfree(std::mt19937_64& rng, int depth, int letter_pool) {
  int pick = static_cast<int>(rng() % 100);
  if (depth == 0 || pick < 40)
    return Formula::letter(std::string(1, static_cast<char>('a' + rng() % letter_pool)));
  Formula l = random_unitfree(rng, depth - 1, letter_pool);
  Formula r = random_unitfree(rng, depth - 1, letter_pool);
  return pick % 2 ? Formula::disj(l, r) : Formula::conj(l, r);
}

// Deletion oracle on plain formulas: remove the letters, then rebuild.
std::optional<Formula> delete_in_formula(const Formula& a, const LetterSet& p) {
  switch (a.tag()) {
    case Formula::Tag::Letter:
      if (p.count(a.name())) return std::nullopt;
      return a;
    case Formula::Tag::Or:
    case Formula::Tag::And: {
      auto l = delete_in_formula(a.left(), p);
      auto r = delete_in_formula(a.right(), p);
      if (!l && !r) return std::nullopt;
      if (!l) return r;
      if (!r) return l;
      return a.tag() == Formula::Tag::Or ? Formula::disj(*l, *r) : Formula::conj(*l, *r);
    }
    default: return a;
  }
}

}  // namespace

TEST_CASE("commutativity classes") {
  CHECK(M("(p/\\q)/\\((p\\/r)\\/p)") == M("q/\\((r\\/p)\\/p)/\\p"));
  CHECK(M("(p/\\q)/\\((p\\/r)\\/p)") == M("(p\\/p\\/r)/\\p/\\q"));
  CHECK(M("p") == M("p"));
  CHECK(M("p\\/q") != M("p/\\q"));
  CHECK_THROWS_AS(M("p\\/bot"), UnitPresent);
}

TEST_CASE("deletion follows the formula oracle") {
  CHECK(delete_letters(M("(p\\/s)/\\(q\\/t)"), {"s", "t"}) == M("p/\\q"));
  CHECK(delete_letters(M("p/\\q"), {}) == M("p/\\q"));
  CHECK(delete_letters(M("p\\/(q/\\r)"), {"q"}) == M("p\\/r"));
  CHECK_THROWS_AS(delete_letters(M("p/\\q"), LetterSet{"p", "q"}), AllLettersDeleted);

  std::mt19937_64 rng(41);
  for (int i = 0; i < 500; ++i) {
    Formula a = random_unitfree(rng, 4, 5);
    LetterSet p;
    for (char c = 'a'; c < 'a' + 5; ++c)
      if (rng() % 3 == 0) p.insert(std::string(1, c));
    auto of = delete_in_formula(a, p);
    auto om = delete_letters_opt(to_form_multiset(a), p);
    CHECK(of.has_value() == om.has_value());
    if (of && om) CHECK(to_form_multiset(*of) == *om);
  }
}

TEST_CASE("deletions commute") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 500; ++i) {
    Formula a = random_unitfree(rng, 4, 4);
    std::string p(1, static_cast<char>('a' + rng() % 4));
    std::string q(1, static_cast<char>('a' + rng() % 4));
    FormMultiset x = to_form_multiset(a);
    auto first = delete_letters_opt(x, {p});
    auto second = delete_letters_opt(x, {q});
    std::optional<FormMultiset> pq, qp;
    if (first) pq = delete_letters_opt(*first, {q});
    if (second) qp = delete_letters_opt(*second, {p});
    auto both = delete_letters_opt(x, {p, q});
    // both orders agree whenever both are defined
    if (pq && qp) CHECK(*pq == *qp);
    if (both && pq) CHECK(*both == *pq);
  }
}

TEST_CASE("ck index symmetry") {
  FormMultiset s = M("p"), t = M("q"), u = M("s"), v = M("t");
  CkIndex a(s, t, u, v);
  CHECK(a == CkIndex(t, s, v, u));
  CHECK(a == CkIndex(u, v, s, t));
  CHECK(a == CkIndex(v, u, t, s));
  CHECK(a != CkIndex(s, t, v, u));
  CHECK(a != CkIndex(t, s, u, v));
  CHECK(a.source() == M("(p/\\q)\\/(s/\\t)"));
  CHECK(a.target() == M("(p\\/s)/\\(q\\/t)"));
}
