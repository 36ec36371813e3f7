#include "smi/decision.hpp"

#include <algorithm>

namespace smi {

namespace {

LetterSet lset(const StrictObject& x) {
  LetterBag b = letters(x);
  return LetterSet(b.begin(), b.end());
}

// Letter deletion on strict objects.  Letterless material is kept; nullopt
// when nothing at all remains.
std::optional<StrictObject> del_strict(const StrictObject& x, const LetterSet& p) {
  switch (x.tag()) {
    case StrictObject::Tag::Letter:
      if (p.count(x.name())) return std::nullopt;
      return x;
    case StrictObject::Tag::Bot:
    case StrictObject::Tag::Top: return x;
    default: {
      std::vector<StrictObject> kept;
      for (const StrictObject& c : x.children())
        if (auto r = del_strict(c, p)) kept.push_back(*r);
      if (kept.empty()) return std::nullopt;
      return x.is_or() ? StrictObject::or_(kept) : StrictObject::and_(kept);
    }
  }
}

// Arrow that absorbs a letterless piece into the unit of the ambient
// connective, or creates it from that unit; nullopt when the piece reduces
// to the wrong unit (the ambient object would not be pure).
std::optional<StTerm> absorb_to(const StrictObject& junk, const StrictObject& unit) {
  if (strict_nu(junk) != unit) return std::nullopt;
  return unit_iso(junk);
}

std::optional<StTerm> create_from(const StrictObject& unit, const StrictObject& junk) {
  if (strict_nu(junk) != unit) return std::nullopt;
  return st_invert(unit_iso(junk));
}

std::optional<StTerm> canonical_m(const StrictObject& x, const StrictObject& y);

// Componentwise grouping of the source disjuncts under the target disjuncts
// (also covers a letter target against a disjunctive source).
std::optional<StTerm> case_disjunctive(const StrictObject& x, const StrictObject& y) {
  std::vector<StrictObject> xparts = prime_disjuncts(x);
  std::vector<StrictObject> yparts = prime_disjuncts(y);
  std::vector<LetterSet> ylets;
  std::vector<int> lettered_y;
  for (const StrictObject& yc : yparts) {
    ylets.push_back(lset(yc));
    lettered_y.push_back(!ylets.back().empty());
  }
  std::vector<std::vector<StrictObject>> groups(yparts.size());
  std::vector<StrictObject> xjunk;
  for (const StrictObject& xc : xparts) {
    LetterSet l = lset(xc);
    if (l.empty()) {
      xjunk.push_back(xc);
      continue;
    }
    bool placed = false;
    for (size_t j = 0; j < yparts.size(); ++j) {
      if (lettered_y[j] &&
          std::includes(ylets[j].begin(), ylets[j].end(), l.begin(), l.end())) {
        groups[j].push_back(xc);
        placed = true;
        break;
      }
    }
    if (!placed) return std::nullopt;  // a source disjunct straddles targets
  }
  // Source rearranged: the groups in target order, junk at the end.
  std::vector<StrictObject> arranged;
  std::vector<StTerm> pieces;
  for (size_t j = 0; j < yparts.size(); ++j) {
    if (!lettered_y[j]) {
      auto c = create_from(StrictObject::bot(), yparts[j]);
      if (!c) return std::nullopt;
      pieces.push_back(*c);
      continue;
    }
    if (groups[j].empty()) return std::nullopt;
    StrictObject sj = StrictObject::or_(groups[j]);
    for (const StrictObject& g : groups[j]) arranged.push_back(g);
    auto tj = canonical_m(sj, yparts[j]);
    if (!tj) return std::nullopt;
    pieces.push_back(*tj);
  }
  for (const StrictObject& j : xjunk) {
    arranged.push_back(j);
    auto a = absorb_to(j, StrictObject::bot());
    if (!a) return std::nullopt;
    pieces.push_back(*a);
  }
  StTerm presort = sort_iso(x, StrictObject::or_(arranged));
  return st_comp(st_or_all(pieces), presort);
}

// Componentwise grouping of the target conjuncts under the source conjuncts.
std::optional<StTerm> case_conjunctive(const StrictObject& x, const StrictObject& y) {
  std::vector<StrictObject> xparts = x.children();
  std::vector<LetterSet> xlets;
  std::vector<int> lettered_x;
  for (const StrictObject& xc : xparts) {
    xlets.push_back(lset(xc));
    lettered_x.push_back(!xlets.back().empty());
  }
  std::vector<std::vector<StrictObject>> groups(xparts.size());
  for (const StrictObject& yc : prime_conjuncts(y)) {
    LetterSet l = lset(yc);
    if (l.empty()) return std::nullopt;  // target junk is peeled before this case
    bool placed = false;
    for (size_t i = 0; i < xparts.size(); ++i) {
      if (lettered_x[i] &&
          std::includes(xlets[i].begin(), xlets[i].end(), l.begin(), l.end())) {
        groups[i].push_back(yc);
        placed = true;
        break;
      }
    }
    if (!placed) return std::nullopt;
  }
  std::vector<StTerm> pieces;
  std::vector<StrictObject> produced;
  for (size_t i = 0; i < xparts.size(); ++i) {
    if (!lettered_x[i]) {
      auto a = absorb_to(xparts[i], StrictObject::top());
      if (!a) return std::nullopt;
      pieces.push_back(*a);
      continue;
    }
    if (groups[i].empty()) return std::nullopt;
    StrictObject ti = StrictObject::and_(groups[i]);
    produced.push_back(ti);
    auto t = canonical_m(xparts[i], ti);
    if (!t) return std::nullopt;
    pieces.push_back(*t);
  }
  StTerm comb = st_and_all(pieces);
  StTerm postsort = sort_iso(StrictObject::and_(produced), y);
  return st_comp(postsort, comb);
}

// The intermutation case: disjunctive source against conjunctive target.
std::optional<StTerm> case_intermute(const StrictObject& x, const StrictObject& y) {
  const auto& xc = x.children();
  size_t i1 = xc.size();
  for (size_t i = 0; i < xc.size(); ++i) {
    if (!lset(xc[i]).empty()) {
      i1 = i;
      break;
    }
  }
  if (i1 == xc.size()) return std::nullopt;
  StrictObject x1 = xc[i1];
  std::vector<StrictObject> rest;
  for (size_t i = 0; i < xc.size(); ++i)
    if (i != i1) rest.push_back(xc[i]);
  StrictObject x2 = StrictObject::or_(rest);
  StTerm presort = sort_iso(x, StrictObject::or2(x1, x2));

  const auto& yc = y.children();
  StrictObject y1 = yc[0];
  StrictObject y2 = StrictObject::and_({yc.begin() + 1, yc.end()});

  LetterSet l1 = lset(x1), l2 = lset(x2);
  StrictObject s = StrictObject::bot(), t = StrictObject::bot(), u = StrictObject::bot(),
               v = StrictObject::bot();
  if (l2.empty()) {
    s = y1;
    t = y2;
  } else {
    auto so = del_strict(y1, l2), to = del_strict(y2, l2);
    auto uo = del_strict(y1, l1), vo = del_strict(y2, l1);
    if (!so || !to || !uo || !vo) return std::nullopt;
    s = *so;
    t = *to;
    u = *uo;
    v = *vo;
  }

  auto v1 = canonical_m(x1, StrictObject::and2(s, t));
  if (!v1) return std::nullopt;
  auto v2 = canonical_m(x2, StrictObject::and2(u, v));
  if (!v2) return std::nullopt;
  auto u1 = canonical_m(StrictObject::or2(s, u), y1);
  if (!u1) return std::nullopt;
  auto u2 = canonical_m(StrictObject::or2(t, v), y2);
  if (!u2) return std::nullopt;

  StTerm mid = StTerm::ck(s, t, u, v);
  return st_comp(st_and(*u1, *u2), st_comp(mid, st_comp(st_or(*v1, *v2), presort)));
}

std::optional<StTerm> canonical_m(const StrictObject& x, const StrictObject& y) {
  if (letters(x) != letters(y)) return std::nullopt;
  if (x == y) return StTerm::id(x);
  if (is_letterless(x)) return letterless_arrow(x, y);

  // Letterless conjuncts of the target are created last, so the core cases
  // below see a junk-free conjunctive target.
  if (y.is_and()) {
    bool junk = false;
    for (const StrictObject& c : y.children())
      if (lset(c).empty()) junk = true;
    if (junk) {
      std::vector<StrictObject> lettered;
      std::vector<StTerm> inject;
      for (const StrictObject& c : y.children()) {
        if (lset(c).empty()) {
          auto cr = create_from(StrictObject::top(), c);
          if (!cr) return std::nullopt;
          inject.push_back(*cr);
        } else {
          lettered.push_back(c);
          inject.push_back(StTerm::id(c));
        }
      }
      auto t0 = canonical_m(x, StrictObject::and_(lettered));
      if (!t0) return std::nullopt;
      return st_comp(st_and_all(inject), *t0);
    }
  }

  if (y.is_or() || (x.is_or() && y.is_letter())) return case_disjunctive(x, y);
  if (x.is_and()) return case_conjunctive(x, y);
  if (x.is_or() && y.is_and()) return case_intermute(x, y);
  return std::nullopt;
}

}  // namespace

CanonResult canonical_arrow(const StrictObject& a, const StrictObject& b) {
  if (letters(a) != letters(b)) return {CanonStatus::None, std::nullopt};
  Purity pa = purity(a), pb = purity(b);
  if (pa.bot_pure && !pb.bot_pure) return {CanonStatus::None, std::nullopt};
  if (pb.top_pure && !pa.top_pure) return {CanonStatus::None, std::nullopt};
  if (is_letterless(a) && is_letterless(b)) {
    auto t = letterless_arrow(a, b);
    if (!t) return {CanonStatus::None, std::nullopt};
    return {CanonStatus::Some, t};
  }
  if (pa.pure() && pb.pure() && is_diversified(a) && is_diversified(b)) {
    auto t = canonical_m(a, b);
    if (!t) return {CanonStatus::None, std::nullopt};
    return {CanonStatus::Some, t};
  }
  return {CanonStatus::Undecided, std::nullopt};
}

EqualReport equal_arrows(const StTerm& f, const StTerm& g) {
  StEnds ef = st_ends(f), eg = st_ends(g);
  if (ef.src != eg.src || ef.tgt != eg.tgt)
    return {EqualStatus::NotParallel,
            "endpoints differ: " + ef.src.str() + " -> " + ef.tgt.str() + " vs " +
                eg.src.str() + " -> " + eg.tgt.str()};
  if (is_letterless(ef.src) && is_letterless(ef.tgt))
    return {EqualStatus::EqualByCoherence, "parallel with letterless endpoints"};
  Purity ps = purity(ef.src), pt = purity(ef.tgt);
  if (ps.pure() && pt.pure() && is_diversified(ef.src) && is_diversified(ef.tgt))
    return {EqualStatus::EqualByCoherence, "parallel with pure diversified endpoints"};
  std::string why = "endpoints outside the decidable fragment:";
  if (!ps.pure()) why += " source impure;";
  if (!pt.pure()) why += " target impure;";
  if (!is_diversified(ef.src)) why += " source repeats a letter;";
  if (!is_diversified(ef.tgt)) why += " target repeats a letter;";
  return {EqualStatus::Unknown, why};
}

namespace {

SaiTerm to_sai(const StTerm& t) {
  using K = StTerm::Kind;
  switch (t.kind()) {
    case K::Id: return SaiTerm::id(to_form_multiset(t.params()[0]));
    case K::COr:
    case K::CAnd: {
      StEnds e = st_ends(t);
      return SaiTerm::id(to_form_multiset(e.src));
    }
    case K::Ck:
      return SaiTerm::ck(CkIndex(to_form_multiset(t.params()[0]), to_form_multiset(t.params()[1]),
                                 to_form_multiset(t.params()[2]),
                                 to_form_multiset(t.params()[3])));
    case K::Comp: return sai_comp(to_sai(t.fst()), to_sai(t.snd()));
    case K::OrC: {
      SaiTerm f = to_sai(t.fst()), g = to_sai(t.snd());
      if (f.is_id() && g.is_id())
        return SaiTerm::id(FormMultiset::or2(f.obj(), g.obj()));
      return SaiTerm::or_c(f, g);
    }
    case K::AndC: {
      SaiTerm f = to_sai(t.fst()), g = to_sai(t.snd());
      if (f.is_id() && g.is_id())
        return SaiTerm::id(FormMultiset::and2(f.obj(), g.obj()));
      return SaiTerm::and_c(f, g);
    }
    default: throw std::logic_error("unit generator survived unit_reduce");
  }
}

}  // namespace

SaiTerm sai_skeleton(const StTerm& t) { return to_sai(unit_reduce(t)); }

}  // namespace smi
