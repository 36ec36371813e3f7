#include "smi/unitnorm.hpp"

namespace smi {

namespace {

struct Redex {
  StTerm factor;
  StrictObject target;
};

// Innermost-leftmost w redex: an adjacent pair of top children in an
// or-list, or of bot children in an and-list, children before self.
std::optional<Redex> find_redex(const StrictObject& x) {
  if (!x.is_or() && !x.is_and()) return std::nullopt;
  bool is_or = x.is_or();
  const auto& cs = x.children();
  for (size_t i = 0; i < cs.size(); ++i) {
    if (auto r = find_redex(cs[i])) {
      std::vector<StTerm> parts;
      std::vector<StrictObject> objs;
      for (size_t j = 0; j < cs.size(); ++j) {
        if (j == i) {
          parts.push_back(r->factor);
          objs.push_back(r->target);
        } else {
          parts.push_back(StTerm::id(cs[j]));
          objs.push_back(cs[j]);
        }
      }
      StTerm factor = is_or ? st_or_all(parts) : st_and_all(parts);
      StrictObject tgt = is_or ? StrictObject::or_(objs) : StrictObject::and_(objs);
      return Redex{factor, tgt};
    }
  }
  StrictObject::Tag unit = is_or ? StrictObject::Tag::Top : StrictObject::Tag::Bot;
  for (size_t i = 0; i + 1 < cs.size(); ++i) {
    if (cs[i].tag() == unit && cs[i + 1].tag() == unit) {
      std::vector<StTerm> parts;
      std::vector<StrictObject> objs;
      for (size_t j = 0; j < cs.size(); ++j) {
        if (j == i) {
          parts.push_back(is_or ? StTerm::w_or(Dir::Fw) : StTerm::w_and(Dir::Fw));
          objs.push_back(is_or ? StrictObject::top() : StrictObject::bot());
          ++j;  // the pair is consumed
        } else {
          parts.push_back(StTerm::id(cs[j]));
          objs.push_back(cs[j]);
        }
      }
      StTerm factor = is_or ? st_or_all(parts) : st_and_all(parts);
      StrictObject tgt = is_or ? StrictObject::or_(objs) : StrictObject::and_(objs);
      return Redex{factor, tgt};
    }
  }
  return std::nullopt;
}

}  // namespace

StTerm unit_iso(const StrictObject& a) {
  StTerm acc = StTerm::id(a);
  StrictObject cur = a;
  while (auto r = find_redex(cur)) {
    acc = st_comp(r->factor, acc);
    cur = r->target;
  }
  if (cur != strict_nu(a)) throw std::logic_error("unit_iso missed the normal form");
  return acc;
}

std::optional<StTerm> letterless_arrow(const StrictObject& a, const StrictObject& b) {
  if (!is_letterless(a) || !is_letterless(b)) throw NotLetterless();
  StrictObject na = strict_nu(a), nb = strict_nu(b);
  StTerm ia = unit_iso(a);
  StTerm ib_inv = st_invert(unit_iso(b));
  if (na == nb) return st_comp(ib_inv, ia);
  if (na.is_bot() && nb.is_top()) return st_comp(ib_inv, st_comp(StTerm::kappa(), ia));
  return std::nullopt;
}

namespace {

bool term_letterless(const StTerm& t) { return is_letterless(st_ends(t).src); }

// nu image of a developed factor; nullopt when the whole region is
// letterless and therefore vanishes between pure endpoints.
std::optional<StTerm> nu_factor(const StTerm& t) {
  using K = StTerm::Kind;
  if (term_letterless(t)) return std::nullopt;
  switch (t.kind()) {
    case K::Id: return StTerm::id(strict_nu(t.params()[0]));
    case K::COr: {
      const StrictObject &d = t.params()[0], &e = t.params()[1];
      bool dl = is_letterless(d), el = is_letterless(e);
      if (!dl && !el) return StTerm::c_or(strict_nu(d), strict_nu(e));
      return StTerm::id(strict_nu(dl ? e : d));
    }
    case K::CAnd: {
      const StrictObject &d = t.params()[0], &e = t.params()[1];
      bool dl = is_letterless(d), el = is_letterless(e);
      if (!dl && !el) return StTerm::c_and(strict_nu(d), strict_nu(e));
      return StTerm::id(strict_nu(dl ? e : d));
    }
    case K::Ck: {
      const StrictObject &s = t.params()[0], &tt = t.params()[1], &u = t.params()[2],
                         &v = t.params()[3];
      bool ls = !is_letterless(s), lt = !is_letterless(tt), lu = !is_letterless(u),
           lv = !is_letterless(v);
      int lettered = int(ls) + int(lt) + int(lu) + int(lv);
      if (lettered == 4)
        return StTerm::ck(strict_nu(s), strict_nu(tt), strict_nu(u), strict_nu(v));
      if (ls && lu && !lt && !lv)
        return StTerm::id(StrictObject::or2(strict_nu(s), strict_nu(u)));
      if (lt && lv && !ls && !lu)
        return StTerm::id(StrictObject::or2(strict_nu(tt), strict_nu(v)));
      if (ls && lt && !lu && !lv)
        return StTerm::id(StrictObject::and2(strict_nu(s), strict_nu(tt)));
      if (lu && lv && !ls && !lt)
        return StTerm::id(StrictObject::and2(strict_nu(u), strict_nu(v)));
      if (lettered == 1) {
        const StrictObject& only = ls ? s : lt ? tt : lu ? u : v;
        return StTerm::id(strict_nu(only));
      }
      throw NotPure("ck head with a unit pattern impossible between pure objects");
    }
    case K::OrC: {
      auto f = nu_factor(t.fst());
      auto g = nu_factor(t.snd());
      if (f && g) return st_or(*f, *g);
      if (f) return f;
      return g;
    }
    case K::AndC: {
      auto f = nu_factor(t.fst());
      auto g = nu_factor(t.snd());
      if (f && g) return st_and(*f, *g);
      if (f) return f;
      return g;
    }
    case K::WOr:
    case K::WAnd:
    case K::Kappa:
      // letterless sources, handled by the guard above
      throw std::logic_error("unreachable");
    case K::Comp: throw std::logic_error("developed factor contains a composition");
  }
  throw std::logic_error("bad kind");
}

bool term_has_unit_index(const StTerm& t) {
  for (const StrictObject& p : t.params())
    if (occurs_unit(p)) return true;
  switch (t.kind()) {
    case StTerm::Kind::WOr:
    case StTerm::Kind::WAnd:
    case StTerm::Kind::Kappa: return true;
    case StTerm::Kind::Comp:
    case StTerm::Kind::OrC:
    case StTerm::Kind::AndC:
      return term_has_unit_index(t.fst()) || term_has_unit_index(t.snd());
    default: return false;
  }
}

}  // namespace

StTerm unit_reduce(const StTerm& f) {
  StEnds e = st_ends(f);
  if (!purity(e.src).pure() || !purity(e.tgt).pure())
    throw NotPure("unit_reduce needs pure endpoints");
  StTerm acc = StTerm::id(strict_nu(e.src));
  for (const StTerm& factor : develop(f)) {
    if (auto o = nu_factor(factor)) acc = st_comp(*o, acc);
  }
  StEnds out = st_ends(acc);
  if (out.src != strict_nu(e.src) || out.tgt != strict_nu(e.tgt))
    throw std::logic_error("unit_reduce changed the reduced endpoints");
  if (term_has_unit_index(acc)) throw std::logic_error("unit_reduce left a unit behind");
  return acc;
}

}  // namespace smi
