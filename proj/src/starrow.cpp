#include "smi/starrow.hpp"

#include <algorithm>

namespace smi {

StTerm StTerm::make(Kind k, Dir d, std::vector<StrictObject> params, std::vector<StTerm> sub) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->dir = d;
  n->params = std::move(params);
  n->sub = std::move(sub);
  return StTerm(std::move(n));
}

StTerm StTerm::id(StrictObject a) { return make(Kind::Id, Dir::Fw, {std::move(a)}, {}); }
StTerm StTerm::c_or(StrictObject a, StrictObject b) {
  return make(Kind::COr, Dir::Fw, {std::move(a), std::move(b)}, {});
}
StTerm StTerm::c_and(StrictObject a, StrictObject b) {
  return make(Kind::CAnd, Dir::Fw, {std::move(a), std::move(b)}, {});
}
StTerm StTerm::w_or(Dir d) { return make(Kind::WOr, d, {}, {}); }
StTerm StTerm::w_and(Dir d) { return make(Kind::WAnd, d, {}, {}); }
StTerm StTerm::kappa() { return make(Kind::Kappa, Dir::Fw, {}, {}); }
StTerm StTerm::ck(StrictObject s, StrictObject t, StrictObject u, StrictObject v) {
  return make(Kind::Ck, Dir::Fw, {std::move(s), std::move(t), std::move(u), std::move(v)}, {});
}
StTerm StTerm::comp(StTerm g, StTerm f) {
  return make(Kind::Comp, Dir::Fw, {}, {std::move(g), std::move(f)});
}
StTerm StTerm::or_c(StTerm f, StTerm g) {
  return make(Kind::OrC, Dir::Fw, {}, {std::move(f), std::move(g)});
}
StTerm StTerm::and_c(StTerm f, StTerm g) {
  return make(Kind::AndC, Dir::Fw, {}, {std::move(f), std::move(g)});
}

bool StTerm::operator==(const StTerm& o) const {
  if (node_ == o.node_) return true;
  if (kind() != o.kind() || dir() != o.dir()) return false;
  if (params().size() != o.params().size()) return false;
  for (size_t i = 0; i < params().size(); ++i)
    if (params()[i] != o.params()[i]) return false;
  if (node_->sub.size() != o.node_->sub.size()) return false;
  for (size_t i = 0; i < node_->sub.size(); ++i)
    if (node_->sub[i] != o.node_->sub[i]) return false;
  return true;
}

namespace {

StEnds ends_at(const StTerm& t, const std::string& pos) {
  using K = StTerm::Kind;
  const auto& p = t.params();
  StrictObject bot = StrictObject::bot(), top = StrictObject::top();
  switch (t.kind()) {
    case K::Id: return {p[0], p[0]};
    case K::COr: return {StrictObject::or2(p[0], p[1]), StrictObject::or2(p[1], p[0])};
    case K::CAnd: return {StrictObject::and2(p[0], p[1]), StrictObject::and2(p[1], p[0])};
    case K::WOr: {
      StEnds e{StrictObject::or2(top, top), top};
      if (t.dir() == Dir::Bw) std::swap(e.src, e.tgt);
      return e;
    }
    case K::WAnd: {
      StEnds e{StrictObject::and2(bot, bot), bot};
      if (t.dir() == Dir::Bw) std::swap(e.src, e.tgt);
      return e;
    }
    case K::Kappa: return {bot, top};
    case K::Ck:
      return {StrictObject::or2(StrictObject::and2(p[0], p[1]), StrictObject::and2(p[2], p[3])),
              StrictObject::and2(StrictObject::or2(p[0], p[2]), StrictObject::or2(p[1], p[3]))};
    case K::Comp: {
      StEnds g = ends_at(t.fst(), pos + ".l");
      StEnds f = ends_at(t.snd(), pos + ".r");
      if (f.tgt != g.src)
        throw TypeError("composition mismatch at " + (pos.empty() ? std::string(".") : pos) +
                        ": " + f.tgt.str() + " vs " + g.src.str());
      return {f.src, g.tgt};
    }
    case K::OrC: {
      StEnds f = ends_at(t.fst(), pos + ".l");
      StEnds g = ends_at(t.snd(), pos + ".r");
      return {StrictObject::or2(f.src, g.src), StrictObject::or2(f.tgt, g.tgt)};
    }
    case K::AndC: {
      StEnds f = ends_at(t.fst(), pos + ".l");
      StEnds g = ends_at(t.snd(), pos + ".r");
      return {StrictObject::and2(f.src, g.src), StrictObject::and2(f.tgt, g.tgt)};
    }
  }
  throw std::logic_error("bad kind");
}

}  // namespace

StEnds st_ends(const StTerm& t) { return ends_at(t, ""); }

size_t ck_count(const StTerm& t) {
  switch (t.kind()) {
    case StTerm::Kind::Ck: return 1;
    case StTerm::Kind::Comp:
    case StTerm::Kind::OrC:
    case StTerm::Kind::AndC: return ck_count(t.fst()) + ck_count(t.snd());
    default: return 0;
  }
}

StTerm st_comp(const StTerm& g, const StTerm& f) {
  if (f.is_id()) return g;
  if (g.is_id()) return f;
  StEnds ef = st_ends(f), eg = st_ends(g);
  if (ef.tgt != eg.src)
    throw TypeError("composition mismatch: " + ef.tgt.str() + " vs " + eg.src.str());
  return StTerm::comp(g, f);
}

StTerm st_or(const StTerm& f, const StTerm& g) {
  // Identity components on the or-unit vanish in the strict algebra.
  if (f.is_id() && f.params()[0].is_bot()) return g;
  if (g.is_id() && g.params()[0].is_bot()) return f;
  if (f.is_id() && g.is_id())
    return StTerm::id(StrictObject::or2(f.params()[0], g.params()[0]));
  return StTerm::or_c(f, g);
}

StTerm st_and(const StTerm& f, const StTerm& g) {
  if (f.is_id() && f.params()[0].is_top()) return g;
  if (g.is_id() && g.params()[0].is_top()) return f;
  if (f.is_id() && g.is_id())
    return StTerm::id(StrictObject::and2(f.params()[0], g.params()[0]));
  return StTerm::and_c(f, g);
}

StTerm st_comp_chain(const std::vector<StTerm>& factors, const StrictObject& src_if_empty) {
  StTerm acc = StTerm::id(src_if_empty);
  for (const StTerm& f : factors) acc = st_comp(f, acc);
  return acc;
}

StTerm st_or_all(const std::vector<StTerm>& fs) {
  if (fs.empty()) return StTerm::id(StrictObject::bot());
  StTerm acc = fs[0];
  for (size_t i = 1; i < fs.size(); ++i) acc = st_or(acc, fs[i]);
  return acc;
}

StTerm st_and_all(const std::vector<StTerm>& fs) {
  if (fs.empty()) return StTerm::id(StrictObject::top());
  StTerm acc = fs[0];
  for (size_t i = 1; i < fs.size(); ++i) acc = st_and(acc, fs[i]);
  return acc;
}

StTerm st_invert(const StTerm& t) {
  using K = StTerm::Kind;
  switch (t.kind()) {
    case K::Id: return t;
    case K::COr: return StTerm::c_or(t.params()[1], t.params()[0]);
    case K::CAnd: return StTerm::c_and(t.params()[1], t.params()[0]);
    case K::WOr: return StTerm::w_or(t.dir() == Dir::Fw ? Dir::Bw : Dir::Fw);
    case K::WAnd: return StTerm::w_and(t.dir() == Dir::Fw ? Dir::Bw : Dir::Fw);
    case K::Kappa: throw std::logic_error("kappa has no inverse");
    case K::Ck: throw std::logic_error("ck has no inverse");
    case K::Comp: return st_comp(st_invert(t.snd()), st_invert(t.fst()));
    case K::OrC: return st_or(st_invert(t.fst()), st_invert(t.snd()));
    case K::AndC: return st_and(st_invert(t.fst()), st_invert(t.snd()));
  }
  throw std::logic_error("bad kind");
}

std::vector<StTerm> develop(const StTerm& t) {
  using K = StTerm::Kind;
  switch (t.kind()) {
    case K::Id: return {};
    case K::Comp: {
      std::vector<StTerm> out = develop(t.snd());
      std::vector<StTerm> gs = develop(t.fst());
      out.insert(out.end(), gs.begin(), gs.end());
      return out;
    }
    case K::OrC:
    case K::AndC: {
      bool is_or = t.kind() == K::OrC;
      StEnds ef = st_ends(t.fst());
      StEnds eg = st_ends(t.snd());
      std::vector<StTerm> out;
      for (const StTerm& f : develop(t.fst()))
        out.push_back(is_or ? StTerm::or_c(f, StTerm::id(eg.src))
                            : StTerm::and_c(f, StTerm::id(eg.src)));
      for (const StTerm& g : develop(t.snd()))
        out.push_back(is_or ? StTerm::or_c(StTerm::id(ef.tgt), g)
                            : StTerm::and_c(StTerm::id(ef.tgt), g));
      return out;
    }
    default: return {t};
  }
}

namespace {

// Permutation-equivalence (equality of commutativity classes).
bool perm_eq(const StrictObject& a, const StrictObject& b) {
  if (a.tag() != b.tag()) return false;
  if (!a.is_or() && !a.is_and()) return a == b;
  if (a.children().size() != b.children().size()) return false;
  std::vector<bool> used(b.children().size(), false);
  for (const StrictObject& ca : a.children()) {
    bool found = false;
    for (size_t j = 0; j < b.children().size(); ++j) {
      if (!used[j] && perm_eq(ca, b.children()[j])) {
        used[j] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

// One adjacent transposition inside a flat list: swap positions i, i+1.
StTerm adjacent_swap(bool is_or, const std::vector<StrictObject>& cs, size_t i) {
  std::vector<StTerm> parts;
  for (size_t j = 0; j < cs.size(); ++j) {
    if (j == i) {
      parts.push_back(is_or ? StTerm::c_or(cs[i], cs[i + 1]) : StTerm::c_and(cs[i], cs[i + 1]));
      ++j;
    } else {
      parts.push_back(StTerm::id(cs[j]));
    }
  }
  return is_or ? st_or_all(parts) : st_and_all(parts);
}

StTerm sort_iso_rec(const StrictObject& a, const StrictObject& b) {
  if (a == b) return StTerm::id(a);
  if (!perm_eq(a, b)) throw NotPermutationEquivalent();
  bool is_or = a.is_or();
  const auto& ac = a.children();
  const auto& bc = b.children();
  // Match each target child with the first unused permutation-equivalent
  // source child, fix children recursively, then bubble into place.
  std::vector<int> target_of(ac.size(), -1);  // source position -> target position
  std::vector<bool> used(ac.size(), false);
  for (size_t j = 0; j < bc.size(); ++j) {
    for (size_t i = 0; i < ac.size(); ++i) {
      if (!used[i] && perm_eq(ac[i], bc[j])) {
        used[i] = true;
        target_of[i] = static_cast<int>(j);
        break;
      }
    }
  }
  std::vector<StTerm> fixed;
  for (size_t i = 0; i < ac.size(); ++i)
    fixed.push_back(sort_iso_rec(ac[i], bc[target_of[i]]));
  StTerm acc = is_or ? st_or_all(fixed) : st_and_all(fixed);
  // Bubble sort by target position with adjacent transpositions.
  std::vector<int> pos = target_of;
  std::vector<StrictObject> cur;
  for (size_t i = 0; i < ac.size(); ++i) cur.push_back(bc[target_of[i]]);
  bool moved = true;
  while (moved) {
    moved = false;
    for (size_t i = 0; i + 1 < pos.size(); ++i) {
      if (pos[i] > pos[i + 1]) {
        acc = st_comp(adjacent_swap(is_or, cur, i), acc);
        std::swap(pos[i], pos[i + 1]);
        std::swap(cur[i], cur[i + 1]);
        moved = true;
      }
    }
  }
  return acc;
}

}  // namespace

StTerm sort_iso(const StrictObject& a, const StrictObject& b) { return sort_iso_rec(a, b); }

StTerm strictify(const MTerm& t) {
  using K = MTerm::Kind;
  auto st = [](const Formula& f) { return to_strict_object(f); };
  switch (t.kind()) {
    case K::Id: return StTerm::id(st(t.params()[0]));
    case K::BOr:
    case K::BAnd:
    case K::DOr:
    case K::SOr:
    case K::DAnd:
    case K::SAnd: {
      Ends e = typecheck(t);
      return StTerm::id(st(e.src));
    }
    case K::COr: return StTerm::c_or(st(t.params()[0]), st(t.params()[1]));
    case K::CAnd: return StTerm::c_and(st(t.params()[0]), st(t.params()[1]));
    case K::WOr: return StTerm::w_or(t.dir());
    case K::WAnd: return StTerm::w_and(t.dir());
    case K::Kappa: return StTerm::kappa();
    case K::Ck:
      return StTerm::ck(st(t.params()[0]), st(t.params()[1]), st(t.params()[2]),
                        st(t.params()[3]));
    case K::Comp: return st_comp(strictify(t.fst()), strictify(t.snd()));
    case K::OrC: return st_or(strictify(t.fst()), strictify(t.snd()));
    case K::AndC: return st_and(strictify(t.fst()), strictify(t.snd()));
  }
  throw std::logic_error("bad kind");
}

std::pair<StTerm, StTerm> axiom_legs_strict(const std::string& id,
                                            const std::vector<StrictObject>& p) {
  if (p.size() != 6) throw BadParams("strict axiom " + id + " expects 6 objects");
  const StrictObject &U = p[0], &V = p[1], &W = p[2], &X = p[3], &Y = p[4], &Z = p[5];
  if (id == "1s") {
    StTerm left = st_comp(st_and(StTerm::id(StrictObject::or2(U, X)), StTerm::ck(V, W, Y, Z)),
                          StTerm::ck(U, StrictObject::and2(V, W), X, StrictObject::and2(Y, Z)));
    StTerm right = st_comp(st_and(StTerm::ck(U, V, X, Y), StTerm::id(StrictObject::or2(W, Z))),
                           StTerm::ck(StrictObject::and2(U, V), W, StrictObject::and2(X, Y), Z));
    return {left, right};
  }
  if (id == "2s") {
    StTerm left = st_comp(StTerm::ck(U, StrictObject::or2(V, W), X, StrictObject::or2(Y, Z)),
                          st_or(StTerm::id(StrictObject::and2(U, X)), StTerm::ck(V, Y, W, Z)));
    StTerm right = st_comp(StTerm::ck(StrictObject::or2(U, V), StrictObject::or2(X, Y), W, Z),
                           st_or(StTerm::ck(U, X, V, Y), StTerm::id(StrictObject::and2(W, Z))));
    return {left, right};
  }
  throw BadParams("unknown strict axiom id: " + id);
}

namespace {

int stprec(StTerm::Kind k) {
  switch (k) {
    case StTerm::Kind::Comp: return 0;
    case StTerm::Kind::OrC: return 1;
    case StTerm::Kind::AndC: return 2;
    default: return 3;
  }
}

void print_st(const StTerm& t, int min_prec, bool right_child, std::string& out) {
  using K = StTerm::Kind;
  int p = stprec(t.kind());
  bool parens = p < min_prec || (right_child && p == min_prec && p < 3);
  if (parens) out += '(';
  const auto& pr = t.params();
  switch (t.kind()) {
    case K::Id: out += "id(" + pr[0].str() + ")"; break;
    case K::COr: out += "c_or(" + pr[0].str() + ";" + pr[1].str() + ")"; break;
    case K::CAnd: out += "c_and(" + pr[0].str() + ";" + pr[1].str() + ")"; break;
    case K::WOr: out += t.dir() == Dir::Fw ? "w_or_fw" : "w_or_bw"; break;
    case K::WAnd: out += t.dir() == Dir::Fw ? "w_and_fw" : "w_and_bw"; break;
    case K::Kappa: out += "kappa"; break;
    case K::Ck:
      out += "ck(" + pr[0].str() + ";" + pr[1].str() + ";" + pr[2].str() + ";" + pr[3].str() + ")";
      break;
    case K::Comp:
      print_st(t.fst(), 0, false, out);
      out += " . ";
      print_st(t.snd(), 0, true, out);
      break;
    case K::OrC:
      print_st(t.fst(), 1, false, out);
      out += " | ";
      print_st(t.snd(), 1, true, out);
      break;
    case K::AndC:
      print_st(t.fst(), 2, false, out);
      out += " & ";
      print_st(t.snd(), 2, true, out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace

std::string StTerm::str() const {
  std::string out;
  print_st(*this, 0, false, out);
  return out;
}

}  // namespace smi
