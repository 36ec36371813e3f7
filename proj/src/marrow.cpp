#include "smi/marrow.hpp"

namespace smi {

MTerm MTerm::make(Kind k, Dir d, std::vector<Formula> params, std::vector<MTerm> sub) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->dir = d;
  n->params = std::move(params);
  n->sub = std::move(sub);
  return MTerm(std::move(n));
}

MTerm MTerm::id(Formula a) { return make(Kind::Id, Dir::Fw, {std::move(a)}, {}); }
MTerm MTerm::b_or(Dir d, Formula a, Formula b, Formula c) {
  return make(Kind::BOr, d, {std::move(a), std::move(b), std::move(c)}, {});
}
MTerm MTerm::b_and(Dir d, Formula a, Formula b, Formula c) {
  return make(Kind::BAnd, d, {std::move(a), std::move(b), std::move(c)}, {});
}
MTerm MTerm::c_or(Formula a, Formula b) {
  return make(Kind::COr, Dir::Fw, {std::move(a), std::move(b)}, {});
}
MTerm MTerm::c_and(Formula a, Formula b) {
  return make(Kind::CAnd, Dir::Fw, {std::move(a), std::move(b)}, {});
}
MTerm MTerm::d_or(Dir d, Formula a) { return make(Kind::DOr, d, {std::move(a)}, {}); }
MTerm MTerm::s_or(Dir d, Formula a) { return make(Kind::SOr, d, {std::move(a)}, {}); }
MTerm MTerm::d_and(Dir d, Formula a) { return make(Kind::DAnd, d, {std::move(a)}, {}); }
MTerm MTerm::s_and(Dir d, Formula a) { return make(Kind::SAnd, d, {std::move(a)}, {}); }
MTerm MTerm::w_or(Dir d) { return make(Kind::WOr, d, {}, {}); }
MTerm MTerm::w_and(Dir d) { return make(Kind::WAnd, d, {}, {}); }
MTerm MTerm::kappa() { return make(Kind::Kappa, Dir::Fw, {}, {}); }
MTerm MTerm::ck(Formula a, Formula b, Formula c, Formula d) {
  return make(Kind::Ck, Dir::Fw, {std::move(a), std::move(b), std::move(c), std::move(d)}, {});
}
MTerm MTerm::comp(MTerm g, MTerm f) {
  return make(Kind::Comp, Dir::Fw, {}, {std::move(g), std::move(f)});
}
MTerm MTerm::or_c(MTerm f, MTerm g) {
  return make(Kind::OrC, Dir::Fw, {}, {std::move(f), std::move(g)});
}
MTerm MTerm::and_c(MTerm f, MTerm g) {
  return make(Kind::AndC, Dir::Fw, {}, {std::move(f), std::move(g)});
}

bool MTerm::operator==(const MTerm& o) const {
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

Ends generator_ends(const MTerm& t) {
  using K = MTerm::Kind;
  const auto& p = t.params();
  Formula bot = Formula::bot(), top = Formula::top();
  Ends e{bot, bot};
  switch (t.kind()) {
    case K::Id: return {p[0], p[0]};
    case K::BOr:
      e = {Formula::disj(p[0], Formula::disj(p[1], p[2])),
           Formula::disj(Formula::disj(p[0], p[1]), p[2])};
      break;
    case K::BAnd:
      e = {Formula::conj(p[0], Formula::conj(p[1], p[2])),
           Formula::conj(Formula::conj(p[0], p[1]), p[2])};
      break;
    case K::COr: return {Formula::disj(p[0], p[1]), Formula::disj(p[1], p[0])};
    case K::CAnd: return {Formula::conj(p[0], p[1]), Formula::conj(p[1], p[0])};
    case K::DOr: e = {Formula::disj(p[0], bot), p[0]}; break;
    case K::SOr: e = {Formula::disj(bot, p[0]), p[0]}; break;
    case K::DAnd: e = {Formula::conj(p[0], top), p[0]}; break;
    case K::SAnd: e = {Formula::conj(top, p[0]), p[0]}; break;
    case K::WOr: e = {Formula::disj(top, top), top}; break;
    case K::WAnd: e = {Formula::conj(bot, bot), bot}; break;
    case K::Kappa: return {bot, top};
    case K::Ck:
      return {Formula::disj(Formula::conj(p[0], p[1]), Formula::conj(p[2], p[3])),
              Formula::conj(Formula::disj(p[0], p[2]), Formula::disj(p[1], p[3]))};
    default: throw std::logic_error("not a generator");
  }
  if (t.dir() == Dir::Bw) std::swap(e.src, e.tgt);
  return e;
}

Ends ends_at(const MTerm& t, const std::string& pos) {
  using K = MTerm::Kind;
  switch (t.kind()) {
    case K::Comp: {
      Ends g = ends_at(t.fst(), pos + ".l");
      Ends f = ends_at(t.snd(), pos + ".r");
      if (f.tgt != g.src)
        throw TypeError("composition mismatch at " + (pos.empty() ? std::string(".") : pos) +
                        ": " + f.tgt.str() + " vs " + g.src.str());
      return {f.src, g.tgt};
    }
    case K::OrC: {
      Ends f = ends_at(t.fst(), pos + ".l");
      Ends g = ends_at(t.snd(), pos + ".r");
      return {Formula::disj(f.src, g.src), Formula::disj(f.tgt, g.tgt)};
    }
    case K::AndC: {
      Ends f = ends_at(t.fst(), pos + ".l");
      Ends g = ends_at(t.snd(), pos + ".r");
      return {Formula::conj(f.src, g.src), Formula::conj(f.tgt, g.tgt)};
    }
    default: return generator_ends(t);
  }
}

}  // namespace

Ends typecheck(const MTerm& t) { return ends_at(t, ""); }

size_t ck_count(const MTerm& t) {
  switch (t.kind()) {
    case MTerm::Kind::Ck: return 1;
    case MTerm::Kind::Comp:
    case MTerm::Kind::OrC:
    case MTerm::Kind::AndC: return ck_count(t.fst()) + ck_count(t.snd());
    default: return 0;
  }
}

std::vector<MTerm> develop(const MTerm& t) {
  using K = MTerm::Kind;
  switch (t.kind()) {
    case K::Id: return {};
    case K::Comp: {
      std::vector<MTerm> out = develop(t.snd());
      std::vector<MTerm> gs = develop(t.fst());
      out.insert(out.end(), gs.begin(), gs.end());
      return out;
    }
    case K::OrC:
    case K::AndC: {
      bool is_or = t.kind() == K::OrC;
      Ends ef = typecheck(t.fst());
      Ends eg = typecheck(t.snd());
      std::vector<MTerm> out;
      for (const MTerm& f : develop(t.fst()))
        out.push_back(is_or ? MTerm::or_c(f, MTerm::id(eg.src))
                            : MTerm::and_c(f, MTerm::id(eg.src)));
      for (const MTerm& g : develop(t.snd()))
        out.push_back(is_or ? MTerm::or_c(MTerm::id(ef.tgt), g)
                            : MTerm::and_c(MTerm::id(ef.tgt), g));
      return out;
    }
    default: return {t};
  }
}

namespace {

const char* dir_suffix(Dir d) { return d == Dir::Fw ? "fw" : "bw"; }

// precedence: 0 composition, 1 |, 2 &, 3 atom
int tprec(MTerm::Kind k) {
  switch (k) {
    case MTerm::Kind::Comp: return 0;
    case MTerm::Kind::OrC: return 1;
    case MTerm::Kind::AndC: return 2;
    default: return 3;
  }
}

void print_term(const MTerm& t, int min_prec, bool right_child, std::string& out) {
  using K = MTerm::Kind;
  int p = tprec(t.kind());
  bool parens = p < min_prec || (right_child && p == min_prec && p < 3);
  if (parens) out += '(';
  auto args = [&](std::initializer_list<const Formula*> fs) {
    out += '(';
    bool first = true;
    for (const Formula* f : fs) {
      if (!first) out += ';';
      out += f->str();
      first = false;
    }
    out += ')';
  };
  const auto& pr = t.params();
  switch (t.kind()) {
    case K::Id: out += "id"; args({&pr[0]}); break;
    case K::BOr: out += std::string("b_or_") + dir_suffix(t.dir()); args({&pr[0], &pr[1], &pr[2]}); break;
    case K::BAnd: out += std::string("b_and_") + dir_suffix(t.dir()); args({&pr[0], &pr[1], &pr[2]}); break;
    case K::COr: out += "c_or"; args({&pr[0], &pr[1]}); break;
    case K::CAnd: out += "c_and"; args({&pr[0], &pr[1]}); break;
    case K::DOr: out += std::string("d_or_") + dir_suffix(t.dir()); args({&pr[0]}); break;
    case K::SOr: out += std::string("s_or_") + dir_suffix(t.dir()); args({&pr[0]}); break;
    case K::DAnd: out += std::string("d_and_") + dir_suffix(t.dir()); args({&pr[0]}); break;
    case K::SAnd: out += std::string("s_and_") + dir_suffix(t.dir()); args({&pr[0]}); break;
    case K::WOr: out += std::string("w_or_") + dir_suffix(t.dir()); break;
    case K::WAnd: out += std::string("w_and_") + dir_suffix(t.dir()); break;
    case K::Kappa: out += "kappa"; break;
    case K::Ck: out += "ck"; args({&pr[0], &pr[1], &pr[2], &pr[3]}); break;
    case K::Comp:
      print_term(t.fst(), 0, false, out);
      out += " . ";
      print_term(t.snd(), 0, true, out);
      break;
    case K::OrC:
      print_term(t.fst(), 1, false, out);
      out += " | ";
      print_term(t.snd(), 1, true, out);
      break;
    case K::AndC:
      print_term(t.fst(), 2, false, out);
      out += " & ";
      print_term(t.snd(), 2, true, out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace

std::string MTerm::str() const {
  std::string out;
  print_term(*this, 0, false, out);
  return out;
}

namespace {

void need(const std::vector<Formula>& p, size_t n, const std::string& id) {
  if (p.size() != n)
    throw BadParams("axiom " + id + " expects " + std::to_string(n) + " formulas, got " +
                    std::to_string(p.size()));
}

}  // namespace

std::pair<MTerm, MTerm> axiom_legs(const std::string& id, const std::vector<Formula>& p) {
  using M = MTerm;
  Formula bt = Formula::bot(), tp = Formula::top();
  if (id == "1") {
    need(p, 6, id);
    const Formula &A = p[0], &B = p[1], &C = p[2], &D = p[3], &E = p[4], &F = p[5];
    MTerm left = M::comp(
        M::b_and(Dir::Fw, Formula::disj(A, D), Formula::disj(B, E), Formula::disj(C, F)),
        M::comp(M::and_c(M::id(Formula::disj(A, D)), M::ck(B, C, E, F)),
                M::ck(A, Formula::conj(B, C), D, Formula::conj(E, F))));
    MTerm right = M::comp(
        M::and_c(M::ck(A, B, D, E), M::id(Formula::disj(C, F))),
        M::comp(M::ck(Formula::conj(A, B), C, Formula::conj(D, E), F),
                M::or_c(M::b_and(Dir::Fw, A, B, C), M::b_and(Dir::Fw, D, E, F))));
    return {left, right};
  }
  if (id == "2") {
    need(p, 6, id);
    const Formula &A = p[0], &B = p[1], &C = p[2], &D = p[3], &E = p[4], &F = p[5];
    MTerm left = M::comp(
        M::and_c(M::b_or(Dir::Fw, A, B, C), M::b_or(Dir::Fw, D, E, F)),
        M::comp(M::ck(A, Formula::disj(B, C), D, Formula::disj(E, F)),
                M::or_c(M::id(Formula::conj(A, D)), M::ck(B, E, C, F))));
    MTerm right = M::comp(
        M::ck(Formula::disj(A, B), Formula::disj(D, E), C, F),
        M::comp(M::or_c(M::ck(A, D, B, E), M::id(Formula::conj(C, F))),
                M::b_or(Dir::Fw, Formula::conj(A, D), Formula::conj(B, E), Formula::conj(C, F))));
    return {left, right};
  }
  if (id == "3") {
    need(p, 4, id);
    const Formula &A = p[0], &B = p[1], &C = p[2], &D = p[3];
    MTerm left = M::comp(M::c_and(Formula::disj(A, C), Formula::disj(B, D)), M::ck(A, B, C, D));
    MTerm right = M::comp(M::ck(B, A, D, C), M::or_c(M::c_and(A, B), M::c_and(C, D)));
    return {left, right};
  }
  if (id == "4") {
    need(p, 4, id);
    const Formula &A = p[0], &B = p[1], &C = p[2], &D = p[3];
    MTerm left = M::comp(M::and_c(M::c_or(A, B), M::c_or(C, D)), M::ck(A, C, B, D));
    MTerm right = M::comp(M::ck(B, D, A, C), M::c_or(Formula::conj(A, C), Formula::conj(B, D)));
    return {left, right};
  }
  if (id == "5") {
    need(p, 2, id);
    const Formula &A = p[0], &B = p[1];
    MTerm left = M::ck(A, B, bt, bt);
    MTerm right =
        M::comp(M::and_c(M::d_or(Dir::Bw, A), M::d_or(Dir::Bw, B)),
                M::comp(M::d_or(Dir::Fw, Formula::conj(A, B)),
                        M::or_c(M::id(Formula::conj(A, B)), M::w_and(Dir::Fw))));
    return {left, right};
  }
  if (id == "6") {
    need(p, 2, id);
    const Formula &A = p[0], &B = p[1];
    MTerm left = M::ck(A, tp, B, tp);
    MTerm right = M::comp(M::and_c(M::id(Formula::disj(A, B)), M::w_or(Dir::Bw)),
                          M::comp(M::d_and(Dir::Bw, Formula::disj(A, B)),
                                  M::or_c(M::d_and(Dir::Fw, A), M::d_and(Dir::Fw, B))));
    return {left, right};
  }
  if (id == "7") {
    need(p, 0, id);
    MTerm left = M::b_or(Dir::Fw, tp, tp, tp);
    MTerm right = M::comp(M::or_c(M::w_or(Dir::Bw), M::id(tp)),
                          M::or_c(M::id(tp), M::w_or(Dir::Fw)));
    return {left, right};
  }
  if (id == "8") {
    need(p, 0, id);
    MTerm left = M::b_and(Dir::Fw, bt, bt, bt);
    MTerm right = M::comp(M::and_c(M::w_and(Dir::Bw), M::id(bt)),
                          M::and_c(M::id(bt), M::w_and(Dir::Fw)));
    return {left, right};
  }
  if (id == "9") {
    need(p, 0, id);
    MTerm left = M::comp(M::w_or(Dir::Fw), M::or_c(M::id(tp), M::kappa()));
    MTerm right = M::d_or(Dir::Fw, tp);
    return {left, right};
  }
  if (id == "10") {
    need(p, 0, id);
    MTerm left = M::and_c(M::id(bt), M::kappa());
    MTerm right = M::comp(M::d_and(Dir::Bw, bt), M::w_and(Dir::Fw));
    return {left, right};
  }
  if (id == "11") {
    need(p, 0, id);
    MTerm left = M::ck(tp, bt, bt, tp);
    MTerm right =
        M::comp(M::and_c(M::d_or(Dir::Bw, tp), M::s_or(Dir::Bw, tp)),
                M::comp(M::d_and(Dir::Bw, tp),
                        M::comp(M::kappa(),
                                M::comp(M::d_or(Dir::Fw, bt),
                                        M::or_c(M::s_and(Dir::Fw, bt), M::d_and(Dir::Fw, bt))))));
    return {left, right};
  }
  if (id == "12") {
    need(p, 0, id);
    return {M::c_or(tp, tp), M::comp(M::w_or(Dir::Bw), M::w_or(Dir::Fw))};
  }
  if (id == "13") {
    need(p, 0, id);
    return {M::c_and(bt, bt), M::comp(M::w_and(Dir::Bw), M::w_and(Dir::Fw))};
  }
  if (id == "natk1") {  // kappa | 1_bot
    need(p, 0, id);
    return {M::or_c(M::kappa(), M::id(bt)),
            M::comp(M::d_or(Dir::Bw, tp), M::comp(M::kappa(), M::d_or(Dir::Fw, bt)))};
  }
  if (id == "natk2") {  // 1_bot | kappa
    need(p, 0, id);
    return {M::or_c(M::id(bt), M::kappa()),
            M::comp(M::s_or(Dir::Bw, tp), M::comp(M::kappa(), M::s_or(Dir::Fw, bt)))};
  }
  if (id == "natk3") {  // kappa & 1_top
    need(p, 0, id);
    return {M::and_c(M::kappa(), M::id(tp)),
            M::comp(M::d_and(Dir::Bw, tp), M::comp(M::kappa(), M::d_and(Dir::Fw, bt)))};
  }
  if (id == "natk4") {  // 1_top & kappa
    need(p, 0, id);
    return {M::and_c(M::id(tp), M::kappa()),
            M::comp(M::s_and(Dir::Bw, tp), M::comp(M::kappa(), M::s_and(Dir::Fw, bt)))};
  }
  if (id == "natck") {
    // Naturality of ck against the unit deletions A\/bot -> A in all four
    // coordinates.
    need(p, 4, id);
    const Formula &A = p[0], &B = p[1], &C = p[2], &D = p[3];
    auto del = [&](const Formula& x) { return M::d_or(Dir::Fw, x); };
    auto orb = [&](const Formula& x) { return Formula::disj(x, bt); };
    MTerm left = M::comp(M::ck(A, B, C, D),
                         M::or_c(M::and_c(del(A), del(B)), M::and_c(del(C), del(D))));
    MTerm right = M::comp(M::and_c(M::or_c(del(A), del(C)), M::or_c(del(B), del(D))),
                          M::ck(orb(A), orb(B), orb(C), orb(D)));
    return {left, right};
  }
  throw BadParams("unknown axiom id: " + id);
}

std::vector<std::string> axiom_ids() {
  return {"1", "2", "3", "4", "5", "6", "7", "8", "9", "10", "11", "12", "13",
          "natk1", "natk2", "natk3", "natk4", "natck"};
}

}  // namespace smi
