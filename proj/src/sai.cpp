#include "smi/sai.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>

namespace smi {

SaiTerm SaiTerm::id(FormMultiset x) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Id;
  n->obj = std::move(x);
  return SaiTerm(std::move(n));
}

SaiTerm SaiTerm::ck(CkIndex ix) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Ck;
  n->index = std::move(ix);
  return SaiTerm(std::move(n));
}

SaiTerm SaiTerm::comp(SaiTerm g, SaiTerm f) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Comp;
  n->sub = {std::move(g), std::move(f)};
  return SaiTerm(std::move(n));
}

SaiTerm SaiTerm::or_c(SaiTerm f, SaiTerm g) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::OrC;
  n->sub = {std::move(f), std::move(g)};
  return SaiTerm(std::move(n));
}

SaiTerm SaiTerm::and_c(SaiTerm f, SaiTerm g) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::AndC;
  n->sub = {std::move(f), std::move(g)};
  return SaiTerm(std::move(n));
}

const FormMultiset& SaiTerm::obj() const {
  if (kind() != Kind::Id) throw std::logic_error("obj() on non-identity");
  return *node_->obj;
}

const CkIndex& SaiTerm::index() const {
  if (kind() != Kind::Ck) throw std::logic_error("index() on non-ck");
  return *node_->index;
}

bool SaiTerm::operator==(const SaiTerm& o) const {
  if (node_ == o.node_) return true;
  if (kind() != o.kind()) return false;
  switch (kind()) {
    case Kind::Id: return obj() == o.obj();
    case Kind::Ck: return index() == o.index();
    default:
      return fst() == o.fst() && snd() == o.snd();
  }
}

namespace {

int sprec(SaiTerm::Kind k) {
  switch (k) {
    case SaiTerm::Kind::Comp: return 0;
    case SaiTerm::Kind::OrC: return 1;
    case SaiTerm::Kind::AndC: return 2;
    default: return 3;
  }
}

void print_sai(const SaiTerm& t, int min_prec, bool right_child, std::string& out) {
  int p = sprec(t.kind());
  bool parens = p < min_prec || (right_child && p == min_prec && p < 3);
  if (parens) out += '(';
  switch (t.kind()) {
    case SaiTerm::Kind::Id: out += "id(" + t.obj().str() + ")"; break;
    case SaiTerm::Kind::Ck: out += t.index().str(); break;
    case SaiTerm::Kind::Comp:
      print_sai(t.fst(), 0, false, out);
      out += " . ";
      print_sai(t.snd(), 0, true, out);
      break;
    case SaiTerm::Kind::OrC:
      print_sai(t.fst(), 1, false, out);
      out += " | ";
      print_sai(t.snd(), 1, true, out);
      break;
    case SaiTerm::Kind::AndC:
      print_sai(t.fst(), 2, false, out);
      out += " & ";
      print_sai(t.snd(), 2, true, out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace

std::string SaiTerm::str() const {
  std::string out;
  print_sai(*this, 0, false, out);
  return out;
}

SaiEnds sai_ends(const SaiTerm& t) {
  switch (t.kind()) {
    case SaiTerm::Kind::Id: return {t.obj(), t.obj()};
    case SaiTerm::Kind::Ck: return {t.index().source(), t.index().target()};
    case SaiTerm::Kind::Comp: {
      SaiEnds g = sai_ends(t.fst());
      SaiEnds f = sai_ends(t.snd());
      if (f.tgt != g.src)
        throw TypeError("composition mismatch: " + f.tgt.str() + " vs " + g.src.str());
      return {f.src, g.tgt};
    }
    case SaiTerm::Kind::OrC: {
      SaiEnds f = sai_ends(t.fst());
      SaiEnds g = sai_ends(t.snd());
      return {FormMultiset::or2(f.src, g.src), FormMultiset::or2(f.tgt, g.tgt)};
    }
    case SaiTerm::Kind::AndC: {
      SaiEnds f = sai_ends(t.fst());
      SaiEnds g = sai_ends(t.snd());
      return {FormMultiset::and2(f.src, g.src), FormMultiset::and2(f.tgt, g.tgt)};
    }
  }
  throw std::logic_error("bad kind");
}

size_t ck_count(const SaiTerm& t) {
  switch (t.kind()) {
    case SaiTerm::Kind::Ck: return 1;
    case SaiTerm::Kind::Comp:
    case SaiTerm::Kind::OrC:
    case SaiTerm::Kind::AndC: return ck_count(t.fst()) + ck_count(t.snd());
    default: return 0;
  }
}

std::vector<SaiTerm> develop(const SaiTerm& t) {
  using K = SaiTerm::Kind;
  switch (t.kind()) {
    case K::Id: return {};
    case K::Comp: {
      std::vector<SaiTerm> out = develop(t.snd());
      std::vector<SaiTerm> gs = develop(t.fst());
      out.insert(out.end(), gs.begin(), gs.end());
      return out;
    }
    case K::OrC:
    case K::AndC: {
      bool is_or = t.kind() == K::OrC;
      SaiEnds ef = sai_ends(t.fst());
      SaiEnds eg = sai_ends(t.snd());
      std::vector<SaiTerm> out;
      for (const SaiTerm& f : develop(t.fst()))
        out.push_back(is_or ? SaiTerm::or_c(f, SaiTerm::id(eg.src))
                            : SaiTerm::and_c(f, SaiTerm::id(eg.src)));
      for (const SaiTerm& g : develop(t.snd()))
        out.push_back(is_or ? SaiTerm::or_c(SaiTerm::id(ef.tgt), g)
                            : SaiTerm::and_c(SaiTerm::id(ef.tgt), g));
      return out;
    }
    default: return {t};
  }
}

std::vector<CkIndex> ck_indices(const SaiTerm& t) {
  std::vector<CkIndex> out;
  switch (t.kind()) {
    case SaiTerm::Kind::Ck: out.push_back(t.index()); break;
    case SaiTerm::Kind::Comp: {
      // left-to-right in application order: snd fires first
      out = ck_indices(t.snd());
      auto rest = ck_indices(t.fst());
      out.insert(out.end(), rest.begin(), rest.end());
      break;
    }
    case SaiTerm::Kind::OrC:
    case SaiTerm::Kind::AndC: {
      out = ck_indices(t.fst());
      auto rest = ck_indices(t.snd());
      out.insert(out.end(), rest.begin(), rest.end());
      break;
    }
    default: break;
  }
  return out;
}

SaiTerm sai_comp(const SaiTerm& g, const SaiTerm& f) {
  if (f.is_id()) return g;
  if (g.is_id()) return f;
  return SaiTerm::comp(g, f);
}

namespace {

SaiTerm sai_or(const SaiTerm& f, const SaiTerm& g) {
  if (f.is_id() && g.is_id()) return SaiTerm::id(FormMultiset::or2(f.obj(), g.obj()));
  return SaiTerm::or_c(f, g);
}

SaiTerm sai_and(const SaiTerm& f, const SaiTerm& g) {
  if (f.is_id() && g.is_id()) return SaiTerm::id(FormMultiset::and2(f.obj(), g.obj()));
  return SaiTerm::and_c(f, g);
}

bool subset(const LetterSet& a, const LetterSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::optional<SaiTerm> canon_rec(const FormMultiset& x, const FormMultiset& y) {
  if (letter_set(x) != letter_set(y)) return std::nullopt;
  if (x == y) return SaiTerm::id(x);
  if (x.is_letter()) return std::nullopt;  // y differs but shares the single letter

  // Conjunction on the left splits componentwise.
  if (x.is_and()) {
    std::vector<FormMultiset> groups_src = x.children();
    std::vector<std::vector<FormMultiset>> groups(groups_src.size());
    std::vector<LetterSet> lsets;
    lsets.reserve(groups_src.size());
    for (const FormMultiset& c : groups_src) lsets.push_back(letter_set(c));
    for (const FormMultiset& pc : prime_conjuncts(y)) {
      LetterSet l = letter_set(pc);
      bool placed = false;
      for (size_t i = 0; i < groups_src.size(); ++i) {
        if (subset(l, lsets[i])) {
          groups[i].push_back(pc);
          placed = true;
          break;
        }
      }
      if (!placed) return std::nullopt;  // a conjunct of y mixes two components
    }
    std::vector<SaiTerm> parts;
    for (size_t i = 0; i < groups_src.size(); ++i) {
      if (groups[i].empty()) return std::nullopt;
      auto t = canon_rec(groups_src[i], FormMultiset::and_(groups[i]));
      if (!t) return std::nullopt;
      parts.push_back(*t);
    }
    SaiTerm acc = parts[0];
    for (size_t i = 1; i < parts.size(); ++i) acc = sai_and(acc, parts[i]);
    return acc;
  }

  // Disjunction on the right splits componentwise (dual).
  if (y.is_or()) {
    std::vector<FormMultiset> groups_tgt = y.children();
    std::vector<std::vector<FormMultiset>> groups(groups_tgt.size());
    std::vector<LetterSet> lsets;
    lsets.reserve(groups_tgt.size());
    for (const FormMultiset& c : groups_tgt) lsets.push_back(letter_set(c));
    for (const FormMultiset& pd : prime_disjuncts(x)) {
      LetterSet l = letter_set(pd);
      bool placed = false;
      for (size_t i = 0; i < groups_tgt.size(); ++i) {
        if (subset(l, lsets[i])) {
          groups[i].push_back(pd);
          placed = true;
          break;
        }
      }
      if (!placed) return std::nullopt;
    }
    std::vector<SaiTerm> parts;
    for (size_t i = 0; i < groups_tgt.size(); ++i) {
      if (groups[i].empty()) return std::nullopt;
      auto t = canon_rec(FormMultiset::or_(groups[i]), groups_tgt[i]);
      if (!t) return std::nullopt;
      parts.push_back(*t);
    }
    SaiTerm acc = parts[0];
    for (size_t i = 1; i < parts.size(); ++i) acc = sai_or(acc, parts[i]);
    return acc;
  }

  // Disjunction into conjunction: the intermutation step.
  if (x.is_or() && y.is_and()) {
    const FormMultiset x1 = x.children()[0];
    std::vector<FormMultiset> rest(x.children().begin() + 1, x.children().end());
    const FormMultiset x2 = FormMultiset::or_(rest);
    const FormMultiset y1 = y.children()[0];
    std::vector<FormMultiset> yrest(y.children().begin() + 1, y.children().end());
    const FormMultiset y2 = FormMultiset::and_(yrest);
    LetterSet l1 = letter_set(x1), l2 = letter_set(x2);

    auto s = delete_letters_opt(y1, l2);
    auto t = delete_letters_opt(y2, l2);
    auto u = delete_letters_opt(y1, l1);
    auto v = delete_letters_opt(y2, l1);
    if (!s || !t || !u || !v) return std::nullopt;

    auto v1 = canon_rec(x1, FormMultiset::and2(*s, *t));
    if (!v1) return std::nullopt;
    auto v2 = canon_rec(x2, FormMultiset::and2(*u, *v));
    if (!v2) return std::nullopt;
    auto u1 = canon_rec(FormMultiset::or2(*s, *u), y1);
    if (!u1) return std::nullopt;
    auto u2 = canon_rec(FormMultiset::or2(*t, *v), y2);
    if (!u2) return std::nullopt;

    SaiTerm mid = SaiTerm::ck(CkIndex(*s, *t, *u, *v));
    return sai_comp(sai_and(*u1, *u2), sai_comp(mid, sai_or(*v1, *v2)));
  }

  return std::nullopt;
}

}  // namespace

std::optional<SaiTerm> canonical_sai_arrow(const FormMultiset& x, const FormMultiset& y) {
  if (!is_form_set(x) || !is_form_set(y)) throw NotDiversified();
  return canon_rec(x, y);
}

namespace {

void collect_cks(const SaiTerm& t, std::vector<CkIndex>& out) {
  switch (t.kind()) {
    case SaiTerm::Kind::Ck: out.push_back(t.index()); break;
    case SaiTerm::Kind::Comp:
    case SaiTerm::Kind::OrC:
    case SaiTerm::Kind::AndC:
      collect_cks(t.fst(), out);
      collect_cks(t.snd(), out);
      break;
    default: break;
  }
}

}  // namespace

Splitting is_splitting_term(const SaiTerm& u, const FormMultiset& x1, const FormMultiset& x2) {
  SaiEnds e = sai_ends(u);
  if (e.src != FormMultiset::or2(x1, x2)) throw SourceMismatch();
  LetterSet l1 = letter_set(x1), l2 = letter_set(x2);
  std::vector<CkIndex> cks;
  collect_cks(u, cks);
  size_t split = 0;
  for (const CkIndex& ix : cks) {
    LetterSet left = letter_set(FormMultiset::and2(ix.s(), ix.t()));
    LetterSet right = letter_set(FormMultiset::and2(ix.u(), ix.v()));
    bool s = (subset(left, l1) && subset(right, l2)) || (subset(left, l2) && subset(right, l1));
    if (s) ++split;
  }
  if (split == cks.size()) return Splitting::Splitting;  // vacuous counts as splitting
  if (split == 0) return Splitting::Nonsplitting;
  return Splitting::Mixed;
}

namespace {

// Deletion condition on an object: every subformset U /\ V has its sides in
// P simultaneously.  For an and-bag this means either all children or none
// of them have their letters inside P.
bool deletion_condition(const FormMultiset& x, const LetterSet& p) {
  if (x.is_and()) {
    size_t in = 0;
    for (const FormMultiset& c : x.children())
      if (subset(letter_set(c), p)) ++in;
    if (in != 0 && in != x.children().size()) return false;
  }
  for (const FormMultiset& c : x.children())
    if (!deletion_condition(c, p)) return false;
  return true;
}

}  // namespace

SaiTerm delete_letters_term(const SaiTerm& u, const LetterSet& p) {
  SaiEnds e = sai_ends(u);
  if (subset(letter_set(e.src), p))
    throw PreconditionViolated("deletion would erase the whole source");
  if (!deletion_condition(e.src, p))
    throw PreconditionViolated("conjunction sides are split by the deletion set");
  switch (u.kind()) {
    case SaiTerm::Kind::Id: return SaiTerm::id(delete_letters(u.obj(), p));
    case SaiTerm::Kind::Ck: {
      const CkIndex& ix = u.index();
      LetterSet left = letter_set(FormMultiset::and2(ix.s(), ix.t()));
      LetterSet right = letter_set(FormMultiset::and2(ix.u(), ix.v()));
      if (subset(left, p) || subset(right, p))
        return SaiTerm::id(delete_letters(e.src, p));
      return SaiTerm::ck(CkIndex(delete_letters(ix.s(), p), delete_letters(ix.t(), p),
                                 delete_letters(ix.u(), p), delete_letters(ix.v(), p)));
    }
    case SaiTerm::Kind::Comp:
      return sai_comp(delete_letters_term(u.fst(), p), delete_letters_term(u.snd(), p));
    case SaiTerm::Kind::OrC:
    case SaiTerm::Kind::AndC: {
      SaiEnds ef = sai_ends(u.fst());
      SaiEnds eg = sai_ends(u.snd());
      bool drop_f = subset(letter_set(ef.src), p);
      bool drop_g = subset(letter_set(eg.src), p);
      if (drop_f && drop_g) throw PreconditionViolated("both components erased");
      if (drop_f) return delete_letters_term(u.snd(), p);
      if (drop_g) return delete_letters_term(u.fst(), p);
      SaiTerm f = delete_letters_term(u.fst(), p);
      SaiTerm g = delete_letters_term(u.snd(), p);
      return u.kind() == SaiTerm::Kind::OrC ? SaiTerm::or_c(f, g) : SaiTerm::and_c(f, g);
    }
  }
  throw std::logic_error("bad kind");
}

namespace {

// Nonempty bipartitions (as index masks) of 0..n-1 with the first element
// pinned to the first part, so each unordered split is produced once.
std::vector<uint32_t> bipartition_masks(size_t n) {
  std::vector<uint32_t> out;
  uint32_t full = (1u << n) - 1;
  for (uint32_t m = 1; m <= full; ++m) {
    if (!(m & 1u)) continue;
    if (m == full) continue;
    out.push_back(m);
  }
  return out;
}

FormMultiset gather(const std::vector<FormMultiset>& cs, uint32_t mask, bool complement,
                    bool as_and) {
  std::vector<FormMultiset> part;
  for (size_t i = 0; i < cs.size(); ++i) {
    bool in = (mask >> i) & 1u;
    if (in != complement) part.push_back(cs[i]);
  }
  if (part.size() == 1) return part[0];
  return as_and ? FormMultiset::and_(part) : FormMultiset::or_(part);
}

void heads_here(const FormMultiset& x,
                const std::function<SaiTerm(SaiTerm)>& wrap,
                const std::function<FormMultiset(FormMultiset)>& replace,
                std::vector<std::pair<SaiTerm, FormMultiset>>& out) {
  if (x.is_or()) {
    const auto& cs = x.children();
    for (size_t i = 0; i < cs.size(); ++i) {
      if (!cs[i].is_and()) continue;
      for (size_t j = i + 1; j < cs.size(); ++j) {
        if (!cs[j].is_and()) continue;
        // choose the (S,T) split of child i and the (U,V) split of child j
        const auto& ci = cs[i].children();
        const auto& cj = cs[j].children();
        for (uint32_t mi : bipartition_masks(ci.size())) {
          FormMultiset s = gather(ci, mi, false, true);
          FormMultiset t = gather(ci, mi, true, true);
          for (uint32_t mj : bipartition_masks(cj.size())) {
            // both orders of the second split pair differently with (s,t)
            for (int flip = 0; flip < 2; ++flip) {
              FormMultiset u = gather(cj, mj, flip == 1, true);
              FormMultiset v = gather(cj, mj, flip == 0, true);
              CkIndex ix(s, t, u, v);
              SaiTerm head = SaiTerm::ck(ix);
              std::vector<FormMultiset> rest;
              for (size_t k = 0; k < cs.size(); ++k)
                if (k != i && k != j) rest.push_back(cs[k]);
              SaiTerm in_ctx = head;
              FormMultiset new_here = ix.target();
              if (!rest.empty()) {
                FormMultiset r = rest.size() == 1 ? rest[0] : FormMultiset::or_(rest);
                in_ctx = SaiTerm::or_c(head, SaiTerm::id(r));
                new_here = FormMultiset::or2(new_here, r);
              }
              out.emplace_back(wrap(in_ctx), replace(new_here));
            }
          }
        }
      }
    }
  }
  // recurse into children
  if (x.is_or() || x.is_and()) {
    const auto& cs = x.children();
    for (size_t i = 0; i < cs.size(); ++i) {
      std::vector<FormMultiset> others;
      for (size_t k = 0; k < cs.size(); ++k)
        if (k != i) others.push_back(cs[k]);
      FormMultiset rest = others.size() == 1 ? others[0]
                          : x.is_or() ? FormMultiset::or_(others)
                                      : FormMultiset::and_(others);
      bool is_or = x.is_or();
      auto wrap2 = [&, is_or, rest, wrap](SaiTerm t) {
        SaiTerm combined = is_or ? SaiTerm::or_c(t, SaiTerm::id(rest))
                                 : SaiTerm::and_c(t, SaiTerm::id(rest));
        return wrap(combined);
      };
      auto replace2 = [&, is_or, rest, replace](FormMultiset f) {
        FormMultiset combined =
            is_or ? FormMultiset::or2(f, rest) : FormMultiset::and2(f, rest);
        return replace(combined);
      };
      heads_here(cs[i], wrap2, replace2, out);
    }
  }
}

}  // namespace

std::vector<std::pair<SaiTerm, FormMultiset>> enumerate_single_heads(const FormMultiset& x) {
  std::vector<std::pair<SaiTerm, FormMultiset>> raw;
  heads_here(
      x, [](SaiTerm t) { return t; }, [](FormMultiset f) { return f; }, raw);
  // dedupe by (term, target)
  std::vector<std::pair<SaiTerm, FormMultiset>> out;
  for (auto& e : raw) {
    bool dup = false;
    for (auto& o : out)
      if (o.first == e.first && o.second == e.second) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(std::move(e));
  }
  return out;
}

ReachReport reachability_oracle(const FormMultiset& x, const FormMultiset& y, size_t node_limit) {
  // Explore the graph reachable from x; the single-head relation strictly
  // reduces a finite measure, so the reachable set is a finite dag.
  std::map<std::string, size_t> index;
  std::vector<FormMultiset> objs;
  std::vector<std::vector<size_t>> succs;
  auto key = [](const FormMultiset& f) { return f.str(); };
  auto intern = [&](const FormMultiset& f) {
    auto it = index.find(key(f));
    if (it != index.end()) return it->second;
    size_t id = objs.size();
    index.emplace(key(f), id);
    objs.push_back(f);
    succs.emplace_back();
    return id;
  };
  size_t start = intern(x);
  std::queue<size_t> work;
  work.push(start);
  std::vector<bool> expanded;
  while (!work.empty()) {
    size_t cur = work.front();
    work.pop();
    if (cur < expanded.size() && expanded[cur]) continue;
    if (expanded.size() <= cur) expanded.resize(cur + 1, false);
    expanded[cur] = true;
    for (auto& [term, tgt] : enumerate_single_heads(objs[cur])) {
      (void)term;
      size_t before = objs.size();
      size_t id = intern(tgt);
      if (objs.size() > node_limit) throw LimitExceeded();
      succs[cur].push_back(id);
      if (id >= before) work.push(id);
    }
  }
  ReachReport rep;
  auto yit = index.find(key(y));
  if (yit == index.end()) return rep;
  size_t goal = yit->second;
  // Path-length sets via memoized dfs.  The graph is acyclic: every rewrite
  // strictly increases the number of letter pairs whose join is a
  // conjunction.  A visiting mark guards the invariant anyway.
  std::vector<char> state(objs.size(), 0);  // 0 untouched, 1 visiting, 2 done
  std::vector<std::set<size_t>> lengths(objs.size());
  auto dfs = [&](auto&& self, size_t v) -> void {
    if (state[v] == 2) return;
    if (state[v] == 1) throw std::logic_error("cycle in rewrite graph");
    state[v] = 1;
    if (v == goal) lengths[v].insert(0);
    for (size_t w : succs[v]) {
      self(self, w);
      for (size_t l : lengths[w]) lengths[v].insert(l + 1);
    }
    state[v] = 2;
  };
  dfs(dfs, start);
  rep.all_path_lengths = lengths[start];
  rep.exists = !rep.all_path_lengths.empty();
  return rep;
}

}  // namespace smi
