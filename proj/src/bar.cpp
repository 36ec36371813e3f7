#include "smi/bar.hpp"

#include <algorithm>
#include <set>

namespace smi {

size_t Shape::cells() const {
  size_t total = 1;
  for (int k : sizes) total *= static_cast<size_t>(k);
  return total;
}

ProductMap compose_product(const ProductMap& g, const ProductMap& f) {
  if (g.components.size() != f.components.size())
    throw NotComposable("product maps have different arities");
  ProductMap out;
  for (size_t i = 0; i < f.components.size(); ++i)
    out.components.push_back(compose_simplex(g.components[i], f.components[i]));
  return out;
}

std::vector<StrictObject> fiber_tensor_eval(const PartialMonotoneMap& h,
                                            const std::vector<StrictObject>& inputs,
                                            FiberOp op) {
  if (inputs.size() != static_cast<size_t>(h.src))
    throw ShapeMismatch("fiber eval arity mismatch");
  std::vector<StrictObject> out;
  out.reserve(h.dst);
  for (int j = 0; j < h.dst; ++j) {
    std::vector<StrictObject> fiber;
    for (int x = 0; x < h.src; ++x)
      if (h.image[x] == j) fiber.push_back(inputs[x]);
    out.push_back(op == FiberOp::Or ? StrictObject::or_(fiber) : StrictObject::and_(fiber));
  }
  return out;
}

std::vector<StTerm> fiber_tensor_eval_terms(const PartialMonotoneMap& h,
                                            const std::vector<StTerm>& inputs, FiberOp op) {
  if (inputs.size() != static_cast<size_t>(h.src))
    throw ShapeMismatch("fiber eval arity mismatch");
  std::vector<StTerm> out;
  out.reserve(h.dst);
  for (int j = 0; j < h.dst; ++j) {
    std::vector<StTerm> fiber;
    for (int x = 0; x < h.src; ++x)
      if (h.image[x] == j) fiber.push_back(inputs[x]);
    out.push_back(op == FiberOp::Or ? st_or_all(fiber) : st_and_all(fiber));
  }
  return out;
}

namespace {

struct Strides {
  size_t before = 1;  // product of sizes left of the coordinate
  size_t at = 1;      // the coordinate's size
  size_t after = 1;   // product of sizes right of the coordinate
};

Strides strides_of(const Shape& s, int coord) {
  Strides st;
  for (int i = 0; i < s.coords(); ++i) {
    if (i < coord - 1) st.before *= s.sizes[i];
    if (i == coord - 1) st.at = s.sizes[i];
    if (i > coord - 1) st.after *= s.sizes[i];
  }
  return st;
}

template <typename Cell, typename Eval>
std::vector<Cell> act_axis(const Shape& shape, int coord, const SimplexMap& fi,
                           const std::vector<Cell>& cells, Eval eval) {
  Strides st = strides_of(shape, coord);
  PartialMonotoneMap h = hj(fi);
  std::vector<Cell> out;
  out.reserve(st.before * h.dst * st.after);
  // Fold each fiber of the axis, then lay the results out lexicographically.
  std::vector<std::vector<Cell>> lines(st.before * st.after);
  for (size_t b = 0; b < st.before; ++b)
    for (size_t a = 0; a < st.after; ++a) {
      std::vector<Cell> line;
      line.reserve(st.at);
      for (size_t x = 0; x < st.at; ++x)
        line.push_back(cells[(b * st.at + x) * st.after + a]);
      lines[b * st.after + a] = eval(h, line);
    }
  for (size_t b = 0; b < st.before; ++b)
    for (size_t x = 0; x < static_cast<size_t>(h.dst); ++x)
      for (size_t a = 0; a < st.after; ++a) out.push_back(lines[b * st.after + a][x]);
  return out;
}

FiberOp op_of(const Shape& s, int coord) { return coord <= s.n ? FiberOp::Or : FiberOp::And; }

Shape replace_size(const Shape& s, int coord, int k) {
  Shape out = s;
  out.sizes[coord - 1] = k;
  return out;
}

}  // namespace

TupleObject coord_action(int i, const SimplexMap& fi, const TupleObject& t) {
  if (i < 1 || i > t.shape.coords()) throw ShapeMismatch("coordinate out of range");
  if (fi.src != t.shape.sizes[i - 1])
    throw ShapeMismatch("coordinate map source " + std::to_string(fi.src) +
                        " does not match size " + std::to_string(t.shape.sizes[i - 1]));
  FiberOp op = op_of(t.shape, i);
  TupleObject out;
  out.shape = replace_size(t.shape, i, fi.dst);
  out.cells = act_axis(t.shape, i, fi, t.cells,
                       [&](const PartialMonotoneMap& h, const std::vector<StrictObject>& line) {
                         return fiber_tensor_eval(h, line, op);
                       });
  return out;
}

OmegaWitness coord_action_witness(int i, const SimplexMap& fi, const OmegaWitness& w) {
  FiberOp op = op_of(w.source.shape, i);
  OmegaWitness out;
  out.source = coord_action(i, fi, w.source);
  out.target = coord_action(i, fi, w.target);
  out.cells = act_axis(w.source.shape, i, fi, w.cells,
                       [&](const PartialMonotoneMap& h, const std::vector<StTerm>& line) {
                         return fiber_tensor_eval_terms(h, line, op);
                       });
  return out;
}

TupleObject bar_eval(const ProductMap& maps, const TupleObject& t) {
  if (maps.components.size() != static_cast<size_t>(t.shape.coords()))
    throw ShapeMismatch("product map arity does not match the shape");
  TupleObject cur = t;
  for (int i = 1; i <= t.shape.coords(); ++i)
    cur = coord_action(i, maps.components[i - 1], cur);
  return cur;
}

OmegaWitness bar_eval_witness(const ProductMap& maps, const OmegaWitness& w) {
  OmegaWitness cur = w;
  for (int i = 1; i <= w.source.shape.coords(); ++i)
    cur = coord_action_witness(i, maps.components[i - 1], cur);
  return cur;
}

TupleObject fresh_letters(const Shape& shape, const std::string& base) {
  TupleObject t;
  t.shape = shape;
  std::vector<int> idx(shape.coords(), 1);
  size_t total = shape.cells();
  for (size_t c = 0; c < total; ++c) {
    std::string name = base;
    for (int i : idx) name += "_" + std::to_string(i);
    t.cells.push_back(StrictObject::letter(name));
    for (int i = shape.coords() - 1; i >= 0; --i) {
      if (++idx[i] <= shape.sizes[i]) break;
      idx[i] = 1;
    }
  }
  return t;
}

namespace {

std::vector<int> unrank(const Shape& s, size_t c) {
  std::vector<int> idx(s.coords());
  for (int i = s.coords() - 1; i >= 0; --i) {
    idx[i] = static_cast<int>(c % s.sizes[i]) + 1;
    c /= s.sizes[i];
  }
  return idx;
}

size_t rank(const Shape& s, const std::vector<int>& idx) {
  size_t c = 0;
  for (int i = 0; i < s.coords(); ++i) c = c * s.sizes[i] + (idx[i] - 1);
  return c;
}

std::string idx_str(const std::vector<int>& idx) {
  std::string out = "(";
  for (size_t i = 0; i < idx.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(idx[i]);
  }
  return out + ")";
}

}  // namespace

CoherenceReport is_nm_coherent(const TupleObject& t) {
  const Shape& s = t.shape;
  size_t total = s.cells();
  // every cell pure and diversified or letterless, letters pairwise disjoint
  std::set<std::string> seen;
  for (size_t c = 0; c < total; ++c) {
    const StrictObject& a = t.cells[c];
    LetterBag bag = letters(a);
    if (!bag.empty()) {
      if (!purity(a).pure() || std::adjacent_find(bag.begin(), bag.end()) != bag.end())
        return {false, "cell " + idx_str(unrank(s, c)) + " is neither letterless nor pure and diversified"};
    }
    for (const std::string& l : bag) {
      if (!seen.insert(l).second)
        return {false, "letter " + l + " repeats across cells at " + idx_str(unrank(s, c))};
    }
  }
  auto nu_of = [&](size_t c) { return strict_nu(t.cells[c]); };
  // condition on conjunctive blocks: a top cell forces its whole
  // disjunctive block to be letterless
  for (size_t c = 0; c < total; ++c) {
    std::vector<int> idx = unrank(s, c);
    StrictObject r = nu_of(c);
    if (r.is_top()) {
      std::vector<int> j = idx;
      auto rec = [&](auto&& self, int coord) -> std::optional<std::string> {
        if (coord == s.n) {
          size_t cc = rank(s, j);
          StrictObject rr = nu_of(cc);
          if (!rr.is_top() && !rr.is_bot())
            return "top at " + idx_str(idx) + " with lettered " + idx_str(j);
          return std::nullopt;
        }
        for (j[coord] = 1; j[coord] <= s.sizes[coord]; ++j[coord])
          if (auto v = self(self, coord + 1)) return v;
        j[coord] = idx[coord];
        return std::nullopt;
      };
      if (auto v = rec(rec, 0)) return {false, *v};
    }
    if (r.is_bot()) {
      std::vector<int> j = idx;
      auto rec = [&](auto&& self, int coord) -> std::optional<std::string> {
        if (coord == s.coords()) {
          size_t cc = rank(s, j);
          StrictObject rr = nu_of(cc);
          if (!rr.is_top() && !rr.is_bot())
            return "bot at " + idx_str(idx) + " with lettered " + idx_str(j);
          return std::nullopt;
        }
        for (j[coord] = 1; j[coord] <= s.sizes[coord]; ++j[coord])
          if (auto v = self(self, coord + 1)) return v;
        j[coord] = idx[coord];
        return std::nullopt;
      };
      if (auto v = rec(rec, s.n)) return {false, *v};
    }
  }
  return {true, ""};
}

namespace {

OmegaWitness omega_between(const TupleObject& from, const TupleObject& to) {
  if (from.shape != to.shape) throw ShapeMismatch("witness endpoints have different shapes");
  OmegaWitness w;
  w.source = from;
  w.target = to;
  for (size_t c = 0; c < from.cells.size(); ++c) {
    CanonResult r = canonical_arrow(from.cells[c], to.cells[c]);
    if (r.status != CanonStatus::Some)
      throw CoherenceGuardFailed("no canonical arrow for cell " +
                                 idx_str(unrank(from.shape, c)) + ": " +
                                 from.cells[c].str() + " -> " + to.cells[c].str());
    w.cells.push_back(*r.term);
  }
  return w;
}

}  // namespace

OmegaWitness omega(const ProductMap& f, const ProductMap& g, const TupleObject& x) {
  TupleObject fx = bar_eval(f, x);
  TupleObject gfx = bar_eval(g, fx);
  TupleObject direct = bar_eval(compose_product(g, f), x);
  return omega_between(gfx, direct);
}

LaxReport lax_check(const ProductMap& f, const ProductMap& g, const ProductMap& h,
                    const TupleObject& x) {
  LaxReport rep;
  TupleObject fx = bar_eval(f, x);
  ProductMap hg = compose_product(h, g);
  ProductMap gf = compose_product(g, f);

  OmegaWitness w_gf = omega(f, g, x);              // g* f* x -> (g.f)* x
  OmegaWitness w_hg_at_fx = omega(g, h, fx);       // h* g* (f* x) -> (h.g)* (f* x)
  OmegaWitness w_hgf_left = omega(f, hg, x);       // (h.g)* f* x -> (h.g.f)* x
  OmegaWitness w_hgf_right = omega(gf, h, x);      // h* (g.f)* x -> (h.g.f)* x
  OmegaWitness h_of_wgf = bar_eval_witness(h, w_gf);

  rep.all_intermediates_coherent = true;
  const TupleObject* stages[] = {&x,
                                 &fx,
                                 &w_gf.source,
                                 &w_gf.target,
                                 &w_hg_at_fx.source,
                                 &w_hg_at_fx.target,
                                 &w_hgf_right.source,
                                 &w_hgf_left.target};
  for (const TupleObject* t : stages)
    if (!is_nm_coherent(*t).ok) rep.all_intermediates_coherent = false;

  bool all_equal = true;
  for (size_t c = 0; c < h_of_wgf.cells.size(); ++c) {
    StTerm left = st_comp(w_hgf_left.cells[c], w_hg_at_fx.cells[c]);
    StTerm right = st_comp(w_hgf_right.cells[c], h_of_wgf.cells[c]);
    EqualReport eq = equal_arrows(left, right);
    rep.cells.push_back({c, eq.status});
    if (eq.status != EqualStatus::EqualByCoherence) {
      all_equal = false;
      if (rep.detail.empty())
        rep.detail = "cell " + idx_str(unrank(h_of_wgf.source.shape, c)) + ": " + eq.reason;
    }
  }
  rep.commutes = all_equal && rep.all_intermediates_coherent;
  return rep;
}

}  // namespace smi
