#ifndef SMI_BAR_HPP
#define SMI_BAR_HPP

#include <optional>
#include <string>
#include <vector>

#include "smi/decision.hpp"
#include "smi/simplicial.hpp"
#include "smi/starrow.hpp"

namespace smi {

struct ShapeMismatch : std::runtime_error {
  explicit ShapeMismatch(const std::string& w) : std::runtime_error(w) {}
};
struct NotComposable : std::runtime_error {
  explicit NotComposable(const std::string& w) : std::runtime_error(w) {}
};
struct CoherenceGuardFailed : std::runtime_error {
  explicit CoherenceGuardFailed(const std::string& w) : std::runtime_error(w) {}
};

// The first n coordinates carry the disjunctive monoid structure, the last
// m the conjunctive one.
struct Shape {
  int n = 0;
  int m = 0;
  std::vector<int> sizes;  // length n + m

  int coords() const { return n + m; }
  size_t cells() const;
  bool operator==(const Shape& o) const = default;
};

// Lexicographically indexed tuple of strict objects (1-based multi-indices,
// last coordinate fastest).
struct TupleObject {
  Shape shape;
  std::vector<StrictObject> cells;
};

struct ProductMap {
  std::vector<SimplexMap> components;  // length n + m
};

ProductMap compose_product(const ProductMap& g, const ProductMap& f);  // g after f

// Cellwise arrow between two tuples of the same shape.
struct OmegaWitness {
  TupleObject source;
  TupleObject target;
  std::vector<StTerm> cells;
};

// Tensor along the fibers of a partial map: output j folds the inputs in
// its fiber left to right; the empty fiber yields the unit of op.
enum class FiberOp { Or, And };
std::vector<StrictObject> fiber_tensor_eval(const PartialMonotoneMap& h,
                                            const std::vector<StrictObject>& inputs, FiberOp op);
std::vector<StTerm> fiber_tensor_eval_terms(const PartialMonotoneMap& h,
                                            const std::vector<StTerm>& inputs, FiberOp op);

// Action of a single coordinate map (1-based coordinate i).
TupleObject coord_action(int i, const SimplexMap& fi, const TupleObject& t);
OmegaWitness coord_action_witness(int i, const SimplexMap& fi, const OmegaWitness& w);

// Coordinate 1 acts first, then 2 and so on.
TupleObject bar_eval(const ProductMap& maps, const TupleObject& t);
OmegaWitness bar_eval_witness(const ProductMap& maps, const OmegaWitness& w);

// Fresh pairwise distinct letters p_<i1>_..._<ik> for every cell.
TupleObject fresh_letters(const Shape& shape, const std::string& base = "p");

struct CoherenceReport {
  bool ok = true;
  std::string violation;  // names the first failed condition and cell
};
CoherenceReport is_nm_coherent(const TupleObject& t);

// The mediating witness from the two-step evaluation to the one-step one:
// cellwise canonical arrows g*(f*(x)) -> (g.f)*(x).  Throws
// CoherenceGuardFailed if any cell falls outside the decidable fragment.
OmegaWitness omega(const ProductMap& f, const ProductMap& g, const TupleObject& x);

struct LaxCellEvidence {
  size_t cell = 0;
  EqualStatus status = EqualStatus::Unknown;
};

struct LaxReport {
  bool commutes = false;
  std::vector<LaxCellEvidence> cells;
  bool all_intermediates_coherent = false;
  std::string detail;
};

// Both legs of the associativity square for the mediating witnesses of a
// composable triple, compared cellwise by coherence.
LaxReport lax_check(const ProductMap& f, const ProductMap& g, const ProductMap& h,
                    const TupleObject& x);

}  // namespace smi

#endif
