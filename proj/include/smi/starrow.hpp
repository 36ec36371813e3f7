#ifndef SMI_STARROW_HPP
#define SMI_STARROW_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "smi/marrow.hpp"
#include "smi/strict.hpp"

namespace smi {

// Arrow terms over strict objects.  Associativity and the delta/sigma unit
// isomorphisms are identities here, so the generators are the symmetries,
// the two w isomorphisms, kappa and ck.  Endpoints are computed in the
// strict object algebra.  Immutable; compared syntactically.
class StTerm {
 public:
  enum class Kind { Id, COr, CAnd, WOr, WAnd, Kappa, Ck, Comp, OrC, AndC };

  static StTerm id(StrictObject a);
  static StTerm c_or(StrictObject a, StrictObject b);
  static StTerm c_and(StrictObject a, StrictObject b);
  static StTerm w_or(Dir d);   // fw: top\/top -> top
  static StTerm w_and(Dir d);  // fw: bot/\bot -> bot
  static StTerm kappa();
  static StTerm ck(StrictObject s, StrictObject t, StrictObject u, StrictObject v);
  // Raw combinators; see the smart constructors below for the usual entry
  // points.
  static StTerm comp(StTerm g, StTerm f);
  static StTerm or_c(StTerm f, StTerm g);
  static StTerm and_c(StTerm f, StTerm g);

  Kind kind() const { return node_->kind; }
  Dir dir() const { return node_->dir; }
  const std::vector<StrictObject>& params() const { return node_->params; }
  const StTerm& fst() const { return node_->sub[0]; }
  const StTerm& snd() const { return node_->sub[1]; }
  bool is_id() const { return kind() == Kind::Id; }

  bool operator==(const StTerm& o) const;
  bool operator!=(const StTerm& o) const { return !(*this == o); }

  std::string str() const;

 private:
  struct Node {
    Kind kind;
    Dir dir = Dir::Fw;
    std::vector<StrictObject> params;
    std::vector<StTerm> sub;
  };
  static StTerm make(Kind k, Dir d, std::vector<StrictObject> params, std::vector<StTerm> sub);
  explicit StTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct StEnds {
  StrictObject src;
  StrictObject tgt;
};

StEnds st_ends(const StTerm& t);  // throws TypeError on a composition mismatch

size_t ck_count(const StTerm& t);

// Identity-collapsing combinators: comp drops identity factors, the
// monoidal combinators merge identities and absorb identity components on
// the unit of their connective.
StTerm st_comp(const StTerm& g, const StTerm& f);
StTerm st_or(const StTerm& f, const StTerm& g);
StTerm st_and(const StTerm& f, const StTerm& g);
StTerm st_comp_chain(const std::vector<StTerm>& factors, const StrictObject& src_if_empty);
StTerm st_or_all(const std::vector<StTerm>& fs);
StTerm st_and_all(const std::vector<StTerm>& fs);

StTerm st_invert(const StTerm& t);  // defined for terms without kappa

std::vector<StTerm> develop(const StTerm& t);

// Deterministic symmetry term A -> B for permutation-equivalent strict
// objects (same commutativity class), built from adjacent transpositions.
struct NotPermutationEquivalent : std::runtime_error {
  NotPermutationEquivalent() : std::runtime_error("objects are not permutation equivalent") {}
};
StTerm sort_iso(const StrictObject& a, const StrictObject& b);

// Image of an arrow term of the free category under strictification:
// b/delta/sigma become identities, everything else is carried over.
StTerm strictify(const MTerm& t);

// Strict-level leg pairs for the two strict associativity diagrams,
// instantiated at six objects (u,v,w,x,y,z).
std::pair<StTerm, StTerm> axiom_legs_strict(const std::string& id,
                                            const std::vector<StrictObject>& p);

}  // namespace smi

#endif
