#ifndef SMI_MARROW_HPP
#define SMI_MARROW_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "smi/formula.hpp"

namespace smi {

enum class Dir { Fw, Bw };

// Arrow terms of the freely generated category: generators b, c, delta,
// sigma, w, kappa, ck and identities, combined by composition, \/ and /\.
// fw is the printed direction of each isomorphism (b_or_fw(A;B;C):
// A\/(B\/C) -> (A\/B)\/C, d_or_fw(A): A\/bot -> A, w_or_fw: top\/top -> top,
// w_and_fw: bot/\bot -> bot, ...); bw is its inverse.  Compared only
// syntactically.  Immutable.
class MTerm {
 public:
  enum class Kind {
    Id,      // Id(A)
    BOr,     // dir, A,B,C
    BAnd,    // dir, A,B,C
    COr,     // A,B
    CAnd,    // A,B
    DOr,     // dir, A : A\/bot -> A
    SOr,     // dir, A : bot\/A -> A
    DAnd,    // dir, A : A/\top -> A
    SAnd,    // dir, A : top/\A -> A
    WOr,     // dir : top\/top -> top
    WAnd,    // dir : bot/\bot -> bot
    Kappa,   // bot -> top
    Ck,      // A,B,C,D : (A/\B)\/(C/\D) -> (A\/C)/\(B\/D)
    Comp,    // g . f
    OrC,     // f | g
    AndC,    // f & g
  };

  static MTerm id(Formula a);
  static MTerm b_or(Dir d, Formula a, Formula b, Formula c);
  static MTerm b_and(Dir d, Formula a, Formula b, Formula c);
  static MTerm c_or(Formula a, Formula b);
  static MTerm c_and(Formula a, Formula b);
  static MTerm d_or(Dir d, Formula a);
  static MTerm s_or(Dir d, Formula a);
  static MTerm d_and(Dir d, Formula a);
  static MTerm s_and(Dir d, Formula a);
  static MTerm w_or(Dir d);
  static MTerm w_and(Dir d);
  static MTerm kappa();
  static MTerm ck(Formula a, Formula b, Formula c, Formula d);
  static MTerm comp(MTerm g, MTerm f);  // g after f
  static MTerm or_c(MTerm f, MTerm g);
  static MTerm and_c(MTerm f, MTerm g);

  Kind kind() const { return node_->kind; }
  Dir dir() const { return node_->dir; }
  const std::vector<Formula>& params() const { return node_->params; }
  const MTerm& fst() const { return node_->sub[0]; }  // Comp: g, OrC/AndC: f
  const MTerm& snd() const { return node_->sub[1]; }  // Comp: f, OrC/AndC: g
  bool is_id() const { return kind() == Kind::Id; }

  bool operator==(const MTerm& o) const;
  bool operator!=(const MTerm& o) const { return !(*this == o); }

  std::string str() const;

 private:
  struct Node {
    Kind kind;
    Dir dir = Dir::Fw;
    std::vector<Formula> params;
    std::vector<MTerm> sub;
  };
  static MTerm make(Kind k, Dir d, std::vector<Formula> params, std::vector<MTerm> sub);
  explicit MTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct Ends {
  Formula src;
  Formula tgt;
};

// Source and target, computed bottom-up; throws TypeError (with the offending
// position) when a composition does not match.
Ends typecheck(const MTerm& t);

size_t ck_count(const MTerm& t);

// Flatten into a chain of factors, each containing exactly one generator
// occurrence, whose composition is equal to the input and shares its
// endpoints.  Empty for (combinations of) identities.  Left factors fire
// first: (f | g) becomes (f | 1) factors followed by (1 | g) factors.
std::vector<MTerm> develop(const MTerm& t);

// The two legs of a named coherence diagram, instantiated at the given
// formulas.  Both legs typecheck with identical endpoints.
//   1,2:  associativity pentagons for ck (6 params)
//   3,4:  symmetry squares for ck (4 params)
//   5:    (A/\B)\/(bot/\bot) collapse (2 params)
//   6:    (A/\top)\/(B/\top) collapse (2 params)
//   7..13: unit triangles (no params)
//   natk1..natk4: kappa naturality (no params)
//   natck: ck naturality against unit introductions (4 params)
struct BadParams : std::runtime_error {
  explicit BadParams(const std::string& w) : std::runtime_error(w) {}
};
std::pair<MTerm, MTerm> axiom_legs(const std::string& id, const std::vector<Formula>& params);
std::vector<std::string> axiom_ids();

}  // namespace smi

#endif
