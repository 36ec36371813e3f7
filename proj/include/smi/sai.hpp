#ifndef SMI_SAI_HPP
#define SMI_SAI_HPP

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "smi/formset.hpp"

namespace smi {

// Arrow terms of the fully strict unit-free category: identities and the
// intermutation primitive indexed by a CkIndex, under composition and the
// two monoidal combinators.  Objects are form multisets.
class SaiTerm {
 public:
  enum class Kind { Id, Ck, Comp, OrC, AndC };

  static SaiTerm id(FormMultiset x);
  static SaiTerm ck(CkIndex ix);
  static SaiTerm comp(SaiTerm g, SaiTerm f);
  static SaiTerm or_c(SaiTerm f, SaiTerm g);
  static SaiTerm and_c(SaiTerm f, SaiTerm g);

  Kind kind() const { return node_->kind; }
  const FormMultiset& obj() const;  // Id
  const CkIndex& index() const;     // Ck
  const SaiTerm& fst() const { return node_->sub[0]; }
  const SaiTerm& snd() const { return node_->sub[1]; }
  bool is_id() const { return kind() == Kind::Id; }

  bool operator==(const SaiTerm& o) const;
  bool operator!=(const SaiTerm& o) const { return !(*this == o); }

  std::string str() const;

 private:
  struct Node {
    Kind kind;
    std::optional<FormMultiset> obj;
    std::optional<CkIndex> index;
    std::vector<SaiTerm> sub;
  };
  explicit SaiTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct SaiEnds {
  FormMultiset src;
  FormMultiset tgt;
};

SaiEnds sai_ends(const SaiTerm& t);
size_t ck_count(const SaiTerm& t);
std::vector<SaiTerm> develop(const SaiTerm& t);
std::vector<CkIndex> ck_indices(const SaiTerm& t);

// Identity-collapsing comp.
SaiTerm sai_comp(const SaiTerm& g, const SaiTerm& f);

struct NotDiversified : std::runtime_error {
  NotDiversified() : std::runtime_error("operands must be form sets (diversified)") {}
};
struct SourceMismatch : std::runtime_error {
  SourceMismatch() : std::runtime_error("term source does not match x1 \\/ x2") {}
};
struct PreconditionViolated : std::runtime_error {
  explicit PreconditionViolated(const std::string& w) : std::runtime_error(w) {}
};
struct LimitExceeded : std::runtime_error {
  LimitExceeded() : std::runtime_error("search node limit exceeded") {}
};

// The canonical arrow X -> Y between form sets: Some exactly when an arrow
// exists, built by structural recursion; prime conjuncts and disjuncts are
// chosen smallest-first in the canonical order.
std::optional<SaiTerm> canonical_sai_arrow(const FormMultiset& x, const FormMultiset& y);

enum class Splitting { Splitting, Nonsplitting, Mixed };

// Classifies all ck occurrences of u against the partition (X1, X2) of its
// source: a ck is (X1,X2)-splitting when one side of its index draws its
// letters from X1 and the other from X2.  A term without ck occurrences
// counts as splitting.
Splitting is_splitting_term(const SaiTerm& u, const FormMultiset& x1, const FormMultiset& x2);

// u^{-P}: deletes the letters of P throughout an arrow term.  Requires the
// residual source to be nonempty and the deletion condition on the source:
// every subformset U /\ V has let(U) in P exactly when let(V) is.
SaiTerm delete_letters_term(const SaiTerm& u, const LetterSet& p);

// All single-head ck rewrites with the given source, paired with their
// targets.  Duplicates (by index symmetry) are collapsed.
std::vector<std::pair<SaiTerm, FormMultiset>> enumerate_single_heads(const FormMultiset& x);

struct ReachReport {
  bool exists = false;
  std::set<size_t> all_path_lengths;  // singleton when coherent
};

// Exhaustive search over the object graph spanned by single-head rewrites.
// Path lengths are collected by dynamic programming over the (acyclic)
// reachable graph; node_limit bounds the number of distinct objects visited.
ReachReport reachability_oracle(const FormMultiset& x, const FormMultiset& y,
                                size_t node_limit = 200000);

}  // namespace smi

#endif
