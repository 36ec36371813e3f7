#ifndef SMI_FORMSET_HPP
#define SMI_FORMSET_HPP

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "smi/strict.hpp"

namespace smi {

struct UnitPresent : std::runtime_error {
  UnitPresent() : std::runtime_error("unit occurs in a unit-free context") {}
};
struct AllLettersDeleted : std::runtime_error {
  AllLettersDeleted() : std::runtime_error("deletion would remove every letter") {}
};

// Unit-free formula modulo associativity and commutativity: children of a
// bag node are kept in the canonical structural order, so syntactic equality
// is multiset equality.  A form set is a diversified form multiset.
class FormMultiset {
 public:
  enum class Tag { Letter, OrBag, AndBag };

  static FormMultiset letter(std::string name);
  static FormMultiset or_(std::vector<FormMultiset> children);
  static FormMultiset and_(std::vector<FormMultiset> children);
  static FormMultiset or2(const FormMultiset& l, const FormMultiset& r);
  static FormMultiset and2(const FormMultiset& l, const FormMultiset& r);

  Tag tag() const { return node_->tag; }
  bool is_letter() const { return tag() == Tag::Letter; }
  bool is_or() const { return tag() == Tag::OrBag; }
  bool is_and() const { return tag() == Tag::AndBag; }
  const std::string& name() const;
  const std::vector<FormMultiset>& children() const;

  bool operator==(const FormMultiset& o) const;
  bool operator!=(const FormMultiset& o) const { return !(*this == o); }

  std::string str() const;

 private:
  struct Node {
    Tag tag;
    std::string name;
    std::vector<FormMultiset> children;
  };
  explicit FormMultiset(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

int fm_cmp(const FormMultiset& a, const FormMultiset& b);
bool fm_less(const FormMultiset& a, const FormMultiset& b);

// Throws UnitPresent when a unit occurs.
FormMultiset to_form_multiset(const Formula& a);
FormMultiset to_form_multiset(const StrictObject& x);
StrictObject to_strict(const FormMultiset& x);  // canonical sorted representative

using LetterSet = std::set<std::string>;

LetterBag letters(const FormMultiset& x);
LetterSet letter_set(const FormMultiset& x);
bool is_diversified(const FormMultiset& x);
bool is_form_set(const FormMultiset& x);

// X^{-P}: delete the letters of P.  nullopt when everything is deleted;
// independent of deletion order.
std::optional<FormMultiset> delete_letters_opt(const FormMultiset& x, const LetterSet& p);
// Throws AllLettersDeleted when let(X) is contained in P.
FormMultiset delete_letters(const FormMultiset& x, const LetterSet& p);

std::vector<FormMultiset> prime_conjuncts(const FormMultiset& x);
std::vector<FormMultiset> prime_disjuncts(const FormMultiset& x);

// Index of the intermutation primitive of the commutativity-strict category:
// quadruples (S,T,U,V) identified with (T,S,V,U), (U,V,S,T) and (V,U,T,S).
// The canonical rotation is stored, so equality is componentwise.
class CkIndex {
 public:
  CkIndex(FormMultiset s, FormMultiset t, FormMultiset u, FormMultiset v);
  const FormMultiset& s() const { return parts_[0]; }
  const FormMultiset& t() const { return parts_[1]; }
  const FormMultiset& u() const { return parts_[2]; }
  const FormMultiset& v() const { return parts_[3]; }
  FormMultiset source() const;  // (S/\T) \/ (U/\V)
  FormMultiset target() const;  // (S\/U) /\ (T\/V)
  bool operator==(const CkIndex& o) const;
  bool operator!=(const CkIndex& o) const { return !(*this == o); }
  bool operator<(const CkIndex& o) const;
  std::string str() const;

 private:
  std::vector<FormMultiset> parts_;
};

}  // namespace smi

#endif
