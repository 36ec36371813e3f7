#ifndef SMI_STRICT_HPP
#define SMI_STRICT_HPP

#include <memory>
#include <string>
#include <vector>

#include "smi/formula.hpp"

namespace smi {

// Formula modulo associativity and the unit laws A = A/\top = top/\A =
// A\/bot = bot\/A: connective spines are flattened into ordered lists,
// bot children of an or-list and top children of an and-list are absorbed.
// bot/\bot and top\/top survive; child order is significant.  Immutable.
class StrictObject {
 public:
  enum class Tag { Letter, Bot, Top, OrList, AndList };

  static StrictObject letter(std::string name);
  static StrictObject bot();
  static StrictObject top();
  // n-ary joins; flatten, absorb units, collapse empties/singletons.
  static StrictObject or_(std::vector<StrictObject> children);
  static StrictObject and_(std::vector<StrictObject> children);
  static StrictObject or2(const StrictObject& l, const StrictObject& r);
  static StrictObject and2(const StrictObject& l, const StrictObject& r);

  Tag tag() const { return node_->tag; }
  bool is_letter() const { return tag() == Tag::Letter; }
  bool is_bot() const { return tag() == Tag::Bot; }
  bool is_top() const { return tag() == Tag::Top; }
  bool is_or() const { return tag() == Tag::OrList; }
  bool is_and() const { return tag() == Tag::AndList; }
  const std::string& name() const;
  const std::vector<StrictObject>& children() const;

  bool operator==(const StrictObject& o) const;
  bool operator!=(const StrictObject& o) const { return !(*this == o); }

  std::string str() const;

 private:
  struct Node {
    Tag tag;
    std::string name;
    std::vector<StrictObject> children;
  };
  explicit StrictObject(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

StrictObject to_strict_object(const Formula& a);
Formula to_formula(const StrictObject& x);  // left-associated representative

LetterBag letters(const StrictObject& x);
bool is_diversified(const StrictObject& x);
bool is_letterless(const StrictObject& x);

// Unit elimination on strict objects: adjacent runs of top children in an
// or-list (bot children in an and-list) collapse to a single occurrence,
// cascading through the absorption rules.  Well defined on the equivalence
// classes the type represents.
StrictObject strict_nu(const StrictObject& x);

Purity purity(const StrictObject& x);
bool occurs_unit(const StrictObject& x);

// Total structural order; letters by name, then bot, top, or-list, and-list,
// lists lexicographically.  Used wherever a canonical choice is needed.
int strict_cmp(const StrictObject& a, const StrictObject& b);
bool strict_less(const StrictObject& a, const StrictObject& b);

// Prime conjuncts: the children when x is an and-list, else {x}.  Dual for
// disjuncts.
std::vector<StrictObject> prime_conjuncts(const StrictObject& x);
std::vector<StrictObject> prime_disjuncts(const StrictObject& x);

}  // namespace smi

#endif
