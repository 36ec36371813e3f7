#ifndef SMI_FORMULA_HPP
#define SMI_FORMULA_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace smi {

struct TypeError : std::runtime_error {
  explicit TypeError(const std::string& what) : std::runtime_error(what) {}
};

// Binary-tree propositional formula over an infinite alphabet of letters,
// the constants bot/top, and the connectives \/ and /\.  Immutable.
class Formula {
 public:
  enum class Tag { Letter, Bot, Top, Or, And };

  static Formula letter(std::string name);
  static Formula bot();
  static Formula top();
  static Formula disj(Formula l, Formula r);
  static Formula conj(Formula l, Formula r);

  Tag tag() const { return node_->tag; }
  bool is_letter() const { return tag() == Tag::Letter; }
  bool is_unit() const { return tag() == Tag::Bot || tag() == Tag::Top; }
  const std::string& name() const;  // Letter only
  Formula left() const;             // Or/And only
  Formula right() const;            // Or/And only

  bool operator==(const Formula& o) const;
  bool operator!=(const Formula& o) const { return !(*this == o); }

  std::string str() const;  // ASCII form, minimal parentheses

 private:
  struct Node {
    Tag tag;
    std::string name;
    std::shared_ptr<const Node> left, right;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
  friend struct FormulaHash;
};

// Multiset of letter occurrences, kept sorted.
using LetterBag = std::vector<std::string>;

LetterBag letters(const Formula& a);
bool is_diversified(const Formula& a);

// Unit elimination: drops bot disjuncts and top conjuncts along each
// connective spine and collapses adjacent bot/\bot (top\/top) runs, so the
// result does not depend on how the input spine was associated.  Idempotent.
Formula nu(const Formula& a);

struct Purity {
  bool bot_pure = false;
  bool top_pure = false;
  bool pure() const { return bot_pure && top_pure; }
};
Purity purity(const Formula& a);

bool occurs_bot(const Formula& a);
bool occurs_top(const Formula& a);

}  // namespace smi

#endif
