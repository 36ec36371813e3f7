#include "smi/formula.hpp"

#include <algorithm>

namespace smi {

Formula Formula::letter(std::string name) {
  if (name.empty()) throw std::invalid_argument("empty letter name");
  auto n = std::make_shared<Node>();
  n->tag = Tag::Letter;
  n->name = std::move(name);
  return Formula(std::move(n));
}

Formula Formula::bot() {
  static const Formula b{std::make_shared<Node>(Node{Tag::Bot, {}, nullptr, nullptr})};
  return b;
}

Formula Formula::top() {
  static const Formula t{std::make_shared<Node>(Node{Tag::Top, {}, nullptr, nullptr})};
  return t;
}

Formula Formula::disj(Formula l, Formula r) {
  auto n = std::make_shared<Node>();
  n->tag = Tag::Or;
  n->left = l.node_;
  n->right = r.node_;
  return Formula(std::move(n));
}

Formula Formula::conj(Formula l, Formula r) {
  auto n = std::make_shared<Node>();
  n->tag = Tag::And;
  n->left = l.node_;
  n->right = r.node_;
  return Formula(std::move(n));
}

const std::string& Formula::name() const {
  if (tag() != Tag::Letter) throw std::logic_error("name() on non-letter");
  return node_->name;
}

Formula Formula::left() const {
  if (tag() != Tag::Or && tag() != Tag::And) throw std::logic_error("left() on leaf");
  return Formula(node_->left);
}

Formula Formula::right() const {
  if (tag() != Tag::Or && tag() != Tag::And) throw std::logic_error("right() on leaf");
  return Formula(node_->right);
}

bool Formula::operator==(const Formula& o) const {
  if (node_ == o.node_) return true;
  if (tag() != o.tag()) return false;
  switch (tag()) {
    case Tag::Letter: return node_->name == o.node_->name;
    case Tag::Bot:
    case Tag::Top: return true;
    default:
      return Formula(node_->left) == Formula(o.node_->left) &&
             Formula(node_->right) == Formula(o.node_->right);
  }
}

namespace {

// 0 = \/ level, 1 = /\ level, 2 = atom
int prec(Formula::Tag t) {
  switch (t) {
    case Formula::Tag::Or: return 0;
    case Formula::Tag::And: return 1;
    default: return 2;
  }
}

void print(const Formula& a, int min_prec, bool right_child, std::string& out) {
  int p = prec(a.tag());
  bool parens = p < min_prec || (right_child && p == min_prec && p < 2);
  if (parens) out += '(';
  switch (a.tag()) {
    case Formula::Tag::Letter: out += a.name(); break;
    case Formula::Tag::Bot: out += "bot"; break;
    case Formula::Tag::Top: out += "top"; break;
    case Formula::Tag::Or:
      print(a.left(), 0, false, out);
      out += "\\/";
      print(a.right(), 0, true, out);
      break;
    case Formula::Tag::And:
      print(a.left(), 1, false, out);
      out += "/\\";
      print(a.right(), 1, true, out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace

std::string Formula::str() const {
  std::string out;
  print(*this, 0, false, out);
  return out;
}

namespace {

void collect_letters(const Formula& a, LetterBag& out) {
  switch (a.tag()) {
    case Formula::Tag::Letter: out.push_back(a.name()); break;
    case Formula::Tag::Or:
    case Formula::Tag::And:
      collect_letters(a.left(), out);
      collect_letters(a.right(), out);
      break;
    default: break;
  }
}

}  // namespace

LetterBag letters(const Formula& a) {
  LetterBag out;
  collect_letters(a, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_diversified(const Formula& a) {
  LetterBag bag = letters(a);
  return std::adjacent_find(bag.begin(), bag.end()) == bag.end();
}

namespace {

// Leaves of the maximal \/ (resp. /\) spine, left to right.
void spine(const Formula& a, Formula::Tag t, std::vector<Formula>& out) {
  if (a.tag() == t) {
    spine(a.left(), t, out);
    spine(a.right(), t, out);
  } else {
    out.push_back(a);
  }
}

Formula rebuild(std::vector<Formula>& leaves, Formula::Tag t, const Formula& unit) {
  if (leaves.empty()) return unit;
  Formula acc = leaves[0];
  for (size_t i = 1; i < leaves.size(); ++i)
    acc = t == Formula::Tag::Or ? Formula::disj(acc, leaves[i]) : Formula::conj(acc, leaves[i]);
  return acc;
}

Formula nu_rec(const Formula& a) {
  Formula::Tag t = a.tag();
  if (t != Formula::Tag::Or && t != Formula::Tag::And) return a;
  Formula::Tag drop = t == Formula::Tag::Or ? Formula::Tag::Bot : Formula::Tag::Top;
  Formula::Tag run = t == Formula::Tag::Or ? Formula::Tag::Top : Formula::Tag::Bot;
  std::vector<Formula> raw;
  spine(a, t, raw);
  std::vector<Formula> leaves;
  bool changed = false;
  for (const Formula& l : raw) {
    Formula r = nu_rec(l);
    if (r != l) changed = true;
    std::vector<Formula> sub;
    spine(r, t, sub);  // child reductions may expose a nested spine
    if (sub.size() > 1) changed = true;
    for (const Formula& s : sub) {
      if (s.tag() == drop) {
        changed = true;  // unit of the connective disappears
        continue;
      }
      if (s.tag() == run && !leaves.empty() && leaves.back().tag() == run) {
        changed = true;  // adjacent pair of the other unit collapses
        continue;
      }
      leaves.push_back(s);
    }
  }
  if (!changed) return a;  // keep the original association intact
  return rebuild(leaves, t, t == Formula::Tag::Or ? Formula::bot() : Formula::top());
}

}  // namespace

Formula nu(const Formula& a) { return nu_rec(a); }

bool occurs_bot(const Formula& a) {
  switch (a.tag()) {
    case Formula::Tag::Bot: return true;
    case Formula::Tag::Or:
    case Formula::Tag::And: return occurs_bot(a.left()) || occurs_bot(a.right());
    default: return false;
  }
}

bool occurs_top(const Formula& a) {
  switch (a.tag()) {
    case Formula::Tag::Top: return true;
    case Formula::Tag::Or:
    case Formula::Tag::And: return occurs_top(a.left()) || occurs_top(a.right());
    default: return false;
  }
}

Purity purity(const Formula& a) {
  Formula r = nu(a);
  return Purity{!occurs_bot(r), !occurs_top(r)};
}

}  // namespace smi
