#include "smi/strict.hpp"

#include <algorithm>

namespace smi {

StrictObject StrictObject::letter(std::string name) {
  if (name.empty()) throw std::invalid_argument("empty letter name");
  auto n = std::make_shared<Node>();
  n->tag = Tag::Letter;
  n->name = std::move(name);
  return StrictObject(std::move(n));
}

StrictObject StrictObject::bot() {
  static const StrictObject b{std::make_shared<Node>(Node{Tag::Bot, {}, {}})};
  return b;
}

StrictObject StrictObject::top() {
  static const StrictObject t{std::make_shared<Node>(Node{Tag::Top, {}, {}})};
  return t;
}

namespace {

void flatten_into(StrictObject::Tag t, const StrictObject& x, StrictObject::Tag absorb,
                  std::vector<StrictObject>& out) {
  if (x.tag() == t) {
    for (const StrictObject& c : x.children()) out.push_back(c);
  } else if (x.tag() != absorb) {
    out.push_back(x);
  }
}

}  // namespace

StrictObject StrictObject::or_(std::vector<StrictObject> children) {
  std::vector<StrictObject> flat;
  for (const StrictObject& c : children) flatten_into(Tag::OrList, c, Tag::Bot, flat);
  if (flat.empty()) return bot();
  if (flat.size() == 1) return flat[0];
  auto n = std::make_shared<Node>();
  n->tag = Tag::OrList;
  n->children = std::move(flat);
  return StrictObject(std::move(n));
}

StrictObject StrictObject::and_(std::vector<StrictObject> children) {
  std::vector<StrictObject> flat;
  for (const StrictObject& c : children) flatten_into(Tag::AndList, c, Tag::Top, flat);
  if (flat.empty()) return top();
  if (flat.size() == 1) return flat[0];
  auto n = std::make_shared<Node>();
  n->tag = Tag::AndList;
  n->children = std::move(flat);
  return StrictObject(std::move(n));
}

StrictObject StrictObject::or2(const StrictObject& l, const StrictObject& r) {
  return or_({l, r});
}

StrictObject StrictObject::and2(const StrictObject& l, const StrictObject& r) {
  return and_({l, r});
}

const std::string& StrictObject::name() const {
  if (tag() != Tag::Letter) throw std::logic_error("name() on non-letter");
  return node_->name;
}

const std::vector<StrictObject>& StrictObject::children() const {
  static const std::vector<StrictObject> none;
  if (tag() != Tag::OrList && tag() != Tag::AndList) return none;
  return node_->children;
}

bool StrictObject::operator==(const StrictObject& o) const {
  if (node_ == o.node_) return true;
  if (tag() != o.tag()) return false;
  switch (tag()) {
    case Tag::Letter: return node_->name == o.node_->name;
    case Tag::Bot:
    case Tag::Top: return true;
    default: {
      const auto& a = node_->children;
      const auto& b = o.node_->children;
      if (a.size() != b.size()) return false;
      for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
      return true;
    }
  }
}

std::string StrictObject::str() const { return to_formula(*this).str(); }

StrictObject to_strict_object(const Formula& a) {
  switch (a.tag()) {
    case Formula::Tag::Letter: return StrictObject::letter(a.name());
    case Formula::Tag::Bot: return StrictObject::bot();
    case Formula::Tag::Top: return StrictObject::top();
    case Formula::Tag::Or:
      return StrictObject::or2(to_strict_object(a.left()), to_strict_object(a.right()));
    case Formula::Tag::And:
      return StrictObject::and2(to_strict_object(a.left()), to_strict_object(a.right()));
  }
  throw std::logic_error("bad tag");
}

Formula to_formula(const StrictObject& x) {
  switch (x.tag()) {
    case StrictObject::Tag::Letter: return Formula::letter(x.name());
    case StrictObject::Tag::Bot: return Formula::bot();
    case StrictObject::Tag::Top: return Formula::top();
    case StrictObject::Tag::OrList: {
      Formula acc = to_formula(x.children()[0]);
      for (size_t i = 1; i < x.children().size(); ++i)
        acc = Formula::disj(acc, to_formula(x.children()[i]));
      return acc;
    }
    case StrictObject::Tag::AndList: {
      Formula acc = to_formula(x.children()[0]);
      for (size_t i = 1; i < x.children().size(); ++i)
        acc = Formula::conj(acc, to_formula(x.children()[i]));
      return acc;
    }
  }
  throw std::logic_error("bad tag");
}

namespace {

void collect(const StrictObject& x, LetterBag& out) {
  if (x.is_letter()) {
    out.push_back(x.name());
    return;
  }
  for (const StrictObject& c : x.children()) collect(c, out);
}

}  // namespace

LetterBag letters(const StrictObject& x) {
  LetterBag out;
  collect(x, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_diversified(const StrictObject& x) {
  LetterBag bag = letters(x);
  return std::adjacent_find(bag.begin(), bag.end()) == bag.end();
}

bool is_letterless(const StrictObject& x) { return letters(x).empty(); }

StrictObject strict_nu(const StrictObject& x) {
  if (!x.is_or() && !x.is_and()) return x;
  StrictObject::Tag run = x.is_or() ? StrictObject::Tag::Top : StrictObject::Tag::Bot;
  std::vector<StrictObject> out;
  for (const StrictObject& c : x.children()) {
    StrictObject r = strict_nu(c);
    // re-flatten through or_/and_ below; collapse adjacent unit runs here
    std::vector<StrictObject> sub;
    if (r.tag() == x.tag())
      sub = r.children();
    else
      sub = {r};
    for (const StrictObject& s : sub) {
      if (s.tag() == run && !out.empty() && out.back().tag() == run) continue;
      out.push_back(s);
    }
  }
  StrictObject res = x.is_or() ? StrictObject::or_(out) : StrictObject::and_(out);
  // Absorption may create fresh adjacencies (e.g. top \/ (bot /\ bot) \/ top
  // after the inner collapse); iterate to the fixpoint.
  if (res != x) return strict_nu(res);
  return res;
}

bool occurs_unit(const StrictObject& x) {
  switch (x.tag()) {
    case StrictObject::Tag::Bot:
    case StrictObject::Tag::Top: return true;
    case StrictObject::Tag::Letter: return false;
    default:
      for (const StrictObject& c : x.children())
        if (occurs_unit(c)) return true;
      return false;
  }
}

namespace {

bool occurs(const StrictObject& x, StrictObject::Tag t) {
  if (x.tag() == t) return true;
  for (const StrictObject& c : x.children())
    if (occurs(c, t)) return true;
  return false;
}

}  // namespace

Purity purity(const StrictObject& x) {
  StrictObject r = strict_nu(x);
  return Purity{!occurs(r, StrictObject::Tag::Bot), !occurs(r, StrictObject::Tag::Top)};
}

int strict_cmp(const StrictObject& a, const StrictObject& b) {
  auto rank = [](StrictObject::Tag t) {
    switch (t) {
      case StrictObject::Tag::Letter: return 0;
      case StrictObject::Tag::Bot: return 1;
      case StrictObject::Tag::Top: return 2;
      case StrictObject::Tag::OrList: return 3;
      case StrictObject::Tag::AndList: return 4;
    }
    return 5;
  };
  if (rank(a.tag()) != rank(b.tag())) return rank(a.tag()) < rank(b.tag()) ? -1 : 1;
  switch (a.tag()) {
    case StrictObject::Tag::Letter:
      return a.name() < b.name() ? -1 : a.name() > b.name() ? 1 : 0;
    case StrictObject::Tag::Bot:
    case StrictObject::Tag::Top: return 0;
    default: {
      const auto& x = a.children();
      const auto& y = b.children();
      if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
      for (size_t i = 0; i < x.size(); ++i)
        if (int c = strict_cmp(x[i], y[i])) return c;
      return 0;
    }
  }
}

bool strict_less(const StrictObject& a, const StrictObject& b) {
  return strict_cmp(a, b) < 0;
}

std::vector<StrictObject> prime_conjuncts(const StrictObject& x) {
  if (x.is_and()) return x.children();
  return {x};
}

std::vector<StrictObject> prime_disjuncts(const StrictObject& x) {
  if (x.is_or()) return x.children();
  return {x};
}

}  // namespace smi
