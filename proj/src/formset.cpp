#include "smi/formset.hpp"

#include <algorithm>

namespace smi {

FormMultiset FormMultiset::letter(std::string name) {
  if (name.empty()) throw std::invalid_argument("empty letter name");
  auto n = std::make_shared<Node>();
  n->tag = Tag::Letter;
  n->name = std::move(name);
  return FormMultiset(std::move(n));
}

namespace {

void flatten_fm(FormMultiset::Tag t, const FormMultiset& x, std::vector<FormMultiset>& out) {
  if (x.tag() == t) {
    for (const FormMultiset& c : x.children()) out.push_back(c);
  } else {
    out.push_back(x);
  }
}

}  // namespace

FormMultiset FormMultiset::or_(std::vector<FormMultiset> children) {
  std::vector<FormMultiset> flat;
  for (const FormMultiset& c : children) flatten_fm(Tag::OrBag, c, flat);
  if (flat.empty()) throw std::invalid_argument("empty or-bag");
  if (flat.size() == 1) return flat[0];
  std::sort(flat.begin(), flat.end(), fm_less);
  auto n = std::make_shared<Node>();
  n->tag = Tag::OrBag;
  n->children = std::move(flat);
  return FormMultiset(std::move(n));
}

FormMultiset FormMultiset::and_(std::vector<FormMultiset> children) {
  std::vector<FormMultiset> flat;
  for (const FormMultiset& c : children) flatten_fm(Tag::AndBag, c, flat);
  if (flat.empty()) throw std::invalid_argument("empty and-bag");
  if (flat.size() == 1) return flat[0];
  std::sort(flat.begin(), flat.end(), fm_less);
  auto n = std::make_shared<Node>();
  n->tag = Tag::AndBag;
  n->children = std::move(flat);
  return FormMultiset(std::move(n));
}

FormMultiset FormMultiset::or2(const FormMultiset& l, const FormMultiset& r) {
  return or_({l, r});
}

FormMultiset FormMultiset::and2(const FormMultiset& l, const FormMultiset& r) {
  return and_({l, r});
}

const std::string& FormMultiset::name() const {
  if (tag() != Tag::Letter) throw std::logic_error("name() on non-letter");
  return node_->name;
}

const std::vector<FormMultiset>& FormMultiset::children() const {
  static const std::vector<FormMultiset> none;
  if (tag() == Tag::Letter) return none;
  return node_->children;
}

bool FormMultiset::operator==(const FormMultiset& o) const {
  return fm_cmp(*this, o) == 0;
}

std::string FormMultiset::str() const { return to_strict(*this).str(); }

int fm_cmp(const FormMultiset& a, const FormMultiset& b) {
  auto rank = [](FormMultiset::Tag t) {
    switch (t) {
      case FormMultiset::Tag::Letter: return 0;
      case FormMultiset::Tag::OrBag: return 1;
      case FormMultiset::Tag::AndBag: return 2;
    }
    return 3;
  };
  if (rank(a.tag()) != rank(b.tag())) return rank(a.tag()) < rank(b.tag()) ? -1 : 1;
  if (a.is_letter()) return a.name() < b.name() ? -1 : a.name() > b.name() ? 1 : 0;
  const auto& x = a.children();
  const auto& y = b.children();
  if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
  for (size_t i = 0; i < x.size(); ++i)
    if (int c = fm_cmp(x[i], y[i])) return c;
  return 0;
}

bool fm_less(const FormMultiset& a, const FormMultiset& b) { return fm_cmp(a, b) < 0; }

FormMultiset to_form_multiset(const Formula& a) {
  switch (a.tag()) {
    case Formula::Tag::Letter: return FormMultiset::letter(a.name());
    case Formula::Tag::Bot:
    case Formula::Tag::Top: throw UnitPresent();
    case Formula::Tag::Or:
      return FormMultiset::or2(to_form_multiset(a.left()), to_form_multiset(a.right()));
    case Formula::Tag::And:
      return FormMultiset::and2(to_form_multiset(a.left()), to_form_multiset(a.right()));
  }
  throw std::logic_error("bad tag");
}

FormMultiset to_form_multiset(const StrictObject& x) {
  switch (x.tag()) {
    case StrictObject::Tag::Letter: return FormMultiset::letter(x.name());
    case StrictObject::Tag::Bot:
    case StrictObject::Tag::Top: throw UnitPresent();
    case StrictObject::Tag::OrList: {
      std::vector<FormMultiset> cs;
      for (const StrictObject& c : x.children()) cs.push_back(to_form_multiset(c));
      return FormMultiset::or_(std::move(cs));
    }
    case StrictObject::Tag::AndList: {
      std::vector<FormMultiset> cs;
      for (const StrictObject& c : x.children()) cs.push_back(to_form_multiset(c));
      return FormMultiset::and_(std::move(cs));
    }
  }
  throw std::logic_error("bad tag");
}

StrictObject to_strict(const FormMultiset& x) {
  switch (x.tag()) {
    case FormMultiset::Tag::Letter: return StrictObject::letter(x.name());
    case FormMultiset::Tag::OrBag: {
      std::vector<StrictObject> cs;
      for (const FormMultiset& c : x.children()) cs.push_back(to_strict(c));
      return StrictObject::or_(std::move(cs));
    }
    case FormMultiset::Tag::AndBag: {
      std::vector<StrictObject> cs;
      for (const FormMultiset& c : x.children()) cs.push_back(to_strict(c));
      return StrictObject::and_(std::move(cs));
    }
  }
  throw std::logic_error("bad tag");
}

namespace {

void collect(const FormMultiset& x, LetterBag& out) {
  if (x.is_letter()) {
    out.push_back(x.name());
    return;
  }
  for (const FormMultiset& c : x.children()) collect(c, out);
}

}  // namespace

LetterBag letters(const FormMultiset& x) {
  LetterBag out;
  collect(x, out);
  std::sort(out.begin(), out.end());
  return out;
}

LetterSet letter_set(const FormMultiset& x) {
  LetterBag bag = letters(x);
  return LetterSet(bag.begin(), bag.end());
}

bool is_diversified(const FormMultiset& x) {
  LetterBag bag = letters(x);
  return std::adjacent_find(bag.begin(), bag.end()) == bag.end();
}

bool is_form_set(const FormMultiset& x) { return is_diversified(x); }

std::optional<FormMultiset> delete_letters_opt(const FormMultiset& x, const LetterSet& p) {
  if (x.is_letter()) {
    if (p.count(x.name())) return std::nullopt;
    return x;
  }
  std::vector<FormMultiset> kept;
  for (const FormMultiset& c : x.children())
    if (auto r = delete_letters_opt(c, p)) kept.push_back(*r);
  if (kept.empty()) return std::nullopt;
  return x.is_or() ? FormMultiset::or_(std::move(kept)) : FormMultiset::and_(std::move(kept));
}

FormMultiset delete_letters(const FormMultiset& x, const LetterSet& p) {
  auto r = delete_letters_opt(x, p);
  if (!r) throw AllLettersDeleted();
  return *r;
}

std::vector<FormMultiset> prime_conjuncts(const FormMultiset& x) {
  if (x.is_and()) return x.children();
  return {x};
}

std::vector<FormMultiset> prime_disjuncts(const FormMultiset& x) {
  if (x.is_or()) return x.children();
  return {x};
}

CkIndex::CkIndex(FormMultiset s, FormMultiset t, FormMultiset u, FormMultiset v) {
  // Pick the least of the four equivalent orientations.
  std::vector<std::vector<FormMultiset>> orients = {
      {s, t, u, v}, {t, s, v, u}, {u, v, s, t}, {v, u, t, s}};
  auto lex_less = [](const std::vector<FormMultiset>& a, const std::vector<FormMultiset>& b) {
    for (size_t i = 0; i < 4; ++i)
      if (int c = fm_cmp(a[i], b[i])) return c < 0;
    return false;
  };
  size_t best = 0;
  for (size_t i = 1; i < 4; ++i)
    if (lex_less(orients[i], orients[best])) best = i;
  parts_ = std::move(orients[best]);
}

FormMultiset CkIndex::source() const {
  return FormMultiset::or2(FormMultiset::and2(s(), t()), FormMultiset::and2(u(), v()));
}

FormMultiset CkIndex::target() const {
  return FormMultiset::and2(FormMultiset::or2(s(), u()), FormMultiset::or2(t(), v()));
}

bool CkIndex::operator==(const CkIndex& o) const {
  for (size_t i = 0; i < 4; ++i)
    if (parts_[i] != o.parts_[i]) return false;
  return true;
}

bool CkIndex::operator<(const CkIndex& o) const {
  for (size_t i = 0; i < 4; ++i)
    if (int c = fm_cmp(parts_[i], o.parts_[i])) return c < 0;
  return false;
}

std::string CkIndex::str() const {
  return "ck(" + s().str() + ";" + t().str() + ";" + u().str() + ";" + v().str() + ")";
}

}  // namespace smi
