#include "smi/parse.hpp"

#include <cctype>

namespace smi {

namespace {

class Cursor {
 public:
  explicit Cursor(const std::string& text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) bump();
  }
  bool eof() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool try_eat(const std::string& tok) {
    skip_ws();
    if (text_.compare(pos_, tok.size(), tok) == 0) {
      for (size_t i = 0; i < tok.size(); ++i) bump();
      return true;
    }
    return false;
  }
  void expect(const std::string& tok) {
    if (!try_eat(tok)) fail("'" + tok + "'");
  }
  [[noreturn]] void fail(const std::string& expected) {
    throw SyntaxError(line_, col_, expected);
  }
  std::string ident() {
    skip_ws();
    size_t start = pos_;
    if (pos_ >= text_.size() || !std::islower(static_cast<unsigned char>(text_[pos_])))
      fail("identifier");
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      bump();
    return text_.substr(start, pos_ - start);
  }
  int number() {
    skip_ws();
    size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') bump();
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) bump();
    if (start == pos_) fail("number");
    return std::stoi(text_.substr(start, pos_ - start));
  }
  void end() {
    if (!eof()) fail("end of input");
  }

 private:
  void bump() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  const std::string& text_;
  size_t pos_ = 0;
  size_t line_ = 1, col_ = 1;
};

Formula parse_formula_at(Cursor& c);

Formula parse_atom(Cursor& c) {
  if (c.try_eat("(")) {
    Formula f = parse_formula_at(c);
    c.expect(")");
    return f;
  }
  std::string name = c.ident();
  if (name == "bot") return Formula::bot();
  if (name == "top") return Formula::top();
  return Formula::letter(name);
}

Formula parse_conj(Cursor& c) {
  Formula f = parse_atom(c);
  while (c.try_eat("/\\")) f = Formula::conj(f, parse_atom(c));
  return f;
}

Formula parse_formula_at(Cursor& c) {
  Formula f = parse_conj(c);
  while (c.try_eat("\\/")) f = Formula::disj(f, parse_conj(c));
  return f;
}

std::vector<Formula> parse_args(Cursor& c, size_t count, const std::string& what) {
  c.expect("(");
  std::vector<Formula> out;
  out.push_back(parse_formula_at(c));
  while (c.try_eat(";")) out.push_back(parse_formula_at(c));
  c.expect(")");
  if (out.size() != count) c.fail(std::to_string(count) + " arguments for " + what);
  return out;
}

MTerm parse_term_at(Cursor& c);

MTerm parse_term_atom(Cursor& c) {
  if (c.try_eat("(")) {
    MTerm t = parse_term_at(c);
    c.expect(")");
    return t;
  }
  std::string head = c.ident();
  auto dir_of = [&](const std::string& s) { return s == "fw" ? Dir::Fw : Dir::Bw; };
  if (head == "id") return MTerm::id(parse_args(c, 1, head)[0]);
  if (head == "kappa") return MTerm::kappa();
  if (head == "w_or_fw" || head == "w_or_bw") return MTerm::w_or(dir_of(head.substr(5)));
  if (head == "w_and_fw" || head == "w_and_bw") return MTerm::w_and(dir_of(head.substr(6)));
  if (head == "c_or") {
    auto a = parse_args(c, 2, head);
    return MTerm::c_or(a[0], a[1]);
  }
  if (head == "c_and") {
    auto a = parse_args(c, 2, head);
    return MTerm::c_and(a[0], a[1]);
  }
  if (head == "ck") {
    auto a = parse_args(c, 4, head);
    return MTerm::ck(a[0], a[1], a[2], a[3]);
  }
  if (head == "b_or_fw" || head == "b_or_bw") {
    auto a = parse_args(c, 3, head);
    return MTerm::b_or(dir_of(head.substr(5)), a[0], a[1], a[2]);
  }
  if (head == "b_and_fw" || head == "b_and_bw") {
    auto a = parse_args(c, 3, head);
    return MTerm::b_and(dir_of(head.substr(6)), a[0], a[1], a[2]);
  }
  if (head == "d_or_fw" || head == "d_or_bw")
    return MTerm::d_or(dir_of(head.substr(5)), parse_args(c, 1, head)[0]);
  if (head == "s_or_fw" || head == "s_or_bw")
    return MTerm::s_or(dir_of(head.substr(5)), parse_args(c, 1, head)[0]);
  if (head == "d_and_fw" || head == "d_and_bw")
    return MTerm::d_and(dir_of(head.substr(6)), parse_args(c, 1, head)[0]);
  if (head == "s_and_fw" || head == "s_and_bw")
    return MTerm::s_and(dir_of(head.substr(6)), parse_args(c, 1, head)[0]);
  c.fail("generator name");
}

MTerm parse_term_and(Cursor& c) {
  MTerm t = parse_term_atom(c);
  while (c.try_eat("&")) t = MTerm::and_c(t, parse_term_atom(c));
  return t;
}

MTerm parse_term_or(Cursor& c) {
  MTerm t = parse_term_and(c);
  while (c.try_eat("|")) t = MTerm::or_c(t, parse_term_and(c));
  return t;
}

MTerm parse_term_at(Cursor& c) {
  MTerm t = parse_term_or(c);
  while (c.try_eat(".")) t = MTerm::comp(t, parse_term_or(c));
  return t;
}

SimplexMap parse_simplex_atom(Cursor& c) {
  if (c.try_eat("[")) {
    SimplexMap m;
    while (!c.try_eat("]")) m.image.push_back(c.number());
    c.expect("@");
    m.src = c.number();
    c.expect("->");
    m.dst = c.number();
    validate(m);
    return m;
  }
  if (c.try_eat("id")) {
    c.expect("@");
    return simplex_identity(c.number());
  }
  if (c.try_eat("d")) {
    c.expect("(");
    int i = c.number();
    c.expect(")");
    c.expect("@");
    int n = c.number();
    return gen_d(n, i);
  }
  if (c.try_eat("s")) {
    c.expect("(");
    int i = c.number();
    c.expect(")");
    c.expect("@");
    int n = c.number();
    return gen_s(n, i);
  }
  c.fail("simplex map ([..]@n->m, id@n, d(i)@n or s(i)@n)");
}

SimplexMap parse_simplex_at(Cursor& c) {
  SimplexMap m = parse_simplex_atom(c);
  while (c.try_eat(".")) {
    SimplexMap f = parse_simplex_atom(c);
    m = compose_simplex(m, f);  // written g . f
  }
  return m;
}

}  // namespace

Formula parse_formula(const std::string& text) {
  Cursor c(text);
  Formula f = parse_formula_at(c);
  c.end();
  return f;
}

MTerm parse_term(const std::string& text) {
  Cursor c(text);
  MTerm t = parse_term_at(c);
  c.end();
  return t;
}

SimplexMap parse_simplex(const std::string& text) {
  Cursor c(text);
  SimplexMap m = parse_simplex_at(c);
  c.end();
  return m;
}

ProductMap parse_product_map(const std::string& text) {
  Cursor c(text);
  ProductMap pm;
  bool bracket = c.try_eat("<");
  pm.components.push_back(parse_simplex_at(c));
  while (c.try_eat(";")) pm.components.push_back(parse_simplex_at(c));
  if (bracket) c.expect(">");
  c.end();
  return pm;
}

}  // namespace smi
