#ifndef SMI_PARSE_HPP
#define SMI_PARSE_HPP

#include <string>

#include "smi/bar.hpp"
#include "smi/marrow.hpp"
#include "smi/simplicial.hpp"

namespace smi {

struct SyntaxError : std::runtime_error {
  size_t line, column;
  std::string expected;
  SyntaxError(size_t l, size_t c, const std::string& exp)
      : std::runtime_error("syntax error at " + std::to_string(l) + ":" + std::to_string(c) +
                           ", expected " + exp),
        line(l),
        column(c),
        expected(exp) {}
};

// formula := term ("\/" term)* ; term := atom ("/\" atom)* ;
// atom := letter | "bot" | "top" | "(" formula ")".  Left associated, the
// tree is kept as parsed.
Formula parse_formula(const std::string& text);

// Generators id(A), c_or(A;B), ..., ck(A;B;C;D); "g . f" composes (g after
// f), "f | g" and "f & g" are the monoidal combinators; "&" binds tighter
// than "|" binds tighter than ".".
MTerm parse_term(const std::string& text);

// Image form "[0 1 1 3]@2->2" or generator word "s(1)@2 . d(1)@2".
SimplexMap parse_simplex(const std::string& text);

// Semicolon separated coordinate maps inside angle brackets:
// "<[0 1 3]@1->2 ; d(2)@2 ; s(1)@2 . d(1)@2>".
ProductMap parse_product_map(const std::string& text);

}  // namespace smi

#endif
