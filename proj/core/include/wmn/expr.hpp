#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "wmn/scalar.hpp"
#include "wmn/superpoly.hpp"
#include "wmn/vector_field.hpp"

namespace wmn {

/// Malformed input; `column` is the 0-based offset of the offending character.
class SyntaxError : public std::invalid_argument {
 public:
  SyntaxError(const std::string& what, std::size_t column);
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

struct Expr {
  enum class Kind { Number, T, X, D, P, Product, Sum, Bracket };
  Kind kind = Kind::Number;
  Scalar value = 0;  // Number
  int index = 0;     // T, X, D, P
  int power = 1;     // T
  /// Product: factors; Sum: terms with signs; Bracket: exactly two children.
  std::vector<Expr> children;
  std::vector<int> signs;
};

/// sum := ['-'] term (('+'|'-') term)*, term := factor ('*' factor)*,
/// factor := rational | tN['^' int] | xN | DN | PN | '[' sum ',' sum ']' | '(' sum ')'.
Expr parse(const std::string& text);
std::string print(const Expr& e);

/// Value of an expression in an algebra context: a function or a vector field.
using Value = std::variant<SuperPoly, VectorField>;

/// Throws ContextMismatch for symbols outside the algebra and for products the
/// algebra does not contain (a generator followed by anything, sums of functions and fields).
Value evaluate(const Expr& e, const Algebra& alg);
SuperPoly parse_poly(const std::string& text, const Algebra& alg);
VectorField parse_field(const std::string& text, const Algebra& alg);

}  // namespace wmn
