#include "wmn/expr.hpp"

#include <cctype>
#include <sstream>

#include "wmn/errors.hpp"

namespace wmn {

SyntaxError::SyntaxError(const std::string& what, std::size_t column)
    : std::invalid_argument(what + " at column " + std::to_string(column)), column_(column) {}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  Expr run() {
    Expr e = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(msg, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  long digits() {
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected a digit");
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ - start > 9) {
      pos_ = start;
      fail("integer too large");
    }
    return std::stol(s_.substr(start, pos_ - start));
  }

  Expr sum() {
    Expr out;
    out.kind = Expr::Kind::Sum;
    int sign = 1;
    if (peek('-')) {
      ++pos_;
      sign = -1;
    } else if (peek('+')) {
      ++pos_;
    }
    out.children.push_back(term());
    out.signs.push_back(sign);
    while (peek('+') || peek('-')) {
      sign = s_[pos_] == '-' ? -1 : 1;
      ++pos_;
      out.children.push_back(term());
      out.signs.push_back(sign);
    }
    if (out.children.size() == 1 && out.signs[0] == 1) return std::move(out.children[0]);
    return out;
  }

  Expr term() {
    Expr out;
    out.kind = Expr::Kind::Product;
    out.children.push_back(factor());
    while (peek('*')) {
      ++pos_;
      out.children.push_back(factor());
    }
    if (out.children.size() == 1) return std::move(out.children[0]);
    return out;
  }

  Expr factor() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    Expr e;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      e.kind = Expr::Kind::Number;
      long a = digits();
      long b = 1;
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        std::size_t at = pos_;
        b = digits();
        if (b == 0) {
          pos_ = at;
          fail("zero denominator");
        }
      }
      e.value = frac(a, b);
      return e;
    }
    if (c == '(') {
      ++pos_;
      e = sum();
      expect(')');
      return e;
    }
    if (c == '[') {
      ++pos_;
      e.kind = Expr::Kind::Bracket;
      e.children.push_back(sum());
      expect(',');
      e.children.push_back(sum());
      expect(']');
      return e;
    }
    switch (c) {
      case 't': e.kind = Expr::Kind::T; break;
      case 'x': e.kind = Expr::Kind::X; break;
      case 'D': e.kind = Expr::Kind::D; break;
      case 'P': e.kind = Expr::Kind::P; break;
      default: fail("unexpected '" + std::string(1, c) + "'");
    }
    ++pos_;
    e.index = static_cast<int>(digits());
    if (pos_ < s_.size() && s_[pos_] == '^') {
      if (e.kind != Expr::Kind::T) fail("powers are allowed on t symbols only");
      ++pos_;
      int sign = 1;
      if (pos_ < s_.size() && s_[pos_] == '-') {
        ++pos_;
        sign = -1;
      }
      e.power = sign * static_cast<int>(digits());
    }
    return e;
  }
};

}  // namespace

Expr parse(const std::string& text) { return Parser(text).run(); }

std::string print(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Number: return to_string(e.value);
    case Expr::Kind::T: return "t" + std::to_string(e.index) + (e.power == 1 ? "" : "^" + std::to_string(e.power));
    case Expr::Kind::X: return "x" + std::to_string(e.index);
    case Expr::Kind::D: return "D" + std::to_string(e.index);
    case Expr::Kind::P: return "P" + std::to_string(e.index);
    case Expr::Kind::Product: {
      std::string s;
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        const Expr& c = e.children[i];
        bool wrap = c.kind == Expr::Kind::Sum || c.kind == Expr::Kind::Product;
        s += (i ? "*" : "") + (wrap ? "(" + print(c) + ")" : print(c));
      }
      return s;
    }
    case Expr::Kind::Sum: {
      std::string s;
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        const Expr& c = e.children[i];
        bool wrap = c.kind == Expr::Kind::Sum;
        std::string body = wrap ? "(" + print(c) + ")" : print(c);
        if (i == 0) {
          s += (e.signs[i] < 0 ? "-" : "") + body;
        } else {
          s += (e.signs[i] < 0 ? " - " : " + ") + body;
        }
      }
      return s;
    }
    case Expr::Kind::Bracket: return "[" + print(e.children[0]) + ", " + print(e.children[1]) + "]";
  }
  return {};
}

namespace {

struct Evaluator {
  const Algebra& alg;

  SuperPoly one() const { return SuperPoly::one(alg.m, alg.n); }

  Value eval(const Expr& e) const {
    switch (e.kind) {
      case Expr::Kind::Number: return SuperPoly::constant(alg.m, alg.n, e.value);
      case Expr::Kind::T: {
        bool ok = (e.index >= 1 && e.index <= alg.m) || (e.index == 0 && alg.allows_t0());
        if (!ok) throw ContextMismatch("t" + std::to_string(e.index) + " is not a variable of this algebra");
        return SuperPoly::t(alg.m, alg.n, e.index, e.power);
      }
      case Expr::Kind::X:
        if (e.index < 1 || e.index > alg.n) throw ContextMismatch("x" + std::to_string(e.index) + " is not a variable of this algebra");
        return SuperPoly::xi(alg.m, alg.n, e.index);
      case Expr::Kind::D: {
        auto slots = alg.even_slots();
        if (std::find(slots.begin(), slots.end(), e.index) == slots.end()) {
          throw ContextMismatch("D" + std::to_string(e.index) + " is not a generator of this algebra");
        }
        return VectorField::basis(alg, Monomial::one(alg.m), Generator::d(e.index));
      }
      case Expr::Kind::P:
        if (e.index < 1 || e.index > alg.n) throw ContextMismatch("P" + std::to_string(e.index) + " is not a generator of this algebra");
        return VectorField::basis(alg, Monomial::one(alg.m), Generator::p(e.index));
      case Expr::Kind::Product: {
        Value acc = eval(e.children[0]);
        for (std::size_t i = 1; i < e.children.size(); ++i) {
          Value next = eval(e.children[i]);
          if (std::holds_alternative<VectorField>(acc)) throw ContextMismatch("a vector field can only be the last factor of a product");
          const SuperPoly& f = std::get<SuperPoly>(acc);
          if (std::holds_alternative<SuperPoly>(next)) {
            acc = f * std::get<SuperPoly>(next);
          } else {
            acc = f * std::get<VectorField>(next);
          }
        }
        return acc;
      }
      case Expr::Kind::Sum: {
        std::optional<Value> acc;
        for (std::size_t i = 0; i < e.children.size(); ++i) {
          Value v = eval(e.children[i]);
          Scalar s = e.signs[i];
          if (!acc) {
            acc = std::visit([&](auto x) -> Value { return s * x; }, v);
            continue;
          }
          if (acc->index() != v.index()) throw ContextMismatch("cannot add a function and a vector field");
          if (auto* p = std::get_if<SuperPoly>(&*acc)) {
            *p += s * std::get<SuperPoly>(v);
          } else {
            std::get<VectorField>(*acc) += s * std::get<VectorField>(v);
          }
        }
        return *acc;
      }
      case Expr::Kind::Bracket: {
        Value a = eval(e.children[0]);
        Value b = eval(e.children[1]);
        if (!std::holds_alternative<VectorField>(a) || !std::holds_alternative<VectorField>(b)) {
          throw ContextMismatch("brackets take two vector fields");
        }
        return bracket(std::get<VectorField>(a), std::get<VectorField>(b));
      }
    }
    throw std::logic_error("unreachable");
  }
};

}  // namespace

Value evaluate(const Expr& e, const Algebra& alg) { return Evaluator{alg}.eval(e); }

SuperPoly parse_poly(const std::string& text, const Algebra& alg) {
  Value v = evaluate(parse(text), alg);
  if (!std::holds_alternative<SuperPoly>(v)) throw ContextMismatch("expected a function, got a vector field");
  return std::get<SuperPoly>(v);
}

VectorField parse_field(const std::string& text, const Algebra& alg) {
  Value v = evaluate(parse(text), alg);
  if (auto* f = std::get_if<VectorField>(&v)) return *f;
  if (std::get<SuperPoly>(v).is_zero()) return VectorField(alg);
  throw ContextMismatch("expected a vector field, got a function");
}

}  // namespace wmn
