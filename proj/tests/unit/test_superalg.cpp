#include <doctest.h>

#include "wmn/errors.hpp"
#include "wmn/expr.hpp"
#include "wmn/sampling.hpp"
#include "wmn/superpoly.hpp"

using namespace wmn;

namespace {
const Algebra A22{Kind::Wmn, 2, 2};
SuperPoly P(const std::string& s, const Algebra& alg = A22) { return parse_poly(s, alg); }
}  // namespace

TEST_CASE("scalars are canonical") {
  CHECK(frac(2, 4) == frac(1, 2));
  CHECK(to_string(frac(6, -4)) == "-3/2");
  CHECK(to_string(Scalar(5)) == "5");
  CHECK(parse_scalar("-7/14") == frac(-1, 2));
  CHECK_THROWS_AS(parse_scalar("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar("1/"), std::invalid_argument);
}

TEST_CASE("Grassmann product") {
  CHECK(P("x2") * P("x1") == P("-x1*x2"));
  CHECK((P("x1") * P("x1")).is_zero());
  CHECK(P("t1*x1") * P("t1^-1*x2") == P("x1*x2"));
  CHECK(P("t1^2") * P("t1^-2") == SuperPoly::one(2, 2));
  CHECK_THROWS_AS(mul(SuperPoly::one(1, 1), SuperPoly::one(2, 2)), ContextMismatch);
}

TEST_CASE("odd left derivation") {
  CHECK(left_deriv(1, P("x1*x2")) == P("x2"));
  CHECK(left_deriv(2, P("x1*x2")) == P("-x1"));
  CHECK(left_deriv(1, P("t1^3")).is_zero());
}

TEST_CASE("odd right derivation") {
  CHECK(right_deriv(P("x1*x2"), 2) == P("x1"));
  CHECK(right_deriv(P("x1*x2"), 1) == P("-x2"));
  CHECK(right_deriv(SuperPoly::one(2, 2), 1).is_zero());
}

TEST_CASE("even Euler derivation") {
  CHECK(even_deriv(1, P("t1^2*x1")) == P("2*t1^2*x1"));
  CHECK(even_deriv(1, P("t2^3")).is_zero());
  CHECK(even_deriv(1, P("t1^-1 + t1")) == P("-t1^-1 + t1"));
}

TEST_CASE("parity") {
  CHECK(P("x1*x2 + t1").parity() == 0);
  CHECK(P("x1 + t2*x2").parity() == 1);
  CHECK_FALSE(P("x1 + 1").parity().has_value());
}

TEST_CASE("random identities") {
  Sampler rng(11);
  for (int s = 0; s < 100; ++s) {
    int pa = rng.uniform(0, 1), pb = rng.uniform(0, 1);
    auto a = rng.homogeneous_poly(A22, 3, 2, pa);
    auto b = rng.homogeneous_poly(A22, 3, 2, pb);
    auto c = rng.poly(A22, 3, 2);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == Scalar(sign_pow(pa * pb)) * (b * a));
    for (int al = 1; al <= 2; ++al) {
      CHECK(left_deriv(al, a * b) == left_deriv(al, a) * b + Scalar(sign_pow(pa)) * (a * left_deriv(al, b)));
      CHECK(right_deriv(a, al) == Scalar(-sign_pow(pa)) * left_deriv(al, a));
      CHECK(left_deriv(al, left_deriv(al, c)).is_zero());
    }
    CHECK(even_deriv(2, a * b) == even_deriv(2, a) * b + a * even_deriv(2, b));
  }
}

TEST_CASE("context validation") {
  CHECK_THROWS(P("x3"));
  CHECK_THROWS(P("t3"));
  CHECK_THROWS(P("t0"));
  CHECK(P("t0", Algebra{Kind::Wm1n, 2, 2}) == SuperPoly::t(2, 2, 0));
}
