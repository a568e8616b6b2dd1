#include <doctest.h>

#include "wmn/errors.hpp"
#include "wmn/expr.hpp"
#include "wmn/sampling.hpp"
#include "wmn/vector_field.hpp"

using namespace wmn;

namespace {
const Algebra A22{Kind::Wmn, 2, 2};
VectorField F(const std::string& s, const Algebra& alg = A22) { return parse_field(s, alg); }
SuperPoly P(const std::string& s, const Algebra& alg = A22) { return parse_poly(s, alg); }

std::vector<SuperPoly> monomial_window(const Algebra& alg) {
  std::vector<SuperPoly> out;
  Sampler rng(3);
  for (int i = 0; i < 30; ++i) out.push_back(SuperPoly::monomial(alg.m, alg.n, rng.monomial(alg, 3)));
  return out;
}
}  // namespace

TEST_CASE("apply") {
  CHECK(apply(F("t1*D1"), P("t1")) == P("t1^2"));
  CHECK(apply(F("P1"), P("x1*x2")) == P("x2"));
  CHECK(apply(F("x1*P1"), P("x1")) == P("x1"));
}

TEST_CASE("bracket examples") {
  CHECK(bracket(F("D1"), F("D2")).is_zero());
  CHECK(bracket(F("t1*D1"), F("t1^-1*D1")) == F("-2*D1"));
  CHECK(bracket(F("P1"), F("x1*P1")) == F("P1"));
  CHECK(bracket(F("t1^2*D1"), F("t1^3*D1")) == F("t1^5*D1"));
}

TEST_CASE("h-weight") {
  CHECK(h_weight(F("t1^2*x1*D2")) == std::vector<int>{2, 0});
  CHECK_FALSE(h_weight(F("D1 + t1*D1")).has_value());
  CHECK(h_weight(F("x1*P2")) == std::vector<int>{0, 0});
  Algebra d0{Kind::WmnSemidirectD0, 1, 0};
  CHECK(h_weight(F("t1*D0", d0)) == std::vector<int>{0, 1});
}

TEST_CASE("bracket agrees with operator composition") {
  for (Kind kind : {Kind::Wmn, Kind::WmnSemidirectD0, Kind::Wm1n}) {
    Algebra alg{kind, 1, 2};
    Sampler rng(5);
    auto funcs = monomial_window(alg);
    for (int s = 0; s < 60; ++s) {
      auto x = rng.field(alg, 2, 2), y = rng.field(alg, 2, 2);
      int sgn = sign_pow(*x.parity() * *y.parity());
      for (const auto& f : funcs) {
        CHECK(apply(bracket(x, y), f) == apply(x, apply(y, f)) - Scalar(sgn) * apply(y, apply(x, f)));
      }
    }
  }
}

TEST_CASE("super Jacobi and antisymmetry") {
  for (Kind kind : {Kind::Wmn, Kind::WmnSemidirectD0, Kind::Wm1n}) {
    Algebra alg{kind, 1, 1};
    Sampler rng(9);
    for (int s = 0; s < 60; ++s) {
      auto x = rng.field(alg, 2, 2), y = rng.field(alg, 2, 2), z = rng.field(alg, 2, 2);
      int px = *x.parity(), py = *y.parity(), pz = *z.parity();
      auto sum = Scalar(sign_pow(px * pz)) * bracket(x, bracket(y, z)) + Scalar(sign_pow(py * px)) * bracket(y, bracket(z, x)) +
                 Scalar(sign_pow(pz * py)) * bracket(z, bracket(x, y));
      CHECK(sum.is_zero());
      CHECK(bracket(x, y) == Scalar(-sign_pow(px * py)) * bracket(y, x));
    }
  }
}

TEST_CASE("d0 in the semidirect product") {
  Algebra d0{Kind::WmnSemidirectD0, 1, 1};
  CHECK(bracket(F("D0", d0), F("t1*x1*P1", d0)).is_zero());
  CHECK(apply(F("D0", d0), P("t1*x1", d0)).is_zero());
  Algebra big{Kind::Wm1n, 1, 1};
  CHECK(bracket(F("D0", big), F("t0^2*D1", big)) == F("2*t0^2*D1", big));
  CHECK_THROWS(F("D0"));
}

TEST_CASE("context mismatch") {
  CHECK_THROWS_AS(bracket(F("D1"), F("D1", Algebra{Kind::Wmn, 1, 1})), ContextMismatch);
  CHECK_THROWS(F("P3"));
}
