#include <doctest.h>

#include <random>

#include "wmn/errors.hpp"
#include "wmn/expr.hpp"
#include "wmn/sampling.hpp"
#include "wmn/tensor_module.hpp"
#include "wmn/twist.hpp"

using namespace wmn;

namespace {

const Algebra B11{Kind::Wm1n, 1, 1};
VectorField F(const std::string& s, const Algebra& alg = B11) { return parse_field(s, alg); }

// Random product of elementary matrices and sign flips in GL_2(Z).
IntMatrix random_gl2(Sampler& rng) {
  IntMatrix out = IntMatrix::identity(2);
  for (int k = 0; k < 4; ++k) {
    long a = rng.uniform(-2, 2);
    switch (rng.uniform(0, 2)) {
      case 0: out = IntMatrix({{1, a}, {0, 1}}) * out; break;
      case 1: out = IntMatrix({{1, 0}, {a, 1}}) * out; break;
      default: out = IntMatrix({{-1, 0}, {0, 1}}) * out; break;
    }
  }
  return out;
}

std::vector<SuperPoly> window(const Algebra& alg, int radius) {
  std::vector<SuperPoly> out;
  for (int a = -radius; a <= radius; ++a) {
    for (int b = -radius; b <= radius; ++b) {
      for (grassmann::Bits xi = 0; xi < (1u << alg.n); ++xi) {
        out.push_back(SuperPoly::monomial(alg.m, alg.n, Monomial{{a, b}, xi}));
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("integer matrices") {
  auto th = parse_int_matrix("1,1;0,1");
  CHECK(th.determinant() == 1);
  CHECK(th.inverse() == parse_int_matrix("1,-1;0,1"));
  CHECK(th * th.inverse() == IntMatrix::identity(2));
  CHECK(to_string(th) == to_string(parse_int_matrix(to_string(th))));
  CHECK_THROWS_AS(parse_int_matrix("2,0;0,1").inverse(), DomainError);
  CHECK_THROWS(parse_int_matrix("1,2;3"));
}

TEST_CASE("twist examples") {
  auto id = IntMatrix::identity(2);
  auto x = F("3/2*t0*t1^-2*x1*D1 + t0^-1*P1");
  CHECK(twist_field(id, x) == x);
  auto swap = IntMatrix::permutation(2, 0, 1);
  CHECK(twist_field(swap, F("D0")) == F("D1"));
  auto th = parse_int_matrix("1,1;0,1");
  auto y = F("t0*D0");
  for (const auto& f : window(B11, 3)) {
    CHECK(apply(twist_field(th, y), f) == twist_poly(th, apply(y, twist_poly(th.inverse(), f))));
  }
  CHECK_THROWS_AS(twist_field(th, parse_field("D1", Algebra{Kind::Wmn, 1, 1})), ContextMismatch);
}

TEST_CASE("support transform examples") {
  std::set<WeightVector> s{{1, 0}};
  CHECK(support_transform(IntMatrix::identity(2), s) == s);
  CHECK(support_transform(IntMatrix::permutation(2, 0, 1), s) == std::set<WeightVector>{{0, 1}});
  CHECK(support_transform(parse_int_matrix("1,1;0,1"), s) == std::set<WeightVector>{{1, -1}});
}

TEST_CASE("coset representatives") {
  CHECK(normalize_coset({3, frac(1, 2)}) == std::vector<Scalar>{0, frac(1, 2)});
  CHECK(normalize_coset({0, 0}) == std::vector<Scalar>{0, 0});
  CHECK(normalize_coset({frac(-2, 3), 5}) == std::vector<Scalar>{frac(-2, 3), 0});
}

TEST_CASE("composition laws and defining relation for sampled theta") {
  Sampler rng(21);
  auto funcs = window(B11, 2);
  for (int s = 0; s < 5; ++s) {
    auto a = random_gl2(rng), b = random_gl2(rng);
    REQUIRE(a.is_unimodular());
    for (int k = 0; k < 10; ++k) {
      auto x = rng.field(B11, 2, 2), y = rng.field(B11, 2, 2);
      CHECK(twist_field(a * b, x) == twist_field(a, twist_field(b, x)));
      CHECK(twist_field(a.inverse(), twist_field(a, x)) == x);
      CHECK(twist_field(a, bracket(x, y)) == bracket(twist_field(a, x), twist_field(a, y)));
      for (const auto& f : funcs) {
        CHECK(apply(twist_field(a, x), f) == twist_poly(a, apply(x, twist_poly(a.inverse(), f))));
      }
    }
    std::set<WeightVector> sup{{frac(1, 2), 0}, {-1, 3}, {frac(2, 3), frac(-5, 2)}};
    CHECK(support_transform(a * b, sup) == support_transform(a, support_transform(b, sup)));
    CHECK(support_transform(IntMatrix::identity(2), sup) == sup);
  }
}

TEST_CASE("support of a twisted tensor module") {
  // X acts on the twisted module through twist_field(theta, X).
  Sampler rng(4);
  auto spec = make_tensor_spec(B11, natural_rep(2, 1), {frac(1, 3), frac(-1, 2)});
  for (int s = 0; s < 5; ++s) {
    auto th = random_gl2(rng);
    auto mono = rng.monomial(B11, 3);
    auto w = TensorVector::basis(1, 1, mono, rng.uniform(0, 2));
    auto mu = *weight(spec, w);
    WeightVector twisted;
    for (int k = 0; k <= 1; ++k) {
      auto image = act(spec, twist_field(th, VectorField::basis(B11, Monomial::one(1), Generator::d(k))), w);
      REQUIRE(w.terms().size() == 1);
      Scalar ev = image.is_zero() ? Scalar(0) : image.terms().begin()->second;
      CHECK(image == ev * w);
      twisted.push_back(ev);
    }
    CHECK(support_transform(th.transpose(), {mu}) == std::set<WeightVector>{twisted});
  }
}
