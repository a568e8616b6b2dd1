#include <doctest.h>

#include "wmn/errors.hpp"
#include "wmn/gl.hpp"

using namespace wmn;

namespace {
GlElement E(int M, int N, int a, int b) { return GlElement::unit(M, N, a, b); }
Vec basis(int dim, int i) {
  Vec v(static_cast<std::size_t>(dim), 0);
  v[static_cast<std::size_t>(i)] = 1;
  return v;
}
}  // namespace

TEST_CASE("gl bracket of matrix units") {
  // gl(2,1): even indices 0,1, odd index 2.
  CHECK(gl_bracket(E(2, 1, 0, 0), E(2, 1, 0, 1)) == E(2, 1, 0, 1));
  CHECK(gl_bracket(E(2, 1, 0, 0), E(2, 1, 1, 1)) == GlElement(2, 1));
  // odd-odd: [e_{2,0}, e_{0,2}] = e_{2,2} + e_{0,0}
  CHECK(gl_bracket(E(2, 1, 2, 0), E(2, 1, 0, 2)) == E(2, 1, 2, 2) + E(2, 1, 0, 0));
  CHECK(E(2, 1, 2, 0).parity() == 1);
  CHECK(E(2, 1, 2, 2).parity() == 0);
  CHECK_FALSE((E(2, 1, 2, 0) + E(2, 1, 0, 0)).parity().has_value());
}

TEST_CASE("natural representation") {
  auto r = natural_rep(1, 1);
  CHECK(r.dim == 2);
  CHECK(r.parity == std::vector<int>{0, 1});
  CHECK(r.e(0, 0).apply(basis(2, 0)) == basis(2, 0));
  CHECK(r.e(1, 0).apply(basis(2, 0)) == basis(2, 1));
  CHECK(rep_check(natural_rep(2, 1)).ok);
  CHECK(rep_check(natural_rep(0, 2)).ok);
  CHECK(rep_check(trivial_rep(2, 1)).ok);
  CHECK(rep_check(supertrace_rep(1, 2, frac(3, 2))).ok);
}

TEST_CASE("rep_check catches a broken representation") {
  auto r = natural_rep(1, 1);
  r.e(1, 0) *= Scalar(2);
  auto res = rep_check(r);
  CHECK_FALSE(res.ok);
  CHECK_FALSE(res.failure.empty());
}

TEST_CASE("tensor products") {
  auto tt = tensor_rep(trivial_rep(1, 1), trivial_rep(1, 1));
  CHECK(tt.dim == 1);
  CHECK(tt.e(0, 0).is_zero());
  auto nn = tensor_rep(natural_rep(1, 1), natural_rep(1, 1));
  CHECK(nn.dim == 4);
  CHECK(rep_check(nn).ok);
  CHECK(rep_check(tensor_rep(natural_rep(2, 1), natural_rep(2, 1))).ok);
  CHECK(rep_by_name("natural⊗natural", 1, 1).dim == 4);
  CHECK(rep_by_name("str:2", 1, 1).dim == 1);
  CHECK_THROWS(rep_by_name("adjoint?", 1, 1));
}

TEST_CASE("submodule closure") {
  CHECK(submodule_closure(trivial_rep(1, 1), {{frac(3, 2)}}).size() == 1);
  CHECK(submodule_closure(natural_rep(1, 1), {basis(2, 0)}).size() == 2);
  CHECK(submodule_closure(natural_rep(2, 1), {}).empty());
}

TEST_CASE("quotients") {
  auto n = natural_rep(2, 1);
  auto q0 = quotient_rep(n, {});
  CHECK(q0.dim == 3);
  CHECK(rep_check(q0).ok);
  std::vector<Vec> all{basis(3, 0), basis(3, 1), basis(3, 2)};
  CHECK(quotient_rep(n, all).dim == 0);

  // natural ⊗ natural over gl(1,1) has a proper invariant subspace.
  auto nn = tensor_rep(natural_rep(1, 1), natural_rep(1, 1));
  std::vector<Vec> found;
  for (int i = 0; i < 4 && found.empty(); ++i) {
    auto c = submodule_closure(nn, {basis(4, i)});
    if (c.size() < 4) found = c;
  }
  if (found.empty()) {
    for (int i = 0; i < 4 && found.empty(); ++i) {
      for (int j = i + 1; j < 4 && found.empty(); ++j) {
        for (int sg : {1, -1}) {
          Vec v = basis(4, i);
          v[static_cast<std::size_t>(j)] = sg;
          auto c = submodule_closure(nn, {v});
          if (c.size() < 4) {
            found = c;
            break;
          }
        }
      }
    }
  }
  REQUIRE_FALSE(found.empty());
  auto q = quotient_rep(nn, found);
  CHECK(q.dim == 4 - static_cast<int>(found.size()));
  CHECK(rep_check(q).ok);
  CHECK_THROWS_AS(quotient_rep(n, {basis(3, 1)}), DomainError);
}

TEST_CASE("simplicity heuristic") {
  CHECK(likely_simple(natural_rep(2, 1), 5, 1));
  CHECK_FALSE(likely_simple(tensor_rep(natural_rep(1, 1), natural_rep(1, 1)), 5, 1));
}
