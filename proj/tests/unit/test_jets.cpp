#include <doctest.h>

#include "wmn/errors.hpp"
#include "wmn/jet_checks.hpp"
#include "wmn/jets.hpp"
#include "wmn/operator_rep.hpp"
#include "wmn/polyfit.hpp"
#include "wmn/sampling.hpp"

using namespace wmn;
namespace g = grassmann;

namespace {

JetElement J(int m, int n, GenKey k, const Scalar& c = 1, g::Bits prefix = 0) { return JetElement::gen(m, n, std::move(k), c, prefix); }
std::vector<int> neg(std::vector<int> v) {
  for (auto& x : v) x = -x;
  return v;
}

void require_ok(const RelationReport& r) {
  INFO(r.first_failure);
  CHECK(r.checked > 0);
  CHECK(r.failed == 0);
}

}  // namespace

TEST_CASE("jet bracket examples") {
  auto d1 = J(2, 0, jet_d(1, 0, neg(eps(2, 1))));
  auto d2 = J(2, 0, jet_d(2, 0, neg(eps(2, 2))));
  CHECK(jet_bracket(d1, d2).is_zero());
  auto d1k0 = J(1, 0, jet_d(1, 0, eps(1, 0)));
  CHECK(jet_bracket(J(1, 0, jet_d(1, 0, neg(eps(1, 1)))), d1k0).is_zero());

  auto e21 = J(2, 0, jet_d(1, 0, sub_exps(eps(2, 2), eps(2, 1))));
  auto e12 = J(2, 0, jet_d(2, 0, sub_exps(eps(2, 1), eps(2, 2))));
  auto expect = J(2, 0, jet_d(2, 0, eps(2, 0))) - J(2, 0, jet_d(1, 0, eps(2, 0)));
  CHECK(jet_bracket(e21, e12) == expect);
}

TEST_CASE("invalid jet index is rejected") {
  CHECK_FALSE(jet_valid(jet_p(1, 0, neg(eps(1, 1)))));
  CHECK(jet_valid(jet_d(1, 0, neg(eps(1, 1)))));
}

TEST_CASE("normal form") {
  auto x = J(2, 1, jet_d(1, g::bit(1), sub_exps(eps(2, 2), eps(2, 1))));
  CHECK(jet_nf(x) == J(2, 1, jet_d(1, 0, sub_exps(eps(2, 2), eps(2, 1))), 1, g::bit(1)));
  auto p = J(1, 2, jet_p(1, g::bit(2), eps(1, 0)));
  CHECK(jet_nf(p) == p);
  CHECK(jet_nf(J(2, 1, jet_d0(g::bit(1), eps(2, 1)))).is_zero());
  CHECK(jet_nf(J(2, 0, jet_d(1, 0, add_exps(eps(2, 1), eps(2, 1))))).is_zero());

  Sampler rng(11);
  for (int t = 0; t < 50; ++t) {
    JetElement z(2, 2);
    for (const auto& k : jet_generators(2, 2, true, 2)) {
      if (rng.coin()) z += J(2, 2, k, rng.rational(), static_cast<g::Bits>(rng.uniform(0, 3)));
    }
    CHECK(jet_nf(jet_nf(z)) == jet_nf(z));
  }
}

TEST_CASE("gl embedding") {
  CHECK(gl_embed_unit(2, 0, 0, 1) == J(2, 0, jet_d(2, 0, sub_exps(eps(2, 1), eps(2, 2)))));
  auto e = gl_embed_unit(1, 1, 1, 0);
  CHECK(e == J(1, 1, jet_d(1, g::bit(1), neg(eps(1, 1)))) - J(1, 1, jet_d(1, 0, neg(eps(1, 1))), 1, g::bit(1)));
  for (auto [m, n] : {std::pair{1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
    CAPTURE(m);
    CAPTURE(n);
    require_ok(gl_embed_check(m, n));
    require_ok(subalgebra_check(m, n, true));
  }
}

TEST_CASE("jet relations agree with the smash algebra") {
  for (auto [m, n] : {std::pair{1, 0}, {1, 1}, {2, 0}, {2, 1}, {1, 2}}) {
    CAPTURE(m);
    CAPTURE(n);
    require_ok(jets_vs_smash(m, n, true, 3, n <= 1));
  }
}

TEST_CASE("polynomial fitting") {
  std::map<std::vector<int>, Scalar> planted{{{0, 0}, 3}, {{1, 0}, frac(-1, 2)}, {{1, 1}, 5}, {{0, 2}, frac(7, 3)}};
  auto f = [&](const std::vector<int>& x) { return eval_divided_powers(planted, x, Scalar(0)); };
  auto fit = fit_divided_powers(f, 2, 3, Scalar(0));
  for (const auto& [k, c] : fit) {
    auto it = planted.find(k);
    CHECK(c == (it == planted.end() ? Scalar(0) : it->second));
  }
  CHECK(eval_divided_powers(fit, {-4, 9}, Scalar(0)) == f({-4, 9}));
}

TEST_CASE("fiber module of the natural representation") {
  GlRep V = natural_rep(1, 1);
  auto u = tensor_fiber(V, {2, frac(1, 2)}, {.has_d0 = true});
  Matrix id = Matrix::identity(4);
  CHECK(u.smash(GenKey{GenTag::D, 1, 0, {0, 0}}) == Scalar(frac(1, 2)) * id);
  CHECK(u.smash(GenKey{GenTag::D0, 0, 0, {0, 3}}) == Scalar(2) * id);
  require_ok(check_smash_relations(u, 2));

  auto jr = fit_jets(u);
  require_ok(check_jet_degree_bound(jr, 1));
  require_ok(check_jet_relations(jr, 2));
  require_ok(j_annihilation_check(jr));
  for (int s = -3; s <= 3; ++s) CHECK(expand_eval(jr, GenTag::P, 1, g::bit(1), {0, s}) == u.smash(GenKey{GenTag::P, 1, g::bit(1), {0, s}}));
}

TEST_CASE("J annihilation") {
  for (auto [m, n] : {std::pair{1, 1}, {2, 1}}) {
    std::vector<Scalar> lam(static_cast<std::size_t>(m + 1), frac(1, 3));
    require_ok(j_annihilation_check(fit_jets(tensor_fiber(trivial_rep(m, n), lam, {.has_d0 = true}))));
    require_ok(j_annihilation_check(fit_jets(tensor_fiber(natural_rep(m, n), lam, {.has_d0 = true}))));
  }
  auto bad = fit_jets(tensor_fiber(natural_rep(1, 1), {2, frac(1, 2)}, {.has_d0 = true, .planted_quadratic = 1}));
  CHECK_FALSE(j_annihilation_check(bad).ok());
  CHECK_THROWS_AS(fit_jets(tensor_fiber(natural_rep(1, 1), {2, frac(1, 2)}, {.planted_quadratic = 1}), 1), DomainError);
}

TEST_CASE("adjoint root fiber") {
  for (auto [m, n] : {std::pair{1, 1}, {2, 1}, {2, 0}}) {
    CAPTURE(m);
    CAPTURE(n);
    std::vector<int> r(static_cast<std::size_t>(m + 1), 0);
    r[1] = 2;
    if (m > 1) r[2] = -1;
    auto u = adjoint_root_fiber(m, n, r, frac(3, 2), true);
    auto fitted = fit_jets(u);
    auto listed = adjoint_root_jets(m, n, r, frac(3, 2), true);
    CHECK(fitted.ops == listed.ops);
    require_ok(check_smash_relations(u, 1));
    require_ok(check_jet_relations(listed, 2));
  }
}

TEST_CASE("induced module matches the tensor module") {
  Sampler rng(5);
  for (auto kind : {Kind::Wmn, Kind::WmnSemidirectD0}) {
    Algebra alg{kind, 2, 1};
    GlRep V = natural_rep(2, 1);
    std::vector<Scalar> lam{frac(2, 3), frac(1, 2), -1};
    auto spec = make_tensor_spec(alg, V, lam);
    auto jr = fit_jets(tensor_fiber(V, lam, {.has_d0 = alg.has_d0()}));
    for (int t = 0; t < 100; ++t) {
      auto x = rng.field(alg, 3, 2);
      auto w = rng.tensor_vector(spec, 3, 2);
      auto got = from_induced(2, 1, V.dim, induce_from_fiber(jr, x, to_induced(w, V.dim)));
      CHECK(got == act(spec, x, w));
    }
  }
  // trivial data: only the lambda term survives
  Algebra alg{Kind::Wmn, 1, 0};
  auto spec = make_tensor_spec(alg, trivial_rep(1, 0), {0, frac(5, 2)});
  auto jr = fit_jets(tensor_fiber(trivial_rep(1, 0), {0, frac(5, 2)}));
  CHECK(jr.ops.size() == 1);
  auto x = VectorField::basis(alg, Monomial{{0, 3}, 0}, Generator::d(1));
  InducedVector w{{{{0, 1}, 0}, 1}};
  InducedVector expect{{{{0, 4}, 0}, frac(7, 2)}};
  CHECK(induce_from_fiber(jr, x, w) == expect);
}
