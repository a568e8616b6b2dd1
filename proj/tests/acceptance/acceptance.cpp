// Acceptance suite: one PASS/FAIL line per criterion, exact arithmetic throughout.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "wmn/cover.hpp"
#include "wmn/jet_checks.hpp"
#include "wmn/operator_rep.hpp"
#include "wmn/sampling.hpp"
#include "wmn/tensor_module.hpp"
#include "wmn/twist.hpp"
#include "wmn/verma.hpp"

using namespace wmn;

namespace {

struct Outcome {
  long checked = 0;
  long failed = 0;
  std::string first_failure;

  void check(bool ok, const std::function<std::string()>& describe) {
    ++checked;
    if (!ok && failed++ == 0) first_failure = describe();
  }
  void absorb(const RelationReport& r, const std::string& where) {
    checked += r.checked;
    if (r.checked == 0) {
      ++failed;
      if (first_failure.empty()) first_failure = where + ": nothing checked";
    }
    if (r.failed > 0) {
      if (failed == 0) first_failure = where + ": " + r.first_failure;
      failed += r.failed;
    }
  }
};

const std::vector<Kind> kAllKinds{Kind::Wmn, Kind::WmnSemidirectD0, Kind::Wm1n};

std::vector<Scalar> lambdas(int m) {
  std::vector<Scalar> out{2};
  for (int i = 1; i <= m; ++i) out.push_back(frac(1, i + 1));
  return out;
}

std::vector<SuperPoly> monomial_window(const Algebra& alg, int radius, std::uint64_t seed, int count) {
  Sampler rng(seed);
  std::vector<SuperPoly> out;
  for (int i = 0; i < count; ++i) out.push_back(SuperPoly::monomial(alg.m, alg.n, rng.monomial(alg, radius)));
  return out;
}

Outcome bracket_vs_composition() {
  Outcome o;
  for (auto [m, n] : {std::pair{1, 1}, {1, 2}, {2, 1}}) {
    for (Kind kind : kAllKinds) {
      Algebra alg{kind, m, n};
      Sampler rng(101);
      auto funcs = monomial_window(alg, 2, 7, 12);
      for (int s = 0; s < 200; ++s) {
        auto x = rng.field(alg, 2, 2), y = rng.field(alg, 2, 2);
        auto xy = bracket(x, y);
        int sgn = sign_pow(*x.parity() * *y.parity());
        for (const auto& f : funcs) {
          o.check(apply(xy, f) == apply(x, apply(y, f)) - Scalar(sgn) * apply(y, apply(x, f)),
                  [&] { return to_string(x) + " | " + to_string(y) + " on " + to_string(f); });
        }
      }
    }
  }
  return o;
}

Outcome super_jacobi() {
  Outcome o;
  for (Kind kind : kAllKinds) {
    for (auto [m, n] : {std::pair{1, 1}, {2, 1}}) {
      Algebra alg{kind, m, n};
      Sampler rng(202);
      for (int s = 0; s < 200; ++s) {
        auto x = rng.field(alg, 2, 2), y = rng.field(alg, 2, 2), z = rng.field(alg, 2, 2);
        int px = *x.parity(), py = *y.parity(), pz = *z.parity();
        auto sum = Scalar(sign_pow(px * pz)) * bracket(x, bracket(y, z)) + Scalar(sign_pow(py * px)) * bracket(y, bracket(z, x)) +
                   Scalar(sign_pow(pz * py)) * bracket(z, bracket(x, y));
        o.check(sum.is_zero(), [&] { return to_string(x) + " | " + to_string(y) + " | " + to_string(z); });
      }
    }
  }
  return o;
}

Outcome smash_relations() {
  Outcome o;
  for (auto [m, n] : {std::pair{1, 1}, {2, 1}, {1, 2}}) {
    for (const char* name : {"trivial", "natural"}) {
      for (bool has_d0 : {false, true}) {
        auto u = tensor_fiber(rep_by_name(name, m, n), lambdas(m), {.has_d0 = has_d0});
        o.absorb(check_smash_relations(u, 2), std::string(name) + " m=" + std::to_string(m) + " n=" + std::to_string(n));
      }
    }
  }
  return o;
}

std::vector<int> root(int m) {
  std::vector<int> r(static_cast<std::size_t>(m + 1), 0);
  for (int i = 1; i <= m; ++i) r[static_cast<std::size_t>(i)] = i % 2 ? 2 : -1;
  return r;
}

Outcome jet_relations() {
  Outcome o;
  for (auto [m, n] : {std::pair{1, 1}, {2, 1}, {2, 0}, {1, 2}}) {
    std::string where = "m=" + std::to_string(m) + " n=" + std::to_string(n);
    for (const char* name : {"trivial", "natural"}) {
      o.absorb(check_jet_relations(fit_jets(tensor_fiber(rep_by_name(name, m, n), lambdas(m), {.has_d0 = true})), 2),
               std::string("fitted ") + name + " " + where);
    }
    auto listed = adjoint_root_jets(m, n, root(m), frac(3, 2), true);
    o.absorb(check_jet_relations(listed, 2), "listed " + where);
    auto fitted = fit_jets(adjoint_root_fiber(m, n, root(m), frac(3, 2), true));
    o.check(fitted.ops == listed.ops, [&] { return "explicit list differs from fit " + where; });
  }
  return o;
}

Outcome degree_bound() {
  Outcome o;
  for (auto [m, n] : {std::pair{1, 1}, {2, 1}, {1, 2}}) {
    for (const char* name : {"trivial", "natural", "natural⊗natural"}) {
      auto jr = fit_jets(tensor_fiber(rep_by_name(name, m, n), lambdas(m), {.has_d0 = true}), 3);
      o.absorb(check_jet_degree_bound(jr, 1), std::string(name) + " m=" + std::to_string(m));
    }
    auto listed = adjoint_root_jets(m, n, root(m), frac(3, 2), true);
    o.absorb(check_jet_degree_bound(listed, 1), "listed m=" + std::to_string(m));
  }
  return o;
}

Outcome gl_embedding() {
  Outcome o;
  for (auto [m, n] : {std::pair{1, 1}, {2, 1}}) {
    o.absorb(gl_embed_check(m, n), "embedding m=" + std::to_string(m));
    o.absorb(subalgebra_check(m, n, true), "subalgebras m=" + std::to_string(m));
  }
  return o;
}

Outcome kernel() {
  Outcome o;
  for (auto [m, n] : {std::pair{1, 1}, {2, 1}, {1, 2}}) {
    for (const char* name : {"trivial", "natural", "natural⊗natural", "str:3/2"}) {
      auto jr = fit_jets(tensor_fiber(rep_by_name(name, m, n), lambdas(m), {.has_d0 = true}));
      o.absorb(j_annihilation_check(jr), std::string(name) + " m=" + std::to_string(m) + " n=" + std::to_string(n));
    }
  }
  return o;
}

Outcome round_trip() {
  Outcome o;
  for (Kind kind : {Kind::Wmn, Kind::WmnSemidirectD0}) {
    for (const char* name : {"trivial", "natural"}) {
      Algebra alg{kind, 2, 1};
      auto spec = make_tensor_spec(alg, rep_by_name(name, 2, 1), {frac(2, 3), frac(1, 2), -1});
      auto jr = fit_jets(tensor_fiber(spec.V, spec.lambda, {.has_d0 = alg.has_d0()}));
      Sampler rng(808);
      for (int s = 0; s < 100; ++s) {
        auto x = rng.field(alg, 3, 2);
        auto w = rng.tensor_vector(spec, 3, 2);
        auto got = from_induced(2, 1, spec.V.dim, induce_from_fiber(jr, x, to_induced(w, spec.V.dim)));
        o.check(got == act(spec, x, w), [&] { return to_string(x) + " on " + to_string(w); });
      }
    }
  }
  return o;
}

Outcome annihilators() {
  Outcome o;
  auto witt = make_tensor_spec(Algebra{Kind::Wmn, 1, 0}, trivial_rep(1, 0), {0, frac(1, 2)});
  AnnWindow big{4, 4, 4};
  auto ell = minimal_ell(witt, 6, big);
  o.check(ell == 2, [&] { return "minimal l = " + (ell ? std::to_string(*ell) : std::string("none")); });
  struct Case {
    TensorModuleSpec spec;
    AnnWindow win;
  };
  std::vector<Case> cases{
      {witt, big},
      {make_tensor_spec(Algebra{Kind::Wmn, 1, 1}, natural_rep(1, 1), {0, frac(1, 3)}), {2, 2, 1}},
      {make_tensor_spec(Algebra{Kind::WmnSemidirectD0, 1, 1}, natural_rep(1, 1), {frac(2, 3), frac(1, 2)}), {2, 2, 1}},
      {make_tensor_spec(Algebra{Kind::Wmn, 2, 1}, natural_rep(2, 1), {0, frac(1, 3), frac(-1, 4)}), {1, 1, 1}},
  };
  for (const auto& c : cases) {
    int N = minimal_N_search(c.spec, 6, c.win);
    o.check(N <= 4, [&] { return "N = " + std::to_string(N); });
    o.check(ann_annihilates(c.spec, N, c.win), [&] { return "annihilators fail at N = " + std::to_string(N); });
  }
  return o;
}

Outcome cover_window() {
  Outcome o;
  std::vector<TensorModuleSpec> specs{
      make_tensor_spec(Algebra{Kind::Wmn, 1, 0}, trivial_rep(1, 0), {0, frac(1, 2)}),
      make_tensor_spec(Algebra{Kind::Wmn, 1, 1}, natural_rep(1, 1), {0, frac(1, 3)}),
      make_tensor_spec(Algebra{Kind::Wmn, 2, 1}, natural_rep(2, 1), {0, frac(1, 3), frac(-1, 4)}),
  };
  Sampler rng(1010);
  for (const auto& spec : specs) {
    const Algebra& alg = spec.alg;
    int N = minimal_N_search(spec, 6, {1, 1, 1});
    long bound = cover_span_bound(spec, N);
    for (int s = 0; s < 50; ++s) {
      auto tau = rng.field(alg, 1, 2);
      std::vector<int> t(static_cast<std::size_t>(alg.m + 1), 0);
      for (int i = 1; i <= alg.m; ++i) t[static_cast<std::size_t>(i)] = rng.uniform(-N, N);
      int far = rng.uniform(1, alg.m);
      t[static_cast<std::size_t>(far)] = (rng.coin() ? 1 : -1) * rng.uniform(N / 2 + 1, N + 3);
      auto mono = Monomial{t, static_cast<grassmann::Bits>(rng.uniform(0, (1 << alg.n) - 1))};
      auto c = psi(tau, TensorVector::basis(alg.m, alg.n, mono, rng.uniform(0, spec.V.dim - 1)));
      o.check(cover_spread(c) > N / 2, [&] { return "sample inside the window: " + to_string(c); });
      auto r = window_reduce(spec, c, N);
      o.check(cover_spread(r) <= N / 2, [&] { return "not reduced: " + to_string(c); });
      o.check(eval_equal(spec, c, r, 3), [&] { return "evaluation differs: " + to_string(c); });
      o.check(window_reduce(spec, r, N) == r, [&] { return "not idempotent: " + to_string(c); });
      o.check(cover_weight_count(r) <= bound, [&] { return "spanning bound exceeded: " + to_string(r); });
    }
  }
  return o;
}

Outcome verma_exact() {
  Outcome o;
  auto one = radical_at(make_hw_spec(trivial_rep(0, 0), {1}), 1, 3);
  o.check(one.quotient_dims[1] == 1, [&] { return "lambda_0 = 1: dim L_-1 = " + std::to_string(one.quotient_dims[1]); });
  auto zero = radical_at(make_hw_spec(trivial_rep(0, 0), {0}), 1, 3);
  o.check(zero.quotient_dims[1] == 0, [&] { return "lambda_0 = 0: dim L_-1 = " + std::to_string(zero.quotient_dims[1]); });
  const int depth = 3;
  auto rep = radical_at(make_hw_spec(trivial_rep(0, 1), {1}), depth, depth + 2);
  o.check(!rep.windowed, [] { return std::string("exact mode expected"); });
  o.check(static_cast<int>(rep.quotient_dims.size()) == depth + 1, [] { return std::string("table incomplete"); });
  for (int d = 0; d <= depth; ++d) {
    auto i = static_cast<std::size_t>(d);
    o.check(rep.quotient_dims[i] == rep.m_dims[i] - rep.radical_dims[i], [&] { return "inconsistent degree " + std::to_string(-d); });
  }
  o.check(rep.stable_from <= depth + 2, [&] { return "stable from E = " + std::to_string(rep.stable_from); });
  o.check(rep.radical_dims[0] == 0, [] { return std::string("radical meets T"); });
  std::printf("      W(1,1), T = Λ(ξ₁), λ₀ = 1: dim M =");
  for (long v : rep.m_dims) std::printf(" %ld", v);
  std::printf(", dim L =");
  for (long v : rep.quotient_dims) std::printf(" %ld", v);
  std::printf(", stable from E = %d\n", rep.stable_from);
  return o;
}

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

Outcome twisting() {
  Outcome o;
  Algebra alg{Kind::Wm1n, 1, 1};
  Sampler rng(1212);
  std::vector<SuperPoly> funcs;
  for (int a = -2; a <= 2; ++a) {
    for (int b = -2; b <= 2; ++b) {
      for (grassmann::Bits xi = 0; xi < 2; ++xi) funcs.push_back(SuperPoly::monomial(1, 1, Monomial{{a, b}, xi}));
    }
  }
  std::set<WeightVector> sup{{frac(1, 2), 0}, {-1, 3}, {frac(2, 3), frac(-5, 2)}};
  std::vector<IntMatrix> thetas;
  for (int s = 0; s < 5; ++s) thetas.push_back(random_gl2(rng));
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    const auto& a = thetas[i];
    const auto& b = thetas[(i + 1) % thetas.size()];
    o.check(support_transform(a * b, sup) == support_transform(a, support_transform(b, sup)), [&] { return "support composition " + to_string(a); });
    o.check(support_transform(a.inverse(), support_transform(a, sup)) == sup, [&] { return "support inverse " + to_string(a); });
    for (int k = 0; k < 10; ++k) {
      auto x = rng.field(alg, 2, 2);
      o.check(twist_field(a * b, x) == twist_field(a, twist_field(b, x)), [&] { return "field composition " + to_string(x); });
      for (const auto& f : funcs) {
        o.check(apply(twist_field(a, x), f) == twist_poly(a, apply(x, twist_poly(a.inverse(), f))),
                [&] { return "defining relation " + to_string(a) + " " + to_string(x) + " on " + to_string(f); });
      }
    }
  }
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  Outcome (*run)();
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "bracket agrees with operator composition", 30, bracket_vs_composition},
      {2, "super Jacobi identity", 30, super_jacobi},
      {3, "smash relations on tensor fibers", 120, smash_relations},
      {4, "jet relations on fitted and listed jets", 120, jet_relations},
      {5, "jet degree bound", 60, degree_bound},
      {6, "gl(m,n) embedding and supercommuting subalgebras", 120, gl_embedding},
      {7, "J annihilates tensor fibers", 120, kernel},
      {8, "induced module round trip", 120, round_trip},
      {9, "annihilator orders", 120, annihilators},
      {10, "cover window reduction", 120, cover_window},
      {11, "exact highest-weight tables", 300, verma_exact},
      {12, "twisting laws", 120, twisting},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    std::string error;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool pass = error.empty() && o.failed == 0 && o.checked > 0 && secs < c.limit_s;
    failures += pass ? 0 : 1;
    std::printf("%s  C%-2d %-50s %8ld checks %6ld failed  %7.2f s (limit %.0f s)\n", pass ? "PASS" : "FAIL", c.id, c.name, o.checked,
                o.failed, secs, c.limit_s);
    if (!error.empty()) std::printf("      exception: %s\n", error.c_str());
    if (!o.first_failure.empty()) std::printf("      first failure: %s\n", o.first_failure.c_str());
    if (secs >= c.limit_s) std::printf("      over the time limit\n");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
