#include "wmn/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "wmn/cover.hpp"
#include "wmn/errors.hpp"
#include "wmn/gl.hpp"
#include "wmn/jet_checks.hpp"
#include "wmn/operator_rep.hpp"
#include "wmn/sampling.hpp"
#include "wmn/superpoly.hpp"
#include "wmn/tensor_module.hpp"
#include "wmn/verma.hpp"

namespace wmn {

namespace {

std::size_t sz(int v) { return static_cast<std::size_t>(v); }

class Checks {
 public:
  RelationReport& operator[](const std::string& name) { return reports_[name]; }
  void check(const std::string& name, bool ok, const std::function<std::string()>& describe) {
    auto& r = reports_[name];
    ++r.checked;
    if (!ok && r.failed++ == 0) r.first_failure = describe();
  }
  bool pass() const {
    for (const auto& [k, r] : reports_) {
      if (!r.ok() || r.checked == 0) return false;
    }
    return true;
  }
  json to_json() const {
    json out = json::object();
    for (const auto& [k, r] : reports_) out[k] = wmn::to_json(r);
    return out;
  }

 private:
  std::map<std::string, RelationReport> reports_;
};

std::vector<Scalar> lambda_of(const SuiteConfig& cfg, int m) {
  return cfg.lambda.empty() ? default_lambda(m) : cfg.lambda;
}

int gl_even_count(const SuiteConfig& cfg) { return cfg.kind == Kind::Wm1n ? cfg.m + 1 : cfg.m; }

TensorModuleSpec module_spec(const SuiteConfig& cfg) {
  Algebra alg{cfg.kind, cfg.m, cfg.n};
  auto spec = make_tensor_spec(alg, rep_by_name(cfg.V, gl_even_count(cfg), cfg.n), lambda_of(cfg, cfg.m));
  spec.planted_defect = cfg.corrupt_sign;
  return spec;
}

GlRep fiber_rep(const SuiteConfig& cfg) { return rep_by_name(cfg.V, cfg.m, cfg.n); }

std::string str(const VectorField& x) { return to_string(x); }

int parity_or(const VectorField& x) { return x.parity().value_or(0); }

void superalg_axioms(const SuiteConfig& cfg, Checks& c) {
  Sampler rng(cfg.seed);
  Algebra alg{cfg.kind, cfg.m, cfg.n};
  for (int s = 0; s < cfg.samples; ++s) {
    int pa = rng.uniform(0, 1), pb = rng.uniform(0, 1);
    auto a = rng.homogeneous_poly(alg, 3, 2, pa);
    auto b = rng.homogeneous_poly(alg, 3, 2, pb);
    auto e = rng.poly(alg, 3, 2);
    c.check("associativity", (a * b) * e == a * (b * e), [&] { return to_string(a) + " | " + to_string(b); });
    c.check("supercommutativity", a * b == Scalar((pa & pb) ? -1 : 1) * (b * a), [&] { return to_string(a) + " | " + to_string(b); });
    for (int al = 1; al <= cfg.n; ++al) {
      c.check("odd derivation squares to zero", left_deriv(al, left_deriv(al, e)).is_zero(), [&] { return to_string(e); });
      c.check("left/right derivative relation", right_deriv(a, al) == Scalar(pa ? 1 : -1) * left_deriv(al, a),
              [&] { return to_string(a); });
      auto lhs = right_deriv(a * b, al);
      auto rhs = a * right_deriv(b, al) + Scalar(pb ? -1 : 1) * (right_deriv(a, al) * b);
      c.check("right Leibniz rule", lhs == rhs, [&] { return to_string(a) + " | " + to_string(b); });
      auto llhs = left_deriv(al, a * b);
      auto lrhs = left_deriv(al, a) * b + Scalar(pa ? -1 : 1) * (a * left_deriv(al, b));
      c.check("left Leibniz rule", llhs == lrhs, [&] { return to_string(a) + " | " + to_string(b); });
    }
    for (int i : alg.even_slots()) {
      if (i == 0 && !alg.allows_t0()) continue;
      auto lhs = even_deriv(i, a * b);
      c.check("even Leibniz rule", lhs == even_deriv(i, a) * b + a * even_deriv(i, b), [&] { return to_string(a); });
    }
  }
}

void jacobi(const SuiteConfig& cfg, Checks& c) {
  Sampler rng(cfg.seed);
  Algebra alg{cfg.kind, cfg.m, cfg.n};
  for (int s = 0; s < cfg.samples; ++s) {
    auto x = rng.field(alg, 2, 2), y = rng.field(alg, 2, 2), z = rng.field(alg, 2, 2);
    int px = parity_or(x), py = parity_or(y), pz = parity_or(z);
    auto sum = Scalar(sign_pow(px * pz)) * bracket(x, bracket(y, z)) + Scalar(sign_pow(py * px)) * bracket(y, bracket(z, x)) +
               Scalar(sign_pow(pz * py)) * bracket(z, bracket(x, y));
    c.check("super Jacobi", sum.is_zero(), [&] { return str(x) + " | " + str(y) + " | " + str(z); });
    auto xy = bracket(x, y);
    c.check("super antisymmetry", xy == Scalar(-sign_pow(px * py)) * bracket(y, x), [&] { return str(x) + " | " + str(y); });
    auto wx = h_weight(x), wy = h_weight(y), wxy = h_weight(xy);
    if (wx && wy && !xy.is_zero()) {
      c.check("weight additivity", wxy && *wxy == add_exps(*wx, *wy), [&] { return str(x) + " | " + str(y); });
    }
  }
}

void bracket_vs_composition(const SuiteConfig& cfg, Checks& c) {
  Sampler rng(cfg.seed);
  Algebra alg{cfg.kind, cfg.m, cfg.n};
  for (int s = 0; s < cfg.samples; ++s) {
    auto x = rng.field(alg, 2, 2), y = rng.field(alg, 2, 2);
    auto f = rng.poly(alg, 3, 2);
    int sgn = sign_pow(parity_or(x) * parity_or(y));
    auto lhs = apply(bracket(x, y), f);
    auto rhs = apply(x, apply(y, f)) - Scalar(sgn) * apply(y, apply(x, f));
    c.check("bracket equals supercommutator of operators", lhs == rhs, [&] { return str(x) + " | " + str(y) + " | " + to_string(f); });
  }
}

void module_axiom(const SuiteConfig& cfg, Checks& c) {
  Sampler rng(cfg.seed);
  auto spec = module_spec(cfg);
  for (int s = 0; s < cfg.samples; ++s) {
    auto x = rng.field(spec.alg, 2, 2), y = rng.field(spec.alg, 2, 2);
    auto w = rng.tensor_vector(spec, 2, 2);
    c.check("module axiom", module_axiom_check(spec, x, y, w), [&] { return str(x) + " | " + str(y) + " | " + to_string(w); });
  }
}

TensorFiberOptions fiber_options(const SuiteConfig& cfg) { return {.has_d0 = cfg.kind != Kind::Wmn}; }

void smash(const SuiteConfig& cfg, Checks& c) {
  auto lam = lambda_of(cfg, cfg.m);
  c["operator identities"] = check_smash_relations(tensor_fiber(fiber_rep(cfg), lam, fiber_options(cfg)), cfg.window);
}

void jets(const SuiteConfig& cfg, Checks& c) {
  auto lam = lambda_of(cfg, cfg.m);
  auto jr = fit_jets(tensor_fiber(fiber_rep(cfg), lam, fiber_options(cfg)));
  c["fitted jet relations"] = check_jet_relations(jr, 2);
  c["fitted degree bound"] = check_jet_degree_bound(jr, 1);
  std::vector<int> r(sz(cfg.m + 1), 0);
  for (int i = 1; i <= cfg.m; ++i) r[sz(i)] = i % 2 ? 2 : -1;
  auto listed = adjoint_root_jets(cfg.m, cfg.n, r, lam[0], fiber_options(cfg).has_d0);
  c["root-space jet relations"] = check_jet_relations(listed, 2);
  auto fitted = fit_jets(adjoint_root_fiber(cfg.m, cfg.n, r, lam[0], fiber_options(cfg).has_d0));
  c.check("root-space list matches fit", fitted.ops == listed.ops, [] { return std::string("jet tables differ"); });
}

void ann(const SuiteConfig& cfg, Checks& c) {
  auto spec = module_spec(cfg);
  AnnWindow win{cfg.window, cfg.window, cfg.window};
  auto ell = minimal_ell(spec, 6, win);
  c.check("omega annihilates", ell.has_value(), [] { return std::string("no l <= 6"); });
  if (!ell) return;
  int N = minimal_N_search(spec, *ell + 2, win);
  c.check("N within l + 2", N <= *ell + 2, [&] { return "N = " + std::to_string(N); });
  c.check("annihilators at N", ann_annihilates(spec, N, win), [&] { return "N = " + std::to_string(N); });
}

void cover(const SuiteConfig& cfg, Checks& c) {
  auto spec = module_spec(cfg);
  Sampler rng(cfg.seed);
  int N = minimal_N_search(spec, 6, {1, 1, 1});
  long bound = cover_span_bound(spec, N);
  const int W = std::min(cfg.window, 2);
  for (int s = 0; s < cfg.samples; ++s) {
    auto tau = rng.field(spec.alg, 1, 2);
    auto mono = rng.monomial(spec.alg, N + 3);
    auto u = TensorVector::basis(spec.alg.m, spec.alg.n, mono, rng.uniform(0, spec.V.dim - 1));
    auto cc = psi(tau, u);
    auto red = window_reduce(spec, cc, N);
    c.check("reduced into window", cover_spread(red) <= N / 2, [&] { return to_string(cc); });
    c.check("evaluation preserved", eval_equal(spec, cc, red, W), [&] { return to_string(cc); });
    c.check("idempotent", window_reduce(spec, red, N) == red, [&] { return to_string(cc); });
    c.check("spanning bound", cover_weight_count(red) <= bound, [&] { return to_string(red); });
    auto eta = rng.field(spec.alg, 1, 1);
    c.check("pi intertwines", pi(spec, cover_act(spec, eta, cc)) == act(spec, eta, pi(spec, cc)), [&] { return to_string(cc); });
  }
}

// Windowed mode grows past memory beyond depth 1.
int verma_depth(const SuiteConfig& cfg) { return cfg.m == 0 ? cfg.depth : std::min(cfg.depth, 1); }

void verma(const SuiteConfig& cfg, Checks& c, json& extra) {
  auto lam = lambda_of(cfg, cfg.m);
  auto hw = make_hw_spec(rep_by_name(cfg.V, cfg.m, cfg.n), lam, cfg.m == 0 ? 0 : 1);
  int depth = verma_depth(cfg);
  auto rep = radical_at(hw, depth, cfg.raise_depth);
  c.check("radical meets T trivially", rep.radical_dims[0] == 0, [] { return std::string("degree 0"); });
  for (int d = 0; d <= depth; ++d) {
    c.check("quotient dims", rep.quotient_dims[sz(d)] == rep.m_dims[sz(d)] - rep.radical_dims[sz(d)], [&] { return std::to_string(d); });
  }
  for (std::size_t e = 1; e < rep.radical_by_E.size(); ++e) {
    for (int d = 0; d <= depth; ++d) {
      c.check("candidate radical shrinks in E", rep.radical_by_E[e][sz(d)] <= rep.radical_by_E[e - 1][sz(d)],
              [&] { return "E = " + std::to_string(e + 1) + ", degree " + std::to_string(-d); });
    }
  }
  c.check("stabilized", rep.stable_from <= cfg.raise_depth, [] { return std::string("no stabilization"); });
  extra = {{"M", rep.m_dims},
           {"radical", rep.radical_dims},
           {"L", rep.quotient_dims},
           {"stable_from", rep.stable_from},
           {"windowed", rep.windowed},
           {"radical_is_superset", true},
           {"raising_letters", "degree 1 and 2"}};
}

}  // namespace

std::vector<Scalar> default_lambda(int m) {
  std::vector<Scalar> out{2};
  for (int i = 1; i <= m; ++i) out.push_back(frac(1, i + 1));
  return out;
}

std::vector<std::pair<std::string, std::string>> suite_list() {
  return {
      {"superalg-axioms", "Grassmann product, odd left/right derivations, Leibniz rules"},
      {"jacobi", "super Jacobi identity and antisymmetry of the vector field bracket"},
      {"bracket-vs-composition", "bracket [f a, g b] = f a(g) b - (-1)^{..} g b(f) a against operator composition"},
      {"smash", "degree-zero smash algebra table (D,D), (D,Delta), (Delta,Delta), (D,D0), (Delta,D0), (D0,D0) on fibers"},
      {"jets", "jet relations [d,d], [d,p], [p,p], [., d0] and the Λ rules on fitted and listed jets"},
      {"jets-vs-smash", "coefficient-wise agreement of the jet relations with the smash table"},
      {"gl-embed", "gl(m,n) inside the jet quotient and the three supercommuting subalgebras"},
      {"module-axiom", "tensor module action (t^s f d_j) t^r g v and its odd and d_0 companions"},
      {"j-kernel", "the ideal J acts by zero on fibers of tensor modules"},
      {"cat-roundtrip", "module R_m ⊗ U rebuilt from jets equals the tensor module action"},
      {"ann", "Omega^(l)_{p,q} and the three N-th difference annihilators"},
      {"cover", "psi(tau, u) functionals, window reduction to |s| <= N/2, pi(psi) = tau u"},
      {"verma", "U(V_-) ⊗ T, radical meeting T trivially, L(T) dimension tables"},
  };
}

void validate(const SuiteConfig& cfg) {
  bool known = false;
  for (const auto& [name, d] : suite_list()) known = known || name == cfg.suite;
  if (!known) throw std::invalid_argument("unknown suite: " + cfg.suite);
  if (cfg.m < 0 || cfg.n < 0 || cfg.m > 3 || cfg.n > 3) throw std::invalid_argument("dimensions must satisfy 0 <= m, n <= 3");
  if (cfg.m + cfg.n == 0 && cfg.suite != "verma" && cfg.kind != Kind::Wm1n) throw std::invalid_argument("m + n must be positive");
  if (cfg.samples < 1) throw std::invalid_argument("samples must be positive");
  if (cfg.window < 0 || cfg.window > 4) throw std::invalid_argument("window must lie in 0..4");
  if (cfg.depth < 0 || cfg.raise_depth < cfg.depth) throw std::invalid_argument("need 0 <= depth <= raise-depth");
  if (!cfg.lambda.empty() && static_cast<int>(cfg.lambda.size()) != cfg.m + 1) {
    throw std::invalid_argument("lambda needs m+1 entries (lambda_0 first)");
  }
  bool needs_m = cfg.suite == "smash" || cfg.suite == "jets" || cfg.suite == "jets-vs-smash" || cfg.suite == "j-kernel" ||
                 cfg.suite == "cat-roundtrip" || cfg.suite == "ann" || cfg.suite == "cover";
  if (needs_m && cfg.m < 1) throw std::invalid_argument("suite " + cfg.suite + " needs m >= 1");
  if ((cfg.suite == "cat-roundtrip" || cfg.suite == "smash" || cfg.suite == "jets" || cfg.suite == "j-kernel") &&
      cfg.kind == Kind::Wm1n) {
    throw std::invalid_argument("suite " + cfg.suite + " runs on wmn or wmn-d0");
  }
}

SuiteResult run_suite(const SuiteConfig& cfg) {
  validate(cfg);
  Checks c;
  json extra;
  const std::string& s = cfg.suite;
  if (s == "superalg-axioms") {
    superalg_axioms(cfg, c);
  } else if (s == "jacobi") {
    jacobi(cfg, c);
  } else if (s == "bracket-vs-composition") {
    bracket_vs_composition(cfg, c);
  } else if (s == "smash") {
    smash(cfg, c);
  } else if (s == "jets") {
    jets(cfg, c);
  } else if (s == "jets-vs-smash") {
    c["coefficients"] = jets_vs_smash(cfg.m, cfg.n, cfg.kind != Kind::Wmn, 3, cfg.n <= 1);
  } else if (s == "gl-embed") {
    c["homomorphism"] = gl_embed_check(cfg.m, cfg.n);
    c["supercommuting subalgebras"] = subalgebra_check(cfg.m, cfg.n, true);
  } else if (s == "module-axiom") {
    module_axiom(cfg, c);
  } else if (s == "j-kernel") {
    c["annihilation"] = j_annihilation_check(fit_jets(tensor_fiber(fiber_rep(cfg), lambda_of(cfg, cfg.m), fiber_options(cfg))));
  } else if (s == "cat-roundtrip") {
    auto spec = module_spec(cfg);
    auto jr = fit_jets(tensor_fiber(spec.V, spec.lambda, fiber_options(cfg)));
    Sampler rng(cfg.seed);
    for (int i = 0; i < cfg.samples; ++i) {
      auto x = rng.field(spec.alg, 2, 2);
      auto w = rng.tensor_vector(spec, 2, 2);
      auto got = from_induced(cfg.m, cfg.n, spec.V.dim, induce_from_fiber(jr, x, to_induced(w, spec.V.dim)));
      c.check("induced equals tensor action", got == act(spec, x, w), [&] { return str(x) + " | " + to_string(w); });
    }
  } else if (s == "ann") {
    ann(cfg, c);
  } else if (s == "cover") {
    cover(cfg, c);
  } else if (s == "verma") {
    verma(cfg, c, extra);
  }
  SuiteResult res;
  res.pass = c.pass();
  json config = {{"suite", cfg.suite},  {"m", cfg.m},           {"n", cfg.n},           {"kind", to_string(cfg.kind)},
                 {"V", cfg.V},          {"window", cfg.window}, {"samples", cfg.samples}, {"seed", cfg.seed},
                 {"corrupt_sign", cfg.corrupt_sign}};
  json lam = json::array();
  for (const auto& l : lambda_of(cfg, cfg.m)) lam.push_back(to_string(l));
  config["lambda"] = lam;
  if (s == "verma") {
    config["depth"] = verma_depth(cfg);
    config["raise_depth"] = cfg.raise_depth;
  }
  res.report = {{"config", config}, {"checks", c.to_json()}, {"pass", res.pass}};
  if (!extra.is_null()) res.report["table"] = extra;
  return res;
}

}  // namespace wmn
