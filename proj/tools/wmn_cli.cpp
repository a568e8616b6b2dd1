#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "wmn/cover.hpp"
#include "wmn/errors.hpp"
#include "wmn/expr.hpp"
#include "wmn/json_io.hpp"
#include "wmn/suites.hpp"
#include "wmn/twist.hpp"
#include "wmn/verma.hpp"

namespace {

using namespace wmn;

constexpr int kUsageError = 2;

struct Context {
  int m = 1;
  int n = 1;
  std::string kind = "wmn";
  Algebra algebra() const { return Algebra{parse_kind(kind), m, n}; }
};

struct ModuleOptions {
  std::string V = "natural";
  std::string lambda;
};

void add_context(CLI::App* app, Context& ctx) {
  app->add_option("-m", ctx.m, "even variables t_1..t_m")->check(CLI::Range(0, 6));
  app->add_option("-n", ctx.n, "odd variables xi_1..xi_n")->check(CLI::Range(0, 6));
  app->add_option("--kind", ctx.kind, "wmn, wmn-d0 or wm1n");
}

void add_module(CLI::App* app, ModuleOptions& mod) {
  app->add_option("--V", mod.V, "fiber: trivial, natural, natural2, supertrace:<c>");
  app->add_option("--lambda", mod.lambda, "comma separated rationals by slot, lambda_0 first");
}

std::vector<Scalar> parse_lambda(const std::string& text, int m) {
  if (text.empty()) return default_lambda(m);
  std::vector<Scalar> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_scalar(item));
  return out;
}

TensorModuleSpec module_spec(const Context& ctx, const ModuleOptions& mod) {
  Algebra alg = ctx.algebra();
  int M = alg.kind == Kind::Wm1n ? ctx.m + 1 : ctx.m;
  return make_tensor_spec(alg, rep_by_name(mod.V, M, ctx.n), parse_lambda(mod.lambda, ctx.m));
}

TensorVector tensor_of(const SuperPoly& f, int v, const Algebra& alg) {
  TensorVector w(alg.m, alg.n);
  for (const auto& [mono, c] : f.terms()) w.add_term({mono, v}, c);
  return w;
}

void emit(bool as_json, const json& j, const std::string& text) {
  if (as_json) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << text << '\n';
  }
}

std::uint64_t default_seed() {
  if (const char* s = std::getenv("WMN_SEED")) return std::stoull(s);
  return 7;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with Lie superalgebras of vector fields on tori"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  Context ctx;
  ModuleOptions mod;

  auto* bracket_cmd = app.add_subcommand("bracket", "bracket of two vector fields");
  std::string x_text, y_text;
  add_context(bracket_cmd, ctx);
  bracket_cmd->add_option("X", x_text)->required();
  bracket_cmd->add_option("Y", y_text)->required();

  auto* apply_cmd = app.add_subcommand("apply", "vector field applied to a function");
  std::string f_text, g_text;
  add_context(apply_cmd, ctx);
  apply_cmd->add_option("X", x_text)->required();
  apply_cmd->add_option("F", f_text)->required();

  auto* mult_cmd = app.add_subcommand("mult", "product of two functions");
  add_context(mult_cmd, ctx);
  mult_cmd->add_option("F", f_text)->required();
  mult_cmd->add_option("G", g_text)->required();

  auto* act_cmd = app.add_subcommand("act", "tensor module action X (f v_k)");
  int v_index = 0;
  add_context(act_cmd, ctx);
  add_module(act_cmd, mod);
  act_cmd->add_option("--v", v_index, "fiber basis index");
  act_cmd->add_option("X", x_text)->required();
  act_cmd->add_option("F", f_text)->required();

  auto* twist_cmd = app.add_subcommand("twist", "twist a function or vector field by theta in GL(Z)");
  std::string theta_text;
  add_context(twist_cmd, ctx);
  twist_cmd->add_option("--theta", theta_text, "rows separated by ';', e.g. 0,1;1,0")->required();
  twist_cmd->add_option("E", x_text)->required();

  auto* cover_cmd = app.add_subcommand("cover", "window reduction of psi(tau, f v_k)");
  int cover_N = -1;
  add_context(cover_cmd, ctx);
  add_module(cover_cmd, mod);
  cover_cmd->add_option("--v", v_index, "fiber basis index");
  cover_cmd->add_option("-N", cover_N, "annihilator order (searched when omitted)");
  cover_cmd->add_option("TAU", x_text)->required();
  cover_cmd->add_option("F", f_text)->required();

  auto* verma_cmd = app.add_subcommand("verma", "dimension tables of M(T) and L(T)");
  int depth = 3, raise_depth = 5, window = 0;
  add_context(verma_cmd, ctx);
  add_module(verma_cmd, mod);
  verma_cmd->add_option("--depth", depth)->check(CLI::Range(0, 8));
  verma_cmd->add_option("--raise-depth", raise_depth)->check(CLI::Range(1, 10));
  verma_cmd->add_option("--window", window, "|t_i| bound when m >= 1");

  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  SuiteConfig cfg;
  cfg.seed = default_seed();
  bool list = false;
  std::string suite_kind = "wmn", suite_lambda;
  verify_cmd->add_flag("--list", list, "list suites and the relations they check");
  verify_cmd->add_option("--suite", cfg.suite);
  verify_cmd->add_option("-m", cfg.m);
  verify_cmd->add_option("-n", cfg.n);
  verify_cmd->add_option("--kind", suite_kind);
  verify_cmd->add_option("--V", cfg.V);
  verify_cmd->add_option("--lambda", suite_lambda);
  verify_cmd->add_option("--window", cfg.window);
  verify_cmd->add_option("--samples", cfg.samples);
  verify_cmd->add_option("--seed", cfg.seed, "default: $WMN_SEED or 7");
  verify_cmd->add_option("--depth", cfg.depth);
  verify_cmd->add_option("--raise-depth", cfg.raise_depth);
  verify_cmd->add_flag("--corrupt-sign", cfg.corrupt_sign, "test mode: plant a sign defect");

  auto* parse_cmd = app.add_subcommand("parse", "parse and reprint an expression");
  parse_cmd->add_option("E", x_text)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*bracket_cmd) {
      Algebra alg = ctx.algebra();
      auto z = bracket(parse_field(x_text, alg), parse_field(y_text, alg));
      emit(as_json, to_json(z), to_string(z));
    } else if (*apply_cmd) {
      Algebra alg = ctx.algebra();
      auto h = apply(parse_field(x_text, alg), parse_poly(f_text, alg));
      emit(as_json, to_json(h, alg), to_string(h));
    } else if (*mult_cmd) {
      Algebra alg = ctx.algebra();
      auto h = parse_poly(f_text, alg) * parse_poly(g_text, alg);
      emit(as_json, to_json(h, alg), to_string(h));
    } else if (*act_cmd) {
      auto spec = module_spec(ctx, mod);
      if (v_index < 0 || v_index >= spec.V.dim) throw IndexOutOfRange("--v outside the fiber");
      auto w = act(spec, parse_field(x_text, spec.alg), tensor_of(parse_poly(f_text, spec.alg), v_index, spec.alg));
      emit(as_json, to_json(w, spec.alg), to_string(w));
    } else if (*twist_cmd) {
      Algebra alg = ctx.algebra();
      auto theta = parse_int_matrix(theta_text);
      auto v = evaluate(parse(x_text), alg);
      if (auto* f = std::get_if<SuperPoly>(&v)) {
        auto h = twist_poly(theta, *f);
        emit(as_json, to_json(h, alg), to_string(h));
      } else {
        auto h = twist_field(theta, std::get<VectorField>(v));
        emit(as_json, to_json(h), to_string(h));
      }
    } else if (*cover_cmd) {
      auto spec = module_spec(ctx, mod);
      if (v_index < 0 || v_index >= spec.V.dim) throw IndexOutOfRange("--v outside the fiber");
      int N = cover_N >= 0 ? cover_N : minimal_N_search(spec, 6, {1, 1, 1});
      auto c = psi(parse_field(x_text, spec.alg), tensor_of(parse_poly(f_text, spec.alg), v_index, spec.alg));
      auto red = window_reduce(spec, c, N);
      json j = {{"N", N}, {"input", to_string(c)}, {"reduced", to_string(red)}, {"spread", cover_spread(red)}};
      emit(as_json, j, "N = " + std::to_string(N) + "\n" + to_string(red));
    } else if (*verma_cmd) {
      if (ctx.kind != "wmn") throw std::invalid_argument("verma uses W(m+1,n); leave --kind unset");
      auto hw = make_hw_spec(rep_by_name(mod.V, ctx.m, ctx.n), parse_lambda(mod.lambda, ctx.m), window);
      auto r = radical_at(hw, depth, raise_depth);
      json j = {{"M", r.m_dims},           {"radical", r.radical_dims}, {"L", r.quotient_dims},
                {"radical_by_E", r.radical_by_E}, {"stable_from", r.stable_from}, {"windowed", r.windowed}};
      std::ostringstream out;
      out << "degree  dim M  dim rad  dim L\n";
      for (int d = 0; d <= depth; ++d) {
        out << -d << "  " << r.m_dims[static_cast<std::size_t>(d)] << "  " << r.radical_dims[static_cast<std::size_t>(d)]
            << "  " << r.quotient_dims[static_cast<std::size_t>(d)] << '\n';
      }
      out << "stable from E = " << r.stable_from << (r.windowed ? " (windowed)" : "");
      emit(as_json, j, out.str());
    } else if (*verify_cmd) {
      if (list) {
        json j = json::object();
        std::ostringstream out;
        for (const auto& [name, what] : suite_list()) {
          j[name] = what;
          out << name << ": " << what << '\n';
        }
        emit(as_json, j, out.str());
        return 0;
      }
      if (cfg.suite.empty()) throw std::invalid_argument("--suite is required");
      cfg.kind = parse_kind(suite_kind);
      if (!suite_lambda.empty()) cfg.lambda = parse_lambda(suite_lambda, cfg.m);
      auto res = run_suite(cfg);
      if (as_json) {
        std::cout << res.report.dump(2) << '\n';
      } else {
        for (const auto& [name, r] : res.report["checks"].items()) {
          std::cout << name << ": " << r["checked"] << " checked, " << r["failed"] << " failed";
          if (r.contains("first_failure")) std::cout << " (" << r["first_failure"].get<std::string>() << ")";
          std::cout << '\n';
        }
        std::cout << (res.pass ? "PASS" : "FAIL") << '\n';
      }
      return res.exit_code();
    } else if (*parse_cmd) {
      auto e = parse(x_text);
      emit(as_json, json{{"printed", print(e)}}, print(e));
    }
  } catch (const SyntaxError& e) {
    std::cerr << "syntax error at column " << e.column() << ": " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return 0;
}
