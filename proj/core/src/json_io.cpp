#include "wmn/json_io.hpp"

#include "wmn/errors.hpp"

namespace wmn {

namespace g = grassmann;

namespace {

std::size_t sz(int v) { return static_cast<std::size_t>(v); }

json t_json(const std::vector<int>& t, bool with_t0) {
  json out = json::array();
  for (std::size_t i = with_t0 ? 0 : 1; i < t.size(); ++i) out.push_back(t[i]);
  return out;
}

json xi_json(g::Bits bits, int n) {
  json out = json::array();
  for (int a = 1; a <= n; ++a) out.push_back(g::contains(bits, a) ? 1 : 0);
  return out;
}

Monomial mono_from(const json& j, int m, int n, bool with_t0) {
  Monomial mono = Monomial::one(m);
  const json& t = j.at("t");
  if (static_cast<int>(t.size()) != m + (with_t0 ? 1 : 0)) throw ContextMismatch("wrong number of t exponents");
  for (std::size_t i = 0; i < t.size(); ++i) mono.t[i + (with_t0 ? 0 : 1)] = t[i].get<int>();
  const json& xi = j.at("xi");
  if (static_cast<int>(xi.size()) != n) throw ContextMismatch("wrong number of xi flags");
  for (int a = 1; a <= n; ++a) {
    int f = xi[sz(a - 1)].get<int>();
    if (f != 0 && f != 1) throw std::invalid_argument("xi flags must be 0 or 1");
    if (f) mono.xi |= g::bit(a);
  }
  return mono;
}

g::Bits bits_from(const json& j, int n) {
  if (static_cast<int>(j.size()) != n) throw ContextMismatch("wrong number of xi flags");
  g::Bits b = 0;
  for (int a = 1; a <= n; ++a) {
    if (j[sz(a - 1)].get<int>()) b |= g::bit(a);
  }
  return b;
}

Scalar coef(const json& j) { return j.is_string() ? parse_scalar(j.get<std::string>()) : Scalar(j.get<long>()); }

}  // namespace

std::string generator_name(const Generator& gen) {
  return (gen.type == Generator::Type::D ? "d" : "p") + std::to_string(gen.index);
}

Generator parse_generator(const std::string& s) {
  if (s.size() < 2 || (s[0] != 'd' && s[0] != 'p' && s[0] != 'D' && s[0] != 'P')) throw std::invalid_argument("bad generator name: " + s);
  int idx = std::stoi(s.substr(1));
  return (s[0] == 'd' || s[0] == 'D') ? Generator::d(idx) : Generator::p(idx);
}

json to_json(const SuperPoly& f, const Algebra& alg) {
  json terms = json::array();
  for (const auto& [mono, c] : f.terms()) {
    terms.push_back({{"c", to_string(c)}, {"t", t_json(mono.t, alg.allows_t0())}, {"xi", xi_json(mono.xi, f.n())}});
  }
  return {{"terms", terms}};
}

SuperPoly poly_from_json(const json& j, const Algebra& alg) {
  SuperPoly f(alg.m, alg.n);
  for (const auto& term : j.at("terms")) f.add_term(mono_from(term, alg.m, alg.n, alg.allows_t0()), coef(term.at("c")));
  return f;
}

json to_json(const VectorField& x) {
  const Algebra& alg = x.algebra();
  json terms = json::array();
  for (const auto& [k, c] : x.terms()) {
    terms.push_back({{"c", to_string(c)},
                     {"t", t_json(k.mono.t, alg.allows_t0())},
                     {"xi", xi_json(k.mono.xi, alg.n)},
                     {"gen", generator_name(k.gen)}});
  }
  return {{"terms", terms}};
}

VectorField field_from_json(const json& j, const Algebra& alg) {
  VectorField x(alg);
  for (const auto& term : j.at("terms")) {
    x.add_term(FieldKey{mono_from(term, alg.m, alg.n, alg.allows_t0()), parse_generator(term.at("gen").get<std::string>())},
               coef(term.at("c")));
  }
  return x;
}

json to_json(const TensorVector& w, const Algebra& alg) {
  json terms = json::array();
  for (const auto& [k, c] : w.terms()) {
    terms.push_back(
        {{"c", to_string(c)}, {"t", t_json(k.mono.t, alg.allows_t0())}, {"xi", xi_json(k.mono.xi, alg.n)}, {"v", k.v}});
  }
  return {{"terms", terms}};
}

TensorVector tensor_from_json(const json& j, const TensorModuleSpec& spec) {
  TensorVector w(spec.alg.m, spec.alg.n);
  for (const auto& term : j.at("terms")) {
    int v = term.at("v").get<int>();
    if (v < 0 || v >= spec.V.dim) throw IndexOutOfRange("V index out of range");
    w.add_term(TensorKey{mono_from(term, spec.alg.m, spec.alg.n, spec.alg.allows_t0()), v}, coef(term.at("c")));
  }
  return w;
}

json to_json(const JetElement& x) {
  json out = json::array();
  for (const auto& [k, c] : x.terms()) {
    std::string gen = k.gen.tag == GenTag::D ? "d" + std::to_string(k.gen.index)
                      : k.gen.tag == GenTag::P ? "p" + std::to_string(k.gen.index)
                                               : "d0";
    auto deg = jet_degree(k.gen);
    out.push_back({{"gen", gen},
                   {"f", xi_json(k.gen.f, x.n())},
                   {"k", json(std::vector<int>(deg.begin() + 1, deg.end()))},
                   {"prefix", xi_json(k.prefix, x.n())},
                   {"c", to_string(c)}});
  }
  return out;
}

JetElement jets_from_json(const json& j, int m, int n) {
  JetElement out(m, n);
  for (const auto& term : j) {
    Generator gen = parse_generator(term.at("gen").get<std::string>());
    g::Bits f = bits_from(term.at("f"), n);
    auto k = term.at("k").get<std::vector<int>>();
    if (static_cast<int>(k.size()) != m) throw ContextMismatch("wrong number of jet degrees");
    std::vector<int> l{0};
    l.insert(l.end(), k.begin(), k.end());
    GenKey key;
    if (gen.type == Generator::Type::P) {
      key = jet_p(gen.index, f, l);
    } else if (gen.index == 0) {
      key = jet_d0(f, l);
    } else {
      l[sz(gen.index)] -= 1;
      key = jet_d(gen.index, f, l);
    }
    if (!jet_valid(key)) throw std::invalid_argument("jet degree must be non-negative");
    out.add_term(PrefKey{bits_from(term.at("prefix"), n), key}, coef(term.at("c")));
  }
  return out;
}

json to_json(const GlRep& r) {
  json rho = json::array();
  for (const auto& mat : r.rho) {
    json rows = json::array();
    for (std::size_t i = 0; i < mat.rows(); ++i) {
      json row = json::array();
      for (std::size_t c = 0; c < mat.cols(); ++c) row.push_back(to_string(mat(i, c)));
      rows.push_back(row);
    }
    rho.push_back(rows);
  }
  return {{"M", r.M}, {"N", r.N}, {"dim", r.dim}, {"parity", r.parity}, {"rho", rho}};
}

GlRep rep_from_json(const json& j) {
  GlRep r;
  r.M = j.at("M").get<int>();
  r.N = j.at("N").get<int>();
  r.dim = j.at("dim").get<int>();
  r.parity = j.at("parity").get<std::vector<int>>();
  if (static_cast<int>(r.parity.size()) != r.dim) throw std::invalid_argument("parity vector length differs from dim");
  const json& rho = j.at("rho");
  if (static_cast<int>(rho.size()) != r.size() * r.size()) throw std::invalid_argument("need one matrix per matrix unit");
  for (const auto& rows : rho) {
    Matrix mat(sz(r.dim), sz(r.dim));
    if (static_cast<int>(rows.size()) != r.dim) throw std::invalid_argument("matrix has wrong size");
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(rows[i].size()) != r.dim) throw std::invalid_argument("matrix has wrong size");
      for (std::size_t c = 0; c < rows[i].size(); ++c) mat(i, c) = coef(rows[i][c]);
    }
    r.rho.push_back(std::move(mat));
  }
  auto check = rep_check(r);
  if (!check.ok) throw DomainError("not a representation: " + check.failure);
  return r;
}

json to_json(const RelationReport& r) {
  json out = {{"checked", r.checked}, {"failed", r.failed}};
  if (!r.ok()) out["first_failure"] = r.first_failure;
  return out;
}

}  // namespace wmn
