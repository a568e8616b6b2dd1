#include "wmn/gl.hpp"

#include <random>

#include "wmn/errors.hpp"

namespace wmn {

GlElement::GlElement(int M_, int N_) : M(M_), N(N_), a(static_cast<std::size_t>(M_ + N_), static_cast<std::size_t>(M_ + N_)) {}

GlElement GlElement::unit(int M, int N, int row, int col, const Scalar& c) {
  if (row < 0 || col < 0 || row >= M + N || col >= M + N) throw IndexOutOfRange("gl index out of range");
  GlElement x(M, N);
  x.a(row, col) = c;
  return x;
}

std::optional<int> GlElement::parity() const {
  std::optional<int> p;
  for (int i = 0; i < size(); ++i) {
    for (int j = 0; j < size(); ++j) {
      if (a(i, j) == 0) continue;
      int q = index_parity(i) ^ index_parity(j);
      if (p && *p != q) return std::nullopt;
      p = q;
    }
  }
  return p.value_or(0);
}

GlElement GlElement::part(int p) const {
  GlElement out(M, N);
  for (int i = 0; i < size(); ++i) {
    for (int j = 0; j < size(); ++j) {
      if ((index_parity(i) ^ index_parity(j)) == p) out.a(i, j) = a(i, j);
    }
  }
  return out;
}

GlElement& GlElement::operator+=(const GlElement& o) {
  if (M != o.M || N != o.N) throw ContextMismatch("gl(M,N) size mismatch");
  a += o.a;
  return *this;
}

GlElement& GlElement::operator-=(const GlElement& o) {
  if (M != o.M || N != o.N) throw ContextMismatch("gl(M,N) size mismatch");
  a -= o.a;
  return *this;
}

GlElement gl_bracket(const GlElement& x, const GlElement& y) {
  if (x.M != y.M || x.N != y.N) throw ContextMismatch("gl(M,N) size mismatch");
  GlElement out(x.M, x.N);
  for (int p = 0; p < 2; ++p) {
    GlElement xp = x.part(p);
    for (int q = 0; q < 2; ++q) {
      GlElement yq = y.part(q);
      out.a += xp.a * yq.a;
      Matrix yx = yq.a * xp.a;
      if (p & q) {
        out.a += yx;
      } else {
        out.a -= yx;
      }
    }
  }
  return out;
}

Matrix GlRep::act(const GlElement& x) const {
  if (x.M != M || x.N != N) throw ContextMismatch("gl(M,N) size mismatch");
  Matrix out(static_cast<std::size_t>(dim), static_cast<std::size_t>(dim));
  for (int a = 0; a < size(); ++a) {
    for (int b = 0; b < size(); ++b) {
      if (x.a(a, b) != 0) out += x.a(a, b) * e(a, b);
    }
  }
  return out;
}

namespace {

GlRep blank(int M, int N, int dim) {
  if (M < 0 || N < 0) throw DomainError("gl(M,N) needs M, N >= 0");
  GlRep r;
  r.M = M;
  r.N = N;
  r.dim = dim;
  r.parity.assign(static_cast<std::size_t>(dim), 0);
  r.rho.assign(static_cast<std::size_t>((M + N) * (M + N)), Matrix(static_cast<std::size_t>(dim), static_cast<std::size_t>(dim)));
  return r;
}

}  // namespace

GlRep trivial_rep(int M, int N) { return blank(M, N, 1); }

GlRep natural_rep(int M, int N) {
  if (M + N < 1) throw DomainError("natural representation needs M+N >= 1");
  GlRep r = blank(M, N, M + N);
  for (int a = 0; a < M + N; ++a) {
    r.parity[static_cast<std::size_t>(a)] = r.index_parity(a);
    for (int b = 0; b < M + N; ++b) r.e(a, b) = Matrix::unit(static_cast<std::size_t>(M + N), static_cast<std::size_t>(a), static_cast<std::size_t>(b));
  }
  return r;
}

GlRep supertrace_rep(int M, int N, const Scalar& c) {
  GlRep r = blank(M, N, 1);
  for (int a = 0; a < M + N; ++a) r.e(a, a)(0, 0) = r.index_parity(a) ? Scalar(-c) : c;
  return r;
}

GlRep tensor_rep(const GlRep& x, const GlRep& y) {
  if (x.M != y.M || x.N != y.N) throw ContextMismatch("tensor of representations of different gl(M,N)");
  GlRep r = blank(x.M, x.N, x.dim * y.dim);
  for (int i = 0; i < x.dim; ++i) {
    for (int j = 0; j < y.dim; ++j) r.parity[static_cast<std::size_t>(i * y.dim + j)] = x.parity[i] ^ y.parity[j];
  }
  Matrix idy = Matrix::identity(static_cast<std::size_t>(y.dim));
  Matrix sign(static_cast<std::size_t>(x.dim), static_cast<std::size_t>(x.dim));
  for (int a = 0; a < r.size(); ++a) {
    for (int b = 0; b < r.size(); ++b) {
      int p = r.index_parity(a) ^ r.index_parity(b);
      for (int i = 0; i < x.dim; ++i) sign(i, i) = (p & x.parity[i]) ? -1 : 1;
      r.e(a, b) = kron(x.e(a, b), idy) + kron(sign, y.e(a, b));
    }
  }
  return r;
}

GlRep rep_by_name(const std::string& name, int M, int N) {
  if (name == "trivial") return trivial_rep(M, N);
  if (name == "natural") return natural_rep(M, N);
  if (name == "natural⊗natural" || name == "natural*natural" || name == "natural^2") {
    return tensor_rep(natural_rep(M, N), natural_rep(M, N));
  }
  if (name.rfind("str:", 0) == 0) return supertrace_rep(M, N, parse_scalar(name.substr(4)));
  throw std::invalid_argument("unknown representation '" + name + "'");
}

RepCheck rep_check(const GlRep& r) {
  int s = r.size();
  for (int a = 0; a < s; ++a) {
    for (int b = 0; b < s; ++b) {
      const Matrix& m = r.e(a, b);
      int p = r.index_parity(a) ^ r.index_parity(b);
      for (int i = 0; i < r.dim; ++i) {
        for (int j = 0; j < r.dim; ++j) {
          if (m(i, j) != 0 && (r.parity[i] ^ r.parity[j]) != p) {
            return {false, "e(" + std::to_string(a) + "," + std::to_string(b) + ") does not respect parity"};
          }
        }
      }
    }
  }
  for (int a = 0; a < s; ++a) {
    for (int b = 0; b < s; ++b) {
      int p = r.index_parity(a) ^ r.index_parity(b);
      for (int c = 0; c < s; ++c) {
        for (int d = 0; d < s; ++d) {
          int q = r.index_parity(c) ^ r.index_parity(d);
          GlElement br = gl_bracket(GlElement::unit(r.M, r.N, a, b), GlElement::unit(r.M, r.N, c, d));
          Matrix lhs = r.act(br);
          Matrix rhs = r.e(a, b) * r.e(c, d);
          Matrix back = r.e(c, d) * r.e(a, b);
          if (p & q) {
            rhs += back;
          } else {
            rhs -= back;
          }
          if (!(lhs == rhs)) {
            return {false, "homomorphism fails on [e(" + std::to_string(a) + "," + std::to_string(b) + "), e(" +
                               std::to_string(c) + "," + std::to_string(d) + ")]"};
          }
        }
      }
    }
  }
  return {};
}

std::vector<Vec> submodule_closure(const GlRep& r, const std::vector<Vec>& seeds) {
  RowSpace span(static_cast<std::size_t>(r.dim));
  std::vector<Vec> queue;
  for (const auto& v : seeds) {
    if (static_cast<int>(v.size()) != r.dim) throw ContextMismatch("seed vector has wrong length");
    if (span.insert(v)) queue.push_back(v);
  }
  while (!queue.empty()) {
    Vec v = std::move(queue.back());
    queue.pop_back();
    for (const auto& m : r.rho) {
      Vec w = m.apply(v);
      if (span.insert(w)) queue.push_back(std::move(w));
    }
  }
  return span.rows();
}

GlRep quotient_rep(const GlRep& r, const std::vector<Vec>& sub) {
  RowSpace span(static_cast<std::size_t>(r.dim));
  for (const auto& v : sub) span.insert(v);
  for (const auto& v : span.rows()) {
    for (const auto& m : r.rho) {
      if (!span.contains(m.apply(v))) throw DomainError("subspace is not invariant");
    }
  }
  std::vector<bool> pivot(static_cast<std::size_t>(r.dim), false);
  for (auto p : span.pivots()) pivot[p] = true;
  std::vector<int> keep;
  for (int i = 0; i < r.dim; ++i) {
    if (!pivot[static_cast<std::size_t>(i)]) keep.push_back(i);
  }
  GlRep q = blank(r.M, r.N, static_cast<int>(keep.size()));
  for (std::size_t k = 0; k < keep.size(); ++k) q.parity[k] = r.parity[static_cast<std::size_t>(keep[k])];
  for (std::size_t g = 0; g < r.rho.size(); ++g) {
    for (std::size_t col = 0; col < keep.size(); ++col) {
      Vec e(static_cast<std::size_t>(r.dim));
      e[static_cast<std::size_t>(keep[col])] = 1;
      Vec img = span.reduce(r.rho[g].apply(e));
      for (std::size_t row = 0; row < keep.size(); ++row) q.rho[g](row, col) = img[static_cast<std::size_t>(keep[row])];
    }
  }
  return q;
}

bool likely_simple(const GlRep& r, int random_vectors, std::uint64_t seed) {
  if (r.dim == 0) return false;
  auto generates = [&](const Vec& v) {
    return static_cast<int>(submodule_closure(r, {v}).size()) == r.dim;
  };
  for (int i = 0; i < r.dim; ++i) {
    Vec e(static_cast<std::size_t>(r.dim));
    e[static_cast<std::size_t>(i)] = 1;
    if (!generates(e)) return false;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (int k = 0; k < random_vectors; ++k) {
    Vec v(static_cast<std::size_t>(r.dim));
    bool nonzero = false;
    for (auto& x : v) {
      x = coeff(rng);
      nonzero = nonzero || x != 0;
    }
    if (nonzero && !generates(v)) return false;
  }
  return true;
}

}  // namespace wmn
