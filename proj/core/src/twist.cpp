#include "wmn/twist.hpp"

#include <sstream>

#include "wmn/errors.hpp"
#include "wmn/matrix.hpp"

namespace wmn {

IntMatrix::IntMatrix(std::vector<std::vector<long>> rows) : rows_(std::move(rows)) {
  for (const auto& r : rows_) {
    if (r.size() != rows_.size()) throw DomainError("integer matrix must be square");
  }
}

IntMatrix IntMatrix::identity(int n) {
  std::vector<std::vector<long>> rows(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i) rows[i][i] = 1;
  return IntMatrix(std::move(rows));
}

IntMatrix IntMatrix::permutation(int n, int a, int b) {
  auto p = identity(n);
  std::swap(p.rows_[a], p.rows_[b]);
  return p;
}

namespace {

Matrix to_rational(const IntMatrix& a) {
  Matrix m(a.size(), a.size());
  for (int i = 0; i < a.size(); ++i) {
    for (int j = 0; j < a.size(); ++j) m(i, j) = a(i, j);
  }
  return m;
}

}  // namespace

long IntMatrix::determinant() const {
  // fraction-free elimination is overkill at this size; rational elimination is exact
  int n = size();
  if (n == 0) return 1;
  Matrix a = to_rational(*this);
  Scalar det = 1;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && a(piv, col) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      for (int j = 0; j < n; ++j) swap(a(piv, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    for (int i = col + 1; i < n; ++i) {
      if (a(i, col) == 0) continue;
      Scalar f = a(i, col) / a(col, col);
      for (int j = col; j < n; ++j) a(i, j) -= f * a(col, j);
    }
  }
  return det.get_num().get_si();
}

bool IntMatrix::is_unimodular() const {
  long d = determinant();
  return d == 1 || d == -1;
}

IntMatrix IntMatrix::inverse() const {
  if (!is_unimodular()) throw DomainError("matrix is not in GL(Z): determinant must be ±1");
  Matrix inv = wmn::inverse(to_rational(*this));
  std::vector<std::vector<long>> rows(size(), std::vector<long>(size()));
  for (int i = 0; i < size(); ++i) {
    for (int j = 0; j < size(); ++j) rows[i][j] = inv(i, j).get_num().get_si();
  }
  return IntMatrix(std::move(rows));
}

IntMatrix IntMatrix::transpose() const {
  std::vector<std::vector<long>> rows(size(), std::vector<long>(size()));
  for (int i = 0; i < size(); ++i) {
    for (int j = 0; j < size(); ++j) rows[j][i] = rows_[i][j];
  }
  return IntMatrix(std::move(rows));
}

std::vector<int> IntMatrix::apply(const std::vector<int>& v) const {
  if (static_cast<int>(v.size()) != size()) throw ContextMismatch("vector length differs from matrix size");
  std::vector<int> out(size(), 0);
  for (int i = 0; i < size(); ++i) {
    long acc = 0;
    for (int j = 0; j < size(); ++j) acc += rows_[i][j] * v[j];
    out[i] = static_cast<int>(acc);
  }
  return out;
}

std::vector<Scalar> IntMatrix::apply(const std::vector<Scalar>& v) const {
  if (static_cast<int>(v.size()) != size()) throw ContextMismatch("vector length differs from matrix size");
  std::vector<Scalar> out(size());
  for (int i = 0; i < size(); ++i) {
    for (int j = 0; j < size(); ++j) out[i] += Scalar(rows_[i][j]) * v[j];
  }
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.size() != b.size()) throw ContextMismatch("matrix size mismatch");
  int n = a.size();
  std::vector<std::vector<long>> rows(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      for (int j = 0; j < n; ++j) rows[i][j] += a(i, k) * b(k, j);
    }
  }
  return IntMatrix(std::move(rows));
}

IntMatrix parse_int_matrix(const std::string& text) {
  std::vector<std::vector<long>> rows;
  std::stringstream all(text);
  std::string row;
  while (std::getline(all, row, ';')) {
    std::vector<long> r;
    std::stringstream rs(row);
    std::string cell;
    while (std::getline(rs, cell, ',')) {
      try {
        r.push_back(std::stol(cell));
      } catch (const std::exception&) {
        throw std::invalid_argument("malformed matrix entry '" + cell + "'");
      }
    }
    rows.push_back(std::move(r));
  }
  return IntMatrix(std::move(rows));
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  for (int i = 0; i < m.size(); ++i) {
    if (i) os << ';';
    for (int j = 0; j < m.size(); ++j) {
      if (j) os << ',';
      os << m(i, j);
    }
  }
  return os.str();
}

SuperPoly twist_poly(const IntMatrix& theta, const SuperPoly& f) {
  if (theta.size() != f.m() + 1) throw ContextMismatch("theta must act on all m+1 even slots");
  SuperPoly out(f.m(), f.n());
  for (const auto& [mono, c] : f.terms()) out.add_term(Monomial{theta.apply(mono.t), mono.xi}, c);
  return out;
}

VectorField twist_field(const IntMatrix& theta, const VectorField& x) {
  const Algebra& alg = x.algebra();
  if (alg.kind != Kind::Wm1n) throw ContextMismatch("twisting is defined on W(m+1,n) only");
  if (theta.size() != alg.m + 1) throw ContextMismatch("theta must be (m+1)x(m+1)");
  IntMatrix inv = theta.inverse();
  VectorField out(alg);
  for (const auto& [key, c] : x.terms()) {
    Monomial mono{theta.apply(key.mono.t), key.mono.xi};
    if (key.gen.type == Generator::Type::P) {
      out.add_term(FieldKey{mono, key.gen}, c);
      continue;
    }
    // theta(t^s d_j) = t^{theta s} * sum_k (theta^{-1})_{jk} d_k
    int j = key.gen.index;
    for (int k = 0; k <= alg.m; ++k) {
      long w = inv(j, k);
      if (w != 0) out.add_term(FieldKey{mono, Generator::d(k)}, c * w);
    }
  }
  return out;
}

std::set<WeightVector> support_transform(const IntMatrix& theta, const std::set<WeightVector>& support) {
  IntMatrix map = theta.inverse().transpose();
  std::set<WeightVector> out;
  for (const auto& w : support) out.insert(map.apply(w));
  return out;
}

std::vector<Scalar> normalize_coset(const std::vector<Scalar>& lambda) {
  std::vector<Scalar> out = lambda;
  for (auto& x : out) {
    if (is_integer(x)) x = 0;
  }
  return out;
}

}  // namespace wmn
