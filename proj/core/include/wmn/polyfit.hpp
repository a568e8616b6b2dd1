#pragma once

#include <map>
#include <numeric>
#include <vector>

#include "wmn/errors.hpp"
#include "wmn/scalar.hpp"

namespace wmn {

/// Multi-indices a in Z_+^vars with |a| <= degree, in graded lexicographic order.
inline std::vector<std::vector<int>> simplex_points(int vars, int degree) {
  std::vector<std::vector<int>> out;
  std::vector<int> a(static_cast<std::size_t>(vars), 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == vars) {
      out.push_back(a);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      a[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, left - v);
    }
    a[static_cast<std::size_t>(pos)] = 0;
  };
  rec(rec, 0, degree);
  return out;
}

/// Signed Stirling numbers of the first kind, s(n,k) for n,k <= max.
inline std::vector<std::vector<Scalar>> stirling_first(int max) {
  std::vector<std::vector<Scalar>> s(static_cast<std::size_t>(max + 1), std::vector<Scalar>(static_cast<std::size_t>(max + 1)));
  s[0][0] = 1;
  for (int n = 1; n <= max; ++n) {
    for (int k = 1; k <= n; ++k) {
      s[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] =
          s[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)] -
          Scalar(n - 1) * s[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k)];
    }
  }
  return s;
}

/// Coefficients c_j of F(x) = sum_j x^j / j! c_j for a polynomial F of total
/// degree <= `degree`, recovered exactly from its values on the simplex. V must
/// be a vector space over Scalar (+=, *= Scalar) and `zero` its zero element.
template <class V, class F>
std::map<std::vector<int>, V> fit_divided_powers(F&& f, int vars, int degree, const V& zero) {
  auto pts = simplex_points(vars, degree);
  std::map<std::vector<int>, V> values;
  for (const auto& p : pts) values.emplace(p, f(p));

  // forward differences at the origin: D^a F(0) = sum_{b <= a} (-1)^{|a-b|} C(a,b) F(b)
  std::map<std::vector<int>, V> diffs;
  for (const auto& a : pts) {
    V acc = zero;
    for (const auto& b : pts) {
      bool below = true;
      Scalar w = 1;
      int gap = 0;
      for (int i = 0; i < vars && below; ++i) {
        if (b[static_cast<std::size_t>(i)] > a[static_cast<std::size_t>(i)]) {
          below = false;
        } else {
          w *= binomial(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(i)]);
          gap += a[static_cast<std::size_t>(i)] - b[static_cast<std::size_t>(i)];
        }
      }
      if (!below) continue;
      V term = values.at(b);
      term *= (gap & 1) ? Scalar(-w) : w;
      acc += term;
    }
    diffs.emplace(a, std::move(acc));
  }

  // Newton basis C(x,a) = prod x_i^(falling a_i) / a_i!, falling powers via Stirling numbers.
  auto st = stirling_first(degree);
  std::map<std::vector<int>, V> coeffs;
  for (const auto& j : pts) {
    V acc = zero;
    for (const auto& a : pts) {
      Scalar w = 1;
      for (int i = 0; i < vars && w != 0; ++i) {
        int ai = a[static_cast<std::size_t>(i)];
        int ji = j[static_cast<std::size_t>(i)];
        if (ji > ai) {
          w = 0;
          break;
        }
        w *= st[static_cast<std::size_t>(ai)][static_cast<std::size_t>(ji)] * factorial(ji) / factorial(ai);
      }
      if (w == 0) continue;
      V term = diffs.at(a);
      term *= w;
      acc += term;
    }
    coeffs.emplace(j, std::move(acc));
  }
  return coeffs;
}

/// Evaluates sum_j x^j / j! c_j.
template <class V>
V eval_divided_powers(const std::map<std::vector<int>, V>& coeffs, const std::vector<int>& x, const V& zero) {
  V acc = zero;
  for (const auto& [j, c] : coeffs) {
    Scalar w = 1;
    for (std::size_t i = 0; i < j.size(); ++i) {
      mpz_class p;
      mpz_pow_ui(p.get_mpz_t(), mpz_class(x[i]).get_mpz_t(), static_cast<unsigned long>(j[i]));
      w *= Scalar(p) / factorial(j[i]);
    }
    if (w == 0) continue;
    V term = c;
    term *= w;
    acc += term;
  }
  return acc;
}

}  // namespace wmn
