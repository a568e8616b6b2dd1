#pragma once

#include <compare>
#include <vector>

#include "wmn/grassmann.hpp"

namespace wmn {

/// t^r xi^p. Exponent slot 0 is t_0, slot i is t_i, so a context with m even
/// variables stores m + 1 slots; slot 0 stays 0 unless t_0 is in play.
struct Monomial {
  std::vector<int> t;
  grassmann::Bits xi = 0;

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

  int parity() const { return grassmann::parity(xi); }

  static Monomial one(int m) { return Monomial{std::vector<int>(m + 1, 0), 0}; }
};

inline std::vector<int> add_exps(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline std::vector<int> sub_exps(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

/// Product of monomials; sign is 0 when the Grassmann parts overlap.
inline Monomial mono_mul(const Monomial& a, const Monomial& b, int& sign) {
  sign = grassmann::product_sign(a.xi, b.xi);
  return Monomial{add_exps(a.t, b.t), a.xi | b.xi};
}

}  // namespace wmn
