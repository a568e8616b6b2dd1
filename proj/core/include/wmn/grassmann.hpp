#pragma once

#include <bit>
#include <cstdint>

// Grassmann monomials are bit masks: bit (a - 1) set means xi_a is present.
// The canonical order is xi_1 < xi_2 < ... < xi_n.
namespace wmn::grassmann {

using Bits = std::uint32_t;

constexpr int kMaxOdd = 16;

constexpr Bits bit(int alpha) { return Bits{1} << (alpha - 1); }

constexpr int parity(Bits p) { return std::popcount(p) & 1; }

constexpr bool contains(Bits p, int alpha) { return (p & bit(alpha)) != 0; }

/// Sign of xi^p * xi^q relative to xi^(p|q); 0 when they share a generator.
constexpr int product_sign(Bits p, Bits q) {
  if (p & q) return 0;
  int swaps = 0;
  for (Bits rest = q; rest != 0; rest &= rest - 1) {
    int b = std::countr_zero(rest);
    swaps += std::popcount(p >> (b + 1));
  }
  return (swaps & 1) ? -1 : 1;
}

/// Left derivative d/dxi_alpha applied to xi^p: sign for the result xi^(p minus alpha), or 0.
constexpr int left_deriv_sign(Bits p, int alpha) {
  if (!contains(p, alpha)) return 0;
  return (std::popcount(p & (bit(alpha) - 1)) & 1) ? -1 : 1;
}

/// Right derivative (xi^p) *d_alpha: counts generators to the right of xi_alpha.
constexpr int right_deriv_sign(Bits p, int alpha) {
  if (!contains(p, alpha)) return 0;
  return (std::popcount(p >> alpha) & 1) ? -1 : 1;
}

/// All 2^n monomials in increasing mask order.
constexpr Bits full_mask(int n) { return n == 0 ? 0 : ((Bits{1} << n) - 1); }

}  // namespace wmn::grassmann
