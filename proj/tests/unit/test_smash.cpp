#include <doctest.h>

#include "unit/av_oracle.hpp"
#include "wmn/sampling.hpp"
#include "wmn/smash.hpp"

using namespace wmn;

namespace {

std::vector<int> idx(std::initializer_list<int> tail) {
  std::vector<int> r{0};
  r.insert(r.end(), tail);
  return r;
}

SmashElement random_gen(Sampler& rng, int m, int n, int radius) {
  std::vector<int> r(static_cast<std::size_t>(m + 1), 0);
  for (int i = 1; i <= m; ++i) r[static_cast<std::size_t>(i)] = rng.uniform(-radius, radius);
  grassmann::Bits f = static_cast<grassmann::Bits>(rng.uniform(0, (1 << n) - 1));
  grassmann::Bits p = static_cast<grassmann::Bits>(rng.uniform(0, (1 << n) - 1));
  int kind = rng.uniform(0, n > 0 ? 2 : 1);
  GenKey g = kind == 0   ? smash_D(rng.uniform(1, m), f, r)
             : kind == 1 ? smash_D0(f, r)
                         : smash_P(rng.uniform(1, n), f, r);
  return SmashElement::gen(m, n, g, rng.rational(), p);
}

}  // namespace

TEST_CASE("DD with unit coefficients") {
  auto r = idx({2});
  auto s = idx({-1});
  auto x = SmashElement::gen(1, 0, smash_D(1, 0, r));
  auto y = SmashElement::gen(1, 0, smash_D(1, 0, s));
  SmashElement want(1, 0);
  want += Scalar(-1) * SmashElement::gen(1, 0, smash_D(1, 0, idx({1})));  // s1 D(r+s)
  want += SmashElement::gen(1, 0, smash_D(1, 0, s));                      // -s1 D(s)
  want += Scalar(-2) * SmashElement::gen(1, 0, smash_D(1, 0, idx({1})));  // -r1 D(r+s)
  want += Scalar(2) * SmashElement::gen(1, 0, smash_D(1, 0, r));          // +r1 D(r)
  CHECK(smash_bracket(x, y) == want);
}

TEST_CASE("D0 pairs commute") {
  auto x = SmashElement::gen(1, 1, smash_D0(1, idx({1})));
  auto y = SmashElement::gen(1, 1, smash_D0(1, idx({-2})));
  CHECK(smash_bracket(x, y).is_zero());
}

TEST_CASE("Delta on D0 differentiates the second argument") {
  auto x = SmashElement::gen(1, 1, smash_P(1, 1, idx({0})));
  auto y = SmashElement::gen(1, 1, smash_D0(1, idx({0})));
  CHECK(smash_bracket(x, y) == SmashElement::gen(1, 1, smash_D0(1, idx({0}))));
}

TEST_CASE("smash bracket matches the A#V Lie-Rinehart bracket") {
  for (auto [m, n] : {std::pair{1, 1}, {1, 2}, {2, 1}, {2, 2}, {1, 0}}) {
    Sampler rng(11 + static_cast<std::uint64_t>(m * 10 + n));
    int bad = 0;
    for (int it = 0; it < 300; ++it) {
      auto x = random_gen(rng, m, n, 2);
      auto y = random_gen(rng, m, n, 2);
      auto lhs = oracle::embed(smash_bracket(x, y));
      auto rhs = oracle::bracket(m, n, oracle::embed(x), oracle::embed(y));
      if (lhs != rhs) {
        if (bad++ == 0) MESSAGE("first mismatch: [" << to_string(x) << ", " << to_string(y) << "] = " << to_string(smash_bracket(x, y)));
      }
    }
    CHECK_MESSAGE(bad == 0, "m=" << m << " n=" << n);
  }
}

TEST_CASE("smash bracket is super-antisymmetric") {
  Sampler rng(5);
  for (int it = 0; it < 200; ++it) {
    auto x = random_gen(rng, 2, 2, 2);
    auto y = random_gen(rng, 2, 2, 2);
    int s = sign_pow(*x.parity() * *y.parity());
    CHECK(smash_bracket(x, y) == Scalar(-s) * smash_bracket(y, x));
  }
}
