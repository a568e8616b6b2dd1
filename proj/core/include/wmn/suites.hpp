#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "wmn/json_io.hpp"
#include "wmn/scalar.hpp"
#include "wmn/vector_field.hpp"

namespace wmn {

struct SuiteConfig {
  std::string suite;
  int m = 1;
  int n = 1;
  Kind kind = Kind::Wmn;
  std::string V = "natural";
  /// By even slot (slot 0 = lambda_0); empty selects the defaults 2, 1/2, 1/3, ...
  std::vector<Scalar> lambda;
  int window = 2;
  int samples = 100;
  std::uint64_t seed = 7;
  int depth = 3;
  int raise_depth = 5;
  /// Test mode: runs module-axiom against a module with a flipped sign.
  bool corrupt_sign = false;
};

struct SuiteResult {
  json report;
  bool pass = false;
  int exit_code() const { return pass ? 0 : 1; }
};

/// Suite names with the relation group each one exercises.
std::vector<std::pair<std::string, std::string>> suite_list();

/// Throws std::invalid_argument for unknown suites and invalid dimensions.
void validate(const SuiteConfig& cfg);
std::vector<Scalar> default_lambda(int m);

/// Deterministic given the seed; the report has sorted keys.
SuiteResult run_suite(const SuiteConfig& cfg);

}  // namespace wmn
