#include "wmn/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace wmn {

namespace {

bool valid_integer(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den.front() == '-' || den.front() == '+') {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  std::string n(num.front() == '+' ? num.substr(1) : num);
  mpz_class nz(n, 10);
  mpz_class dz(std::string(den), 10);
  if (dz == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  Scalar q(nz, dz);
  q.canonicalize();
  return q;
}

std::string to_string(const Scalar& x) { return x.get_str(); }

Scalar frac(long a, long b) {
  if (b == 0) throw std::invalid_argument("zero denominator");
  Scalar q(a, b);
  q.canonicalize();
  return q;
}

bool is_integer(const Scalar& x) { return x.get_den() == 1; }

Scalar binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Scalar(r);
}

Scalar factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Scalar(r);
}

}  // namespace wmn
