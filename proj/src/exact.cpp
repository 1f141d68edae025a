#include "latticeflaw/exact.hpp"

#include <stdexcept>

namespace latticeflaw {

Int factorial(long long n) {
  if (n < 0) throw std::domain_error("factorial: negative argument");
  Int result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return result;
}

Int binomial(long long n, long long k) {
  if (n < 0) throw std::domain_error("binomial: negative upper index");
  if (k < 0 || k > n) return 0;
  Int result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return result;
}

Rat rat_pow(const Rat& base, long long exp) {
  if (exp < 0) throw std::domain_error("rat_pow: negative exponent");
  Rat result;
  mpz_pow_ui(result.get_num_mpz_t(), base.get_num().get_mpz_t(),
             static_cast<unsigned long>(exp));
  mpz_pow_ui(result.get_den_mpz_t(), base.get_den().get_mpz_t(),
             static_cast<unsigned long>(exp));
  // base was canonical, so num^e / den^e already is; no reduction needed.
  return result;
}

bool is_integral(const Rat& value) { return value.get_den() == 1; }

Int to_integer(const Rat& value) {
  if (!is_integral(value)) {
    throw std::domain_error("to_integer: value " + to_string(value) +
                            " is not an integer");
  }
  return value.get_num();
}

long long gcd_ll(long long x, long long y) {
  while (y != 0) {
    long long t = x % y;
    x = y;
    y = t;
  }
  return x < 0 ? -x : x;
}

std::string to_string(const Int& value) { return value.get_str(); }

std::string to_string(const Rat& value) { return value.get_str(); }

}  // namespace latticeflaw
