#pragma once

#include <gmpxx.h>

#include <string>

namespace latticeflaw {

// Every count and every intermediate rational in this project is exact.
// Rat is always in lowest terms with positive denominator (gmpxx keeps
// mpq_class canonical across arithmetic).
using Int = mpz_class;
using Rat = mpq_class;

// gmpxx ships arithmetic overloads for long but not long long; long is
// 64-bit on the targets this project builds for, so route through it.
static_assert(sizeof(long) == sizeof(long long),
              "Int conversions assume 64-bit long");
inline Int make_int(long long value) { return Int(static_cast<long>(value)); }

Int factorial(long long n);

// binomial(n, k) = 0 when k < 0 or k > n; requires n >= 0.
Int binomial(long long n, long long k);

// base^exp for exp >= 0; rat_pow(x, 0) = 1.
Rat rat_pow(const Rat& base, long long exp);

// A Rat is integral exactly when its canonical denominator is 1.
bool is_integral(const Rat& value);

// Throws std::domain_error when value is not integral.
Int to_integer(const Rat& value);

long long gcd_ll(long long x, long long y);

std::string to_string(const Int& value);
std::string to_string(const Rat& value);

}  // namespace latticeflaw
