#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace symrep {

using BigInt = mpz_class;
using Rational = mpq_class;

std::string to_string(const BigInt& x);
// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& x);

// Accepts "3", "-3/4", "0.25", "1e-3".  Decimals are read exactly.
Rational parse_rational(std::string_view text);

// Snaps to the nearest fraction with denominator <= 2^20 when that fraction is
// within 1e-12, otherwise returns the exact binary value of x.
Rational rational_from_double(double x);

inline double to_double(const Rational& x) { return x.get_d(); }

BigInt factorial(long n);
// n (n-1) ... (n-k+1); zero when k > n >= 0.
BigInt falling_factorial(long n, long k);

} // namespace symrep
