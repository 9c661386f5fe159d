#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace holant {

// Canonical GMP rational: gcd(|num|, den) = 1, den >= 1, zero is 0/1.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat make_rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// Prints "p" or "p/q"; the leading '-' (if any) is part of the numerator.
std::string to_string(const Rat& r);

/// Parses "-?uint(/uint)?". Throws Error{Syntax|ZeroDenominator}.
Rat parse_rat(std::string_view text);

}  // namespace holant
