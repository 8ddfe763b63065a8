#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace coverlab {

// All measure arithmetic is exact. Rationals are GMP-backed so results never
// overflow or round; floats appear only in report mirrors and diagnostics.
using Rat = mpq_class;
using Int = mpz_class;

// Canonicalized rational num/den. den must be nonzero.
Rat rat(long num, long den = 1);

// Accepts "3", "-4/6", "0.25", "1e-5", "2.5e3". Exact in all cases.
Rat parse_rational(const std::string& text);

// Canonical form: "num/den", or just "num" when the denominator is 1.
std::string rat_str(const Rat& q);

double rat_double(const Rat& q);

Int int_pow(unsigned long base, unsigned exp);

}  // namespace coverlab
