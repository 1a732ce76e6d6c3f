#pragma once

#include <gmpxx.h>

#include <string>

namespace mouldinv {

using Rational = mpq_class;

// Accepts "p", "p/q", "-p/q"; result is canonicalized.
Rational parse_rational(const std::string& s);
std::string to_string(const Rational& q);
long double to_ld(const Rational& q);
Rational factorial(int n);
Rational binomial(int n, int k);

}  // namespace mouldinv
