#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace mop {

// GMP rationals are canonical after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);

// "num/den" with an explicit denominator, e.g. "-3/1".
std::string to_string(const Rational& q);
std::vector<std::string> to_strings(const std::vector<Rational>& v);

// Accepts "p/q", "p", or a finite decimal such as "0.25".
Rational parse_rational(const std::string& s);

bool is_integer(const Rational& q);
// True for 0, -1, -2, ...; sets m = -q.
bool is_nonpositive_integer(const Rational& q, long* m = nullptr);

Rational pow(const Rational& q, long e);
Rational factorial(long n);
Rational binomial(long n, long k);

double to_double(const Rational& q);

}  // namespace mop
