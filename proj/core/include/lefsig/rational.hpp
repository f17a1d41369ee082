#pragma once

#include <gmpxx.h>

#include <string>

namespace lefsig {

// Exact arithmetic substrate. mpq_class keeps values in lowest terms with a
// positive denominator, which is exactly the invariant the rest of the code
// assumes.
using Integer = mpz_class;
using Rational = mpq_class;

// num/den in canonical form; rejects den == 0.
Rational make_rational(const Integer& num, const Integer& den);

int signum(const Integer& x);
int signum(const Rational& x);

bool is_integer(const Rational& x);

std::string to_string(const Integer& x);
// "p" when integral, "p/q" otherwise.
std::string to_string(const Rational& x);

}  // namespace lefsig
