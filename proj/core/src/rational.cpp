#include "lefsig/rational.hpp"

#include "lefsig/errors.hpp"

namespace lefsig {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) {
    throw ValidationError("rational with zero denominator: " + num.get_str() + "/0");
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

int signum(const Integer& x) { return sgn(x); }

int signum(const Rational& x) { return sgn(x); }

bool is_integer(const Rational& x) { return x.get_den() == 1; }

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& x) { return x.get_str(); }

}  // namespace lefsig
