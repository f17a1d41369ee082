#pragma once

#include <cstddef>
#include <vector>

#include "lefsig/rational.hpp"

namespace lefsig {

// First homology of a closed orientable genus-g surface with its intersection
// pairing. Coefficient order is a1, b1, a2, b2, ..., ag, bg.
//
// Sign conventions, fixed here once and relied on everywhere else:
//
//   pairing(a_i, b_i) = -1      pairing(b_i, a_i) = +1
//   twist_action(gamma): x -> x + pairing(x, gamma) * gamma
//
// Together with first-twist-innermost word composition and the -1-framing
// basis change p = u, q = u + v in the handle-attachment step, this
// combination reproduces the classical (a b)^6 elliptic-surface signature
// trace step by step. Flipping any one sign breaks that trace, so treat the
// four choices as a unit.
struct GenusContext {
  explicit GenusContext(int genus);

  int genus;
  std::size_t dim() const { return static_cast<std::size_t>(2 * genus); }

  bool operator==(const GenusContext&) const = default;
};

class HomologyClass {
public:
  HomologyClass(GenusContext ctx, std::vector<Integer> coeffs);

  static HomologyClass zero(GenusContext ctx);
  // index is 0-based into a1, b1, a2, b2, ...
  static HomologyClass basis(GenusContext ctx, std::size_t index);

  const GenusContext& ctx() const { return ctx_; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  const Integer& operator[](std::size_t i) const { return coeffs_[i]; }

  bool is_zero() const;

  HomologyClass operator-() const;
  HomologyClass operator+(const HomologyClass& rhs) const;
  HomologyClass operator-(const HomologyClass& rhs) const;

  bool operator==(const HomologyClass&) const = default;

private:
  GenusContext ctx_;
  std::vector<Integer> coeffs_;
};

// The intersection form described above. Context mismatch is a ValidationError.
Integer pairing(const HomologyClass& x, const HomologyClass& y);

// True iff the coefficient gcd is 1 (zero class is not primitive).
bool is_primitive(const HomologyClass& x);

}  // namespace lefsig
