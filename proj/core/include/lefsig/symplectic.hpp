#pragma once

#include <cstddef>
#include <vector>

#include "lefsig/homology.hpp"

namespace lefsig {

// An integer matrix acting on H1 by columns (image of basis vector k is
// column k) and preserving the intersection pairing exactly. The public
// constructor verifies the symplectic condition; twist_action, compose and
// inverse produce symplectic maps by construction and skip the check.
class SymplecticMap {
public:
  SymplecticMap(GenusContext ctx, std::vector<std::vector<Integer>> matrix);

  static SymplecticMap identity(GenusContext ctx);

  const GenusContext& ctx() const { return ctx_; }
  const Integer& at(std::size_t row, std::size_t col) const {
    return matrix_[row][col];
  }

  HomologyClass apply(const HomologyClass& x) const;
  // column k as a class, i.e. the image of the k-th basis vector
  HomologyClass column(std::size_t k) const;

  // For M symplectic, M^-1 = -J M^T J; exact and division-free.
  SymplecticMap inverse() const;

  bool is_identity() const;

  bool operator==(const SymplecticMap&) const = default;

private:
  struct unchecked_t {};
  SymplecticMap(GenusContext ctx, std::vector<std::vector<Integer>> matrix, unchecked_t);

  GenusContext ctx_;
  std::vector<std::vector<Integer>> matrix_;

  friend SymplecticMap twist_action(const HomologyClass&);
  friend SymplecticMap compose(const SymplecticMap&, const SymplecticMap&);
  friend SymplecticMap inverse_twist_action(const HomologyClass&);
  friend SymplecticMap symplectic_completion(const HomologyClass&);
};

bool preserves_form(const GenusContext& ctx, const std::vector<std::vector<Integer>>& matrix);

// Positive Dehn twist about a curve with class gamma, on homology:
// x -> x + pairing(x, gamma) gamma. The zero class gives the identity, so
// separating twists need no special casing.
SymplecticMap twist_action(const HomologyClass& gamma);

// Inverse transvection x -> x - pairing(x, gamma) gamma (negative twist).
SymplecticMap inverse_twist_action(const HomologyClass& gamma);

// outer after inner
SymplecticMap compose(const SymplecticMap& outer, const SymplecticMap& inner);

// A symplectic map S with S(gamma) = a1, for gamma primitive. Deterministic:
// the symplectic basis starting at gamma is built by extended-gcd duals and
// lowest-index projections, so equal inputs give equal outputs.
SymplecticMap symplectic_completion(const HomologyClass& gamma);

}  // namespace lefsig
