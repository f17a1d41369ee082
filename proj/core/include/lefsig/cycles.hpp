#pragma once

#include <string>
#include <vector>

#include "lefsig/symplectic.hpp"

namespace lefsig {

// One vanishing cycle of the monodromy word. Nonseparating cycles carry a
// primitive homology class; separating cycles carry the zero class plus the
// genus h of the smaller piece they cut off (1 <= h <= g/2). The negative
// flag marks an experimental achiral (left-handed) twist.
class VanishingCycle {
public:
  static VanishingCycle nonseparating(std::string label, HomologyClass cls,
                                      bool negative = false);
  static VanishingCycle separating(std::string label, GenusContext ctx, int piece_genus,
                                   bool negative = false);

  const std::string& label() const { return label_; }
  const GenusContext& ctx() const { return cls_.ctx(); }
  bool is_separating() const { return separating_; }
  // zero class for separating cycles
  const HomologyClass& cls() const { return cls_; }
  // only meaningful for separating cycles
  int piece_genus() const { return piece_genus_; }
  bool negative() const { return negative_; }

  // Action on H1: positive twists as twist_action, negative as its inverse;
  // separating cycles act trivially either way.
  SymplecticMap action() const;

  bool operator==(const VanishingCycle&) const = default;

private:
  VanishingCycle(std::string label, HomologyClass cls, bool separating, int piece_genus,
                 bool negative);

  std::string label_;
  HomologyClass cls_;
  bool separating_;
  int piece_genus_;
  bool negative_;
};

// Composite action of the first `upto` twists, first twist innermost:
// word_monodromy(w, t) = action(w[t-1]) o ... o action(w[0]); upto = 0 gives
// the identity. upto > word length is a ValidationError.
SymplecticMap word_monodromy(const std::vector<VanishingCycle>& word, std::size_t upto);

}  // namespace lefsig
