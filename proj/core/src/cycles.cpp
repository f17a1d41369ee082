#include "lefsig/cycles.hpp"

#include "lefsig/errors.hpp"

namespace lefsig {

VanishingCycle::VanishingCycle(std::string label, HomologyClass cls, bool separating,
                               int piece_genus, bool negative)
    : label_(std::move(label)),
      cls_(std::move(cls)),
      separating_(separating),
      piece_genus_(piece_genus),
      negative_(negative) {}

VanishingCycle VanishingCycle::nonseparating(std::string label, HomologyClass cls,
                                             bool negative) {
  if (label.empty()) {
    throw ValidationError("vanishing cycle needs a label");
  }
  if (!is_primitive(cls)) {
    throw ValidationError("nonseparating cycle '" + label +
                          "' needs a primitive homology class");
  }
  return VanishingCycle(std::move(label), std::move(cls), false, 0, negative);
}

VanishingCycle VanishingCycle::separating(std::string label, GenusContext ctx, int piece_genus,
                                          bool negative) {
  if (label.empty()) {
    throw ValidationError("vanishing cycle needs a label");
  }
  const int max_piece = ctx.genus / 2;
  if (piece_genus < 1 || piece_genus > max_piece) {
    throw ValidationError("separating cycle '" + label + "' at genus " +
                          std::to_string(ctx.genus) + " needs piece genus in [1, " +
                          std::to_string(max_piece) + "], got " +
                          std::to_string(piece_genus));
  }
  return VanishingCycle(std::move(label), HomologyClass::zero(ctx), true, piece_genus,
                        negative);
}

SymplecticMap VanishingCycle::action() const {
  // twist_action of the zero class is already the identity, so separating
  // cycles need no branch; negative twists act by the inverse transvection.
  return negative_ ? inverse_twist_action(cls_) : twist_action(cls_);
}

SymplecticMap word_monodromy(const std::vector<VanishingCycle>& word, std::size_t upto) {
  if (upto > word.size()) {
    throw ValidationError("monodromy prefix length exceeds word length");
  }
  if (upto == 0 && word.empty()) {
    throw ValidationError("monodromy of an empty word needs a genus context");
  }
  SymplecticMap acc = SymplecticMap::identity(word.front().ctx());
  for (std::size_t i = 0; i < upto; ++i) {
    if (!(word[i].ctx() == acc.ctx())) {
      throw ValidationError("mixed genus contexts in monodromy word");
    }
    acc = compose(word[i].action(), acc);
  }
  return acc;
}

}  // namespace lefsig
