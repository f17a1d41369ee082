#pragma once

#include <array>
#include <optional>
#include <vector>

#include "lefsig/cycles.hpp"

namespace lefsig {

// Integer presentation of H1 of the complement of the attaching torus in the
// boundary fibration, for a handle attached along a curve whose class has
// been normalized to a1. Generators, in order: a1, b1, ..., ag, bg, b1'.
// Relations: e - phi(e) for every basis element e except b1, and b1' - phi(b1)
// for b1. img_l and img_m are the images of the longitude a1 and the meridian
// b1 - b1' in those generators.
struct ComplementPresentation {
  GenusContext ctx;
  std::vector<std::vector<Integer>> relations;  // 2g rows of length 2g+1
  std::vector<Integer> img_l;                   // length 2g+1
  std::vector<Integer> img_m;                   // length 2g+1
};

// Generator of the line {(u,v) : u img_l + v img_m in span(relations)},
// canonicalized coprime with u >= 0, and v > 0 when u = 0.
struct KernelLine {
  Integer u;
  Integer v;

  bool operator==(const KernelLine&) const = default;
};

// One handle attachment's signature contribution. Nonseparating steps carry
// the kernel line and its image (p, q) after the framing basis change;
// separating steps carry neither.
struct StepOutcome {
  int increment = 0;  // -1, 0 or +1
  std::optional<KernelLine> kernel;
  std::optional<std::array<Integer, 2>> framed;

  bool operator==(const StepOutcome&) const = default;
};

ComplementPresentation build_presentation(const SymplecticMap& phi);

// Solves the membership system exactly. The solution line must be
// one-dimensional; dimension 0 or 2 raises InternalInvariantError.
KernelLine kernel_line(const ComplementPresentation& p);

// Signature increment for attaching a -1-framed handle along `cycle` when the
// monodromy so far is `phi`. Separating cycles contribute -1 outright.
// Nonseparating cycles are normalized to a1 by a symplectic completion; the
// kernel line (u,v) maps to (p,q) = (u, u+v) under the -1-framing
// identification and the increment is -sign(p*q).
StepOutcome relative_signature(const SymplecticMap& phi, const VanishingCycle& cycle);

// Same computation with a caller-chosen completion (must send cycle's class
// to a1). Exists so tests can exercise completion independence.
StepOutcome relative_signature_using(const SymplecticMap& completion,
                                     const SymplecticMap& phi, const HomologyClass& gamma);

// Experimental: negative (left-handed) twists. A negative nonseparating twist
// attaches a +1-framed handle, so the framing identification becomes
// (p,q) = (u, v-u); a negative separating twist contributes +1. With
// negative = false this is exactly relative_signature.
StepOutcome relative_signature_achiral(const SymplecticMap& phi, const VanishingCycle& cycle,
                                       bool negative);

}  // namespace lefsig
