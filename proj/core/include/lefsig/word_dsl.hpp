#pragma once

#include <string>
#include <variant>
#include <vector>

#include "lefsig/catalog.hpp"
#include "lefsig/engine.hpp"

namespace lefsig {

// Word syntax tree: labels and exponentiated groups, e.g. (a b)^6.
struct WordToken {
  std::string label;
  bool negative = false;  // '-label', experimental achiral twists

  bool operator==(const WordToken&) const = default;
};

struct WordGroup;

using WordItem = std::variant<WordToken, WordGroup>;

struct WordGroup {
  std::vector<WordItem> items;
  long long exponent = 1;  // >= 1

  bool operator==(const WordGroup&) const = default;
};

struct WordAst {
  std::vector<WordItem> items;

  bool operator==(const WordAst&) const = default;
};

// Purely syntactic expansion of groups; length of the result is the sum of
// exponent-weighted token counts.
std::vector<WordToken> flatten(const WordAst& ast);

// Parses a full fibration document:
//
//   genus 2
//   base S2
//   preset chain
//   curve x 1 0 1 0        # nonseparating, 2g coefficients
//   curve s0 sep 1         # separating, piece genus 1
//   hyperelliptic auto     # yes | no | auto
//   word (c1 c2 c3 c4 c5)^6
//
// '#' starts a comment; commas count as whitespace; genus must precede
// preset/curve/word. Statement keywords are reserved and cannot be labels.
// Syntax problems raise ParseError, semantic problems (unknown label,
// non-primitive class, bad piece genus, duplicates) raise ParseError or
// ValidationError with position where available.
FibrationSpec parse_document(const std::string& text);

// Canonical one-statement-per-line form: genus, base, hyperelliptic, one
// curve line per distinct label in first-use order, then the flat word.
// parse_document(render_document(spec)) reproduces `spec`.
std::string render_document(const FibrationSpec& spec);

}  // namespace lefsig
