#pragma once

#include <string>
#include <vector>

#include "lefsig/cycles.hpp"

namespace lefsig {

// Named curves available to a word document. Labels are unique; classes may
// coincide (the genus-1 chain has [c1] = [c3]). Preset entries may be
// overridden by user curve lines; user entries may not be redefined.
class CurveTable {
public:
  explicit CurveTable(GenusContext ctx);

  const GenusContext& ctx() const { return ctx_; }

  bool contains(const std::string& label) const;
  // null when absent
  const VanishingCycle* find(const std::string& label) const;

  // Validates the cycle (primitive class / piece genus in range via the
  // VanishingCycle factories upstream) and enforces the override policy.
  void insert_preset(const VanishingCycle& cycle);
  void insert_user(const VanishingCycle& cycle);

  // labels in insertion order
  const std::vector<std::string>& labels() const { return order_; }

private:
  struct Entry {
    VanishingCycle cycle;
    bool from_preset;
  };

  GenusContext ctx_;
  std::vector<std::string> order_;
  std::vector<Entry> entries_;  // parallel to order_
};

// The standard chain c1..c_{2g+1}: [c1] = a1, [c_{2i}] = b_i,
// [c_{2i+1}] = a_i + a_{i+1}, [c_{2g+1}] = a_g. Consecutive curves pair to
// +-1, all other pairs to 0. Genus 1 also exposes aliases a, b; genus 3 also
// exposes aliases d1..d7 for c1..c7 (d8, d9 are not built in).
CurveTable chain_preset(GenusContext ctx);

// Parses a document containing only genus / preset / curve statements and
// returns the resulting table. Implemented by the document parser.
CurveTable load_table(const std::string& document_text);

}  // namespace lefsig
