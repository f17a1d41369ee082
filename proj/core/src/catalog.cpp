#include "lefsig/catalog.hpp"

#include <algorithm>

#include "lefsig/errors.hpp"

namespace lefsig {

CurveTable::CurveTable(GenusContext ctx) : ctx_(ctx) {}

bool CurveTable::contains(const std::string& label) const { return find(label) != nullptr; }

const VanishingCycle* CurveTable::find(const std::string& label) const {
  for (std::size_t i = 0; i < order_.size(); ++i) {
    if (order_[i] == label) return &entries_[i].cycle;
  }
  return nullptr;
}

void CurveTable::insert_preset(const VanishingCycle& cycle) {
  if (!(cycle.ctx() == ctx_)) {
    throw ValidationError("curve '" + cycle.label() + "' has the wrong genus context");
  }
  if (contains(cycle.label())) {
    throw ValidationError("duplicate preset label '" + cycle.label() + "'");
  }
  order_.push_back(cycle.label());
  entries_.push_back(Entry{cycle, true});
}

void CurveTable::insert_user(const VanishingCycle& cycle) {
  if (!(cycle.ctx() == ctx_)) {
    throw ValidationError("curve '" + cycle.label() + "' has the wrong genus context");
  }
  for (std::size_t i = 0; i < order_.size(); ++i) {
    if (order_[i] != cycle.label()) continue;
    if (!entries_[i].from_preset) {
      throw ValidationError("duplicate curve label '" + cycle.label() + "'");
    }
    // user lines may override preset entries
    entries_[i] = Entry{cycle, false};
    return;
  }
  order_.push_back(cycle.label());
  entries_.push_back(Entry{cycle, false});
}

CurveTable chain_preset(GenusContext ctx) {
  const int g = ctx.genus;
  CurveTable table(ctx);

  auto a = [&](int i) { return HomologyClass::basis(ctx, 2 * (i - 1)); };
  auto b = [&](int i) { return HomologyClass::basis(ctx, 2 * i - 1); };

  for (int k = 1; k <= 2 * g + 1; ++k) {
    HomologyClass cls = HomologyClass::zero(ctx);
    if (k % 2 == 0) {
      cls = b(k / 2);
    } else if (k == 1) {
      cls = a(1);
    } else if (k == 2 * g + 1) {
      cls = a(g);
    } else {
      const int i = (k - 1) / 2;
      cls = a(i) + a(i + 1);
    }
    table.insert_preset(VanishingCycle::nonseparating("c" + std::to_string(k), cls));
  }

  if (g == 1) {
    table.insert_preset(VanishingCycle::nonseparating("a", a(1)));
    table.insert_preset(VanishingCycle::nonseparating("b", b(1)));
  }
  if (g == 3) {
    for (int k = 1; k <= 7; ++k) {
      const VanishingCycle* c = table.find("c" + std::to_string(k));
      table.insert_preset(VanishingCycle::nonseparating("d" + std::to_string(k), c->cls()));
    }
  }
  return table;
}

}  // namespace lefsig
