#include "lefsig/engine.hpp"

#include <sstream>

#include "lefsig/catalog.hpp"
#include "lefsig/errors.hpp"
#include "lefsig/symplectic.hpp"

namespace lefsig {

namespace {

Integer big(long long x) { return Integer(static_cast<long>(x)); }

std::string rat_str(const Rational& q) { return to_string(q); }

// Empty result means the sphere-side checks apply; otherwise the reason they
// do not. Reasons are ranked: base, then closure, then hyperellipticity.
std::string sphere_gate_reason(const FibrationSpec& spec, const FibrationReport& report) {
  if (spec.base != BaseSurface::sphere) {
    return "base is D2 (stated for fibrations over S2)";
  }
  if (!report.closure) {
    return "total monodromy is not homologically trivial";
  }
  if (!hyperelliptic_resolved(spec)) {
    return "hyperellipticity not asserted";
  }
  return {};
}

CheckResult not_applicable(std::string reason) {
  return CheckResult{CheckResult::Status::not_applicable, std::move(reason)};
}

CheckResult signature_upper_bound_check(const FibrationReport& r) {
  const long long bound = r.n - r.s;
  std::ostringstream msg;
  if (r.sigma <= bound) {
    msg << "sigma = " << r.sigma << ", n - s = " << bound << ", margin " << bound - r.sigma;
    return {CheckResult::Status::pass, msg.str()};
  }
  msg << "sigma = " << r.sigma << " exceeds n - s = " << bound;
  return {CheckResult::Status::fail, msg.str()};
}

CheckResult hyperelliptic_bound_check(const FibrationReport& r) {
  const long long bound = r.n - r.s - 4;
  std::ostringstream msg;
  if (r.sigma <= bound) {
    msg << "sigma = " << r.sigma << ", n - s - 4 = " << bound << ", margin " << bound - r.sigma;
    return {CheckResult::Status::pass, msg.str()};
  }
  msg << "sigma = " << r.sigma << " exceeds n - s - 4 = " << bound;
  return {CheckResult::Status::fail, msg.str()};
}

CheckResult local_formula_check(const FibrationReport& r) {
  const Rational value = local_signature_formula(r.genus, r.n, r.s_by_genus);
  std::ostringstream msg;
  switch (local_formula_status(r.genus, r.n, r.s_by_genus, r.sigma)) {
    case CheckResult::Status::not_integer:
      msg << "formula value " << rat_str(value)
          << " is not an integer: no such hyperelliptic fibration exists";
      return {CheckResult::Status::not_integer, msg.str()};
    case CheckResult::Status::pass:
      msg << "formula value " << rat_str(value) << " matches computed sigma";
      return {CheckResult::Status::pass, msg.str()};
    default:
      msg << "formula value " << rat_str(value) << " differs from computed sigma = " << r.sigma;
      return {CheckResult::Status::fail, msg.str()};
  }
}

CheckResult congruence_check(const FibrationReport& r) {
  Integer lhs = big(r.n);
  for (const auto& [h, count] : r.s_by_genus) {
    lhs += Integer(4) * h * (2 * h + 1) * big(count);
  }
  const int g = r.genus;
  const int modulus = (g % 2 == 1) ? 4 * (2 * g + 1) : 2 * (2 * g + 1);
  const Integer rem = lhs % modulus;
  std::ostringstream msg;
  if (rem == 0) {
    msg << "n + 4*sum h(2h+1) s_h = " << lhs.get_str() << " is divisible by " << modulus;
    return {CheckResult::Status::pass, msg.str()};
  }
  msg << "n + 4*sum h(2h+1) s_h = " << lhs.get_str() << " leaves remainder " << rem.get_str()
      << " mod " << modulus;
  return {CheckResult::Status::fail, msg.str()};
}

CheckResult geography_check(const FibrationReport& r) {
  const auto [k, l] = geography_constants(r.genus);
  const Rational lhs(*r.c1_squared);
  const Rational rhs = k * (*r.chi) + l;
  std::ostringstream msg;
  msg << "c1^2 = " << rat_str(lhs) << (lhs <= rhs ? " <= " : " > ") << rat_str(rhs)
      << " = k*chi + l with k = " << rat_str(k) << ", l = " << rat_str(l);
  return {lhs <= rhs ? CheckResult::Status::pass : CheckResult::Status::fail, msg.str()};
}

CheckResult all_separating_check(const FibrationReport& r) {
  if (r.t == 0 || r.n > 0) {
    return {CheckResult::Status::pass, "word has nonseparating twists"};
  }
  const Rational formula = local_signature_formula(r.genus, 0, r.s_by_genus);
  std::ostringstream msg;
  msg << "all " << r.t << " twists are separating: engine sigma = " << r.sigma
      << " contradicts the per-fiber formula value " << rat_str(formula)
      << "; no such hyperelliptic fibration exists";
  return {CheckResult::Status::fail, msg.str()};
}

}  // namespace

bool hyperelliptic_resolved(const FibrationSpec& spec) {
  switch (spec.hyperelliptic) {
    case HyperellipticSetting::asserted:
      return true;
    case HyperellipticSetting::denied:
      return false;
    case HyperellipticSetting::automatic:
      break;
  }
  return spec.ctx.genus <= 2;
}

std::string to_string(CheckResult::Status status) {
  switch (status) {
    case CheckResult::Status::pass:
      return "pass";
    case CheckResult::Status::fail:
      return "fail";
    case CheckResult::Status::not_integer:
      return "not-integer";
    case CheckResult::Status::not_applicable:
      break;
  }
  return "not-applicable";
}

bool closure_check(const FibrationSpec& spec) {
  if (spec.word.empty()) return true;
  return word_monodromy(spec.word, spec.word.size()).is_identity();
}

Rational local_signature_formula(int genus, long long n,
                                 const std::map<int, long long>& s_by_genus) {
  if (genus < 1) throw ValidationError("genus must be at least 1");
  const Integer denom(2 * genus + 1);
  Rational total = make_rational(Integer(-(genus + 1)), denom) * Rational(big(n));
  for (const auto& [h, count] : s_by_genus) {
    const Rational coeff =
        make_rational(Integer(4) * h * (genus - h), denom) - Rational(1);
    total += coeff * Rational(big(count));
  }
  total.canonicalize();
  return total;
}

CheckResult::Status local_formula_status(int genus, long long n,
                                         const std::map<int, long long>& s_by_genus,
                                         long long sigma) {
  const Rational value = local_signature_formula(genus, n, s_by_genus);
  if (!is_integer(value)) return CheckResult::Status::not_integer;
  return value == Rational(big(sigma)) ? CheckResult::Status::pass : CheckResult::Status::fail;
}

bool twist_count_congruence(int genus, long long n,
                            const std::map<int, long long>& s_by_genus) {
  if (genus < 1) throw ValidationError("genus must be at least 1");
  Integer lhs = big(n);
  for (const auto& [h, count] : s_by_genus) {
    lhs += Integer(4) * h * (2 * h + 1) * big(count);
  }
  const int modulus = (genus % 2 == 1) ? 4 * (2 * genus + 1) : 2 * (2 * genus + 1);
  return lhs % modulus == 0;
}

std::pair<Rational, Rational> geography_constants(int genus) {
  if (genus < 1) throw ValidationError("genus must be at least 1");
  if (genus == 1) return {Rational(0), Rational(0)};
  const Integer g(genus);
  if (genus % 2 == 0) {
    const Integer g2 = g * g;
    Rational k = Rational(10) - make_rational(Integer(6 * g + 4), g2);
    Rational l = Rational(Integer(2 * g - 10)) + make_rational(Integer(4 * g + 4), g2);
    k.canonicalize();
    l.canonicalize();
    return {k, l};
  }
  const Integer g2m1 = g * g - 1;
  const Integer odd = 2 * g + 1;
  Rational k = Rational(10) - make_rational(Integer(6 * g + 4), g2m1);
  Rational l = Rational(Integer(2 * g - 10)) + make_rational(Integer(8), odd) +
               make_rational(Integer(6), g2m1 * odd);
  k.canonicalize();
  l.canonicalize();
  return {k, l};
}

FibrationReport compute(const FibrationSpec& spec) {
  bool has_negative = false;
  for (const VanishingCycle& cycle : spec.word) {
    if (!(cycle.ctx() == spec.ctx)) {
      throw ValidationError("twist '" + cycle.label() + "' has the wrong genus context");
    }
    if (cycle.negative()) {
      if (!spec.achiral) {
        throw ValidationError("negative twist '" + cycle.label() +
                              "' requires achiral mode");
      }
      has_negative = true;
    }
  }

  FibrationReport report;
  report.genus = spec.ctx.genus;
  report.base = spec.base;
  report.t = spec.word.size();
  report.achiral = spec.achiral;

  for (const VanishingCycle& cycle : spec.word) {
    if (cycle.is_separating()) {
      ++report.s;
      ++report.s_by_genus[cycle.piece_genus()];
    } else {
      ++report.n;
    }
  }

  SymplecticMap prefix = SymplecticMap::identity(spec.ctx);
  long long running = 0;
  report.steps.reserve(report.t);
  for (std::size_t i = 0; i < report.t; ++i) {
    const VanishingCycle& cycle = spec.word[i];
    const StepOutcome outcome = relative_signature_achiral(prefix, cycle, cycle.negative());
    running += outcome.increment;
    report.steps.push_back(StepRecord{i + 1, cycle.label(), cycle.is_separating(),
                                      cycle.negative(), outcome.kernel, outcome.framed,
                                      outcome.increment, running});
    prefix = compose(cycle.action(), prefix);
  }
  report.sigma = running;
  report.closure = report.t == 0 || prefix.is_identity();

  const long long base_euler =
      spec.base == BaseSurface::sphere ? 4 - 4 * report.genus : 2 - 2 * report.genus;
  report.euler = base_euler + static_cast<long long>(report.t);
  if (spec.base == BaseSurface::sphere) {
    report.c1_squared = Rational(big(3 * report.sigma + 2 * report.euler));
    Rational chi = make_rational(big(report.sigma + report.euler), Integer(4));
    report.chi = chi;
  }

  const std::string gate = sphere_gate_reason(spec, report);
  auto gated = [&](CheckResult (*check)(const FibrationReport&)) {
    if (has_negative) {
      return not_applicable("word contains negative twists (experimental)");
    }
    if (!gate.empty()) return not_applicable(gate);
    return check(report);
  };

  report.checks.emplace_back(
      "signature_upper_bound",
      has_negative ? not_applicable("word contains negative twists (experimental)")
                   : signature_upper_bound_check(report));
  report.checks.emplace_back("hyperelliptic_signature_bound", gated(hyperelliptic_bound_check));
  report.checks.emplace_back("local_signature_formula", gated(local_formula_check));
  report.checks.emplace_back("twist_count_congruence", gated(congruence_check));
  report.checks.emplace_back("geography_inequality", gated(geography_check));
  report.checks.emplace_back("all_separating_consistency", gated(all_separating_check));
  return report;
}

FibrationSpec substitute_separating(const FibrationSpec& spec, std::size_t position) {
  if (spec.ctx.genus != 2) {
    throw ValidationError("substitution is defined for genus 2 words");
  }
  if (position < 1 || position > spec.word.size()) {
    throw ValidationError("position " + std::to_string(position) +
                          " is out of range for a word of length " +
                          std::to_string(spec.word.size()));
  }
  const VanishingCycle& target = spec.word[position - 1];
  if (!target.is_separating()) {
    throw ValidationError("twist at position " + std::to_string(position) +
                          " is not separating");
  }
  if (target.negative()) {
    throw ValidationError("cannot substitute a negative twist");
  }

  const HomologyClass a1 = HomologyClass::basis(spec.ctx, 0);
  const HomologyClass b1 = HomologyClass::basis(spec.ctx, 1);
  auto choose_label = [&](const std::string& wanted, const HomologyClass& cls) {
    for (const VanishingCycle& cycle : spec.word) {
      if (!cycle.is_separating() && cycle.cls() == cls) return cycle.label();
    }
    std::string label = wanted;
    auto taken = [&](const std::string& candidate) {
      for (const VanishingCycle& cycle : spec.word) {
        if (cycle.label() == candidate) return true;
      }
      return false;
    };
    while (taken(label)) label += "_";
    return label;
  };
  const VanishingCycle za = VanishingCycle::nonseparating(choose_label("c1", a1), a1);
  const VanishingCycle zb = VanishingCycle::nonseparating(choose_label("c2", b1), b1);

  FibrationSpec out = spec;
  out.word.clear();
  out.word.reserve(spec.word.size() + 11);
  for (std::size_t i = 0; i < spec.word.size(); ++i) {
    if (i + 1 == position) {
      for (int rep = 0; rep < 6; ++rep) {
        out.word.push_back(za);
        out.word.push_back(zb);
      }
    } else {
      out.word.push_back(spec.word[i]);
    }
  }
  return out;
}

}  // namespace lefsig
