#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lefsig/wall_step.hpp"

namespace lefsig {

enum class BaseSurface { disk, sphere };  // D2, S2

enum class HyperellipticSetting { automatic, asserted, denied };

// A genus-g Lefschetz fibration over D2 or S2 given by its monodromy word in
// attachment order. The achiral flag gates experimental negative twists.
struct FibrationSpec {
  GenusContext ctx;
  BaseSurface base = BaseSurface::disk;
  std::vector<VanishingCycle> word;
  HyperellipticSetting hyperelliptic = HyperellipticSetting::automatic;
  bool achiral = false;
};

// automatic resolves to asserted for g <= 2 (every such fibration is
// hyperelliptic) and to denied otherwise.
bool hyperelliptic_resolved(const FibrationSpec& spec);

struct StepRecord {
  std::size_t index = 0;  // 1-based attachment index
  std::string label;
  bool separating = false;
  bool negative = false;
  std::optional<KernelLine> kernel;
  std::optional<std::array<Integer, 2>> framed;
  int increment = 0;
  long long running_sigma = 0;
};

struct CheckResult {
  enum class Status { pass, fail, not_integer, not_applicable };
  Status status = Status::not_applicable;
  std::string details;
};

std::string to_string(CheckResult::Status status);

struct FibrationReport {
  int genus = 0;
  BaseSurface base = BaseSurface::disk;
  std::size_t t = 0;                     // word length
  long long n = 0;                       // nonseparating count
  std::map<int, long long> s_by_genus;   // separating counts by piece genus
  long long s = 0;                       // total separating count
  std::vector<StepRecord> steps;
  long long sigma = 0;
  long long euler = 0;
  std::optional<Rational> c1_squared;    // sphere base only
  std::optional<Rational> chi;           // sphere base only, (sigma + e)/4
  bool closure = false;                  // total monodromy trivial on H1
  std::vector<std::pair<std::string, CheckResult>> checks;  // fixed order
  bool achiral = false;
};

// Full pipeline: per-handle signature increments (exact, incremental prefix
// monodromies), Euler characteristic, sphere-only invariants, closure flag
// and every applicable closed-form check.
FibrationReport compute(const FibrationSpec& spec);

// True iff the whole word acts trivially on H1. Necessary (not sufficient)
// for the word to close up over S2.
bool closure_check(const FibrationSpec& spec);

// Exact value of the per-fiber signature formula for hyperelliptic
// fibrations over S2:
//   -(g+1)/(2g+1) n + sum_h (4h(g-h)/(2g+1) - 1) s_h.
// A non-integer value certifies that no such hyperelliptic fibration exists.
Rational local_signature_formula(int genus, long long n,
                                 const std::map<int, long long>& s_by_genus);

// Parameter-level status of the formula against a computed sigma.
CheckResult::Status local_formula_status(int genus, long long n,
                                         const std::map<int, long long>& s_by_genus,
                                         long long sigma);

// Divisibility constraint for hyperelliptic fibrations over S2:
// n + 4 sum_h h(2h+1) s_h = 0 mod 4(2g+1) for odd g, mod 2(2g+1) for even g.
bool twist_count_congruence(int genus, long long n,
                            const std::map<int, long long>& s_by_genus);

// (k_g, l_g) of the slope inequality c1^2 <= k_g chi + l_g, exact.
std::pair<Rational, Rational> geography_constants(int genus);

// Replaces the separating token at 1-based `position` (genus 2 only) by the
// twelve-twist sequence (c1 c2)^6 about [c1] = a1, [c2] = b1. Raises
// ValidationError unless the token is separating.
FibrationSpec substitute_separating(const FibrationSpec& spec, std::size_t position);

}  // namespace lefsig
