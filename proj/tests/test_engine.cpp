#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"
#include "lefsig/engine.hpp"
#include "lefsig/errors.hpp"
#include "lefsig/report_json.hpp"
#include "lefsig/word_dsl.hpp"
#include "test_support.hpp"

using namespace lefsig;

namespace {

FibrationReport run(const std::string& doc) { return compute(parse_document(doc)); }

const CheckResult& check_named(const FibrationReport& r, const std::string& name) {
  for (const auto& [n, result] : r.checks) {
    if (n == name) return result;
  }
  FAIL("missing check: " << name);
  static CheckResult dummy;
  return dummy;
}

}  // namespace

TEST_CASE("elliptic surface report") {
  const FibrationReport r = run("genus 1\nbase S2\npreset chain\nword (a b)^6\n");
  CHECK(r.sigma == -8);
  CHECK(r.euler == 12);
  CHECK(r.t == 12);
  CHECK(r.n == 12);
  CHECK(r.s == 0);
  CHECK(r.closure);
  REQUIRE(r.c1_squared.has_value());
  CHECK(*r.c1_squared == 0);
  REQUIRE(r.chi.has_value());
  CHECK(*r.chi == 1);
  const int expected[12] = {0, 0, -1, -1, -1, -1, -1, -1, -1, -1, 0, 0};
  REQUIRE(r.steps.size() == 12);
  long long running = 0;
  for (std::size_t i = 0; i < 12; ++i) {
    CHECK(r.steps[i].increment == expected[i]);
    running += expected[i];
    CHECK(r.steps[i].running_sigma == running);
    CHECK(r.steps[i].index == i + 1);
  }
  for (const auto& [name, result] : r.checks) {
    CAPTURE(name);
    CHECK(result.status == CheckResult::Status::pass);
  }
}

TEST_CASE("genus-2 sphere signatures") {
  CHECK(run("genus 2\nbase S2\npreset chain\nword (c1 c2 c3 c4 c5 c5 c4 c3 c2 c1)^2\n").sigma ==
        -12);
  CHECK(run("genus 2\nbase S2\npreset chain\nword (c1 c2 c3 c4 c5)^6\n").sigma == -18);
  CHECK(run("genus 2\nbase S2\npreset chain\n"
            "word (c5 c1 c4 c2 c3 c4 c2 c5 c1 c4 c2 c3 c4 c2 c3)^2\n")
            .sigma == -18);
  const FibrationReport r4 = run("genus 2\nbase S2\npreset chain\nword (c1 c2 c3 c4)^10\n");
  CHECK(r4.sigma == -24);
  CHECK(r4.euler == 36);
  CHECK(*r4.c1_squared == 0);
  CHECK(*r4.chi == 3);
  CHECK(r4.closure);
}

TEST_CASE("genus-2 disk signatures") {
  const std::string word =
      "word (c1 c3 c5 c2 c4 c2 c1 c1 c1 c3 c5 c3 c5 c2 c4 c5)";
  const FibrationReport r1 = run("genus 2\nbase D2\npreset chain\n" + word + "^1\n");
  CHECK(r1.sigma == -10);
  CHECK(r1.euler == 14);
  CHECK_FALSE(r1.c1_squared.has_value());
  CHECK_FALSE(r1.chi.has_value());
  CHECK(run("genus 2\nbase D2\npreset chain\n" + word + "^2\n").sigma == -20);
  CHECK(run("genus 2\nbase D2\npreset chain\n" + word + "^3\n").sigma == -30);
}

TEST_CASE("genus-3 signatures") {
  const FibrationReport sphere =
      run("genus 3\nbase S2\npreset chain\nword (d1 d2 d3 d4 d5 d6)^14\n");
  CHECK(sphere.sigma == -48);
  CHECK(sphere.closure);
  const long long expected[4] = {-1, -8, -11, -16};
  for (int k = 1; k <= 4; ++k) {
    CHECK(run("genus 3\nbase D2\npreset chain\nword (d1 d3 d5 d7 d2 d4 d6)^" +
              std::to_string(k) + "\n")
              .sigma == expected[k - 1]);
  }
}

TEST_CASE("closure flag") {
  CHECK_FALSE(run("genus 1\nbase S2\npreset chain\nword a\n").closure);
  CHECK(run("genus 2\nbase S2\ncurve s0 sep 1\nword s0 s0\n").closure);
}

TEST_CASE("per-fiber signature formula values") {
  CHECK(local_signature_formula(1, 12, {}) == Rational(-8));
  CHECK(local_signature_formula(2, 20, {}) == Rational(-12));
  CHECK(local_signature_formula(2, 30, {}) == Rational(-18));
  CHECK(local_signature_formula(2, 40, {}) == Rational(-24));
  CHECK(local_signature_formula(2, 0, {{1, 5}}) == Rational(-1));
  const Rational value74 = local_signature_formula(3, 74, {});
  CHECK(value74 == make_rational(Integer(-296), Integer(7)));
  CHECK_FALSE(is_integer(value74));
  CHECK(local_formula_status(3, 74, {}, -42) == CheckResult::Status::not_integer);
  CHECK(local_formula_status(1, 12, {}, -8) == CheckResult::Status::pass);
  CHECK(local_formula_status(1, 12, {}, -7) == CheckResult::Status::fail);
}

TEST_CASE("twist count congruence") {
  CHECK(twist_count_congruence(1, 12, {}));
  CHECK(twist_count_congruence(2, 20, {}));
  CHECK(twist_count_congruence(2, 30, {}));
  CHECK(twist_count_congruence(2, 40, {}));
  CHECK_FALSE(twist_count_congruence(2, 7, {}));
  CHECK(twist_count_congruence(2, 0, {{1, 5}}));  // 4*1*3*5 = 60 = 0 mod 10
  CHECK_FALSE(twist_count_congruence(1, 11, {}));
}

TEST_CASE("geography constants") {
  CHECK(geography_constants(1) == std::pair{Rational(0), Rational(0)});
  CHECK(geography_constants(2) == std::pair{Rational(6), Rational(-3)});
  CHECK(geography_constants(3) ==
        std::pair{make_rational(Integer(29), Integer(4)), make_rational(Integer(-11), Integer(4))});
  CHECK(geography_constants(4) ==
        std::pair{make_rational(Integer(33), Integer(4)), make_rational(Integer(-3), Integer(4))});
  for (int g = 2; g <= 50; ++g) {
    const auto [k, l] = geography_constants(g);
    const Integer gg(g);
    const Rational k_ceil = Rational(10) - make_rational(Integer(6 * gg + 4), gg * gg);
    const Rational l_ceil =
        Rational(Integer(2 * gg - 10)) + make_rational(Integer(4 * gg + 4), gg * gg);
    CHECK(k <= k_ceil);
    CHECK(l <= l_ceil);
  }
}

TEST_CASE("hyperelliptic resolution") {
  FibrationSpec spec{GenusContext(2), BaseSurface::sphere, {}, HyperellipticSetting::automatic,
                     false};
  CHECK(hyperelliptic_resolved(spec));
  spec.ctx = GenusContext(3);
  CHECK_FALSE(hyperelliptic_resolved(spec));
  spec.hyperelliptic = HyperellipticSetting::asserted;
  CHECK(hyperelliptic_resolved(spec));
  spec.ctx = GenusContext(1);
  spec.hyperelliptic = HyperellipticSetting::denied;
  CHECK_FALSE(hyperelliptic_resolved(spec));
}

TEST_CASE("check gating") {
  // disk base: sphere-side checks are not applicable, the basic bound is
  const FibrationReport disk = run("genus 2\nbase D2\npreset chain\nword c1 c2\n");
  CHECK(check_named(disk, "signature_upper_bound").status == CheckResult::Status::pass);
  CHECK(check_named(disk, "hyperelliptic_signature_bound").status ==
        CheckResult::Status::not_applicable);
  CHECK(check_named(disk, "geography_inequality").status == CheckResult::Status::not_applicable);

  // sphere but not homologically closed
  const FibrationReport open = run("genus 2\nbase S2\npreset chain\nword c1\n");
  CHECK(check_named(open, "local_signature_formula").status ==
        CheckResult::Status::not_applicable);
  CHECK(check_named(open, "local_signature_formula").details.find("not homologically") !=
        std::string::npos);

  // hyperellipticity denied
  const FibrationReport denied =
      run("genus 2\nbase S2\nhyperelliptic no\npreset chain\nword (c1 c2 c3 c4 c5)^6\n");
  CHECK(check_named(denied, "local_signature_formula").status ==
        CheckResult::Status::not_applicable);

  // genus 3 resolves to non-hyperelliptic automatically
  const FibrationReport g3 = run("genus 3\nbase S2\npreset chain\nword (d1 d2 d3 d4 d5 d6)^14\n");
  CHECK(check_named(g3, "twist_count_congruence").status ==
        CheckResult::Status::not_applicable);
  // but an explicit assertion turns the checks on
  const FibrationReport g3yes = run(
      "genus 3\nbase S2\nhyperelliptic yes\npreset chain\nword (d1 d2 d3 d4 d5 d6)^14\n");
  CHECK(check_named(g3yes, "local_signature_formula").status !=
        CheckResult::Status::not_applicable);
}

TEST_CASE("all-separating words contradict hyperellipticity") {
  const FibrationReport r = run("genus 2\nbase S2\ncurve s0 sep 1\nword s0 s0\n");
  CHECK(r.sigma == -2);
  CHECK(r.closure);
  CHECK(check_named(r, "all_separating_consistency").status == CheckResult::Status::fail);
  CHECK(check_named(r, "signature_upper_bound").status == CheckResult::Status::pass);
  // sigma = -s saturates the basic bound
  CHECK(check_named(r, "signature_upper_bound").details.find("margin 0") != std::string::npos);
}

TEST_CASE("empty words are degenerate but consistent") {
  const FibrationSpec spec{GenusContext(2), BaseSurface::disk, {},
                           HyperellipticSetting::automatic, false};
  const FibrationReport r = compute(spec);
  CHECK(r.t == 0);
  CHECK(r.sigma == 0);
  CHECK(r.euler == -2);
  CHECK(r.closure);
  CHECK(check_named(r, "signature_upper_bound").status == CheckResult::Status::pass);
}

TEST_CASE("compute validations") {
  FibrationSpec spec{GenusContext(2), BaseSurface::disk, {}, HyperellipticSetting::automatic,
                     false};
  spec.word.push_back(
      VanishingCycle::nonseparating("w", HomologyClass::basis(GenusContext(1), 0)));
  CHECK_THROWS_AS(compute(spec), ValidationError);

  FibrationSpec neg{GenusContext(1), BaseSurface::disk,
                    {VanishingCycle::nonseparating("a", HomologyClass::basis(GenusContext(1), 0),
                                                   true)},
                    HyperellipticSetting::automatic, false};
  CHECK_THROWS_AS(compute(neg), ValidationError);
  neg.achiral = true;
  CHECK(compute(neg).t == 1);
}

TEST_CASE("achiral words cancel and disable the closed-form checks") {
  FibrationSpec spec = parse_document("genus 2\nbase S2\npreset chain\nword c1 -c1\n");
  spec.achiral = true;
  const FibrationReport r = compute(spec);
  CHECK(r.sigma == 0);
  CHECK(r.closure);
  for (const auto& [name, result] : r.checks) {
    CAPTURE(name);
    CHECK(result.status == CheckResult::Status::not_applicable);
  }
  const std::string j = report_to_json(r);
  CHECK(j.find("\"experimental\": \"achiral\"") != std::string::npos);
  CHECK(j.find("\"negative\": true") != std::string::npos);
}

TEST_CASE("total signature is rotation invariant on closed words") {
  const FibrationSpec spec =
      parse_document("genus 2\nbase S2\npreset chain\nword (c1 c2 c3 c4 c5)^6\n");
  const long long sigma = compute(spec).sigma;
  for (std::size_t rot : {1u, 7u, 15u, 29u}) {
    FibrationSpec rotated = spec;
    std::rotate(rotated.word.begin(), rotated.word.begin() + rot, rotated.word.end());
    CHECK(compute(rotated).sigma == sigma);
  }
}

TEST_CASE("substitution replaces one separating twist by twelve nonseparating ones") {
  const FibrationSpec spec = parse_document(
      "genus 2\nbase S2\npreset chain\ncurve s0 sep 1\nword s0 (c1 c2 c3 c4 c5)^6\n");
  const FibrationSpec replaced = substitute_separating(spec, 1);
  CHECK(replaced.word.size() == spec.word.size() + 11);
  CHECK(replaced.word[0].label() == "c1");
  CHECK(replaced.word[1].label() == "c2");
  CHECK_FALSE(replaced.word[0].is_separating());

  const FibrationReport before = compute(spec);
  const FibrationReport after = compute(replaced);
  CHECK(before.closure);
  CHECK(after.euler - before.euler == 11);
  CHECK(after.sigma - before.sigma == -7);
}

TEST_CASE("substitution validations") {
  const FibrationSpec spec = parse_document(
      "genus 2\nbase D2\npreset chain\ncurve s0 sep 1\nword c1 s0 c2\n");
  CHECK_THROWS_AS(substitute_separating(spec, 0), ValidationError);
  CHECK_THROWS_AS(substitute_separating(spec, 4), ValidationError);
  CHECK_THROWS_AS(substitute_separating(spec, 1), ValidationError);  // nonseparating
  const FibrationSpec g3 = parse_document(
      "genus 3\nbase D2\npreset chain\ncurve s0 sep 1\nword s0\n");
  CHECK_THROWS_AS(substitute_separating(g3, 1), ValidationError);
}

TEST_CASE("substitution avoids clashing labels") {
  // c1 here names a curve that is NOT the a1 class, and c2 is taken too
  const FibrationSpec spec = parse_document(
      "genus 2\nbase D2\n"
      "curve c1 0 0 1 0\ncurve c2 0 0 0 1\ncurve s0 sep 1\n"
      "word c1 c2 s0\n");
  const FibrationSpec replaced = substitute_separating(spec, 3);
  REQUIRE(replaced.word.size() == 14);
  const std::string la = replaced.word[2].label();
  const std::string lb = replaced.word[3].label();
  CHECK(la != "c1");
  CHECK(lb != "c2");
  CHECK(replaced.word[2].cls() == HomologyClass::basis(GenusContext(2), 0));
  CHECK(replaced.word[3].cls() == HomologyClass::basis(GenusContext(2), 1));
  // the renderer accepts the result (no label collisions)
  const FibrationSpec reparsed = parse_document(render_document(replaced));
  CHECK(reparsed.word.size() == replaced.word.size());
}

TEST_CASE("json output is exact, stable and null-aware") {
  const FibrationSpec spec =
      parse_document("genus 1\nbase S2\npreset chain\nword (a b)^6\n");
  const FibrationReport r = compute(spec);
  const std::string once = report_to_json(r);
  const std::string twice = report_to_json(compute(spec));
  CHECK(once == twice);
  CHECK(once.find("\"sigma\": -8") != std::string::npos);
  CHECK(once.find("\"chi\": 1") != std::string::npos);
  CHECK(once.find("\"base\": \"S2\"") != std::string::npos);
  CHECK(once.find("\"experimental\"") == std::string::npos);

  const std::string disk =
      report_to_json(run("genus 2\nbase D2\npreset chain\nword c1 c2\n"));
  CHECK(disk.find("\"c1_squared\": null") != std::string::npos);
  CHECK(disk.find("\"chi\": null") != std::string::npos);

  // non-integer chi serializes as an exact fraction string
  const std::string frac =
      report_to_json(run("genus 1\nbase S2\npreset chain\nword a a\n"));
  CHECK(frac.find("\"chi\": \"1/4\"") != std::string::npos);
}

TEST_CASE("sigma is bounded by the word length") {
  testing::Rng rng(99);
  for (int genus = 1; genus <= 3; ++genus) {
    const GenusContext ctx(genus);
    for (int iter = 0; iter < 20; ++iter) {
      FibrationSpec spec{ctx, BaseSurface::disk,
                         testing::random_chain_word(rng, ctx, 15, true),
                         HyperellipticSetting::automatic, false};
      const FibrationReport r = compute(spec);
      CHECK(r.sigma <= static_cast<long long>(r.t));
      CHECK(r.sigma >= -static_cast<long long>(r.t));
      CHECK(r.n + r.s == static_cast<long long>(r.t));
      CHECK(r.sigma <= r.n - r.s);
    }
  }
}
