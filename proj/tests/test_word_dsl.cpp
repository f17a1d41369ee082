#include <string>
#include <vector>

#include "doctest.h"
#include "lefsig/engine.hpp"
#include "lefsig/errors.hpp"
#include "lefsig/word_dsl.hpp"

using namespace lefsig;

namespace {

std::vector<std::string> labels_of(const FibrationSpec& spec) {
  std::vector<std::string> out;
  for (const auto& cycle : spec.word) out.push_back(cycle.label());
  return out;
}

}  // namespace

TEST_CASE("elliptic-surface document") {
  const FibrationSpec spec = parse_document("genus 1\npreset chain\nbase S2\nword (a b)^6\n");
  CHECK(spec.ctx.genus == 1);
  CHECK(spec.base == BaseSurface::sphere);
  CHECK(spec.hyperelliptic == HyperellipticSetting::automatic);
  REQUIRE(spec.word.size() == 12);
  for (std::size_t i = 0; i < 12; ++i) {
    CHECK(spec.word[i].label() == (i % 2 == 0 ? "a" : "b"));
  }
}

TEST_CASE("palindromic doubled word") {
  const FibrationSpec spec = parse_document(
      "genus 2\nbase S2\npreset chain\nword (c1 c2 c3 c4 c5 c5 c4 c3 c2 c1)^2\n");
  REQUIRE(spec.word.size() == 20);
  const auto l = labels_of(spec);
  CHECK(l[0] == "c1");
  CHECK(l[4] == "c5");
  CHECK(l[5] == "c5");
  CHECK(l[9] == "c1");
  CHECK(std::vector<std::string>(l.begin(), l.begin() + 10) ==
        std::vector<std::string>(l.begin() + 10, l.end()));
}

TEST_CASE("comments, commas and nesting") {
  const FibrationSpec spec = parse_document(
      "# a silly example\n"
      "genus 1, base D2\n"
      "preset chain  # built-in labels\n"
      "word ((a)^2 b)^2, a\n");
  CHECK(labels_of(spec) ==
        std::vector<std::string>{"a", "a", "b", "a", "a", "b", "a"});
  CHECK(spec.base == BaseSurface::disk);
}

TEST_CASE("flatten expands groups syntactically") {
  const WordToken a{"a", false};
  const WordToken b{"b", false};
  WordAst ast;
  ast.items.push_back(WordGroup{{a, b}, 2});
  CHECK(flatten(ast) == std::vector<WordToken>{a, b, a, b});

  WordAst nested;
  WordGroup inner{{a}, 2};
  nested.items.push_back(WordGroup{{inner, b}, 2});
  CHECK(flatten(nested) == std::vector<WordToken>{a, a, b, a, a, b});

  WordAst single;
  single.items.push_back(a);
  CHECK(flatten(single) == std::vector<WordToken>{a});
}

TEST_CASE("negative tokens parse and carry the flag") {
  const FibrationSpec spec =
      parse_document("genus 1\nbase D2\npreset chain\nword a -b (-a b)^2\n");
  REQUIRE(spec.word.size() == 6);
  CHECK_FALSE(spec.word[0].negative());
  CHECK(spec.word[1].negative());
  CHECK(spec.word[2].negative());
  CHECK_FALSE(spec.word[3].negative());
  // without achiral mode the engine rejects them
  CHECK_THROWS_AS(compute(spec), ValidationError);
  FibrationSpec on = spec;
  on.achiral = true;
  CHECK(compute(on).achiral);
}

TEST_CASE("curve statements define and override labels") {
  const FibrationSpec spec = parse_document(
      "genus 2\nbase D2\npreset chain\n"
      "curve x 0 1 0 -1\n"
      "curve c1 0 0 0 1\n"  // overrides the preset class
      "curve s0 sep 1\n"
      "word x c1 s0\n");
  CHECK(spec.word[0].cls() ==
        HomologyClass(GenusContext(2), {Integer(0), Integer(1), Integer(0), Integer(-1)}));
  CHECK(spec.word[1].cls() == HomologyClass::basis(GenusContext(2), 3));
  CHECK(spec.word[2].is_separating());
  CHECK(spec.word[2].piece_genus() == 1);
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_document("genus 1\nbase S2\npreset chain\nword (a b\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 5);
    CHECK(std::string(e.what()).find("')'") != std::string::npos);
  }

  try {
    parse_document("genus 1\nbase ??\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("semantic errors") {
  CHECK_THROWS_AS(parse_document("genus 1\nbase S2\nword a\n"), ParseError);  // unknown label
  CHECK_THROWS_AS(parse_document("base S2\npreset chain\nword a\n"),
                  ParseError);  // genus must come first
  CHECK_THROWS_AS(parse_document("genus 1\npreset chain\nword a\n"), ParseError);  // no base
  CHECK_THROWS_AS(parse_document("genus 1\nbase S2\npreset chain\n"), ParseError);  // no word
  CHECK_THROWS_AS(parse_document("genus 1\ngenus 2\nbase S2\npreset chain\nword a\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_document("genus 1\nbase S2\npreset chain\nword (a b)^0\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_document("genus 1\nbase S2\npreset chain\nword (a b)^-2\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_document("genus 1\nbase S2\npreset chain\nword ()^2\n"), ParseError);
  CHECK_THROWS_AS(
      parse_document("genus 1\nbase S2\npreset chain\nword a\ncurve word 1 0\n"),
      ParseError);  // reserved label
  CHECK_THROWS_AS(parse_document("genus 2\nbase S2\ncurve x 1 0 0\nword x\n"),
                  ParseError);  // class length != 2g
  CHECK_THROWS_AS(parse_document("genus 1\nbase S2\npreset chain\nword a $ b\n"), ParseError);
}

TEST_CASE("validation errors from curve content") {
  CHECK_THROWS_AS(parse_document("genus 2\nbase S2\ncurve y 2 0 0 0\nword y\n"),
                  ValidationError);  // non-primitive
  CHECK_THROWS_AS(parse_document("genus 2\nbase S2\ncurve s sep 9\nword s\n"),
                  ValidationError);
}

TEST_CASE("labels may be declared after the word that uses them") {
  const FibrationSpec spec =
      parse_document("genus 2\nbase D2\nword x x\ncurve x 1 0 0 0\n");
  CHECK(spec.word.size() == 2);
}

TEST_CASE("render emits the canonical document") {
  const FibrationSpec spec = parse_document(
      "genus 2, base S2, hyperelliptic yes\n"
      "preset chain\ncurve s0 sep 1\n"
      "word c1 s0 (c2)^2 -c1\n");
  const std::string rendered = render_document(spec);
  CHECK(rendered ==
        "genus 2\n"
        "base S2\n"
        "hyperelliptic yes\n"
        "curve c1 1 0 0 0\n"
        "curve s0 sep 1\n"
        "curve c2 0 1 0 0\n"
        "word c1 s0 c2 c2 -c1\n");
}

TEST_CASE("round trip preserves the parsed document") {
  const std::string docs[] = {
      "genus 1\nbase S2\npreset chain\nword (a b)^6\n",
      "genus 2\nbase D2\nhyperelliptic no\npreset chain\ncurve s0 sep 1\n"
      "word c1 s0 c5 (c2 c3)^3\n",
      "genus 3\nbase D2\npreset chain\nword d1 -d2 d7\n",
  };
  for (const std::string& doc : docs) {
    const FibrationSpec original = parse_document(doc);
    const FibrationSpec reparsed = parse_document(render_document(original));
    CHECK(reparsed.ctx == original.ctx);
    CHECK(reparsed.base == original.base);
    CHECK(reparsed.hyperelliptic == original.hyperelliptic);
    REQUIRE(reparsed.word.size() == original.word.size());
    for (std::size_t i = 0; i < original.word.size(); ++i) {
      CHECK(reparsed.word[i] == original.word[i]);
    }
  }
}

TEST_CASE("word expansion is capped") {
  CHECK_THROWS_AS(
      parse_document("genus 1\nbase D2\npreset chain\nword ((((a)^100)^100)^100)^100\n"),
      ValidationError);
}
