#include "lefsig/word_dsl.hpp"

#include <cctype>
#include <optional>
#include <set>
#include <sstream>
#include <utility>

#include "lefsig/errors.hpp"

namespace lefsig {

namespace {

constexpr std::size_t kMaxFlattenedTwists = 1000000;

struct Token {
  enum class Kind { ident, integer, lparen, rparen, caret, minus, end };
  Kind kind;
  std::string text;
  int line;
  int col;
};

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> tokens;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t count) {
    for (std::size_t k = 0; k < count; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      advance(1);
      continue;
    }
    const int tline = line;
    const int tcol = col;
    if (c == '(') {
      tokens.push_back({Token::Kind::lparen, "(", tline, tcol});
      advance(1);
    } else if (c == ')') {
      tokens.push_back({Token::Kind::rparen, ")", tline, tcol});
      advance(1);
    } else if (c == '^') {
      tokens.push_back({Token::Kind::caret, "^", tline, tcol});
      advance(1);
    } else if (c == '-' && !(i + 1 < text.size() && is_digit(text[i + 1]))) {
      tokens.push_back({Token::Kind::minus, "-", tline, tcol});
      advance(1);
    } else if (c == '-' || is_digit(c)) {
      std::size_t j = i + (c == '-' ? 1 : 0);
      while (j < text.size() && is_digit(text[j])) ++j;
      tokens.push_back({Token::Kind::integer, text.substr(i, j - i), tline, tcol});
      advance(j - i);
    } else if (is_ident_start(c)) {
      std::size_t j = i;
      while (j < text.size() && is_ident_char(text[j])) ++j;
      tokens.push_back({Token::Kind::ident, text.substr(i, j - i), tline, tcol});
      advance(j - i);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", tline, tcol);
    }
  }
  tokens.push_back({Token::Kind::end, "", line, col});
  return tokens;
}

const std::set<std::string>& keywords() {
  static const std::set<std::string> kw = {"genus", "base",          "preset", "curve",
                                           "word",  "hyperelliptic", "sep"};
  return kw;
}

class Parser {
public:
  explicit Parser(const std::string& text) : tokens_(lex(text)) {}

  // table_only: accept documents without base/word (curve-table files).
  FibrationSpec run(bool table_only);
  CurveTable take_table() { return std::move(*table_); }

private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& get() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const std::string& msg, const Token& at) const {
    throw ParseError(msg, at.line, at.col);
  }

  Integer expect_integer(const std::string& what) {
    const Token& t = get();
    if (t.kind != Token::Kind::integer) {
      fail("expected " + what + ", got '" + t.text + "'", t);
    }
    return Integer(t.text);
  }

  std::string expect_ident(const std::string& what) {
    const Token& t = get();
    if (t.kind != Token::Kind::ident) {
      fail("expected " + what + ", got '" + t.text + "'", t);
    }
    return t.text;
  }

  GenusContext require_genus(const Token& at) const {
    if (!genus_) {
      fail("genus must be declared before preset, curve and word statements", at);
    }
    return GenusContext(*genus_);
  }

  void parse_genus();
  void parse_base();
  void parse_preset();
  void parse_curve();
  void parse_hyperelliptic();
  void parse_word();

  std::vector<WordItem> parse_word_items(bool top_level);

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;

  std::optional<int> genus_;
  std::optional<BaseSurface> base_;
  std::optional<HyperellipticSetting> hyper_;
  std::optional<CurveTable> table_;
  std::optional<WordAst> ast_;
  Token word_at_{Token::Kind::end, "", 0, 0};
};

void Parser::parse_genus() {
  const Token& at = peek();
  if (genus_) fail("duplicate genus statement", at);
  const Integer g = expect_integer("a genus value");
  if (g < 1 || g > 100000) {
    fail("genus must be between 1 and 100000", at);
  }
  genus_ = static_cast<int>(g.get_si());
  table_.emplace(GenusContext(*genus_));
}

void Parser::parse_base() {
  const Token& at = peek();
  if (base_) fail("duplicate base statement", at);
  const std::string name = expect_ident("D2 or S2");
  if (name == "D2") {
    base_ = BaseSurface::disk;
  } else if (name == "S2") {
    base_ = BaseSurface::sphere;
  } else {
    fail("base must be D2 or S2, got '" + name + "'", at);
  }
}

void Parser::parse_preset() {
  const Token& at = peek();
  const GenusContext ctx = require_genus(at);
  const std::string name = expect_ident("a preset name");
  if (name != "chain") {
    fail("unknown preset '" + name + "' (available: chain)", at);
  }
  const CurveTable preset = chain_preset(ctx);
  for (const std::string& label : preset.labels()) {
    table_->insert_preset(*preset.find(label));
  }
}

void Parser::parse_curve() {
  const Token& at = peek();
  const GenusContext ctx = require_genus(at);
  const Token& label_tok = get();
  if (label_tok.kind != Token::Kind::ident) {
    fail("expected a curve label, got '" + label_tok.text + "'", label_tok);
  }
  if (keywords().count(label_tok.text)) {
    fail("'" + label_tok.text + "' is a reserved word and cannot be a curve label", label_tok);
  }
  if (peek().kind == Token::Kind::ident && peek().text == "sep") {
    get();
    const Token& h_at = peek();
    const Integer h = expect_integer("a piece genus");
    if (h < 1 || h > ctx.genus / 2) {
      throw ValidationError("line " + std::to_string(h_at.line) + ", col " +
                            std::to_string(h_at.col) + ": piece genus out of range");
    }
    table_->insert_user(
        VanishingCycle::separating(label_tok.text, ctx, static_cast<int>(h.get_si())));
    return;
  }
  std::vector<Integer> coeffs;
  coeffs.reserve(ctx.dim());
  for (std::size_t k = 0; k < ctx.dim(); ++k) {
    if (peek().kind != Token::Kind::integer) {
      fail("curve '" + label_tok.text + "' needs " + std::to_string(ctx.dim()) +
               " coefficients, got " + std::to_string(k),
           peek());
    }
    coeffs.push_back(Integer(get().text));
  }
  table_->insert_user(
      VanishingCycle::nonseparating(label_tok.text, HomologyClass(ctx, std::move(coeffs))));
}

void Parser::parse_hyperelliptic() {
  const Token& at = peek();
  if (hyper_) fail("duplicate hyperelliptic statement", at);
  const std::string v = expect_ident("yes, no or auto");
  if (v == "yes") {
    hyper_ = HyperellipticSetting::asserted;
  } else if (v == "no") {
    hyper_ = HyperellipticSetting::denied;
  } else if (v == "auto") {
    hyper_ = HyperellipticSetting::automatic;
  } else {
    fail("hyperelliptic must be yes, no or auto, got '" + v + "'", at);
  }
}

std::vector<WordItem> Parser::parse_word_items(bool top_level) {
  std::vector<WordItem> items;
  for (;;) {
    const Token& t = peek();
    if (t.kind == Token::Kind::end) break;
    if (t.kind == Token::Kind::rparen) {
      if (top_level) fail("unmatched ')'", t);
      break;
    }
    if (t.kind == Token::Kind::ident) {
      if (keywords().count(t.text)) {
        if (top_level) break;  // next statement
        fail("reserved word '" + t.text + "' inside a word group", t);
      }
      get();
      items.push_back(WordToken{t.text, false});
      continue;
    }
    if (t.kind == Token::Kind::minus) {
      get();
      const Token& lab = get();
      if (lab.kind != Token::Kind::ident || keywords().count(lab.text)) {
        fail("expected a curve label after '-'", lab);
      }
      items.push_back(WordToken{lab.text, true});
      continue;
    }
    if (t.kind == Token::Kind::lparen) {
      get();
      WordGroup group;
      group.items = parse_word_items(false);
      if (peek().kind != Token::Kind::rparen) {
        fail("expected ')'", peek());
      }
      get();
      if (peek().kind == Token::Kind::caret) {
        get();
        const Token& e_at = peek();
        const Integer e = expect_integer("an exponent");
        if (e < 1) fail("group exponent must be at least 1", e_at);
        if (e > 1000000) fail("group exponent is too large", e_at);
        group.exponent = static_cast<long long>(e.get_si());
      }
      if (group.items.empty()) fail("empty word group", t);
      items.push_back(std::move(group));
      continue;
    }
    fail("unexpected '" + t.text + "' in word", t);
  }
  return items;
}

void Parser::parse_word() {
  const Token& at = peek();
  if (ast_) fail("duplicate word statement", at);
  require_genus(at);
  word_at_ = at;
  WordAst ast;
  ast.items = parse_word_items(true);
  if (ast.items.empty()) fail("word statement needs at least one twist", at);
  ast_ = std::move(ast);
}

FibrationSpec Parser::run(bool table_only) {
  for (;;) {
    const Token& t = peek();
    if (t.kind == Token::Kind::end) break;
    if (t.kind != Token::Kind::ident) {
      fail("expected a statement keyword, got '" + t.text + "'", t);
    }
    const std::string kw = get().text;
    if (kw == "genus") {
      parse_genus();
    } else if (kw == "base") {
      parse_base();
    } else if (kw == "preset") {
      parse_preset();
    } else if (kw == "curve") {
      parse_curve();
    } else if (kw == "hyperelliptic") {
      parse_hyperelliptic();
    } else if (kw == "word") {
      parse_word();
    } else {
      fail("unknown statement '" + kw + "'", t);
    }
  }

  const Token& eof = peek();
  if (!genus_) fail("missing genus statement", eof);
  if (table_only) {
    return FibrationSpec{GenusContext(*genus_), BaseSurface::disk, {},
                         HyperellipticSetting::automatic, false};
  }
  if (!base_) fail("missing base statement", eof);
  if (!ast_) fail("missing word statement", eof);

  FibrationSpec spec{GenusContext(*genus_), *base_, {},
                     hyper_.value_or(HyperellipticSetting::automatic), false};
  const std::vector<WordToken> tokens = flatten(*ast_);
  spec.word.reserve(tokens.size());
  for (const WordToken& tok : tokens) {
    const VanishingCycle* cycle = table_->find(tok.label);
    if (cycle == nullptr) {
      fail("unknown curve label '" + tok.label + "'", word_at_);
    }
    if (tok.negative) {
      spec.word.push_back(cycle->is_separating()
                              ? VanishingCycle::separating(cycle->label(), cycle->ctx(),
                                                           cycle->piece_genus(), true)
                              : VanishingCycle::nonseparating(cycle->label(), cycle->cls(),
                                                              true));
    } else {
      spec.word.push_back(*cycle);
    }
  }
  return spec;
}

void flatten_into(const std::vector<WordItem>& items, long long copies,
                  std::vector<WordToken>& out) {
  for (long long c = 0; c < copies; ++c) {
    for (const WordItem& item : items) {
      if (std::holds_alternative<WordToken>(item)) {
        if (out.size() >= kMaxFlattenedTwists) {
          throw ValidationError("word expands to more than 1000000 twists");
        }
        out.push_back(std::get<WordToken>(item));
      } else {
        const WordGroup& g = std::get<WordGroup>(item);
        flatten_into(g.items, g.exponent, out);
      }
    }
  }
}

}  // namespace

std::vector<WordToken> flatten(const WordAst& ast) {
  std::vector<WordToken> out;
  flatten_into(ast.items, 1, out);
  return out;
}

FibrationSpec parse_document(const std::string& text) {
  Parser parser(text);
  return parser.run(false);
}

CurveTable load_table(const std::string& document_text) {
  Parser parser(document_text);
  parser.run(true);
  return parser.take_table();
}

std::string render_document(const FibrationSpec& spec) {
  std::ostringstream out;
  out << "genus " << spec.ctx.genus << "\n";
  out << "base " << (spec.base == BaseSurface::sphere ? "S2" : "D2") << "\n";
  switch (spec.hyperelliptic) {
    case HyperellipticSetting::asserted:
      out << "hyperelliptic yes\n";
      break;
    case HyperellipticSetting::denied:
      out << "hyperelliptic no\n";
      break;
    case HyperellipticSetting::automatic:
      out << "hyperelliptic auto\n";
      break;
  }

  std::vector<const VanishingCycle*> distinct;
  for (const VanishingCycle& cycle : spec.word) {
    bool seen = false;
    for (const VanishingCycle* d : distinct) {
      if (d->label() == cycle.label()) {
        if (!(d->cls() == cycle.cls()) || d->is_separating() != cycle.is_separating() ||
            (d->is_separating() && d->piece_genus() != cycle.piece_genus())) {
          throw ValidationError("label '" + cycle.label() +
                                "' is bound to two different curves");
        }
        seen = true;
        break;
      }
    }
    if (!seen) distinct.push_back(&cycle);
  }
  for (const VanishingCycle* cycle : distinct) {
    out << "curve " << cycle->label();
    if (cycle->is_separating()) {
      out << " sep " << cycle->piece_genus();
    } else {
      for (const Integer& c : cycle->cls().coeffs()) {
        out << " " << c.get_str();
      }
    }
    out << "\n";
  }

  out << "word";
  for (const VanishingCycle& cycle : spec.word) {
    out << " " << (cycle.negative() ? "-" : "") << cycle.label();
  }
  out << "\n";
  return out.str();
}

}  // namespace lefsig
