#include "pgv/presentation.hpp"

#include <algorithm>
#include <cctype>

namespace pgv {

namespace {

struct Token {
  enum class Kind { Ident, Number, Symbol, End };
  Kind kind;
  std::string text;
  long long value = 0;  // for Number
  int line = 0, column = 0;
};

class Lexer {
public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_space_and_comments();
    Token t;
    t.line = line_;
    t.column = col_;
    if (pos_ >= text_.size()) {
      t.kind = Token::Kind::End;
      return t;
    }
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.kind = Token::Kind::Ident;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        t.text.push_back(advance());
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Token::Kind::Number;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        char d = advance();
        t.text.push_back(d);
        t.value = t.value * 10 + (d - '0');
        if (t.value > 1'000'000)
          throw ParseError("number too large", t.line, t.column);
      }
      return t;
    }
    if (c == '=' || c == '^' || c == '*' || c == ',' || c == ';') {
      t.kind = Token::Kind::Symbol;
      t.text.push_back(advance());
      return t;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
  }

private:
  char advance() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_space_and_comments() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

class Parser {
public:
  explicit Parser(std::string_view text) : lex_(text), source_(text) {}

  Presentation run() {
    advance();
    parse_prime_statement();
    parse_gens_statement();
    const int m = static_cast<int>(pres_.generators.size());
    pres_.power_rhs.assign(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m), 0));
    pres_.conj_rhs.assign(static_cast<size_t>(m) * m, {});
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        std::vector<int> unit(static_cast<size_t>(m), 0);
        unit[static_cast<size_t>(j)] = 1;
        pres_.conj_rhs[static_cast<size_t>(i) * m + j] = std::move(unit);
      }
    power_seen_.assign(static_cast<size_t>(m), false);
    conj_seen_.assign(static_cast<size_t>(m) * m, false);

    while (cur_.kind != Token::Kind::End) parse_relation_statement();
    pres_.source_text = std::string(source_);
    return std::move(pres_);
  }

private:
  void advance() { cur_ = lex_.next(); }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, cur_.line, cur_.column);
  }

  void expect_symbol(char c) {
    if (cur_.kind != Token::Kind::Symbol || cur_.text[0] != c)
      fail(std::string("expected '") + c + "'");
    advance();
  }

  void expect_statement_end() { expect_symbol(';'); }

  int generator_index(const Token& t) const {
    auto it = std::find(pres_.generators.begin(), pres_.generators.end(), t.text);
    if (it == pres_.generators.end())
      throw ParseError("unknown generator '" + t.text + "'", t.line, t.column);
    return static_cast<int>(it - pres_.generators.begin());
  }

  void parse_prime_statement() {
    if (cur_.kind != Token::Kind::Ident || cur_.text != "p")
      fail("expected 'p=<prime>' as the first statement");
    advance();
    expect_symbol('=');
    if (cur_.kind != Token::Kind::Number) fail("expected a prime number after 'p='");
    if (!is_prime(static_cast<int>(cur_.value)))
      fail("'" + cur_.text + "' is not a prime");
    pres_.prime = static_cast<int>(cur_.value);
    advance();
    expect_statement_end();
  }

  void parse_gens_statement() {
    if (cur_.kind != Token::Kind::Ident || cur_.text != "gens")
      fail("expected 'gens <identifiers>' after the prime statement");
    advance();
    while (true) {
      if (cur_.kind != Token::Kind::Ident) fail("expected a generator name");
      if (cur_.text == "p" || cur_.text == "gens")
        fail("'" + cur_.text + "' cannot be used as a generator name");
      if (std::find(pres_.generators.begin(), pres_.generators.end(), cur_.text) !=
          pres_.generators.end())
        fail("duplicate generator '" + cur_.text + "'");
      pres_.generators.push_back(cur_.text);
      advance();
      if (cur_.kind == Token::Kind::Symbol && cur_.text[0] == ',') {
        advance();
        continue;
      }
      break;
    }
    expect_statement_end();
  }

  // word := '1' | factor ('*' factor)*, factor := gen ('^' int)?
  // Must be in normal form: ascending generators, exponents in [0, p).
  std::vector<int> parse_word() {
    const int m = static_cast<int>(pres_.generators.size());
    std::vector<int> vec(static_cast<size_t>(m), 0);
    if (cur_.kind == Token::Kind::Number && cur_.value == 1) {
      advance();
      return vec;
    }
    int last = -1;
    while (true) {
      if (cur_.kind != Token::Kind::Ident) fail("expected a generator in word");
      Token gen_tok = cur_;
      int idx = generator_index(cur_);
      advance();
      int exp = 1;
      if (cur_.kind == Token::Kind::Symbol && cur_.text[0] == '^') {
        advance();
        if (cur_.kind != Token::Kind::Number) fail("expected an exponent");
        if (cur_.value < 0 || cur_.value >= pres_.prime)
          fail("exponent " + cur_.text + " out of range [0, " +
               std::to_string(pres_.prime) + ")");
        exp = static_cast<int>(cur_.value);
        advance();
      }
      if (idx <= last)
        throw ParseError("word is not in normal form: generators must be ascending "
                         "and appear once",
                         gen_tok.line, gen_tok.column);
      last = idx;
      vec[static_cast<size_t>(idx)] = exp;
      if (cur_.kind == Token::Kind::Symbol && cur_.text[0] == '*') {
        advance();
        continue;
      }
      break;
    }
    return vec;
  }

  void parse_relation_statement() {
    if (cur_.kind != Token::Kind::Ident) fail("expected a relation");
    Token target_tok = cur_;
    int target = generator_index(cur_);
    advance();
    expect_symbol('^');

    if (cur_.kind == Token::Kind::Number) {
      // power relation g^p = word
      if (cur_.value != pres_.prime)
        fail("power relation exponent must equal p = " + std::to_string(pres_.prime));
      advance();
      expect_symbol('=');
      Token rhs_tok = cur_;
      std::vector<int> rhs = parse_word();
      for (int k = 0; k <= target; ++k)
        if (rhs[static_cast<size_t>(k)] != 0)
          throw ParseError("power relation right-hand side must use only later "
                           "generators",
                           rhs_tok.line, rhs_tok.column);
      if (power_seen_[static_cast<size_t>(target)])
        throw ParseError("duplicate power relation for '" + target_tok.text + "'",
                         target_tok.line, target_tok.column);
      power_seen_[static_cast<size_t>(target)] = true;
      pres_.power_rhs[static_cast<size_t>(target)] = std::move(rhs);
    } else if (cur_.kind == Token::Kind::Ident) {
      // conjugation relation y^x = word
      Token by_tok = cur_;
      int by = generator_index(cur_);
      advance();
      if (by >= target)
        throw ParseError("conjugation '" + target_tok.text + "^" + by_tok.text +
                         "' requires '" + by_tok.text +
                         "' to come earlier in the generator list",
                         by_tok.line, by_tok.column);
      expect_symbol('=');
      std::vector<int> rhs = parse_word();
      const int m = static_cast<int>(pres_.generators.size());
      size_t slot = static_cast<size_t>(by) * m + static_cast<size_t>(target);
      if (conj_seen_[slot])
        throw ParseError("duplicate conjugation relation for '" + target_tok.text +
                         "^" + by_tok.text + "'",
                         target_tok.line, target_tok.column);
      conj_seen_[slot] = true;
      pres_.conj_rhs[slot] = std::move(rhs);
    } else {
      fail("expected an exponent or a conjugating generator after '^'");
    }
    expect_statement_end();
  }

  Lexer lex_;
  std::string_view source_;
  Token cur_;
  Presentation pres_;
  std::vector<bool> power_seen_;
  std::vector<bool> conj_seen_;
};

}  // namespace

Presentation parse_pcp(std::string_view text) { return Parser(text).run(); }

std::string element_name(const Presentation& pres, int rank) {
  const int m = pres.num_generators();
  std::vector<int> vec(static_cast<size_t>(m), 0);
  for (int i = m - 1; i >= 0; --i) {
    vec[static_cast<size_t>(i)] = rank % pres.prime;
    rank /= pres.prime;
  }
  std::string out;
  for (int i = 0; i < m; ++i) {
    int e = vec[static_cast<size_t>(i)];
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += pres.generators[static_cast<size_t>(i)];
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

}  // namespace pgv
