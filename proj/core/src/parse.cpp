#include "ccc/parse.hpp"

#include <cctype>
#include <string>

#include "ccc/errors.hpp"

namespace ccc {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Polynomial polynomial() {
    Polynomial result(ring_);
    skip_space();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    for (;;) {
      Polynomial t = term();
      if (negate) {
        result -= t;
      } else {
        result += t;
      }
      skip_space();
      if (peek() == '+' || peek() == '-') {
        negate = peek() == '-';
        ++pos_;
        continue;
      }
      return result;
    }
  }

  std::vector<Polynomial> generators() {
    skip_space();
    bool wrapped = false;
    if (text_.substr(pos_, 5) == "ideal") {
      std::size_t save = pos_;
      pos_ += 5;
      skip_space();
      if (peek() == '(') {
        ++pos_;
        wrapped = true;
      } else {
        pos_ = save;
      }
    }
    std::vector<Polynomial> gens;
    skip_space();
    if (!(wrapped && peek() == ')')) {
      for (;;) {
        gens.push_back(polynomial());
        skip_space();
        if (peek() != ',') break;
        ++pos_;
      }
    }
    if (wrapped) expect(')');
    return gens;
  }

  void expect_end() {
    skip_space();
    if (pos_ < text_.size()) fail(std::string("unexpected character '") + text_[pos_] + "'");
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, pos_); }

  [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }

  void expect(char c) {
    skip_space();
    if (peek() != c) {
      fail(pos_ >= text_.size() ? std::string("expected '") + c + "' but input ended"
                                : std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  Polynomial term() {
    Polynomial t = factor();
    for (;;) {
      skip_space();
      if (peek() != '*') return t;
      ++pos_;
      t *= factor();
    }
  }

  Polynomial factor() {
    Polynomial base = atom();
    skip_space();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      std::uint64_t e = natural();
      if (e > 0xffff) fail("exponent too large");
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Polynomial atom() {
    skip_space();
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = polynomial();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const auto& field = ring_->field();
      std::uint32_t num = natural_mod();
      skip_space();
      if (peek() == '/') {
        ++pos_;
        skip_space();
        std::size_t at = pos_;
        std::uint32_t den = natural_mod();
        if (den == 0) fail_at("denominator divisible by the field characteristic", at);
        num = field.div(num, den);
      }
      return Polynomial::constant(ring_, num);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                     text_[pos_] == '_')) {
        ++pos_;
      }
      std::string_view name = text_.substr(start, pos_ - start);
      auto idx = ring_->index_of(name);
      if (!idx) fail_at("unknown variable '" + std::string(name) + "'", start);
      return Polynomial::variable(ring_, *idx);
    }
    if (pos_ >= text_.size()) fail("expected a term but input ended");
    fail(std::string("unexpected character '") + c + "'");
  }

  std::uint64_t natural() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
      if (v > (1ull << 40)) fail("number too large");
      ++pos_;
    }
    return v;
  }

  // Arbitrary length literal, reduced modulo p digit by digit.
  std::uint32_t natural_mod() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    const std::uint64_t p = ring_->field().prime();
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = (v * 10 + static_cast<std::uint64_t>(peek() - '0')) % p;
      ++pos_;
    }
    return static_cast<std::uint32_t>(v);
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  Parser parser(text, ring);
  Polynomial f = parser.polynomial();
  parser.expect_end();
  return f;
}

std::vector<Polynomial> parse_generators(std::string_view text, const RingPtr& ring) {
  Parser parser(text, ring);
  auto gens = parser.generators();
  parser.expect_end();
  return gens;
}

}  // namespace ccc
