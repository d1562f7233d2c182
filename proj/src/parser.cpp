#include "fsig/parser.hpp"

#include <cctype>

#include "fsig/errors.hpp"

namespace fsig {

namespace {

class Parser {
public:
  Parser(std::string_view text, const PrimeField& field,
         std::span<const std::string> names, std::size_t base_offset)
      : text_(text), field_(field), names_(names), base_(base_offset) {}

  Polynomial parse() {
    skip_space();
    if (at_end()) fail("empty expression");
    Polynomial f = expr();
    skip_space();
    if (!at_end()) fail(std::string("unexpected character '") + text_[pos_] + "'");
    return f;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at position " + std::to_string(base_ + pos_), base_ + pos_);
  }

  bool at_end() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc(field_, names_.size());
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    Polynomial t = term();
    acc = negate ? -t : t;
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (accept('*')) acc *= unary();
    return acc;
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (accept('^')) {
      skip_space();
      const std::size_t at = pos_;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        fail("expected a non-negative integer exponent");
      }
      std::uint64_t e = 0;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        e = e * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
        if (e > kMaxExponent) {
          pos_ = at;
          fail("exponent exceeds the cap 2^20");
        }
        ++pos_;
      }
      try {
        return base.pow(e);
      } catch (const ResourceLimitError&) {
        pos_ = at;
        fail("exponent overflow");
      }
    }
    return base;
  }

  Polynomial atom() {
    skip_space();
    if (at_end()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial f = expr();
      if (!accept(')')) fail("expected ')'");
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::uint64_t v = 0;
      const std::uint64_t p = field_.characteristic();
      while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        v = (v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0')) % p;
        ++pos_;
      }
      return Polynomial::constant(field_, names_.size(), static_cast<Coeff>(v));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                           text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string_view name = text_.substr(start, pos_ - start);
      for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == name) return Polynomial::variable(field_, names_.size(), i);
      }
      pos_ = start;
      fail("unknown variable '" + std::string(name) + "'");
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  const PrimeField& field_;
  std::span<const std::string> names_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const PrimeField& field,
                            std::span<const std::string> names) {
  return Parser(text, field, names, 0).parse();
}

std::vector<Polynomial> parse_polynomial_list(std::string_view text,
                                              const PrimeField& field,
                                              std::span<const std::string> names) {
  std::vector<Polynomial> out;
  bool blank = true;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
  }
  if (blank) return out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      out.push_back(Parser(text.substr(start, i - start), field, names, start).parse());
      start = i + 1;
    } else if (text[i] == '(') {
      ++depth;
    } else if (text[i] == ')') {
      --depth;
    }
  }
  return out;
}

}  // namespace fsig
