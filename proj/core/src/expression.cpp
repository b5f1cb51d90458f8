#include "zhodge/expression.hpp"

#include <cctype>
#include <string>

#include "zhodge/errors.hpp"

namespace zhodge {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const NameResolver& resolve) : text_(text), resolve_(resolve) {}

  VirtualClass parse() {
    VirtualClass out = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError("column " + std::to_string(pos_ + 1) + ": " + message, 1, pos_ + 1);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  VirtualClass expr() {
    VirtualClass out = term();
    for (;;) {
      if (accept('+')) {
        out = out + term();
      } else if (accept('-')) {
        out = out - term();
      } else {
        return out;
      }
    }
  }

  VirtualClass term() {
    VirtualClass out = unary();
    while (accept('*')) out = out * unary();
    return out;
  }

  VirtualClass unary() {
    if (accept('-')) return -unary();
    return power();
  }

  std::string digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::string(text_.substr(start, pos_ - start));
  }

  VirtualClass power() {
    bool is_lefschetz = false;
    VirtualClass base = primary(is_lefschetz);
    if (!accept('^')) return base;
    const bool negative = accept('-');
    const std::size_t exp_pos = pos_;
    const BigInt e(digits());
    if (!e.fits_slong_p() || e > 4096) {
      pos_ = exp_pos;
      fail("exponent too large");
    }
    const long k = e.get_si();
    if (is_lefschetz) return VirtualClass::lefschetz(negative ? -k : k);
    if (negative) {
      pos_ = exp_pos;
      fail("negative exponents are only allowed on L");
    }
    return zhodge::power(base, static_cast<unsigned>(k));
  }

  VirtualClass primary(bool& is_lefschetz) {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      VirtualClass inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return VirtualClass::integer(BigInt(digits()));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string_view name = text_.substr(start, pos_ - start);
      if (name == "L") {
        is_lefschetz = true;
        return VirtualClass::lefschetz(1);
      }
      auto cls = resolve_ ? resolve_(name) : std::nullopt;
      if (!cls) {
        pos_ = start;
        fail("unknown profile '" + std::string(name) + "'");
      }
      return *cls;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const NameResolver& resolve_;
  std::size_t pos_ = 0;
};

}  // namespace

VirtualClass parse_virtual_class(std::string_view text, const NameResolver& resolve) {
  return Parser(text, resolve).parse();
}

}  // namespace zhodge
