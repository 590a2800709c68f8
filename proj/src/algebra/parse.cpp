#include "ptchain/parse.hpp"

#include <cctype>
#include <string>

#include "ptchain/errors.hpp"

namespace ptchain {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  SymbolicFraction parse() {
    SymbolicFraction value = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError, what + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  SymbolicFraction expression() {
    SymbolicFraction acc = term();
    for (;;) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  SymbolicFraction term() {
    SymbolicFraction acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        SymbolicFraction d = unary();
        if (d.is_zero()) fail("division by zero");
        acc = acc / d;
      } else {
        return acc;
      }
    }
  }

  SymbolicFraction unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  SymbolicFraction power() {
    SymbolicFraction base = atom();
    if (!accept('^')) return base;
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
    SymbolicFraction out(MultiPoly(1));
    for (int i = 0; i < e; ++i) out = out * base;
    return out;
  }

  SymbolicFraction atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      SymbolicFraction inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) ++pos_;
      return SymbolicFraction(MultiPoly(parse_rational(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      auto var = var_from_name(text_.substr(start, pos_ - start));
      if (!var) {
        pos_ = start;
        fail("unknown symbol");
      }
      return SymbolicFraction(MultiPoly::variable(*var));
    }
    fail("unexpected character");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

SymbolicFraction parse_expression(std::string_view text) { return Parser(text).parse(); }

Poly parse_poly(std::string_view text) {
  SymbolicFraction f = parse_expression(text);
  if (f.denominator().contains(Var::t)) {
    throw Error(ErrorCode::ParseError, "denominator depends on t: " + std::string(text));
  }
  auto parts = f.numerator().coefficients_in(Var::t);
  std::vector<Coef> coeffs;
  coeffs.reserve(parts.size());
  for (auto& c : parts) coeffs.push_back(Coef(SymbolicFraction(c, f.denominator())).demoted());
  return Poly(std::move(coeffs));
}

Coef parse_coef(std::string_view text) {
  SymbolicFraction f = parse_expression(text);
  if (f.numerator().contains(Var::t) || f.denominator().contains(Var::t)) {
    throw Error(ErrorCode::ParseError, "coefficient depends on t: " + std::string(text));
  }
  return Coef(f).demoted();
}

}  // namespace ptchain
