#include <cctype>

#include "maschke/tangent/tangent.hpp"

namespace maschke::tangent {

namespace {

// recursive descent over
//   expr  := term (('+' | '-') term)*
//   term  := unary ('*' unary)*
//   unary := '-' unary | power
//   power := atom ('^' int)?
//   atom  := int | name | '(' expr ')'
class Parser {
 public:
  Parser(std::string_view s, const std::vector<std::string>& vars) : s_(s), vars_(vars) {}

  QMultiPoly parse() {
    QMultiPoly f = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return f;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(why + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  QMultiPoly expr() {
    QMultiPoly f = term();
    for (;;) {
      if (eat('+')) f += term();
      else if (eat('-')) f -= term();
      else return f;
    }
  }
  QMultiPoly term() {
    QMultiPoly f = unary();
    while (eat('*')) f *= unary();
    return f;
  }
  QMultiPoly unary() {
    if (eat('-')) return -unary();
    return power();
  }
  QMultiPoly power() {
    QMultiPoly f = atom();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("exponent expected");
      f = f.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
    }
    return f;
  }
  QMultiPoly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    if (eat('(')) {
      QMultiPoly f = expr();
      if (!eat(')')) fail("')' expected");
      return f;
    }
    char c = s_[pos_];
    std::size_t start = pos_;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      BigRational v(algebra::BigInt(std::string(s_.substr(start, pos_ - start))));
      return QMultiPoly::constant(vars_, v);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      if (std::find(vars_.begin(), vars_.end(), name) == vars_.end()) fail("unknown variable " + name);
      return QMultiPoly::variable(vars_, name);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

const std::vector<std::string> kX{"x0", "x1", "x2", "x3"};
const std::vector<std::string> kY{"y0", "y1", "y2", "y3", "y4"};
const std::vector<std::string> kY4{"y0", "y1", "y2", "y3"};
const std::vector<std::string> kXY{"x", "y"};

}  // namespace

QMultiPoly parse_poly(std::string_view text, const std::vector<std::string>& vars) {
  return Parser(text, vars).parse();
}

QPoly parse_upoly(std::string_view text, const std::string& var) {
  QMultiPoly f = parse_poly(text, {var});
  std::vector<BigRational> c(f.degree_in(0) + 1, BigRational(0));
  for (const auto& [e, v] : f.terms()) c[e[0]] = v;
  return QPoly(std::move(c));
}

QMultiPoly octic() {
  return parse_poly(
      "x0^8 + x1^8 + x2^8 + x3^8"
      " + 14*(x0^4*x1^4 + x0^4*x2^4 + x0^4*x3^4 + x1^4*x2^4 + x1^4*x3^4 + x2^4*x3^4)"
      " + 168*x0^2*x1^2*x2^2*x3^2",
      kX);
}

std::array<QMultiPoly, 5> invariants() {
  return {parse_poly("x0^4 + x1^4 + x2^4 + x3^4", kX), parse_poly("2*(x0^2*x1^2 + x2^2*x3^2)", kX),
          parse_poly("2*(x0^2*x2^2 + x1^2*x3^2)", kX), parse_poly("2*(x0^2*x3^2 + x1^2*x2^2)", kX),
          parse_poly("4*x0*x1*x2*x3", kX)};
}

QMultiPoly igusa_quartic() {
  return parse_poly(
      "y4^4 + (y0^2 - y1^2 - y2^2 - y3^2)*y4^2 + y1^2*y2^2 + y1^2*y3^2 + y2^2*y3^2 - 2*y0*y1*y2*y3", kY);
}

QMultiPoly maschke_quadric() { return parse_poly("y0^2 + 3*(y1^2 + y2^2 + y3^2) + 6*y4^2", kY); }

QMultiPoly w_quartic() {
  return parse_poly(
      "5*y0^4 + 6*y0^2*(y1^2 + y2^2 + y3^2) - 27*(y1^4 + y2^4 + y3^4)"
      " - 90*(y1^2*y2^2 + y1^2*y3^2 + y2^2*y3^2) + 72*y0*y1*y2*y3",
      kY4);
}

const FourTangentForms& four_tangent_forms() {
  static const FourTangentForms forms{
      parse_poly("y^8 + 14*y^4 + 1", kXY),
      parse_poly("14*(x^4*y^4 + x^4 + y^4 + 12*x^2*y^2 + 1)", kXY),
      parse_poly("x^8 + 14*x^4 + 1", kXY),
      parse_poly("(2*y^4 + y^2 + 2)*x^4 - (y^4 - 24*y^2 + 1)*x^2 + 2*y^4 + y^2 + 2", kXY),
      parse_poly("(2*y^4 - y^2 + 2)*x^4 + (y^4 + 24*y^2 + 1)*x^2 + 2*y^4 - y^2 + 2", kXY)};
  return forms;
}

QPoly form_P() { return parse_upoly("2*y^4 + y^2 + 2", "y"); }
QPoly form_Q() { return parse_upoly("y^4 - 24*y^2 + 1", "y"); }
QPoly form_A() { return parse_upoly("y^8 + 14*y^4 + 1", "y"); }
QPoly quotient_discriminant() {
  QPoly P = form_P(), Q = form_Q();
  return Q * Q - BigRational(4) * (P * P);
}

}  // namespace maschke::tangent
