#include "mapstrip/parse.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <utility>
#include <variant>

namespace mapstrip {

namespace {

// a*z + b; constants are linear forms with a == 0
struct LinearForm {
  Complex a{0.0, 0.0};
  Complex b{0.0, 0.0};
};

struct Quotient {
  ExponentialSum num;
  ExponentialSum den;
};

using Value = std::variant<LinearForm, Quotient>;

// Fold constant denominators into the numerator so entire expressions
// come out with denominator exactly 1.
Quotient make_quotient(ExponentialSum num, ExponentialSum den) {
  if (den.is_zero()) throw ParseError("division by the zero function");
  if (den.is_constant()) {
    const Complex c = den.terms()[0].coefficient;
    return {(1.0 / c) * num, ExponentialSum::constant(1.0)};
  }
  return {std::move(num), std::move(den)};
}

bool is_const(const LinearForm& l) { return l.a == Complex{0.0, 0.0}; }

Quotient to_quotient(const Value& v) {
  if (std::holds_alternative<Quotient>(v)) return std::get<Quotient>(v);
  const LinearForm& l = std::get<LinearForm>(v);
  if (!is_const(l))
    throw ParseError("z may appear only inside sin/cos/exp arguments");
  return {ExponentialSum::constant(l.b), ExponentialSum::constant(1.0)};
}

class Parser {
 public:
  explicit Parser(const std::string& src) : src_(src) {}

  Value parse() {
    Value v = parse_expr();
    skip_ws();
    if (pos_ != src_.size())
      throw ParseError("unexpected input at '" + src_.substr(pos_) + "'");
    return v;
  }

 private:
  const std::string& src_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
  }

  bool consume(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  Value parse_expr() {
    Value acc = parse_term();
    for (;;) {
      if (consume('+')) {
        acc = add(acc, parse_term(), +1);
      } else if (consume('-')) {
        acc = add(acc, parse_term(), -1);
      } else {
        return acc;
      }
    }
  }

  Value parse_term() {
    Value acc = parse_unary();
    for (;;) {
      if (consume('*')) {
        acc = mul(acc, parse_unary());
      } else if (consume('/')) {
        acc = div(acc, parse_unary());
      } else {
        return acc;
      }
    }
  }

  Value parse_unary() {
    int sign = 1;
    for (;;) {
      if (consume('+')) continue;
      if (consume('-')) {
        sign = -sign;
        continue;
      }
      break;
    }
    Value v = parse_primary();
    if (sign < 0) v = mul(LinearForm{{0.0, 0.0}, {-1.0, 0.0}}, v);
    return v;
  }

  Value parse_primary() {
    skip_ws();
    if (pos_ >= src_.size()) throw ParseError("unexpected end of expression");
    const char c = src_[pos_];

    if (c == '(') {
      ++pos_;
      Value v = parse_expr();
      if (!consume(')')) throw ParseError("missing ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c))) return parse_name();
    throw ParseError(std::string("unexpected character '") + c + "'");
  }

  Value parse_number() {
    const char* begin = src_.c_str() + pos_;
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin) throw ParseError("malformed number");
    pos_ += static_cast<std::size_t>(end - begin);
    return LinearForm{{0.0, 0.0}, {v, 0.0}};
  }

  Value parse_name() {
    std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
      ++pos_;
    const std::string name = src_.substr(start, pos_ - start);

    if (name == "z") return LinearForm{{1.0, 0.0}, {0.0, 0.0}};
    if (name == "i") return LinearForm{{0.0, 0.0}, {0.0, 1.0}};
    if (name == "pi") return LinearForm{{0.0, 0.0}, {M_PI, 0.0}};
    if (name == "e") return LinearForm{{0.0, 0.0}, {M_E, 0.0}};
    if (name == "sqrt2") return LinearForm{{0.0, 0.0}, {std::sqrt(2.0), 0.0}};
    if (name == "sqrt3") return LinearForm{{0.0, 0.0}, {std::sqrt(3.0), 0.0}};
    if (name == "sqrt5") return LinearForm{{0.0, 0.0}, {std::sqrt(5.0), 0.0}};

    if (name == "sin" || name == "cos" || name == "exp" || name == "sqrt") {
      if (!consume('(')) throw ParseError(name + " expects '('");
      Value arg = parse_expr();
      if (!consume(')')) throw ParseError("missing ')' after " + name + " argument");
      return apply_function(name, arg);
    }
    throw ParseError("unknown name '" + name + "'");
  }

  static Value apply_function(const std::string& name, const Value& arg) {
    if (!std::holds_alternative<LinearForm>(arg))
      throw ParseError(name + " argument must be linear in z");
    const LinearForm l = std::get<LinearForm>(arg);
    const double ascale = 1.0 + std::abs(l.a);

    if (name == "sqrt") {
      if (!is_const(l) || std::abs(l.b.imag()) > 1e-14 * (1.0 + std::abs(l.b)) ||
          l.b.real() < 0.0)
        throw ParseError("sqrt expects a nonnegative real constant");
      return LinearForm{{0.0, 0.0}, {std::sqrt(l.b.real()), 0.0}};
    }
    if (name == "sin" || name == "cos") {
      if (std::abs(l.a.imag()) > 1e-12 * ascale)
        throw ParseError(name + " needs a real z-coefficient");
      const ExponentialSum s = (name == "sin")
                                   ? ExponentialSum::sine(l.a.real(), l.b)
                                   : ExponentialSum::cosine(l.a.real(), l.b);
      return Quotient{s, ExponentialSum::constant(1.0)};
    }
    // exp: z-coefficient must be purely imaginary, i*lambda
    if (std::abs(l.a.real()) > 1e-12 * ascale)
      throw ParseError("exp needs a purely imaginary z-coefficient (i*lambda*z)");
    return Quotient{ExponentialSum::harmonic(l.a.imag(), std::exp(l.b)),
                    ExponentialSum::constant(1.0)};
  }

  static Value add(const Value& x, const Value& y, int sign) {
    const Complex s{static_cast<double>(sign), 0.0};
    if (std::holds_alternative<LinearForm>(x) && std::holds_alternative<LinearForm>(y)) {
      const LinearForm& a = std::get<LinearForm>(x);
      const LinearForm& b = std::get<LinearForm>(y);
      return LinearForm{a.a + s * b.a, a.b + s * b.b};
    }
    Quotient qx = to_quotient(x);
    Quotient qy = to_quotient(y);
    return make_quotient(qx.num * qy.den + s * (qy.num * qx.den), qx.den * qy.den);
  }

  static Value mul(const Value& x, const Value& y) {
    if (std::holds_alternative<LinearForm>(x) && std::holds_alternative<LinearForm>(y)) {
      const LinearForm& a = std::get<LinearForm>(x);
      const LinearForm& b = std::get<LinearForm>(y);
      if (!is_const(a) && !is_const(b))
        throw ParseError("polynomial in z is not an exponential sum");
      return LinearForm{a.a * b.b + b.a * a.b, a.b * b.b};
    }
    Quotient qx = to_quotient(x);
    Quotient qy = to_quotient(y);
    return make_quotient(qx.num * qy.num, qx.den * qy.den);
  }

  static Value div(const Value& x, const Value& y) {
    if (std::holds_alternative<LinearForm>(x) && std::holds_alternative<LinearForm>(y)) {
      const LinearForm& a = std::get<LinearForm>(x);
      const LinearForm& b = std::get<LinearForm>(y);
      if (!is_const(b)) {
        // fall through to the quotient path: 1/z is not representable,
        // but x may still be divided by a sin/cos-free quotient below
        throw ParseError("cannot divide by a bare linear form in z");
      }
      if (b.b == Complex{0.0, 0.0}) throw ParseError("division by zero");
      return LinearForm{a.a / b.b, a.b / b.b};
    }
    Quotient qx = to_quotient(x);
    Quotient qy = to_quotient(y);
    return make_quotient(qx.num * qy.den, qx.den * qy.num);
  }
};

}  // namespace

MeromorphicAP parse_function(const std::string& expr, const Strip& domain) {
  Quotient q = to_quotient(Parser(expr).parse());
  return {std::move(q.num), std::move(q.den), domain};
}

ExponentialSum parse_exponential_sum(const std::string& expr) {
  Quotient q = to_quotient(Parser(expr).parse());
  if (!q.den.is_constant())
    throw ParseError("expression must be entire (no sin/cos in a denominator)");
  // make_quotient already folded constant denominators to 1
  return q.num;
}

}  // namespace mapstrip
