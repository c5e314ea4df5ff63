#include "spintensor/expr.hpp"

#include <cctype>
#include <cmath>

namespace spintensor {

enum class Op : unsigned char { number, imag, coord, neg, add, mul, div, pow, exp_fn, sin_fn, cos_fn };

struct Expr::Node {
  Op op;
  mpq_class value;  // number
  int aux = 0;      // coordinate index or power exponent
  // Unused child slots stay null-backed (never dereferenced; walkers switch
  // on op first). A default-constructed Expr here would recurse: the zero
  // expression is itself a Node.
  Expr a{std::shared_ptr<const Node>()}, b{std::shared_ptr<const Node>()};

  Node(Op op, mpq_class v) : op(op), value(std::move(v)) {}
  Node(Op op, int aux) : op(op), aux(aux) {}
  Node(Op op, Expr a) : op(op), a(std::move(a)) {}
  Node(Op op, Expr a, Expr b) : op(op), a(std::move(a)), b(std::move(b)) {}
  Node(Op op, Expr a, int aux) : op(op), aux(aux), a(std::move(a)) {}
};

namespace {

std::shared_ptr<const Expr::Node> make_node(Expr::Node&& n) {
  return std::make_shared<const Expr::Node>(std::move(n));
}

bool is_number(const Expr& e) { return e.node().op == Op::number; }
const mpq_class& num_value(const Expr& e) { return e.node().value; }
bool is_one(const Expr& e) { return is_number(e) && num_value(e) == 1; }

} // namespace

Expr make_expr(std::shared_ptr<const Expr::Node> n);

Expr::Expr() : Expr(number(mpq_class(0))) {}

Expr Expr::number(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  return Expr(make_node(Node(Op::number, std::move(c))));
}
Expr Expr::integer(long n) { return number(mpq_class(n)); }
Expr Expr::rational(long num, long den) {
  if (den == 0) throw RepresentationError("rational constant with zero denominator");
  return number(mpq_class(num, den));
}
Expr Expr::imaginary() { return Expr(make_node(Node(Op::imag, 0))); }
Expr Expr::coordinate(int k) {
  if (k < 0 || k > 3) throw RepresentationError("coordinate index out of range");
  return Expr(make_node(Node(Op::coord, k)));
}
bool Expr::is_zero() const { return n_->op == Op::number && n_->value == 0; }

Expr operator+(const Expr& a, const Expr& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (is_number(a) && is_number(b)) return Expr::number(num_value(a) + num_value(b));
  return Expr(make_node(Expr::Node(Op::add, a, b)));
}

Expr Expr::operator-() const {
  if (is_number(*this)) return number(mpq_class(-num_value(*this)));
  if (n_->op == Op::neg) return n_->a;
  return Expr(make_node(Node(Op::neg, *this)));
}

Expr operator-(const Expr& a, const Expr& b) { return a + (-b); }

Expr operator*(const Expr& a, const Expr& b) {
  if (a.is_zero() || b.is_zero()) return Expr();
  if (is_one(a)) return b;
  if (is_one(b)) return a;
  if (is_number(a) && is_number(b)) return Expr::number(num_value(a) * num_value(b));
  return Expr(make_node(Expr::Node(Op::mul, a, b)));
}

Expr operator/(const Expr& a, const Expr& b) {
  if (is_one(b)) return a;
  if (is_number(a) && is_number(b) && num_value(b) != 0)
    return Expr::number(num_value(a) / num_value(b));
  if (a.is_zero() && !(is_number(b) && num_value(b) == 0)) return Expr();
  return Expr(make_node(Expr::Node(Op::div, a, b)));
}

Expr Expr::pow(const Expr& base, int exponent) {
  if (exponent == 0) return integer(1);
  if (exponent == 1) return base;
  if (is_number(base) && exponent > 0 && exponent <= 16) {
    mpq_class v = 1;
    for (int k = 0; k < exponent; ++k) v *= num_value(base);
    return number(v);
  }
  return Expr(make_node(Node(Op::pow, base, exponent)));
}
Expr Expr::exp(const Expr& a) { return Expr(make_node(Node(Op::exp_fn, a))); }
Expr Expr::sin(const Expr& a) { return Expr(make_node(Node(Op::sin_fn, a))); }
Expr Expr::cos(const Expr& a) { return Expr(make_node(Node(Op::cos_fn, a))); }

Expr make_expr(std::shared_ptr<const Expr::Node> n) { return Expr(std::move(n)); }

// ---------------------------------------------------------------------------
// Evaluation

namespace {

std::complex<double> ipow(std::complex<double> z, int n) {
  if (n < 0) {
    if (z == std::complex<double>(0.0, 0.0))
      throw EvalError("zero raised to a negative power");
    return 1.0 / ipow(z, -n);
  }
  std::complex<double> r = 1.0;
  while (n > 0) {
    if (n & 1) r *= z;
    z *= z;
    n >>= 1;
  }
  return r;
}

} // namespace

std::complex<double> eval(const Expr& e, const Point& x) {
  const Expr::Node& n = e.node();
  switch (n.op) {
    case Op::number: return {n.value.get_d(), 0.0};
    case Op::imag: return {0.0, 1.0};
    case Op::coord: return {x[std::size_t(n.aux)], 0.0};
    case Op::neg: return -eval(n.a, x);
    case Op::add: return eval(n.a, x) + eval(n.b, x);
    case Op::mul: return eval(n.a, x) * eval(n.b, x);
    case Op::div: {
      const std::complex<double> den = eval(n.b, x);
      if (den == std::complex<double>(0.0, 0.0)) throw EvalError("division by zero");
      return eval(n.a, x) / den;
    }
    case Op::pow: return ipow(eval(n.a, x), n.aux);
    case Op::exp_fn: return std::exp(eval(n.a, x));
    case Op::sin_fn: return std::sin(eval(n.a, x));
    case Op::cos_fn: return std::cos(eval(n.a, x));
  }
  throw EvalError("corrupt expression node");
}

// ---------------------------------------------------------------------------
// Differentiation

Expr differentiate(const Expr& e, int k) {
  if (k < 0 || k > 3) throw RepresentationError("derivative coordinate out of range");
  const Expr::Node& n = e.node();
  switch (n.op) {
    case Op::number:
    case Op::imag: return Expr();
    case Op::coord: return n.aux == k ? Expr::integer(1) : Expr();
    case Op::neg: return -differentiate(n.a, k);
    case Op::add: return differentiate(n.a, k) + differentiate(n.b, k);
    case Op::mul: return differentiate(n.a, k) * n.b + n.a * differentiate(n.b, k);
    case Op::div:
      return (differentiate(n.a, k) * n.b - n.a * differentiate(n.b, k)) /
             Expr::pow(n.b, 2);
    case Op::pow:
      return Expr::integer(n.aux) * Expr::pow(n.a, n.aux - 1) * differentiate(n.a, k);
    case Op::exp_fn: return Expr::exp(n.a) * differentiate(n.a, k);
    case Op::sin_fn: return Expr::cos(n.a) * differentiate(n.a, k);
    case Op::cos_fn: return -(Expr::sin(n.a) * differentiate(n.a, k));
  }
  throw RepresentationError("corrupt expression node");
}

Expr conjugated(const Expr& e) {
  const Expr::Node& n = e.node();
  switch (n.op) {
    case Op::number: return e;
    case Op::imag: return -Expr::imaginary();
    case Op::coord: return e;
    case Op::neg: return -conjugated(n.a);
    case Op::add: return conjugated(n.a) + conjugated(n.b);
    case Op::mul: return conjugated(n.a) * conjugated(n.b);
    case Op::div: return conjugated(n.a) / conjugated(n.b);
    case Op::pow: return Expr::pow(conjugated(n.a), n.aux);
    case Op::exp_fn: return Expr::exp(conjugated(n.a));
    case Op::sin_fn: return Expr::sin(conjugated(n.a));
    case Op::cos_fn: return Expr::cos(conjugated(n.a));
  }
  throw RepresentationError("corrupt expression node");
}

// ---------------------------------------------------------------------------
// Printing. Precedence levels: + - (1), * / (2), unary - (3), ^ (4),
// atoms (5). A fractional or negative constant prints at the level of the
// operator it abbreviates.

namespace {

int print_prec(const Expr& e) {
  const Expr::Node& n = e.node();
  switch (n.op) {
    case Op::number:
      if (n.value < 0) return n.value.get_den() == 1 ? 3 : 2;
      return n.value.get_den() == 1 ? 5 : 2;
    case Op::neg: return 3;
    case Op::add: return 1;
    case Op::mul:
    case Op::div: return 2;
    case Op::pow: return 4;
    default: return 5;
  }
}

void print(const Expr& e, int min_prec, std::string& out) {
  const bool parens = print_prec(e) < min_prec;
  if (parens) out += '(';
  const Expr::Node& n = e.node();
  switch (n.op) {
    case Op::number: out += n.value.get_str(); break;
    case Op::imag: out += 'i'; break;
    case Op::coord: out += 'x'; out += char('0' + n.aux); break;
    case Op::neg:
      out += '-';
      print(n.a, 3, out);
      break;
    case Op::add:
      print(n.a, 1, out);
      if (n.b.node().op == Op::neg) {
        out += " - ";
        print(n.b.node().a, 3, out);
      } else if (n.b.node().op == Op::number && n.b.node().value < 0) {
        out += " - ";
        out += mpq_class(-n.b.node().value).get_str();
      } else {
        out += " + ";
        print(n.b, 2, out);
      }
      break;
    case Op::mul:
      print(n.a, 2, out);
      out += " * ";
      print(n.b, 3, out);
      break;
    case Op::div:
      print(n.a, 2, out);
      out += " / ";
      print(n.b, 3, out);
      break;
    case Op::pow:
      print(n.a, 5, out);
      out += '^';
      if (n.aux < 0) {
        out += '(';
        out += std::to_string(n.aux);
        out += ')';
      } else {
        out += std::to_string(n.aux);
      }
      break;
    case Op::exp_fn:
    case Op::sin_fn:
    case Op::cos_fn:
      out += n.op == Op::exp_fn ? "exp(" : n.op == Op::sin_fn ? "sin(" : "cos(";
      print(n.a, 1, out);
      out += ')';
      break;
  }
  if (parens) out += ')';
}

} // namespace

std::string to_string(const Expr& e) {
  std::string out;
  print(e, 1, out);
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr run() {
    Expr e = parse_sum();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return e;
  }

private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  bool consume(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!consume(c))
      throw ParseError(std::string("expected '") + c + "'", pos_);
  }

  Expr parse_sum() {
    Expr e = parse_term();
    for (;;) {
      if (consume('+')) e = e + parse_term();
      else if (consume('-')) e = e - parse_term();
      else return e;
    }
  }

  Expr parse_term() {
    Expr e = parse_factor();
    for (;;) {
      if (consume('*')) e = e * parse_factor();
      else if (consume('/')) e = e / parse_factor();
      else return e;
    }
  }

  Expr parse_factor() {
    if (consume('-')) return -parse_factor();
    return parse_power();
  }

  Expr parse_power() {
    Expr base = parse_atom();
    if (consume('^')) return Expr::pow(base, parse_exponent());
    return base;
  }

  int parse_exponent() {
    skip_ws();
    const bool parens = consume('(');
    skip_ws();
    bool negative = false;
    if (consume('-')) negative = true;
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseError("expected integer exponent", pos_);
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1000000) throw ParseError("exponent too large", pos_);
      ++pos_;
    }
    if (parens) expect(')');
    return int(negative ? -v : v);
  }

  Expr parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Expr e = parse_sum();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c))) return parse_symbol();
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  Expr parse_number() {
    const std::size_t start = pos_;
    std::string digits;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      digits += text_[pos_++];
    std::string frac;
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        frac += text_[pos_++];
      if (frac.empty()) throw ParseError("expected digits after decimal point", pos_);
    }
    if (digits.empty()) throw ParseError("expected a number", start);
    // Base must be pinned: gmp's string constructor auto-detects otherwise,
    // reading a leading zero (as in the digits of "0.125") as octal.
    mpz_class num(digits + frac, 10);
    mpz_class den(1);
    for (std::size_t k = 0; k < frac.size(); ++k) den *= 10;
    return Expr::number(mpq_class(num) / mpq_class(den));
  }

  Expr parse_symbol() {
    const std::size_t start = pos_;
    std::string name;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      name += text_[pos_++];
    if (name == "i") return Expr::imaginary();
    if (name.size() == 2 && name[0] == 'x' && name[1] >= '0' && name[1] <= '3')
      return Expr::coordinate(name[1] - '0');
    if (name == "exp" || name == "sin" || name == "cos") {
      expect('(');
      Expr arg = parse_sum();
      expect(')');
      if (name == "exp") return Expr::exp(arg);
      if (name == "sin") return Expr::sin(arg);
      return Expr::cos(arg);
    }
    throw ParseError("unknown symbol '" + name + "'", start);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace

Expr parse_expr(std::string_view text) { return Parser(text).run(); }

} // namespace spintensor
