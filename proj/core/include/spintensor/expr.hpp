#pragma once

#include <array>
#include <complex>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "spintensor/errors.hpp"

namespace spintensor {

using Point = std::array<double, 4>;

//! Immutable symbolic expression over the coordinates x0..x3 with exact
//! rational constants and the imaginary unit. Construction runs light
//! simplification (constant folding, dropped zero/one factors), which keeps
//! derivative trees small.
class Expr {
public:
  Expr(); //!< the zero expression

  static Expr number(const mpq_class& q);
  static Expr integer(long n);
  static Expr rational(long num, long den);
  static Expr imaginary();
  static Expr coordinate(int k); //!< k in 0..3

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator/(const Expr& a, const Expr& b);
  Expr operator-() const;

  static Expr pow(const Expr& base, int exponent);
  static Expr exp(const Expr& a);
  static Expr sin(const Expr& a);
  static Expr cos(const Expr& a);

  //! Structural test for the literal constant 0.
  bool is_zero() const;

  struct Node;
  const Node& node() const { return *n_; }

private:
  explicit Expr(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
  friend Expr make_expr(std::shared_ptr<const Expr::Node> n);
};

//! Parses the expression grammar: binary + - * /, unary -, integer powers
//! with ^, calls exp/sin/cos, parentheses, decimal or integer literals, the
//! imaginary unit i and the coordinates x0..x3. Precedence is
//! ^  >  unary -  >  * /  >  + -, binary operators associate to the left.
//! Throws ParseError with the byte offset of the problem.
Expr parse_expr(std::string_view text);

//! Renders to text that parse_expr accepts; the round trip preserves the
//! function pointwise.
std::string to_string(const Expr& e);

//! Evaluates at a point. Throws EvalError on division by zero.
std::complex<double> eval(const Expr& e, const Point& x);

//! Exact partial derivative with respect to coordinate k.
Expr differentiate(const Expr& e, int k);

//! Complex conjugate as an expression; coordinates are real, so this just
//! flips the sign of the imaginary unit everywhere.
Expr conjugated(const Expr& e);

} // namespace spintensor
