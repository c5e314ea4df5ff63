#pragma once

#include <cmath>
#include <complex>
#include <string>

#include <gmpxx.h>

#include "spintensor/errors.hpp"

namespace spintensor {

//! Exact element of Q(i): real and imaginary parts are arbitrary-precision
//! rationals kept in canonical form (reduced, positive denominator), so
//! equality is decidable and there is no rounding anywhere.
class GaussianRational {
public:
  GaussianRational() : re_(0), im_(0) {}
  GaussianRational(long n) : re_(n), im_(0) {}
  GaussianRational(const mpq_class& re, const mpq_class& im = 0)
      : re_(re), im_(im) {
    re_.canonicalize();
    im_.canonicalize();
  }
  static GaussianRational rational(long num, long den) {
    if (den == 0) throw RepresentationError("rational with zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return GaussianRational(q);
  }
  static GaussianRational i() { return GaussianRational(mpq_class(0), mpq_class(1)); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }
  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  GaussianRational operator-() const { return GaussianRational(-re_, -im_); }
  GaussianRational conj() const { return GaussianRational(re_, -im_); }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return GaussianRational(a.re_ + b.re_, a.im_ + b.im_);
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return GaussianRational(a.re_ - b.re_, a.im_ - b.im_);
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return GaussianRational(a.re_ * b.re_ - a.im_ * b.im_,
                            a.re_ * b.im_ + a.im_ * b.re_);
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    if (b.is_zero()) throw RepresentationError("division by zero in exact scalar");
    mpq_class n2 = b.re_ * b.re_ + b.im_ * b.im_;
    return GaussianRational((a.re_ * b.re_ + a.im_ * b.im_) / n2,
                            (a.im_ * b.re_ - a.re_ * b.im_) / n2);
  }
  GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
  GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
    return !(a == b);
  }

  std::complex<double> to_complex() const {
    return {re_.get_d(), im_.get_d()};
  }

  //! Renders as "a/b", "c/d*i" or "a/b+c/d*i"; integer parts drop the "/1".
  std::string str() const {
    if (im_ == 0) return re_.get_str();
    std::string im_part = (im_ == 1) ? "i" : (im_ == -1) ? "-i" : im_.get_str() + "*i";
    if (re_ == 0) return im_part;
    if (im_ > 0 && im_part[0] != '-') return re_.get_str() + "+" + im_part;
    return re_.get_str() + im_part;
  }

private:
  mpq_class re_, im_;
};

//! Exact square root of a nonnegative rational; throws RepresentationError
//! unless numerator and denominator are both perfect squares.
inline mpq_class exact_sqrt(const mpq_class& q) {
  if (q < 0) throw RepresentationError("exact sqrt of a negative rational");
  mpz_class num = q.get_num(), den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) ||
      !mpz_perfect_square_p(den.get_mpz_t()))
    throw RepresentationError("exact sqrt of a non-square rational: " + q.get_str());
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return mpq_class(rn) / mpq_class(rd);
}

//! Uniform scalar interface for the two realizations of the coefficient
//! field: exact Gaussian rationals and complex doubles.
template <class S>
struct scalar_traits;

template <>
struct scalar_traits<GaussianRational> {
  static constexpr bool exact = true;
  static GaussianRational zero() { return GaussianRational(); }
  static GaussianRational one() { return GaussianRational(1); }
  static GaussianRational imag_unit() { return GaussianRational::i(); }
  static GaussianRational from_int(long n) { return GaussianRational(n); }
  static GaussianRational conj(const GaussianRational& x) { return x.conj(); }
  static bool equal(const GaussianRational& a, const GaussianRational& b) { return a == b; }
  static bool is_zero(const GaussianRational& x) { return x.is_zero(); }
  //! sqrt of a nonnegative real scalar; RepresentationError otherwise.
  static GaussianRational sqrt_positive(const GaussianRational& x) {
    if (!x.is_real()) throw RepresentationError("exact sqrt of a non-real scalar");
    return GaussianRational(exact_sqrt(x.re()));
  }
  static std::string str(const GaussianRational& x) { return x.str(); }
  static std::complex<double> to_complex(const GaussianRational& x) { return x.to_complex(); }
};

template <>
struct scalar_traits<std::complex<double>> {
  static constexpr bool exact = false;
  static std::complex<double> zero() { return {0.0, 0.0}; }
  static std::complex<double> one() { return {1.0, 0.0}; }
  static std::complex<double> imag_unit() { return {0.0, 1.0}; }
  static std::complex<double> from_int(long n) { return {double(n), 0.0}; }
  static std::complex<double> conj(const std::complex<double>& x) { return std::conj(x); }
  static bool equal(const std::complex<double>& a, const std::complex<double>& b) { return a == b; }
  static bool is_zero(const std::complex<double>& x) { return x == std::complex<double>(0.0, 0.0); }
  static std::complex<double> sqrt_positive(const std::complex<double>& x) {
    if (x.imag() != 0.0 || x.real() < 0.0)
      throw RepresentationError("sqrt of a scalar that is not a nonnegative real");
    return {std::sqrt(x.real()), 0.0};
  }
  static std::string str(const std::complex<double>& x) {
    return "(" + std::to_string(x.real()) + "," + std::to_string(x.imag()) + ")";
  }
  static std::complex<double> to_complex(const std::complex<double>& x) { return x; }
};

} // namespace spintensor
