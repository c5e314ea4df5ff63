#include "doctest.h"

#include "spintensor/scalar.hpp"

using spintensor::GaussianRational;
using spintensor::RepresentationError;

TEST_CASE("construction canonicalizes fractions") {
  const GaussianRational a(mpq_class(2, 4), mpq_class(-6, 9));
  CHECK(a.re() == mpq_class(1, 2));
  CHECK(a.im() == mpq_class(-2, 3));
  CHECK(GaussianRational::rational(2, 4) == GaussianRational::rational(1, 2));
  CHECK_THROWS_AS(GaussianRational::rational(1, 0), RepresentationError);
}

TEST_CASE("field arithmetic") {
  const GaussianRational a(mpq_class(1), mpq_class(2)); // 1 + 2i
  const GaussianRational b(mpq_class(3), mpq_class(-1)); // 3 - i
  const GaussianRational prod = a * b;
  CHECK(prod == GaussianRational(mpq_class(5), mpq_class(5)));
  CHECK(a + b == GaussianRational(mpq_class(4), mpq_class(1)));
  CHECK(a - b == GaussianRational(mpq_class(-2), mpq_class(3)));
  CHECK((a / b) * b == a);
  CHECK(-a == GaussianRational(mpq_class(-1), mpq_class(-2)));
  CHECK(a.conj() == GaussianRational(mpq_class(1), mpq_class(-2)));
  CHECK((a * a.conj()).is_real());
  CHECK_THROWS_AS(a / GaussianRational(), RepresentationError);

  const GaussianRational i = GaussianRational::i();
  CHECK(i * i == GaussianRational(-1));
  CHECK(i.conj() == -i);
}

TEST_CASE("predicates and conversion") {
  CHECK(GaussianRational().is_zero());
  CHECK(GaussianRational(7).is_real());
  CHECK_FALSE(GaussianRational::i().is_real());
  const std::complex<double> z = GaussianRational(mpq_class(1, 2), mpq_class(-3)).to_complex();
  CHECK(z.real() == doctest::Approx(0.5));
  CHECK(z.imag() == doctest::Approx(-3.0));
}

TEST_CASE("text rendering") {
  CHECK(GaussianRational().str() == "0");
  CHECK(GaussianRational::rational(1, 2).str() == "1/2");
  CHECK(GaussianRational::i().str() == "i");
  CHECK((-GaussianRational::i()).str() == "-i");
  CHECK(GaussianRational(mpq_class(1), mpq_class(1)).str() == "1+i");
  CHECK(GaussianRational(mpq_class(2), mpq_class(-3)).str() == "2-3*i");
  CHECK(GaussianRational(mpq_class(0), mpq_class(5)).str() == "5*i");
}

TEST_CASE("exact square roots of perfect squares only") {
  CHECK(spintensor::exact_sqrt(mpq_class(9, 4)) == mpq_class(3, 2));
  CHECK(spintensor::exact_sqrt(mpq_class(1)) == 1);
  CHECK_THROWS_AS(spintensor::exact_sqrt(mpq_class(2)), RepresentationError);
  CHECK_THROWS_AS(spintensor::exact_sqrt(mpq_class(-4)), RepresentationError);
  CHECK_THROWS_AS(spintensor::exact_sqrt(mpq_class(4, 3)), RepresentationError);
}

TEST_CASE("exact trait surface") {
  using T = spintensor::scalar_traits<GaussianRational>;
  static_assert(T::exact);
  CHECK(T::is_zero(T::zero()));
  CHECK(T::one() == GaussianRational(1));
  CHECK(T::imag_unit() * T::imag_unit() == T::from_int(-1));
  CHECK(T::conj(T::imag_unit()) == T::from_int(-1) * T::imag_unit());
  CHECK(T::equal(T::from_int(3), GaussianRational(3)));
  CHECK(T::sqrt_positive(T::from_int(4)) == T::from_int(2));
  CHECK_THROWS_AS(T::sqrt_positive(T::imag_unit()), RepresentationError);
  CHECK_THROWS_AS(T::sqrt_positive(T::from_int(-1)), RepresentationError);
}

TEST_CASE("float trait surface") {
  using T = spintensor::scalar_traits<std::complex<double>>;
  static_assert(!T::exact);
  CHECK(T::is_zero(T::zero()));
  CHECK(T::one() == std::complex<double>(1.0, 0.0));
  CHECK(T::imag_unit().imag() == doctest::Approx(1.0));
  CHECK(T::conj({1.0, 2.0}) == std::complex<double>(1.0, -2.0));
  CHECK(T::sqrt_positive({4.0, 0.0}).real() == doctest::Approx(2.0));
}
