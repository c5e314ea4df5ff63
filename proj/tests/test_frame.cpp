#include "doctest.h"

#include <cmath>
#include <complex>

#include "spintensor/frame.hpp"

using namespace spintensor;

namespace {

const EvalOptions kSym{};
const EvalOptions kFd{DerivativeMode::finite_difference, kFdStep};

// Diagonal frame e_r = exp(-x1) d/dx_r: the standard elementary example of
// a non-holonomic frame with closed-form brackets and connection.
FrameField scaled_frame() {
  FrameField f;
  const Expr s = Expr::exp(-Expr::coordinate(1));
  for (int i = 0; i < 4; ++i)
    for (int r = 0; r < 4; ++r) f.comp[i][r] = i == r ? s : Expr();
  return f;
}

double delta(int a, int b) { return a == b ? 1.0 : 0.0; }
double eta(int a, int b) { return a != b ? 0.0 : (a == 0 ? 1.0 : -1.0); }

} // namespace

TEST_CASE("holonomic frames have exactly vanishing brackets") {
  const FrameField f = FrameField::holonomic();
  const Point x{0.3, -0.9, 2.5, 0.1};
  const Ten3c c = commutation_coefficients(f, x, kSym);
  for (int k = 0; k < 4; ++k)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) CHECK(c[k][i][j] == cplx(0.0, 0.0));
}

TEST_CASE("scaled frame matches its closed-form brackets and connection") {
  const FrameField f = scaled_frame();
  const MetricField m = MetricField::minkowski();
  const Point x{0.2, 0.6, -0.4, 1.0};
  const double s = std::exp(-x[1]);

  SUBCASE("commutation coefficients") {
    // [e_i, e_j] = s (delta_j1 e_i - delta_i1 e_j).
    const Ten3c c = commutation_coefficients(f, x, kSym);
    for (int k = 0; k < 4; ++k)
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
          const double want = s * (delta(j, 1) * delta(k, i) - delta(i, 1) * delta(k, j));
          CAPTURE(k); CAPTURE(i); CAPTURE(j);
          CHECK(std::abs(c[k][i][j] - cplx(want, 0.0)) < 1e-12);
        }
  }

  SUBCASE("connection components") {
    // Gamma^k_ij = s (delta_j1 delta^k_i + delta^k_1 eta_ij).
    const Connection conn = christoffel(f, m, x, kSym);
    for (int k = 0; k < 4; ++k)
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
          const double want = s * (delta(j, 1) * delta(k, i) + delta(k, 1) * eta(i, j));
          CAPTURE(k); CAPTURE(i); CAPTURE(j);
          CHECK(std::abs(conn.gamma[k][i][j] - cplx(want, 0.0)) < 1e-12);
        }
  }

  SUBCASE("finite differences agree with the closed form") {
    const Ten3c c = commutation_coefficients(f, x, kFd);
    for (int k = 0; k < 4; ++k)
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
          const double want = s * (delta(j, 1) * delta(k, i) - delta(i, 1) * delta(k, j));
          CHECK(std::abs(c[k][i][j] - cplx(want, 0.0)) < 1e-5);
        }
  }
}

TEST_CASE("bracket property: nested derivatives reduce over the coefficients") {
  const FrameField f = scaled_frame();
  const Point x{0.1, -0.3, 0.8, 0.5};
  const Expr phi = parse_expr("sin(x1)*x2 + exp(x0)*x3^2");
  const Ten3c c = commutation_coefficients(f, x, kSym);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const cplx lhs = lie_derivative(f, lie_derivative_expr(f, phi, j), i, x, kSym) -
                       lie_derivative(f, lie_derivative_expr(f, phi, i), j, x, kSym);
      cplx rhs(0.0, 0.0);
      for (int k = 0; k < 4; ++k) rhs += c[k][i][j] * lie_derivative(f, phi, k, x, kSym);
      CAPTURE(i); CAPTURE(j);
      CHECK(std::abs(lhs - rhs) < 1e-6);
    }
}

TEST_CASE("torsion and metricity residuals vanish where they must") {
  const MetricField m = MetricField::minkowski();
  const Point x{0.2, 0.6, -0.4, 1.0};

  SUBCASE("holonomic flat: exact zeros") {
    const FrameField f = FrameField::holonomic();
    const Ten3c c = commutation_coefficients(f, x, kSym);
    const Connection conn = christoffel(f, m, x, kSym);
    CHECK(check_torsion(conn, c, 1e-9).max_abs == 0.0);
    CHECK(check_metricity(f, m, conn, x, kSym, 1e-9).max_abs == 0.0);
  }

  SUBCASE("scaled frame: within symbolic tolerance") {
    const FrameField f = scaled_frame();
    const Ten3c c = commutation_coefficients(f, x, kSym);
    const Connection conn = christoffel(f, m, x, kSym);
    const ResidualReport torsion = check_torsion(conn, c, 1e-9);
    CHECK(torsion.passed);
    CHECK(torsion.id == "torsion");
    const ResidualReport metric = check_metricity(f, m, conn, x, kSym, 1e-9);
    CHECK(metric.passed);
    CHECK(metric.id == "metricity");
    CHECK(check_gamma_symmetrization(f, m, conn, x, kSym, 1e-9).passed);
    CHECK(check_gamma_trace(f, m, conn, x, kSym, 1e-9).passed);
  }

  SUBCASE("a perturbed connection is caught") {
    const FrameField f = scaled_frame();
    const Ten3c c = commutation_coefficients(f, x, kSym);
    Connection conn = christoffel(f, m, x, kSym);
    conn.gamma[2][0][1] += cplx(1e-4, 0.0);
    const ResidualReport torsion = check_torsion(conn, c, 1e-6);
    CHECK(!torsion.passed);
    CHECK(torsion.max_abs == doctest::Approx(1e-4).epsilon(1e-6));
    CHECK(torsion.worst == std::vector<int>{2, 0, 1});
    CHECK(!check_metricity(f, m, conn, x, kSym, 1e-6).passed);
  }
}

TEST_CASE("holonomic curved metric reproduces the classical connection") {
  // diag(1, -1, -1, -exp(2 x1)): the only nonzero components are
  // Gamma^3_13 = Gamma^3_31 = 1 and Gamma^1_33 = -exp(2 x1).
  const FrameField f = FrameField::holonomic();
  MetricField m = MetricField::minkowski();
  m.comp[3][3] = -Expr::exp(Expr::integer(2) * Expr::coordinate(1));
  const Point x{0.0, 0.3, 0.0, 0.0};
  const double e2 = std::exp(2 * x[1]);

  const Connection conn = christoffel(f, m, x, kSym);
  for (int k = 0; k < 4; ++k)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        double want = 0.0;
        if (k == 3 && ((i == 1 && j == 3) || (i == 3 && j == 1))) want = 1.0;
        if (k == 1 && i == 3 && j == 3) want = -e2;
        CAPTURE(k); CAPTURE(i); CAPTURE(j);
        CHECK(std::abs(conn.gamma[k][i][j] - cplx(want, 0.0)) < 1e-12);
      }

  CHECK(check_metricity(f, m, conn, x, kSym, 1e-9).passed);
  CHECK(check_gamma_symmetrization(f, m, conn, x, kSym, 1e-9).passed);
  CHECK(check_gamma_trace(f, m, conn, x, kSym, 1e-9).passed);

  // The trace against the metric log-derivative is 1 in the x1 direction.
  cplx trace(0.0, 0.0);
  for (int q = 0; q < 4; ++q) trace += conn.gamma[q][1][q];
  CHECK(std::abs(trace - cplx(1.0, 0.0)) < 1e-12);
}

TEST_CASE("lorentzian preflight accepts and rejects the right metrics") {
  const Point x{0, 0, 0, 0};
  Mat4c ok{};
  for (int p = 0; p < 4; ++p) ok[p][p] = cplx(eta(p, p), 0.0);
  CHECK_NOTHROW(require_lorentzian(ok, x));

  Mat4c euclid{};
  for (int p = 0; p < 4; ++p) euclid[p][p] = cplx(1.0, 0.0);
  CHECK_THROWS_AS(require_lorentzian(euclid, x), RepresentationError);

  Mat4c asym = ok;
  asym[0][1] = cplx(0.5, 0.0);
  CHECK_THROWS_AS(require_lorentzian(asym, x), RepresentationError);

  Mat4c imag = ok;
  imag[2][3] = imag[3][2] = cplx(0.0, 0.3);
  CHECK_THROWS_AS(require_lorentzian(imag, x), RepresentationError);
}

TEST_CASE("degenerate frames are rejected at evaluation") {
  FrameField f;
  for (int i = 0; i < 4; ++i)
    for (int r = 0; r < 4; ++r)
      f.comp[i][r] = i == r ? Expr::coordinate(1) : Expr();
  const Point bad{0.0, 0.0, 0.0, 0.0};
  CHECK_THROWS_AS(invert4(eval_matrix(f.comp, bad), "frame"), DegeneracyError);
  const Point good{0.0, 2.0, 0.0, 0.0};
  CHECK_NOTHROW(invert4(eval_matrix(f.comp, good), "frame"));
}

TEST_CASE("directional derivative follows the frame scaling") {
  const FrameField f = scaled_frame();
  const Expr phi = Expr::coordinate(1);
  // e_1(x1) = exp(-x1) * 1, which is exactly 1 at the origin.
  CHECK(std::abs(lie_derivative(f, phi, 1, Point{0, 0, 0, 0}, kSym) - cplx(1, 0)) <
        1e-15);
  const double at_half = std::exp(-0.5);
  CHECK(std::abs(lie_derivative(f, phi, 1, Point{0, 0.5, 0, 0}, kSym) -
                 cplx(at_half, 0)) < 1e-15);
  // Finite differences approximate the same value.
  CHECK(std::abs(lie_derivative(f, phi, 1, Point{0, 0.5, 0, 0}, kFd) -
                 cplx(at_half, 0)) < 1e-5);
}
