#include "spintensor/frame.hpp"

#include <algorithm>
#include <cmath>

namespace spintensor {

FrameField FrameField::holonomic() {
  FrameField f;
  for (int i = 0; i < 4; ++i) f.comp[i][i] = Expr::integer(1);
  return f;
}

MetricField MetricField::minkowski() {
  MetricField m;
  for (int i = 0; i < 4; ++i) m.comp[i][i] = Expr::integer(i == 0 ? 1 : -1);
  return m;
}

cplx partial_eval(const Expr& e, int k, const Point& x, const EvalOptions& options) {
  if (options.mode == DerivativeMode::symbolic) return eval(differentiate(e, k), x);
  Point xp = x, xm = x;
  xp[std::size_t(k)] += options.fd_step;
  xm[std::size_t(k)] -= options.fd_step;
  return (eval(e, xp) - eval(e, xm)) / (2.0 * options.fd_step);
}

Mat4c eval_matrix(const Expr4& m, const Point& x) {
  Mat4c r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i][j] = eval(m[i][j], x);
  return r;
}

namespace {

cplx minor3(const Mat4c& m, int row, int col) {
  int rows[3], cols[3], ri = 0, ci = 0;
  for (int k = 0; k < 4; ++k) {
    if (k != row) rows[ri++] = k;
    if (k != col) cols[ci++] = k;
  }
  return m[rows[0]][cols[0]] * (m[rows[1]][cols[1]] * m[rows[2]][cols[2]] -
                                m[rows[1]][cols[2]] * m[rows[2]][cols[1]]) -
         m[rows[0]][cols[1]] * (m[rows[1]][cols[0]] * m[rows[2]][cols[2]] -
                                m[rows[1]][cols[2]] * m[rows[2]][cols[0]]) +
         m[rows[0]][cols[2]] * (m[rows[1]][cols[0]] * m[rows[2]][cols[1]] -
                                m[rows[1]][cols[1]] * m[rows[2]][cols[0]]);
}

} // namespace

Mat4c invert4(const Mat4c& m, const std::string& what) {
  cplx det = 0.0;
  for (int j = 0; j < 4; ++j) det += (j % 2 ? -1.0 : 1.0) * m[0][j] * minor3(m, 0, j);
  if (std::abs(det) < kFrameDetFloor)
    throw DegeneracyError(what + " is singular (|det| = " + std::to_string(std::abs(det)) + ")");
  Mat4c inv;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      inv[i][j] = (((i + j) % 2) ? -1.0 : 1.0) * minor3(m, j, i) / det;
  return inv;
}

cplx lie_derivative(const FrameField& f, const Expr& e, int r, const Point& x,
                    const EvalOptions& options) {
  cplx acc = 0.0;
  for (int m = 0; m < 4; ++m) acc += eval(f.comp[m][r], x) * partial_eval(e, m, x, options);
  return acc;
}

Expr lie_derivative_expr(const FrameField& f, const Expr& e, int r) {
  Expr acc;
  for (int m = 0; m < 4; ++m) acc = acc + f.comp[m][r] * differentiate(e, m);
  return acc;
}

Ten3c commutation_coefficients(const FrameField& f, const Point& x,
                               const EvalOptions& options) {
  const Mat4c up = eval_matrix(f.comp, x);
  const Mat4c up_inv = invert4(up, "frame matrix");

  // d_up[n][m][j] = partial_n Upsilon^m_j
  Ten3c d_up;
  for (int n = 0; n < 4; ++n)
    for (int m = 0; m < 4; ++m)
      for (int j = 0; j < 4; ++j)
        d_up[n][m][j] = partial_eval(f.comp[m][j], n, x, options);

  Ten3c c{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      // holonomic components of [Upsilon_i, Upsilon_j]
      std::array<cplx, 4> bracket{};
      for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n)
          bracket[std::size_t(m)] += up[n][i] * d_up[n][m][j] - up[n][j] * d_up[n][m][i];
      for (int k = 0; k < 4; ++k) {
        cplx acc = 0.0;
        for (int m = 0; m < 4; ++m) acc += up_inv[k][m] * bracket[std::size_t(m)];
        c[k][i][j] = acc;
      }
    }
  return c;
}

Connection christoffel(const FrameField& f, const MetricField& m, const Point& x,
                       const EvalOptions& options) {
  const Mat4c g = eval_matrix(m.comp, x);
  const Mat4c g_up = invert4(g, "metric");
  const Ten3c c = commutation_coefficients(f, x, options);

  // lg[r][i][j] = L_r(g_ij)
  Ten3c lg;
  for (int r = 0; r < 4; ++r)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        cplx acc = 0.0;
        for (int n = 0; n < 4; ++n)
          acc += eval(f.comp[n][r], x) * partial_eval(m.comp[i][j], n, x, options);
        lg[r][i][j] = acc;
      }

  Connection conn{};
  for (int k = 0; k < 4; ++k)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        cplx acc = 0.0;
        for (int r = 0; r < 4; ++r)
          acc += g_up[k][r] * 0.5 * (lg[i][r][j] + lg[j][i][r] - lg[r][i][j]);
        acc += 0.5 * c[k][i][j];
        for (int r = 0; r < 4; ++r)
          for (int s = 0; s < 4; ++s)
            acc -= 0.5 * c[s][i][r] * g_up[k][r] * g[s][j] +
                   0.5 * c[s][j][r] * g_up[k][r] * g[s][i];
        conn.gamma[k][i][j] = acc;
      }
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int mm = 0; mm < 4; ++mm) {
        cplx acc = 0.0;
        for (int p = 0; p < 4; ++p) acc += g[mm][p] * conn.gamma[p][i][j];
        conn.gamma_low[i][j][mm] = acc;
      }
  return conn;
}

namespace detail {

void track(ResidualReport& rep, cplx value, std::initializer_list<int> idx) {
  const double a = std::abs(value);
  if (rep.worst.empty() || a > rep.max_abs) {
    rep.max_abs = a;
    rep.worst.assign(idx);
  }
}

void settle(ResidualReport& rep, double tol) {
  rep.tolerance = tol;
  rep.passed = rep.max_abs <= tol;
}

} // namespace detail

ResidualReport check_torsion(const Connection& conn, const Ten3c& c, double tol) {
  ResidualReport rep;
  rep.id = "torsion";
  for (int k = 0; k < 4; ++k)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        detail::track(rep, conn.gamma[k][i][j] - conn.gamma[k][j][i] - c[k][i][j], {k, i, j});
  detail::settle(rep, tol);
  return rep;
}

ResidualReport check_metricity(const FrameField& f, const MetricField& m,
                               const Connection& conn, const Point& x,
                               const EvalOptions& options, double tol) {
  ResidualReport rep;
  rep.id = "metricity";
  const Mat4c g = eval_matrix(m.comp, x);
  for (int r = 0; r < 4; ++r)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        cplx acc = lie_derivative(f, m.comp[i][j], r, x, options);
        for (int k = 0; k < 4; ++k)
          acc -= conn.gamma[k][r][i] * g[k][j] + conn.gamma[k][r][j] * g[i][k];
        detail::track(rep, acc, {r, i, j});
      }
  detail::settle(rep, tol);
  return rep;
}

ResidualReport check_gamma_symmetrization(const FrameField& f, const MetricField& m,
                                          const Connection& conn, const Point& x,
                                          const EvalOptions& options, double tol) {
  ResidualReport rep;
  rep.id = "gamma_symmetrization";
  for (int r = 0; r < 4; ++r)
    for (int p = 0; p < 4; ++p)
      for (int q = 0; q < 4; ++q) {
        const cplx lhs = conn.gamma_low[r][q][p] + conn.gamma_low[r][p][q];
        detail::track(rep, lhs - lie_derivative(f, m.comp[p][q], r, x, options), {r, p, q});
      }
  detail::settle(rep, tol);
  return rep;
}

ResidualReport check_gamma_trace(const FrameField& f, const MetricField& m,
                                 const Connection& conn, const Point& x,
                                 const EvalOptions& options, double tol) {
  ResidualReport rep;
  rep.id = "gamma_trace";
  const Mat4c g_up = invert4(eval_matrix(m.comp, x), "metric");
  for (int r = 0; r < 4; ++r) {
    cplx lhs = 0.0, rhs = 0.0;
    for (int q = 0; q < 4; ++q) lhs += conn.gamma[q][r][q];
    for (int q = 0; q < 4; ++q)
      for (int mm = 0; mm < 4; ++mm)
        rhs += 0.5 * g_up[q][mm] * lie_derivative(f, m.comp[q][mm], r, x, options);
    detail::track(rep, lhs - rhs, {r});
  }
  detail::settle(rep, tol);
  return rep;
}

namespace {

//! Eigenvalues of a real symmetric 4x4 matrix by cyclic Jacobi rotations.
std::array<double, 4> jacobi_eigenvalues(std::array<std::array<double, 4>, 4> a) {
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < 4; ++p)
      for (int q = p + 1; q < 4; ++q) off += a[p][q] * a[p][q];
    if (off < 1e-24) break;
    for (int p = 0; p < 4; ++p)
      for (int q = p + 1; q < 4; ++q) {
        if (std::abs(a[p][q]) < 1e-30) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double cth = 1.0 / std::sqrt(t * t + 1.0), s = t * cth;
        for (int k = 0; k < 4; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = cth * akp - s * akq;
          a[k][q] = s * akp + cth * akq;
        }
        for (int k = 0; k < 4; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = cth * apk - s * aqk;
          a[q][k] = s * apk + cth * aqk;
        }
      }
  }
  return {a[0][0], a[1][1], a[2][2], a[3][3]};
}

std::string point_str(const Point& x) {
  std::string s = "(";
  for (int k = 0; k < 4; ++k) s += std::to_string(x[std::size_t(k)]) + (k < 3 ? "," : ")");
  return s;
}

} // namespace

void require_lorentzian(const Mat4c& g, const Point& x) {
  constexpr double tol = 1e-9;
  std::array<std::array<double, 4>, 4> re;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (std::abs(g[i][j].imag()) > tol)
        throw RepresentationError("metric has a nonreal entry at point " + point_str(x));
      re[i][j] = g[i][j].real();
    }
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (std::abs(re[i][j] - re[j][i]) > tol)
        throw RepresentationError("metric is not symmetric at point " + point_str(x));
  const std::array<double, 4> ev = jacobi_eigenvalues(re);
  int pos = 0, neg = 0;
  for (double v : ev) {
    if (v > tol) ++pos;
    else if (v < -tol) ++neg;
  }
  if (pos != 1 || neg != 3)
    throw RepresentationError("metric signature is not (+,-,-,-) at point " + point_str(x));
}

} // namespace spintensor
