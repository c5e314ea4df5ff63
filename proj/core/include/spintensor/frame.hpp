#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "spintensor/expr.hpp"

namespace spintensor {

using cplx = std::complex<double>;
using Mat2c = std::array<std::array<cplx, 2>, 2>;
using Mat4c = std::array<std::array<cplx, 4>, 4>;
using Ten3c = std::array<Mat4c, 4>;
using Expr2 = std::array<std::array<Expr, 2>, 2>;
using Expr4 = std::array<std::array<Expr, 4>, 4>;

//! Central-difference step shared by the finite-difference derivative mode
//! and the test oracles.
inline constexpr double kFdStep = 1e-5;

//! Frames evaluated closer to singular than this are rejected.
inline constexpr double kFrameDetFloor = 1e-8;

enum class DerivativeMode { symbolic, finite_difference };

struct EvalOptions {
  DerivativeMode mode = DerivativeMode::symbolic;
  double fd_step = kFdStep;
};

//! Four vector fields spanning the tangent space on a chart:
//! comp[i][r] is the i-th holonomic component of the r-th frame vector.
struct FrameField {
  Expr4 comp;
  static FrameField holonomic(); //!< identity frame: partial derivatives
};

//! Metric in frame components: comp[i][j] = g_ij along the frame vectors.
struct MetricField {
  Expr4 comp;
  static MetricField minkowski(); //!< constant diag(1,-1,-1,-1)
};

//! Partial derivative of an expression at a point: either the symbolic
//! derivative evaluated, or a central difference with options.fd_step.
cplx partial_eval(const Expr& e, int k, const Point& x, const EvalOptions& options);

Mat4c eval_matrix(const Expr4& m, const Point& x);

//! Inverse through the adjugate; throws DegeneracyError when |det| is
//! below kFrameDetFloor.
Mat4c invert4(const Mat4c& m, const std::string& what = "matrix");

//! Directional derivative of a scalar expression along frame vector r.
cplx lie_derivative(const FrameField& f, const Expr& e, int r, const Point& x,
                    const EvalOptions& options);

//! Symbolic form of the same operator: sum_m comp[m][r] * d(e)/dx_m.
Expr lie_derivative_expr(const FrameField& f, const Expr& e, int r);

//! Commutation coefficients c[k][i][j]: the bracket of frame vectors i and
//! j expanded back over the frame, antisymmetric in (i, j). Zero for a
//! holonomic frame.
Ten3c commutation_coefficients(const FrameField& f, const Point& x,
                               const EvalOptions& options);

//! Metric connection at a point. gamma[k][i][j] has the derivative
//! direction in the first lower slot (i); gamma_low[i][j][m] is gamma with
//! the upper slot dragged down by the metric.
struct Connection {
  Ten3c gamma;
  Ten3c gamma_low;
};

//! Solves the torsion-free and metric-concordance conditions for the
//! connection components over a (possibly non-holonomic) frame:
//!   Gamma^k_ij = sum_r g^kr/2 (L_i g_rj + L_j g_ir - L_r g_ij) + c^k_ij/2
//!                - sum_{r,s} c^s_ir/2 g^kr g_sj - sum_{r,s} c^s_jr/2 g^kr g_si
Connection christoffel(const FrameField& f, const MetricField& m, const Point& x,
                       const EvalOptions& options);

//! One residual family evaluated over its whole index range.
struct ResidualReport {
  std::string id;
  double max_abs = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::vector<int> worst; //!< index tuple attaining max_abs
};

namespace detail {
//! Accumulates |value| into the report, tracking the worst tuple.
void track(ResidualReport& rep, cplx value, std::initializer_list<int> idx);
//! Finalizes pass/fail against the tolerance.
void settle(ResidualReport& rep, double tol);
} // namespace detail

//! Antisymmetric part of the connection against the commutation
//! coefficients: Gamma^k_ij - Gamma^k_ji - c^k_ij over all (k,i,j).
ResidualReport check_torsion(const Connection& conn, const Ten3c& c, double tol);

//! Metric concordance: L_r(g_ij) - sum_k Gamma^k_ri g_kj - sum_k Gamma^k_rj g_ik.
ResidualReport check_metricity(const FrameField& f, const MetricField& m,
                               const Connection& conn, const Point& x,
                               const EvalOptions& options, double tol);

//! Symmetrized lowered connection against the metric derivative:
//! Gamma_rqp + Gamma_rpq - L_r(g_pq).
ResidualReport check_gamma_symmetrization(const FrameField& f, const MetricField& m,
                                          const Connection& conn, const Point& x,
                                          const EvalOptions& options, double tol);

//! Connection trace against the metric log-derivative:
//! sum_q Gamma^q_rq - 1/2 sum_{q,m} g^qm L_r(g_qm).
ResidualReport check_gamma_trace(const FrameField& f, const MetricField& m,
                                 const Connection& conn, const Point& x,
                                 const EvalOptions& options, double tol);

//! Lorentzian preflight for an evaluated metric: symmetric, negligible
//! imaginary part, eigenvalue signs (+,-,-,-). Throws RepresentationError
//! on violation.
void require_lorentzian(const Mat4c& g, const Point& x);

} // namespace spintensor
