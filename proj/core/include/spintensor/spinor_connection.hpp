#pragma once

#include "spintensor/equipment_field.hpp"

namespace spintensor {

//! Spinor extension of a metric connection. a[r][i-1][j-1] = A^i_rj with r
//! the derivative direction; abar holds the conjugated components driving
//! the conjugate spinor slots. The three pieces are kept so callers can see
//! where a nonzero connection comes from: a = term_gamma - term_lie -
//! term_trace.
struct SpinorConnection {
  std::array<Mat2c, 4> a, abar;
  std::array<Mat2c, 4> term_gamma; //!< 1/4 sum_{sb,p,q} G^{i sb}_p Gamma^p_rq G^q_{j sb}
  std::array<Mat2c, 4> term_lie;   //!< 1/4 sum_{sb,q} L_r(G^{i sb}_q) G^q_{j sb}
  std::array<Mat2c, 4> term_trace; //!< 1/4 delta^i_j sum_{ib,jb} L_r(dbar_{jb ib}) dbar^{ib jb}
};

//! Computes the spinor connection at a point from the equipment field and
//! the metric connection. The equipment is first checked for internal
//! consistency at the point; an InconsistencyError reports the worst
//! violation if it fails, since the formula is meaningless for equipment
//! that does not satisfy its defining identities.
SpinorConnection spinor_connection(const EquipmentField& ef, const FrameField& f,
                                   const Connection& conn, const Point& x,
                                   const EvalOptions& options, double tol);

//! First concordance condition, over (r, i, j):
//! L_r(d_ij) - sum_k A^k_ri d_kj - sum_k A^k_rj d_ik.
ResidualReport check_spinor_metric_concordance(const EquipmentField& ef,
                                               const FrameField& f,
                                               const SpinorConnection& sc,
                                               const Point& x,
                                               const EvalOptions& options, double tol);

//! Second concordance condition, over (r, p, i, ib):
//! L_r(G^{i ib}_p) + sum_k A^i_rk G^{k ib}_p + sum_kb conj(A^ib_r_kb) G^{i kb}_p
//! - sum_k Gamma^k_rp G^{i ib}_k.
ResidualReport check_field_concordance(const EquipmentField& ef, const FrameField& f,
                                       const Connection& conn,
                                       const SpinorConnection& sc, const Point& x,
                                       const EvalOptions& options, double tol);

//! Derivative pushed through the field/inverse pairing, spinor trace form,
//! over (r, k, i): sum_{sb,q} [L_r(G^{k sb}_q) G^q_{i sb} + G^{k sb}_q L_r(G^q_{i sb})].
ResidualReport check_lie_swap_spinor(const EquipmentField& ef, const FrameField& f,
                                     const Point& x, const EvalOptions& options,
                                     double tol);

//! Conjugate-trace companion, over (r, sb, ib):
//! sum_{k,m} [G^m_{k sb} L_r(G^{k ib}_m) + L_r(G^m_{k sb}) G^{k ib}_m].
ResidualReport check_lie_swap_conj(const EquipmentField& ef, const FrameField& f,
                                   const Point& x, const EvalOptions& options,
                                   double tol);

//! Pointwise form with all spinor indices free, over (r, i, ib, k, sb):
//! sum_m [G^{i ib}_m L_r(G^m_{k sb}) + L_r(G^{i ib}_m) G^m_{k sb}].
ResidualReport check_lie_swap_pointwise(const EquipmentField& ef, const FrameField& f,
                                        const Point& x, const EvalOptions& options,
                                        double tol);

//! Proportionality factors of the dual spinor metric derivatives:
//! u[r] = 1/2 sum_{i,k} L_r(d^ik) d_ki and the conjugate counterpart.
struct UCoefficients {
  std::array<cplx, 4> u{};
  std::array<cplx, 4> ubar{};
};

UCoefficients u_coefficients(const EquipmentField& ef, const FrameField& f,
                             const Point& x, const EvalOptions& options);

//! L_r(d^ik) - u[r] d^ik over (r, i, k): the dual spinor metric derivative
//! is proportional to the dual spinor metric itself.
ResidualReport check_dual_proportionality_spinor(const EquipmentField& ef,
                                                 const FrameField& f,
                                                 const UCoefficients& uc,
                                                 const Point& x,
                                                 const EvalOptions& options,
                                                 double tol);

//! Conjugate counterpart: L_r(dbar^ib sb) - ubar[r] dbar^ib sb.
ResidualReport check_dual_proportionality_conj(const EquipmentField& ef,
                                               const FrameField& f,
                                               const UCoefficients& uc, const Point& x,
                                               const EvalOptions& options, double tol);

} // namespace spintensor
