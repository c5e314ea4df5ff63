#pragma once

#include <vector>

#include "spintensor/equipment.hpp"
#include "spintensor/frame.hpp"

namespace spintensor {

//! Equipment with symbolic entries over a chart. 2x2 spinor blocks are
//! stored 0-based: d[r-1][s-1] = d_{rs} and so on; G[p][r-1][rb-1] holds
//! G^{r rb}_p and G_inv[q][s-1][sb-1] holds G^q_{s sb}. The volume tensors
//! never enter field-level checks and are not carried here.
struct EquipmentField {
  Expr2 d, d_dual, dbar, dbar_dual;
  std::array<Expr2, 4> G, G_inv;
  Expr4 g, g_dual;
  Orientation orientation = Orientation::right;
  //! Expressions that must stay away from zero at every sample point
  //! (determinants of applied spin transforms).
  std::vector<Expr> degeneracy_guards;
};

//! The canonical constant equipment as a field.
EquipmentField canonical_equipment_field(Orientation orient = Orientation::right);

//! Spin-frame change by a pointwise-invertible 2x2 matrix of expressions:
//! lower spinor slots transform by s, upper ones by its adjugate over the
//! determinant, conjugate slots by the conjugated matrices. The spatial
//! sector is untouched; det(s) joins the degeneracy guards.
EquipmentField spin_frame_transform(const EquipmentField& ef, const Expr2& s);

//! All equipment entries evaluated at one point.
struct EquipmentValues {
  Mat2c d, d_dual, dbar, dbar_dual;
  std::array<Mat2c, 4> G, G_inv;
  Mat4c g, g_dual;
};

//! Evaluates the field at a point, first rejecting the point with a
//! DegeneracyError if any degeneracy guard is within kFrameDetFloor of zero.
EquipmentValues eval_equipment(const EquipmentField& ef, const Point& x);

//! Residual over the defining identities of evaluated equipment: both
//! metric/dual pairings, the conjugate pairing, and the two quadratic
//! identities of the field/inverse pair.
ResidualReport equipment_consistency(const EquipmentValues& v, double tol);

} // namespace spintensor
