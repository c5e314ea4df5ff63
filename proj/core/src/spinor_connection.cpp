#include "spintensor/spinor_connection.hpp"

#include <sstream>

namespace spintensor {

namespace {

// L_r applied entrywise to a 2x2 block of expressions.
Mat2c lie_block(const FrameField& f, const Expr2& b, int r, const Point& x,
                const EvalOptions& options) {
  Mat2c out{};
  for (int a = 0; a < 2; ++a)
    for (int c = 0; c < 2; ++c) out[a][c] = lie_derivative(f, b[a][c], r, x, options);
  return out;
}

} // namespace

SpinorConnection spinor_connection(const EquipmentField& ef, const FrameField& f,
                                   const Connection& conn, const Point& x,
                                   const EvalOptions& options, double tol) {
  const EquipmentValues v = eval_equipment(ef, x);
  const ResidualReport cons = equipment_consistency(v, tol);
  if (!cons.passed) {
    std::ostringstream msg;
    msg << "equipment violates its defining identities (worst residual " << cons.max_abs
        << " against tolerance " << cons.tolerance << "), refusing to build a connection";
    throw InconsistencyError(msg.str());
  }

  SpinorConnection sc;
  // lg[r][q] = L_r applied entrywise to the G block of spatial slice q.
  std::array<std::array<Mat2c, 4>, 4> lg;
  for (int r = 0; r < 4; ++r)
    for (int q = 0; q < 4; ++q) lg[r][q] = lie_block(f, ef.G[q], r, x, options);

  for (int r = 0; r < 4; ++r) {
    cplx trace = 0.0;
    const Mat2c ldb = lie_block(f, ef.dbar, r, x, options);
    for (int ib = 0; ib < 2; ++ib)
      for (int jb = 0; jb < 2; ++jb) trace += ldb[jb][ib] * v.dbar_dual[ib][jb];
    trace *= 0.25;

    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        cplx tg = 0.0, tl = 0.0;
        for (int sb = 0; sb < 2; ++sb)
          for (int q = 0; q < 4; ++q) {
            for (int p = 0; p < 4; ++p)
              tg += v.G[p][i][sb] * conn.gamma[p][r][q] * v.G_inv[q][j][sb];
            tl += lg[r][q][i][sb] * v.G_inv[q][j][sb];
          }
        sc.term_gamma[r][i][j] = 0.25 * tg;
        sc.term_lie[r][i][j] = 0.25 * tl;
        sc.term_trace[r][i][j] = i == j ? trace : cplx(0.0);
        sc.a[r][i][j] = sc.term_gamma[r][i][j] - sc.term_lie[r][i][j] - sc.term_trace[r][i][j];
        sc.abar[r][i][j] = std::conj(sc.a[r][i][j]);
      }
  }
  return sc;
}

ResidualReport check_spinor_metric_concordance(const EquipmentField& ef,
                                               const FrameField& f,
                                               const SpinorConnection& sc,
                                               const Point& x,
                                               const EvalOptions& options, double tol) {
  ResidualReport rep;
  rep.id = "spinor_metric_concordance";
  const EquipmentValues v = eval_equipment(ef, x);
  for (int r = 0; r < 4; ++r) {
    const Mat2c ld = lie_block(f, ef.d, r, x, options);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        cplx acc = ld[i][j];
        for (int k = 0; k < 2; ++k)
          acc -= sc.a[r][k][i] * v.d[k][j] + sc.a[r][k][j] * v.d[i][k];
        detail::track(rep, acc, {r, i + 1, j + 1});
      }
  }
  detail::settle(rep, tol);
  return rep;
}

ResidualReport check_field_concordance(const EquipmentField& ef, const FrameField& f,
                                       const Connection& conn,
                                       const SpinorConnection& sc, const Point& x,
                                       const EvalOptions& options, double tol) {
  ResidualReport rep;
  rep.id = "field_concordance";
  const EquipmentValues v = eval_equipment(ef, x);
  for (int r = 0; r < 4; ++r)
    for (int p = 0; p < 4; ++p) {
      Mat2c lgp{};
      for (int i = 0; i < 2; ++i)
        for (int ib = 0; ib < 2; ++ib)
          lgp[i][ib] = lie_derivative(f, ef.G[p][i][ib], r, x, options);
      for (int i = 0; i < 2; ++i)
        for (int ib = 0; ib < 2; ++ib) {
          cplx acc = lgp[i][ib];
          for (int k = 0; k < 2; ++k) acc += sc.a[r][i][k] * v.G[p][k][ib];
          for (int kb = 0; kb < 2; ++kb) acc += sc.abar[r][ib][kb] * v.G[p][i][kb];
          for (int k = 0; k < 4; ++k) acc -= conn.gamma[k][r][p] * v.G[k][i][ib];
          detail::track(rep, acc, {r, p, i + 1, ib + 1});
        }
    }
  detail::settle(rep, tol);
  return rep;
}

ResidualReport check_lie_swap_spinor(const EquipmentField& ef, const FrameField& f,
                                     const Point& x, const EvalOptions& options,
                                     double tol) {
  ResidualReport rep;
  rep.id = "lie_swap_spinor";
  const EquipmentValues v = eval_equipment(ef, x);
  for (int r = 0; r < 4; ++r) {
    std::array<Mat2c, 4> lg, lgi;
    for (int q = 0; q < 4; ++q) {
      lg[q] = lie_block(f, ef.G[q], r, x, options);
      lgi[q] = lie_block(f, ef.G_inv[q], r, x, options);
    }
    for (int k = 0; k < 2; ++k)
      for (int i = 0; i < 2; ++i) {
        cplx acc = 0.0;
        for (int sb = 0; sb < 2; ++sb)
          for (int q = 0; q < 4; ++q)
            acc += lg[q][k][sb] * v.G_inv[q][i][sb] + v.G[q][k][sb] * lgi[q][i][sb];
        detail::track(rep, acc, {r, k + 1, i + 1});
      }
  }
  detail::settle(rep, tol);
  return rep;
}

ResidualReport check_lie_swap_conj(const EquipmentField& ef, const FrameField& f,
                                   const Point& x, const EvalOptions& options,
                                   double tol) {
  ResidualReport rep;
  rep.id = "lie_swap_conj";
  const EquipmentValues v = eval_equipment(ef, x);
  for (int r = 0; r < 4; ++r) {
    std::array<Mat2c, 4> lg, lgi;
    for (int m = 0; m < 4; ++m) {
      lg[m] = lie_block(f, ef.G[m], r, x, options);
      lgi[m] = lie_block(f, ef.G_inv[m], r, x, options);
    }
    for (int sb = 0; sb < 2; ++sb)
      for (int ib = 0; ib < 2; ++ib) {
        cplx acc = 0.0;
        for (int k = 0; k < 2; ++k)
          for (int m = 0; m < 4; ++m)
            acc += v.G_inv[m][k][sb] * lg[m][k][ib] + lgi[m][k][sb] * v.G[m][k][ib];
        detail::track(rep, acc, {r, sb + 1, ib + 1});
      }
  }
  detail::settle(rep, tol);
  return rep;
}

ResidualReport check_lie_swap_pointwise(const EquipmentField& ef, const FrameField& f,
                                        const Point& x, const EvalOptions& options,
                                        double tol) {
  ResidualReport rep;
  rep.id = "lie_swap_pointwise";
  const EquipmentValues v = eval_equipment(ef, x);
  for (int r = 0; r < 4; ++r) {
    std::array<Mat2c, 4> lg, lgi;
    for (int m = 0; m < 4; ++m) {
      lg[m] = lie_block(f, ef.G[m], r, x, options);
      lgi[m] = lie_block(f, ef.G_inv[m], r, x, options);
    }
    for (int i = 0; i < 2; ++i)
      for (int ib = 0; ib < 2; ++ib)
        for (int k = 0; k < 2; ++k)
          for (int sb = 0; sb < 2; ++sb) {
            cplx acc = 0.0;
            for (int m = 0; m < 4; ++m)
              acc += v.G[m][i][ib] * lgi[m][k][sb] + lg[m][i][ib] * v.G_inv[m][k][sb];
            detail::track(rep, acc, {r, i + 1, ib + 1, k + 1, sb + 1});
          }
  }
  detail::settle(rep, tol);
  return rep;
}

UCoefficients u_coefficients(const EquipmentField& ef, const FrameField& f,
                             const Point& x, const EvalOptions& options) {
  UCoefficients uc;
  const EquipmentValues v = eval_equipment(ef, x);
  for (int r = 0; r < 4; ++r) {
    const Mat2c ldd = lie_block(f, ef.d_dual, r, x, options);
    const Mat2c lbd = lie_block(f, ef.dbar_dual, r, x, options);
    cplx u = 0.0, ub = 0.0;
    for (int i = 0; i < 2; ++i)
      for (int k = 0; k < 2; ++k) {
        u += ldd[i][k] * v.d[k][i];
        ub += lbd[i][k] * v.dbar[k][i];
      }
    uc.u[r] = 0.5 * u;
    uc.ubar[r] = 0.5 * ub;
  }
  return uc;
}

ResidualReport check_dual_proportionality_spinor(const EquipmentField& ef,
                                                 const FrameField& f,
                                                 const UCoefficients& uc,
                                                 const Point& x,
                                                 const EvalOptions& options,
                                                 double tol) {
  ResidualReport rep;
  rep.id = "dual_proportionality_spinor";
  const EquipmentValues v = eval_equipment(ef, x);
  for (int r = 0; r < 4; ++r) {
    const Mat2c ldd = lie_block(f, ef.d_dual, r, x, options);
    for (int i = 0; i < 2; ++i)
      for (int k = 0; k < 2; ++k)
        detail::track(rep, ldd[i][k] - uc.u[r] * v.d_dual[i][k], {r, i + 1, k + 1});
  }
  detail::settle(rep, tol);
  return rep;
}

ResidualReport check_dual_proportionality_conj(const EquipmentField& ef,
                                               const FrameField& f,
                                               const UCoefficients& uc, const Point& x,
                                               const EvalOptions& options, double tol) {
  ResidualReport rep;
  rep.id = "dual_proportionality_conj";
  const EquipmentValues v = eval_equipment(ef, x);
  for (int r = 0; r < 4; ++r) {
    const Mat2c lbd = lie_block(f, ef.dbar_dual, r, x, options);
    for (int ib = 0; ib < 2; ++ib)
      for (int sb = 0; sb < 2; ++sb)
        detail::track(rep, lbd[ib][sb] - uc.ubar[r] * v.dbar_dual[ib][sb],
                      {r, ib + 1, sb + 1});
  }
  detail::settle(rep, tol);
  return rep;
}

} // namespace spintensor
