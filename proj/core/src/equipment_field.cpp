#include "spintensor/equipment_field.hpp"

namespace spintensor {

EquipmentField canonical_equipment_field(Orientation orient) {
  EquipmentField ef;
  ef.orientation = orient;
  const Expr one = Expr::integer(1), mone = Expr::integer(-1);
  const Expr im = Expr::imaginary(), mim = -Expr::imaginary();

  ef.d[0][1] = one;
  ef.d[1][0] = mone;
  ef.d_dual[0][1] = mone;
  ef.d_dual[1][0] = one;
  ef.dbar[0][1] = one;
  ef.dbar[1][0] = mone;
  ef.dbar_dual[0][1] = mone;
  ef.dbar_dual[1][0] = one;

  for (int p = 0; p < 4; ++p) {
    ef.g[p][p] = Expr::integer(p == 0 ? 1 : -1);
    ef.g_dual[p][p] = Expr::integer(p == 0 ? 1 : -1);
  }

  ef.G[0][0][0] = one;
  ef.G[0][1][1] = one;
  ef.G[1][0][1] = one;
  ef.G[1][1][0] = one;
  ef.G[2][0][1] = mim;
  ef.G[2][1][0] = im;
  ef.G[3][0][0] = one;
  ef.G[3][1][1] = mone;

  ef.G_inv[0][0][0] = one;
  ef.G_inv[0][1][1] = one;
  ef.G_inv[1][0][1] = one;
  ef.G_inv[1][1][0] = one;
  ef.G_inv[2][0][1] = im;
  ef.G_inv[2][1][0] = mim;
  ef.G_inv[3][0][0] = one;
  ef.G_inv[3][1][1] = mone;
  return ef;
}

EquipmentField spin_frame_transform(const EquipmentField& ef, const Expr2& s) {
  const Expr det = s[0][0] * s[1][1] - s[0][1] * s[1][0];
  if (det.is_zero()) throw DegeneracyError("spin transform is identically singular");
  Expr2 inv = {{{s[1][1] / det, -s[0][1] / det}, {-s[1][0] / det, s[0][0] / det}}};
  Expr2 sb, invb;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      sb[a][b] = conjugated(s[a][b]);
      invb[a][b] = conjugated(inv[a][b]);
    }

  EquipmentField r = ef;
  r.degeneracy_guards.push_back(det);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      Expr d, dd, db, dbd;
      for (int u = 0; u < 2; ++u)
        for (int v = 0; v < 2; ++v) {
          d = d + s[u][a] * ef.d[u][v] * s[v][b];
          dd = dd + inv[a][u] * ef.d_dual[u][v] * inv[b][v];
          db = db + sb[u][a] * ef.dbar[u][v] * sb[v][b];
          dbd = dbd + invb[a][u] * ef.dbar_dual[u][v] * invb[b][v];
        }
      r.d[a][b] = d;
      r.d_dual[a][b] = dd;
      r.dbar[a][b] = db;
      r.dbar_dual[a][b] = dbd;
    }
  for (int p = 0; p < 4; ++p)
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        Expr gv, gi;
        for (int u = 0; u < 2; ++u)
          for (int v = 0; v < 2; ++v) {
            gv = gv + inv[a][u] * invb[b][v] * ef.G[p][u][v];
            gi = gi + ef.G_inv[p][u][v] * s[u][a] * sb[v][b];
          }
        r.G[p][a][b] = gv;
        r.G_inv[p][a][b] = gi;
      }
  return r;
}

EquipmentValues eval_equipment(const EquipmentField& ef, const Point& x) {
  for (const Expr& guard : ef.degeneracy_guards) {
    const cplx v = eval(guard, x);
    if (std::abs(v) < kFrameDetFloor)
      throw DegeneracyError("spin transform is singular at a sample point (|det| = " +
                            std::to_string(std::abs(v)) + ")");
  }
  EquipmentValues v;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      v.d[a][b] = eval(ef.d[a][b], x);
      v.d_dual[a][b] = eval(ef.d_dual[a][b], x);
      v.dbar[a][b] = eval(ef.dbar[a][b], x);
      v.dbar_dual[a][b] = eval(ef.dbar_dual[a][b], x);
    }
  for (int p = 0; p < 4; ++p)
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        v.G[p][a][b] = eval(ef.G[p][a][b], x);
        v.G_inv[p][a][b] = eval(ef.G_inv[p][a][b], x);
      }
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      v.g[i][j] = eval(ef.g[i][j], x);
      v.g_dual[i][j] = eval(ef.g_dual[i][j], x);
    }
  return v;
}

ResidualReport equipment_consistency(const EquipmentValues& v, double tol) {
  ResidualReport rep;
  rep.id = "equipment_consistency";
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      cplx acc = i == j ? -1.0 : 0.0;
      for (int p = 0; p < 4; ++p) acc += v.g[j][p] * v.g_dual[p][i];
      detail::track(rep, acc, {0, i, j});
    }
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      cplx acc_d = i == j ? -1.0 : 0.0, acc_db = acc_d;
      for (int r = 0; r < 2; ++r) {
        acc_d += v.d[j][r] * v.d_dual[r][i];
        acc_db += v.dbar[j][r] * v.dbar_dual[r][i];
      }
      detail::track(rep, acc_d, {1, i + 1, j + 1});
      detail::track(rep, acc_db, {2, i + 1, j + 1});
    }
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q) {
      cplx acc = p == q ? -2.0 : 0.0;
      for (int r = 0; r < 2; ++r)
        for (int rb = 0; rb < 2; ++rb) acc += v.G[p][r][rb] * v.G_inv[q][r][rb];
      detail::track(rep, acc, {3, p, q});
    }
  for (int r = 0; r < 2; ++r)
    for (int rb = 0; rb < 2; ++rb)
      for (int s = 0; s < 2; ++s)
        for (int sb = 0; sb < 2; ++sb) {
          cplx acc = (r == s && rb == sb) ? -2.0 : 0.0;
          for (int q = 0; q < 4; ++q) acc += v.G[q][r][rb] * v.G_inv[q][s][sb];
          detail::track(rep, acc, {4, r + 1, rb + 1, s + 1, sb + 1});
        }
  detail::settle(rep, tol);
  return rep;
}

} // namespace spintensor
