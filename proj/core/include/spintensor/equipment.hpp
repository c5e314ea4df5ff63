#pragma once

#include <array>
#include <utility>

#include "spintensor/tensor.hpp"

namespace spintensor {

enum class Orientation { right, left };

inline int orientation_sign(Orientation o) { return o == Orientation::right ? 1 : -1; }

//! The full algebraic package over one frame pair: spinor metric d and its
//! dual, their conjugates, the spatial metric pair, the field G with its
//! inverse field, and the volume tensor pair.
//!
//! Slot layout:
//!   d(r,s)=d_{rs}           d_dual(r,s)=d^{rs}       (conjugates likewise)
//!   g(p,q)=g_{pq}           g_dual(p,q)=g^{pq}
//!   G(p,r,rb)=G^{r rb}_p    G_inv(q,s,sb)=G^q_{s sb}
//!   omega(p,r,q,s)=omega_{prqs}   omega_dual likewise with raised slots
template <class S>
struct Equipment {
  SpinTensor<S> d{Signature{lo_spinor, lo_spinor}};
  SpinTensor<S> d_dual{Signature{up_spinor, up_spinor}};
  SpinTensor<S> dbar{Signature{lo_conj, lo_conj}};
  SpinTensor<S> dbar_dual{Signature{up_conj, up_conj}};
  SpinTensor<S> g{Signature{lo_spatial, lo_spatial}};
  SpinTensor<S> g_dual{Signature{up_spatial, up_spatial}};
  SpinTensor<S> G{Signature{lo_spatial, up_spinor, up_conj}};
  SpinTensor<S> G_inv{Signature{up_spatial, lo_spinor, lo_conj}};
  SpinTensor<S> omega{Signature{lo_spatial, lo_spatial, lo_spatial, lo_spatial}};
  SpinTensor<S> omega_dual{Signature{up_spatial, up_spatial, up_spatial, up_spatial}};
  Orientation orientation = Orientation::right;
};

//! Determinant of a rank-2 spatial tensor expanded over permutations.
template <class S>
S spatial_det(const SpinTensor<S>& m) {
  if (m.rank() != 2 || m.signature()[0].family != IndexFamily::spatial ||
      m.signature()[1].family != IndexFamily::spatial)
    throw SignatureError("spatial_det: need a rank-2 spatial tensor");
  S det = scalar_traits<S>::zero();
  for (int p0 = 0; p0 < 4; ++p0)
    for (int p1 = 0; p1 < 4; ++p1)
      for (int p2 = 0; p2 < 4; ++p2)
        for (int p3 = 0; p3 < 4; ++p3) {
          const int sgn = levi_civita(p0, p1, p2, p3);
          if (sgn == 0) continue;
          det = det + scalar_traits<S>::from_int(sgn) * (m.at({0, p0}) * m.at({1, p1}) *
                                                         m.at({2, p2}) * m.at({3, p3}));
        }
  return det;
}

//! Volume tensor pair for a metric pair: omega = s*sqrt(-det g)*eps with
//! all slots lowered and omega_dual = -s*sqrt(-det g_dual)*eps with all
//! slots raised, where s is +1 for a right-handed orientation and -1 for a
//! left-handed one. The metric must have negative determinant; with exact
//! scalars -det must additionally be a perfect square.
template <class S>
std::pair<SpinTensor<S>, SpinTensor<S>> volume_tensor(const SpinTensor<S>& g,
                                                      const SpinTensor<S>& g_dual,
                                                      Orientation orient) {
  const S det = spatial_det(g);
  const S det_dual = spatial_det(g_dual);
  const S minus_one = scalar_traits<S>::from_int(-1);
  const S neg_det = minus_one * det;
  const S neg_det_dual = minus_one * det_dual;
  // sqrt_positive rejects nonpositive and non-real values, which doubles as
  // the signature check det(g) < 0.
  if (scalar_traits<S>::is_zero(neg_det) || scalar_traits<S>::is_zero(neg_det_dual))
    throw RepresentationError("volume_tensor: degenerate metric");
  S root, root_dual;
  try {
    root = scalar_traits<S>::sqrt_positive(neg_det);
    root_dual = scalar_traits<S>::sqrt_positive(neg_det_dual);
  } catch (const RepresentationError& e) {
    throw RepresentationError(std::string("volume_tensor: ") + e.what());
  }
  const S s = scalar_traits<S>::from_int(orientation_sign(orient));
  SpinTensor<S> omega = (s * root) * epsilon_tensor<S>(Variance::lower);
  SpinTensor<S> omega_dual = (minus_one * s * root_dual) * epsilon_tensor<S>(Variance::upper);
  return {std::move(omega), std::move(omega_dual)};
}

//! Inverse field: G^q_{s sb} = sum_{p,r,rb} G^{r rb}_p g^{pq} d_{rs} dbar_{rb sb},
//! built by moving each slot of G across its metric.
template <class S>
SpinTensor<S> inverse_ivdw(const SpinTensor<S>& G, const SpinTensor<S>& g_dual,
                           const SpinTensor<S>& d, const SpinTensor<S>& dbar) {
  SpinTensor<S> t = raise_lower(G, 0, g_dual);
  t = raise_lower(t, 1, d);
  return raise_lower(t, 2, dbar);
}

//! The canonical equipment: Minkowski metric diag(1,-1,-1,-1), the standard
//! skew spinor metric pair, and G sliced by the four basic hermitian 2x2
//! matrices. Orientation only flips the volume tensors.
template <class S = GaussianRational>
Equipment<S> canonical_equipment(Orientation orient = Orientation::right) {
  using T = scalar_traits<S>;
  Equipment<S> eq;
  eq.orientation = orient;

  eq.d.at({1, 2}) = T::one();
  eq.d.at({2, 1}) = T::from_int(-1);
  eq.d_dual.at({1, 2}) = T::from_int(-1);
  eq.d_dual.at({2, 1}) = T::one();
  eq.dbar.at({1, 2}) = T::one();
  eq.dbar.at({2, 1}) = T::from_int(-1);
  eq.dbar_dual.at({1, 2}) = T::from_int(-1);
  eq.dbar_dual.at({2, 1}) = T::one();

  for (int p = 0; p < 4; ++p) {
    const long s = p == 0 ? 1 : -1;
    eq.g.at({p, p}) = T::from_int(s);
    eq.g_dual.at({p, p}) = T::from_int(s);
  }

  const S one = T::one(), mone = T::from_int(-1);
  const S im = T::imag_unit(), mim = mone * im;
  // G(p, r, rb): slice p is the p-th basic hermitian matrix.
  eq.G.at({0, 1, 1}) = one;
  eq.G.at({0, 2, 2}) = one;
  eq.G.at({1, 1, 2}) = one;
  eq.G.at({1, 2, 1}) = one;
  eq.G.at({2, 1, 2}) = mim;
  eq.G.at({2, 2, 1}) = im;
  eq.G.at({3, 1, 1}) = one;
  eq.G.at({3, 2, 2}) = mone;

  eq.G_inv = inverse_ivdw(eq.G, eq.g_dual, eq.d, eq.dbar);

  auto om = volume_tensor(eq.g, eq.g_dual, orient);
  eq.omega = std::move(om.first);
  eq.omega_dual = std::move(om.second);
  return eq;
}

//! Exact spin-frame change by an invertible 2x2 matrix s: lower spinor
//! slots transform by s, upper ones by its inverse, conjugate slots by the
//! conjugated matrices; the spatial sector is untouched.
template <class S>
Equipment<S> spin_transform(const Equipment<S>& eq, const std::array<std::array<S, 2>, 2>& s) {
  using T = scalar_traits<S>;
  const S det = s[0][0] * s[1][1] - s[0][1] * s[1][0];
  if (T::is_zero(det)) throw DegeneracyError("spin_transform: singular matrix");
  std::array<std::array<S, 2>, 2> inv = {{{s[1][1] / det, T::zero() - s[0][1] / det},
                                          {T::zero() - s[1][0] / det, s[0][0] / det}}};

  // Pack s and its relatives as rank-2 tensors so the transport below is a
  // plain chain of contractions. mat(a, r) = s^a_r: row a, column r.
  auto pack = [](const std::array<std::array<S, 2>, 2>& m, IndexKind row, IndexKind col) {
    SpinTensor<S> t(Signature{row, col});
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) t.at({a + 1, b + 1}) = m[a][b];
    return t;
  };
  auto conj_mat = [](const std::array<std::array<S, 2>, 2>& m) {
    std::array<std::array<S, 2>, 2> c;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) c[a][b] = scalar_traits<S>::conj(m[a][b]);
    return c;
  };

  // Slot kinds chosen so each contraction below is upper-vs-lower.
  SpinTensor<S> s_t = pack(s, up_spinor, lo_spinor);
  SpinTensor<S> inv_t = pack(inv, up_spinor, lo_spinor);
  SpinTensor<S> sb_t = pack(conj_mat(s), up_conj, lo_conj);
  SpinTensor<S> invb_t = pack(conj_mat(inv), up_conj, lo_conj);

  Equipment<S> r = eq;
  // d'_{rs} = s^a_r d_{ab} s^b_s and the dual law with the inverse.
  r.d = contract(contract(eq.d, s_t, {{0, 0}}), s_t, {{0, 0}});
  r.d_dual = contract(contract(inv_t, eq.d_dual, {{1, 0}}), inv_t, {{1, 1}});
  r.dbar = contract(contract(eq.dbar, sb_t, {{0, 0}}), sb_t, {{0, 0}});
  r.dbar_dual = contract(contract(invb_t, eq.dbar_dual, {{1, 0}}), invb_t, {{1, 1}});
  // G'^{r rb}_p = inv^r_a conj(inv)^rb_ab G^{a ab}_p.
  r.G = contract(contract(eq.G, inv_t, {{1, 1}}), invb_t, {{1, 1}});
  r.G_inv = contract(contract(eq.G_inv, s_t, {{1, 0}}), sb_t, {{1, 0}});
  return r;
}

} // namespace spintensor
