#include "spintensor/identities.hpp"

namespace spintensor {

namespace {

using GR = GaussianRational;

GR delta(int a, int b) { return GR(a == b ? 1 : 0); }

void record(IdentityReport& rep, int relation, std::vector<int> idx, const GR& lhs,
            const GR& rhs) {
  ++rep.total_cases;
  if (lhs != rhs)
    rep.failures.push_back({relation, std::move(idx), lhs.str(), rhs.str()});
}

void finish(IdentityReport& rep) { rep.passed = rep.failures.empty(); }

} // namespace

IdentityReport check_hermiticity(const ExactEquipment& eq) {
  IdentityReport rep;
  rep.id = "hermiticity";
  rep.formula = "conj(G^{r rb}_p) = G^{rb r}_p ; conj(G^p_{r rb}) = G^p_{rb r}";
  for (int p = 0; p < 4; ++p)
    for (int r = 1; r <= 2; ++r)
      for (int rb = 1; rb <= 2; ++rb)
        record(rep, 0, {p, r, rb}, eq.G.at({p, r, rb}).conj(), eq.G.at({p, rb, r}));
  for (int q = 0; q < 4; ++q)
    for (int s = 1; s <= 2; ++s)
      for (int sb = 1; sb <= 2; ++sb)
        record(rep, 1, {q, s, sb}, eq.G_inv.at({q, s, sb}).conj(), eq.G_inv.at({q, sb, s}));
  finish(rep);
  return rep;
}

IdentityReport check_quadratic(const ExactEquipment& eq) {
  IdentityReport rep;
  rep.id = "quadratic";
  rep.formula =
      "sum_{r,rb} G^{r rb}_p G^q_{r rb} = 2 delta^q_p ; "
      "sum_q G^{r rb}_q G^q_{s sb} = 2 delta^r_s delta^rb_sb";
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q) {
      GR lhs;
      for (int r = 1; r <= 2; ++r)
        for (int rb = 1; rb <= 2; ++rb)
          lhs += eq.G.at({p, r, rb}) * eq.G_inv.at({q, r, rb});
      record(rep, 0, {p, q}, lhs, GR(2) * delta(p, q));
    }
  for (int r = 1; r <= 2; ++r)
    for (int rb = 1; rb <= 2; ++rb)
      for (int s = 1; s <= 2; ++s)
        for (int sb = 1; sb <= 2; ++sb) {
          GR lhs;
          for (int q = 0; q < 4; ++q)
            lhs += eq.G.at({q, r, rb}) * eq.G_inv.at({q, s, sb});
          record(rep, 1, {r, rb, s, sb}, lhs, GR(2) * delta(r, s) * delta(rb, sb));
        }
  finish(rep);
  return rep;
}

IdentityReport check_cubic(const ExactEquipment& eq) {
  IdentityReport rep;
  rep.id = "cubic";
  rep.formula =
      "sum_{s,sb} G^{r sb}_p G^m_{s sb} G^{s rb}_q = G^{r rb}_p delta^m_q"
      " + G^{r rb}_q delta^m_p - sum_n G^{r rb}_n g^{mn} g_pq"
      " + i sum_{a,b,n} g_pa g_qb omega^{ambn} G^{r rb}_n";
  // The volume term tracks the equipment orientation.
  const GR iw = GR::i() * GR(orientation_sign(eq.orientation));
  for (int p = 0; p < 4; ++p)
    for (int m = 0; m < 4; ++m)
      for (int q = 0; q < 4; ++q)
        for (int r = 1; r <= 2; ++r)
          for (int rb = 1; rb <= 2; ++rb) {
            GR lhs;
            for (int s = 1; s <= 2; ++s)
              for (int sb = 1; sb <= 2; ++sb)
                lhs += eq.G.at({p, r, sb}) * eq.G_inv.at({m, s, sb}) * eq.G.at({q, s, rb});
            GR rhs = eq.G.at({p, r, rb}) * delta(m, q) + eq.G.at({q, r, rb}) * delta(m, p);
            for (int n = 0; n < 4; ++n)
              rhs -= eq.G.at({n, r, rb}) * eq.g_dual.at({m, n}) * eq.g.at({p, q});
            for (int a = 0; a < 4; ++a)
              for (int b = 0; b < 4; ++b)
                for (int n = 0; n < 4; ++n)
                  rhs += iw * eq.g.at({p, a}) * eq.g.at({q, b}) *
                         eq.omega_dual.at({a, m, b, n}) * eq.G.at({n, r, rb});
            record(rep, 0, {p, m, q, r, rb}, lhs, rhs);
          }
  finish(rep);
  return rep;
}

std::vector<IdentityReport> check_derived(const ExactEquipment& eq) {
  IdentityReport expansion, symmetric, alternating, reconstruction;
  expansion.id = "product_expansion";
  expansion.formula =
      "2 G^{r ub}_p G^{u rb}_q = G^{r rb}_p G^{u ub}_q + G^{r rb}_q G^{u ub}_p"
      " - 2 d^ru dbar^{rb ub} g_pq"
      " + i sum_{a,b,m,n} g_pa g_qb omega^{ambn} G^{u ub}_m G^{r rb}_n";
  symmetric.id = "product_symmetric";
  symmetric.formula =
      "G^{r ub}_p G^{u rb}_q + G^{r ub}_q G^{u rb}_p = G^{r rb}_p G^{u ub}_q"
      " + G^{r rb}_q G^{u ub}_p - 2 d^ru dbar^{rb ub} g_pq";
  alternating.id = "product_alternating";
  alternating.formula =
      "G^{r ub}_p G^{u rb}_q - G^{r ub}_q G^{u rb}_p ="
      " i sum_{a,b,m,n} g_pa g_qb omega^{ambn} G^{u ub}_m G^{r rb}_n";
  reconstruction.id = "product_reconstruction";
  reconstruction.formula =
      "per tuple: (symmetric lhs) + (alternating lhs) = (expansion lhs)"
      " and likewise for the right-hand sides";

  const GR iw = GR::i() * GR(orientation_sign(eq.orientation));
  const GR two(2);
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q)
      for (int r = 1; r <= 2; ++r)
        for (int rb = 1; rb <= 2; ++rb)
          for (int u = 1; u <= 2; ++u)
            for (int ub = 1; ub <= 2; ++ub) {
              const std::vector<int> idx = {p, q, r, rb, u, ub};
              const GR pq = eq.G.at({p, r, ub}) * eq.G.at({q, u, rb});
              const GR qp = eq.G.at({q, r, ub}) * eq.G.at({p, u, rb});
              GR sym_rhs = eq.G.at({p, r, rb}) * eq.G.at({q, u, ub}) +
                           eq.G.at({q, r, rb}) * eq.G.at({p, u, ub}) -
                           two * eq.d_dual.at({r, u}) * eq.dbar_dual.at({rb, ub}) *
                               eq.g.at({p, q});
              GR alt_rhs;
              for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b)
                  for (int m = 0; m < 4; ++m)
                    for (int n = 0; n < 4; ++n)
                      alt_rhs += iw * eq.g.at({p, a}) * eq.g.at({q, b}) *
                                 eq.omega_dual.at({a, m, b, n}) * eq.G.at({m, u, ub}) *
                                 eq.G.at({n, r, rb});
              const GR exp_lhs = two * pq, exp_rhs = sym_rhs + alt_rhs;
              const GR sym_lhs = pq + qp, alt_lhs = pq - qp;
              record(expansion, 0, idx, exp_lhs, exp_rhs);
              record(symmetric, 0, idx, sym_lhs, sym_rhs);
              record(alternating, 0, idx, alt_lhs, alt_rhs);
              // Summing the parts must reproduce the expansion on both sides.
              record(reconstruction, 0, idx, sym_lhs + alt_lhs, exp_lhs);
              if (sym_rhs + alt_rhs != exp_rhs)
                reconstruction.failures.push_back(
                    {1, idx, (sym_rhs + alt_rhs).str(), exp_rhs.str()});
            }
  finish(expansion);
  finish(symmetric);
  finish(alternating);
  finish(reconstruction);
  return {expansion, symmetric, alternating, reconstruction};
}

std::vector<IdentityReport> check_aux_contractions(const ExactEquipment& eq) {
  std::vector<IdentityReport> reps(5);
  reps[0].id = "aux_contraction_a";
  reps[0].formula = "sum_k G^{k sb}_p d_kj = sum_{m,rb} G^m_{j rb} dbar^{rb sb} g_mp";
  reps[1].id = "aux_contraction_b";
  reps[1].formula = "sum_{ab,k} G^{k ab}_p d_kj dbar_{ab rb} = sum_q G^q_{j rb} g_pq";
  reps[2].id = "aux_contraction_c";
  reps[2].formula = "sum_{sb,m} dbar^{rb sb} g_nm G^m_{k sb} = sum_s G^{s rb}_n d_ks";
  reps[3].id = "aux_contraction_d";
  reps[3].formula = "sum_{k,m} d^qk g_nm G^m_{k sb} = sum_kb G^{q kb}_n dbar_{sb kb}";
  reps[4].id = "aux_contraction_e";
  reps[4].formula = "sum_{k,sb} d^qk dbar^{rb sb} G^m_{k sb} = sum_p G^{q rb}_p g^pm";

  for (int p = 0; p < 4; ++p)
    for (int j = 1; j <= 2; ++j)
      for (int sb = 1; sb <= 2; ++sb) {
        GR lhs, rhs;
        for (int k = 1; k <= 2; ++k) lhs += eq.G.at({p, k, sb}) * eq.d.at({k, j});
        for (int m = 0; m < 4; ++m)
          for (int rb = 1; rb <= 2; ++rb)
            rhs += eq.G_inv.at({m, j, rb}) * eq.dbar_dual.at({rb, sb}) * eq.g.at({m, p});
        record(reps[0], 0, {p, j, sb}, lhs, rhs);
      }
  for (int p = 0; p < 4; ++p)
    for (int j = 1; j <= 2; ++j)
      for (int rb = 1; rb <= 2; ++rb) {
        GR lhs, rhs;
        for (int ab = 1; ab <= 2; ++ab)
          for (int k = 1; k <= 2; ++k)
            lhs += eq.G.at({p, k, ab}) * eq.d.at({k, j}) * eq.dbar.at({ab, rb});
        for (int q = 0; q < 4; ++q) rhs += eq.G_inv.at({q, j, rb}) * eq.g.at({p, q});
        record(reps[1], 0, {p, j, rb}, lhs, rhs);
      }
  for (int rb = 1; rb <= 2; ++rb)
    for (int n = 0; n < 4; ++n)
      for (int k = 1; k <= 2; ++k) {
        GR lhs, rhs;
        for (int sb = 1; sb <= 2; ++sb)
          for (int m = 0; m < 4; ++m)
            lhs += eq.dbar_dual.at({rb, sb}) * eq.g.at({n, m}) * eq.G_inv.at({m, k, sb});
        for (int s = 1; s <= 2; ++s) rhs += eq.G.at({n, s, rb}) * eq.d.at({k, s});
        record(reps[2], 0, {rb, n, k}, lhs, rhs);
      }
  for (int q = 1; q <= 2; ++q)
    for (int n = 0; n < 4; ++n)
      for (int sb = 1; sb <= 2; ++sb) {
        GR lhs, rhs;
        for (int k = 1; k <= 2; ++k)
          for (int m = 0; m < 4; ++m)
            lhs += eq.d_dual.at({q, k}) * eq.g.at({n, m}) * eq.G_inv.at({m, k, sb});
        for (int kb = 1; kb <= 2; ++kb) rhs += eq.G.at({n, q, kb}) * eq.dbar.at({sb, kb});
        record(reps[3], 0, {q, n, sb}, lhs, rhs);
      }
  for (int q = 1; q <= 2; ++q)
    for (int rb = 1; rb <= 2; ++rb)
      for (int m = 0; m < 4; ++m) {
        GR lhs, rhs;
        for (int k = 1; k <= 2; ++k)
          for (int sb = 1; sb <= 2; ++sb)
            lhs += eq.d_dual.at({q, k}) * eq.dbar_dual.at({rb, sb}) * eq.G_inv.at({m, k, sb});
        for (int p = 0; p < 4; ++p) rhs += eq.G.at({p, q, rb}) * eq.g_dual.at({p, m});
        record(reps[4], 0, {q, rb, m}, lhs, rhs);
      }

  for (IdentityReport& r : reps) finish(r);
  return reps;
}

std::vector<IdentityReport> run_canonical_suite(const ExactEquipment& eq) {
  std::vector<IdentityReport> all;
  all.push_back(check_hermiticity(eq));
  all.push_back(check_quadratic(eq));
  all.push_back(check_cubic(eq));
  for (IdentityReport& r : check_derived(eq)) all.push_back(std::move(r));
  for (IdentityReport& r : check_aux_contractions(eq)) all.push_back(std::move(r));
  return all;
}

} // namespace spintensor
