#include "doctest.h"

#include "spintensor/equipment.hpp"
#include "spintensor/tensor.hpp"

using namespace spintensor;
using GR = GaussianRational;

TEST_CASE("levi_civita permutation sign") {
  CHECK(levi_civita(0, 1, 2, 3) == 1);
  CHECK(levi_civita(1, 0, 2, 3) == -1);
  CHECK(levi_civita(3, 2, 1, 0) == 1); // two swaps
  CHECK(levi_civita(0, 0, 2, 3) == 0);
  CHECK_THROWS_AS(levi_civita(0, 1, 2, 4), SignatureError);
  CHECK_THROWS_AS(levi_civita(-1, 1, 2, 3), SignatureError);

  int nonzero = 0, total = 0;
  for (int a = 0; a < 4; ++a)
    for (int m = 0; m < 4; ++m)
      for (int b = 0; b < 4; ++b)
        for (int n = 0; n < 4; ++n) {
          const int s = levi_civita(a, m, b, n);
          total += s;
          if (s != 0) ++nonzero;
        }
  CHECK(nonzero == 24);
  CHECK(total == 0);
}

TEST_CASE("indexing uses domain values and validates them") {
  SpinTensor<GR> t(Signature{lo_spatial, up_spinor});
  CHECK(t.size() == 8);
  t.at({3, 2}) = GR(7);
  CHECK(t.at({3, 2}) == GR(7));
  CHECK(t.at({0, 1}).is_zero());
  CHECK_THROWS_AS(t.at({4, 1}), SignatureError);  // spatial domain is 0..3
  CHECK_THROWS_AS(t.at({0, 0}), SignatureError);  // spinor domain is 1..2
  CHECK_THROWS_AS(t.at({0, 3}), SignatureError);
  CHECK_THROWS_AS(t.at({0}), SignatureError);     // rank mismatch
}

TEST_CASE("sum, difference, scalar multiple") {
  SpinTensor<GR> a(Signature{lo_spinor, lo_spinor});
  SpinTensor<GR> b(Signature{lo_spinor, lo_spinor});
  a.at({1, 2}) = GR(2);
  b.at({1, 2}) = GR(3);
  b.at({2, 1}) = GR(-1);
  const SpinTensor<GR> s = a + b;
  CHECK(s.at({1, 2}) == GR(5));
  CHECK(s.at({2, 1}) == GR(-1));
  CHECK((s - b) == a);
  const SpinTensor<GR> twice = GR(2) * a;
  CHECK(twice.at({1, 2}) == GR(4));
  SpinTensor<GR> wrong(Signature{lo_spinor, up_spinor});
  CHECK_THROWS_AS(a + wrong, SignatureError);
}

TEST_CASE("spinor metric pairing contracts to the identity") {
  const auto eq = canonical_equipment<GR>();
  // sum_r d_{jr} d^{ri} = delta^i_j
  const SpinTensor<GR> id = contract(eq.d, eq.d_dual, {{1, 0}});
  for (int j = 1; j <= 2; ++j)
    for (int i = 1; i <= 2; ++i)
      CHECK(id.at({j, i}) == (i == j ? GR(1) : GR(0)));
}

TEST_CASE("contract rejects non-dual slot pairs") {
  const auto eq = canonical_equipment<GR>();
  CHECK_THROWS_AS(contract(eq.d, eq.d, {{1, 0}}), SignatureError); // lower vs lower
  CHECK_THROWS_AS(contract(eq.d, eq.g_dual, {{0, 0}}), SignatureError); // family mismatch
  CHECK_THROWS_AS(contract(eq.d, eq.d_dual, {{5, 0}}), SignatureError);
}

TEST_CASE("lowering then raising a spinor slot restores the field") {
  const auto eq = canonical_equipment<GR>();
  const SpinTensor<GR> lowered = raise_lower(eq.G, 1, eq.d);
  CHECK(lowered.signature()[1] == lo_spinor);
  const SpinTensor<GR> back = raise_lower(lowered, 1, eq.d_dual);
  CHECK(back == eq.G);

  const SpinTensor<GR> g_mixed = raise_lower(eq.g, 0, eq.g_dual);
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q)
      CHECK(g_mixed.at({p, q}) == (p == q ? GR(1) : GR(0)));

  CHECK_THROWS_AS(raise_lower(eq.G, 1, eq.dbar), SignatureError); // wrong family
  CHECK_THROWS_AS(raise_lower(eq.G, 1, eq.d_dual), SignatureError); // wrong variance
}

TEST_CASE("raising every slot of the volume form flips its sign") {
  const auto eq = canonical_equipment<GR>();
  SpinTensor<GR> raised = eq.omega;
  for (int slot = 0; slot < 4; ++slot) raised = raise_lower(raised, slot, eq.g_dual);
  CHECK(raised == eq.omega_dual);
  CHECK(raised == GR(-1) * epsilon_tensor<GR>(Variance::upper));
}

TEST_CASE("conjugation swaps spinor families and is an involution") {
  const auto eq = canonical_equipment<GR>();
  const SpinTensor<GR> c = conjugate(eq.G);
  CHECK(c.signature()[1] == up_conj);
  CHECK(c.signature()[2] == up_spinor);
  CHECK(conjugate(c) == eq.G);
  // Hermiticity, expressed through the algebra: swapping the conjugated
  // spinor pair reproduces the field.
  CHECK(permute(c, {0, 2, 1}) == eq.G);
}

TEST_CASE("permutation reorders slots") {
  const auto eq = canonical_equipment<GR>();
  const SpinTensor<GR> p = permute(eq.G, {1, 0, 2});
  CHECK(p.signature()[0] == up_spinor);
  CHECK(p.at({2, 1, 1}) == eq.G.at({1, 2, 1}));
  CHECK(permute(p, {1, 0, 2}) == eq.G);
  CHECK(permute(eq.G, {0, 1, 2}) == eq.G);
  CHECK_THROWS_AS(permute(eq.G, {0, 1, 1}), SignatureError);
  CHECK_THROWS_AS(permute(eq.G, {0, 1}), SignatureError);
}

TEST_CASE("epsilon tensor matches levi_civita entrywise") {
  const SpinTensor<GR> e = epsilon_tensor<GR>(Variance::lower);
  CHECK(e.at({0, 1, 2, 3}) == GR(1));
  CHECK(e.at({1, 0, 2, 3}) == GR(-1));
  CHECK(e.at({1, 1, 2, 3}) == GR(0));
  CHECK(e.signature()[0] == lo_spatial);
}
