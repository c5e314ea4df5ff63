#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "spintensor/indices.hpp"
#include "spintensor/scalar.hpp"

namespace spintensor {

//! Permutation sign of four spatial indices: +1/-1 for even/odd
//! permutations of (0,1,2,3), 0 on a repeated index.
inline int levi_civita(int a, int m, int b, int n) {
  const int v[4] = {a, m, b, n};
  for (int k = 0; k < 4; ++k)
    if (v[k] < 0 || v[k] > 3) throw SignatureError("levi_civita index out of range");
  int sign = 1;
  for (int p = 0; p < 4; ++p)
    for (int q = p + 1; q < 4; ++q) {
      if (v[p] == v[q]) return 0;
      if (v[p] > v[q]) sign = -sign;
    }
  return sign;
}

//! Dense row-major container with a typed index signature. Entries are
//! addressed by domain values (0..3 spatial, 1..2 spinor families).
template <class S>
class SpinTensor {
public:
  SpinTensor() = default;
  explicit SpinTensor(Signature sig) : sig_(std::move(sig)) {
    std::size_t n = 1;
    for (const IndexKind& k : sig_) n *= std::size_t(index_range(k.family));
    data_.assign(n, scalar_traits<S>::zero());
  }

  const Signature& signature() const { return sig_; }
  int rank() const { return int(sig_.size()); }
  std::size_t size() const { return data_.size(); }

  S& at(const std::vector<int>& idx) { return data_[flat(idx)]; }
  const S& at(const std::vector<int>& idx) const { return data_[flat(idx)]; }
  S& at(std::initializer_list<int> idx) { return data_[flat(std::vector<int>(idx))]; }
  const S& at(std::initializer_list<int> idx) const {
    return data_[flat(std::vector<int>(idx))];
  }

  friend bool operator==(const SpinTensor& a, const SpinTensor& b) {
    if (!(a.sig_ == b.sig_)) return false;
    for (std::size_t k = 0; k < a.data_.size(); ++k)
      if (!scalar_traits<S>::equal(a.data_[k], b.data_[k])) return false;
    return true;
  }
  friend bool operator!=(const SpinTensor& a, const SpinTensor& b) { return !(a == b); }

  friend SpinTensor operator+(const SpinTensor& a, const SpinTensor& b) {
    if (!(a.sig_ == b.sig_)) throw SignatureError("tensor sum: signatures differ");
    SpinTensor r = a;
    for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] = r.data_[k] + b.data_[k];
    return r;
  }
  friend SpinTensor operator-(const SpinTensor& a, const SpinTensor& b) {
    if (!(a.sig_ == b.sig_)) throw SignatureError("tensor difference: signatures differ");
    SpinTensor r = a;
    for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] = r.data_[k] - b.data_[k];
    return r;
  }
  friend SpinTensor operator*(const S& c, const SpinTensor& t) {
    SpinTensor r = t;
    for (S& x : r.data_) x = c * x;
    return r;
  }

private:
  std::size_t flat(const std::vector<int>& idx) const {
    if (idx.size() != sig_.size())
      throw SignatureError("index tuple rank mismatch");
    std::size_t f = 0;
    for (std::size_t s = 0; s < sig_.size(); ++s) {
      const int lo = index_origin(sig_[s].family);
      const int n = index_range(sig_[s].family);
      const int v = idx[s] - lo;
      if (v < 0 || v >= n)
        throw SignatureError("index value " + std::to_string(idx[s]) +
                             " out of range for slot " + std::to_string(s) +
                             " (" + kind_str(sig_[s]) + ")");
      f = f * std::size_t(n) + std::size_t(v);
    }
    return f;
  }

  Signature sig_;
  std::vector<S> data_;
};

//! Pairwise contraction of `a` against `b`. Each pair names a slot of `a`
//! and a slot of `b`; the slots must share a family and have opposite
//! variance. Unpaired slots of `a` followed by unpaired slots of `b` form
//! the result signature.
template <class S>
SpinTensor<S> contract(const SpinTensor<S>& a, const SpinTensor<S>& b,
                       const std::vector<std::pair<int, int>>& pairs) {
  std::vector<bool> used_a(a.rank(), false), used_b(b.rank(), false);
  for (auto [sa, sb] : pairs) {
    if (sa < 0 || sa >= a.rank() || sb < 0 || sb >= b.rank())
      throw SignatureError("contract: slot out of range");
    if (used_a[sa] || used_b[sb]) throw SignatureError("contract: slot used twice");
    const IndexKind ka = a.signature()[sa], kb = b.signature()[sb];
    if (ka.family != kb.family || ka.variance == kb.variance)
      throw SignatureError("contract: slots " + kind_str(ka) + " vs " + kind_str(kb) +
                           " are not a dual pair");
    used_a[sa] = used_b[sb] = true;
  }

  Signature rsig;
  std::vector<int> free_a, free_b;
  for (int s = 0; s < a.rank(); ++s)
    if (!used_a[s]) { rsig.push_back(a.signature()[s]); free_a.push_back(s); }
  for (int s = 0; s < b.rank(); ++s)
    if (!used_b[s]) { rsig.push_back(b.signature()[s]); free_b.push_back(s); }

  Signature paired_sig;
  for (auto [sa, sb] : pairs) paired_sig.push_back(a.signature()[sa]);

  SpinTensor<S> r(rsig);
  std::vector<int> ridx = first_tuple(rsig);
  if (r.size() == 0) return r;
  do {
    std::vector<int> ia(a.rank()), ib(b.rank());
    for (std::size_t k = 0; k < free_a.size(); ++k) ia[free_a[k]] = ridx[k];
    for (std::size_t k = 0; k < free_b.size(); ++k) ib[free_b[k]] = ridx[free_a.size() + k];
    S acc = scalar_traits<S>::zero();
    std::vector<int> pidx = first_tuple(paired_sig);
    do {
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        ia[pairs[k].first] = pidx[k];
        ib[pairs[k].second] = pidx[k];
      }
      acc = acc + a.at(ia) * b.at(ib);
    } while (!paired_sig.empty() && next_tuple(paired_sig, pidx));
    r.at(ridx) = acc;
  } while (next_tuple(rsig, ridx));
  return r;
}

//! Moves one slot across the family's metric: result[..., j, ...] =
//! sum_s t[..., s, ...] * metric[s, j]. The metric must be a rank-2 tensor
//! of the slot's family with both slots of the variance opposite to the
//! slot being moved; the summed metric slot is the first one, matching the
//! lowering convention used throughout.
template <class S>
SpinTensor<S> raise_lower(const SpinTensor<S>& t, int slot, const SpinTensor<S>& metric) {
  if (slot < 0 || slot >= t.rank()) throw SignatureError("raise_lower: slot out of range");
  if (metric.rank() != 2) throw SignatureError("raise_lower: metric must have rank 2");
  const IndexKind km0 = metric.signature()[0], km1 = metric.signature()[1];
  const IndexKind ks = t.signature()[slot];
  if (!(km0 == km1)) throw SignatureError("raise_lower: metric slots differ");
  if (km0.family != ks.family || km0.variance == ks.variance)
    throw SignatureError("raise_lower: metric does not move slot " + kind_str(ks));

  Signature rsig = t.signature();
  rsig[slot] = km0;
  SpinTensor<S> r(rsig);
  std::vector<int> ridx = first_tuple(rsig);
  const int lo = index_origin(ks.family), n = index_range(ks.family);
  do {
    S acc = scalar_traits<S>::zero();
    std::vector<int> tidx = ridx;
    for (int v = lo; v < lo + n; ++v) {
      tidx[slot] = v;
      acc = acc + t.at(tidx) * metric.at({v, ridx[slot]});
    }
    r.at(ridx) = acc;
  } while (next_tuple(rsig, ridx));
  return r;
}

//! Complex conjugation: swaps the spinor and conjugate-spinor families in
//! place (variance and slot order kept) and conjugates every entry.
template <class S>
SpinTensor<S> conjugate(const SpinTensor<S>& t) {
  Signature rsig = t.signature();
  for (IndexKind& k : rsig) {
    if (k.family == IndexFamily::spinor) k.family = IndexFamily::conj_spinor;
    else if (k.family == IndexFamily::conj_spinor) k.family = IndexFamily::spinor;
  }
  SpinTensor<S> r(rsig);
  if (r.size() == 0) return r;
  std::vector<int> idx = first_tuple(rsig);
  do {
    r.at(idx) = scalar_traits<S>::conj(t.at(idx));
  } while (next_tuple(rsig, idx));
  return r;
}

//! Slot reordering: result slot k is original slot perm[k].
template <class S>
SpinTensor<S> permute(const SpinTensor<S>& t, const std::vector<int>& perm) {
  if (int(perm.size()) != t.rank()) throw SignatureError("permute: wrong permutation size");
  std::vector<bool> seen(perm.size(), false);
  for (int p : perm) {
    if (p < 0 || p >= t.rank() || seen[p]) throw SignatureError("permute: not a permutation");
    seen[p] = true;
  }
  Signature rsig(perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) rsig[k] = t.signature()[perm[k]];
  SpinTensor<S> r(rsig);
  if (r.size() == 0) return r;
  std::vector<int> ridx = first_tuple(rsig);
  do {
    std::vector<int> tidx(perm.size());
    for (std::size_t k = 0; k < perm.size(); ++k) tidx[perm[k]] = ridx[k];
    r.at(ridx) = t.at(tidx);
  } while (next_tuple(rsig, ridx));
  return r;
}

//! The rank-4 spatial permutation tensor with all slots of one variance.
template <class S>
SpinTensor<S> epsilon_tensor(Variance v) {
  const IndexKind k{IndexFamily::spatial, v};
  SpinTensor<S> e(Signature{k, k, k, k});
  for (int a = 0; a < 4; ++a)
    for (int m = 0; m < 4; ++m)
      for (int b = 0; b < 4; ++b)
        for (int n = 0; n < 4; ++n)
          e.at({a, m, b, n}) = scalar_traits<S>::from_int(levi_civita(a, m, b, n));
  return e;
}

} // namespace spintensor
