#pragma once

#include <string>
#include <vector>

#include "spintensor/errors.hpp"

namespace spintensor {

//! The three index families. Spatial indices run 0..3; spinor and
//! conjugate-spinor indices run 1..2 (the conventional enumeration, kept
//! as-is so code reads like the formulas).
enum class IndexFamily : unsigned char { spatial, spinor, conj_spinor };

enum class Variance : unsigned char { upper, lower };

struct IndexKind {
  IndexFamily family;
  Variance variance;
  friend bool operator==(IndexKind a, IndexKind b) {
    return a.family == b.family && a.variance == b.variance;
  }
};

constexpr int index_range(IndexFamily f) {
  return f == IndexFamily::spatial ? 4 : 2;
}
constexpr int index_origin(IndexFamily f) {
  return f == IndexFamily::spatial ? 0 : 1;
}

inline constexpr IndexKind up_spatial{IndexFamily::spatial, Variance::upper};
inline constexpr IndexKind lo_spatial{IndexFamily::spatial, Variance::lower};
inline constexpr IndexKind up_spinor{IndexFamily::spinor, Variance::upper};
inline constexpr IndexKind lo_spinor{IndexFamily::spinor, Variance::lower};
inline constexpr IndexKind up_conj{IndexFamily::conj_spinor, Variance::upper};
inline constexpr IndexKind lo_conj{IndexFamily::conj_spinor, Variance::lower};

using Signature = std::vector<IndexKind>;

inline std::string kind_str(IndexKind k) {
  std::string s = k.variance == Variance::upper ? "up_" : "lo_";
  switch (k.family) {
    case IndexFamily::spatial: return s + "spatial";
    case IndexFamily::spinor: return s + "spinor";
    default: return s + "conj";
  }
}

//! Advances a multi-index over the domain values of `sig` in row-major
//! order; returns false after the last tuple.
inline bool next_tuple(const Signature& sig, std::vector<int>& idx) {
  for (int slot = int(sig.size()) - 1; slot >= 0; --slot) {
    const int lo = index_origin(sig[slot].family);
    const int hi = lo + index_range(sig[slot].family) - 1;
    if (idx[slot] < hi) {
      ++idx[slot];
      return true;
    }
    idx[slot] = lo;
  }
  return false;
}

inline std::vector<int> first_tuple(const Signature& sig) {
  std::vector<int> idx(sig.size());
  for (std::size_t s = 0; s < sig.size(); ++s) idx[s] = index_origin(sig[s].family);
  return idx;
}

} // namespace spintensor
