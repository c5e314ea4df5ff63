#pragma once

#include <string>
#include <vector>

#include "spintensor/equipment.hpp"

namespace spintensor {

//! One counterexample: the relation number within the check (0 when the
//! check verifies a single relation), the free-index tuple, and both sides
//! rendered exactly.
struct IdentityFailure {
  int relation = 0;
  std::vector<int> indices;
  std::string lhs;
  std::string rhs;
};

//! Outcome of checking one identity over its full free-index range with
//! exact arithmetic. `formula` is the index-notation statement, so reports
//! are readable without the surrounding code.
struct IdentityReport {
  std::string id;
  std::string formula;
  long total_cases = 0;
  std::vector<IdentityFailure> failures;
  bool passed = false;
};

using ExactEquipment = Equipment<GaussianRational>;

//! Hermiticity of G and of its inverse: swapping the spinor slot pair and
//! conjugating reproduces the field. 16 + 16 cases.
IdentityReport check_hermiticity(const ExactEquipment& eq);

//! The two quadratic identities (orthogonality and completeness of the
//! field/inverse pair). 16 + 16 cases.
IdentityReport check_quadratic(const ExactEquipment& eq);

//! The cubic identity, enumerated in the order p, m, q, r, rbar. 256 cases.
//! The volume term's sign tracks the equipment orientation, so consistently
//! flipped left-handed equipment passes as well.
IdentityReport check_cubic(const ExactEquipment& eq);

//! The pair-product expansion obtained by contracting the cubic identity,
//! its symmetric and alternating parts, and the per-tuple reconstruction of
//! the expansion from the two parts. Four reports of 256 cases each.
std::vector<IdentityReport> check_derived(const ExactEquipment& eq);

//! Five contraction identities tying partially raised/lowered forms of G to
//! the corresponding forms of its inverse. Five reports of 16 cases each.
std::vector<IdentityReport> check_aux_contractions(const ExactEquipment& eq);

//! Everything above in a fixed order: hermiticity, quadratic, cubic, the
//! four derived reports, the five contraction reports.
std::vector<IdentityReport> run_canonical_suite(const ExactEquipment& eq);

} // namespace spintensor
