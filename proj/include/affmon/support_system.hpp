#pragma once

#include "affmon/fullaffine.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace affmon {

/// A family of infinite-support patterns with one full affine monoid per
/// pattern, living on the complementary coordinates.
struct SupportSystem {
  std::size_t k = 0;
  IntVector unit;
  std::vector<IndexSet> supports;  ///< kept sorted
  std::map<IndexSet, FullAffineMonoid> monoids;

  /// A_I; the pattern {1..k} maps to the trivial monoid when not stored.
  const FullAffineMonoid& monoid(const IndexSet& pattern) const;
  bool has_support(const IndexSet& pattern) const;
};

struct Violation {
  int condition;  ///< 1..4
  std::string detail;
  std::string witness;
};

/// Empty iff the system is well formed. Dimension problems (condition 2) stop
/// the remaining checks.
std::vector<Violation> validate(const SupportSystem& ss, unsigned box_bound = 3);

bool member_MS(const SupportSystem& ss, const DimVector& x);

/// Coordinates of `s` after deleting `removed` (s and removed disjoint).
IndexSet reindex_outside(const IndexSet& s, const IndexSet& removed);
/// Inverse of reindex_outside on {1..k}∖removed.
IndexSet lift_index_set(const IndexSet& s, const IndexSet& removed, std::size_t k);

/// The system seen from pattern I, over the coordinates outside I.
SupportSystem derived_ss(const SupportSystem& ss, const IndexSet& pattern);

/// Minimal nonempty members of the family, lexicographic.
std::vector<IndexSet> minimal_supports(const SupportSystem& ss);

SupportSystem eq_to_ss(const EqSystem& sys, const IntVector& unit);

/// Adjoins to sysA the solutions that are ∞ on all of I, and restricts the
/// remaining coordinates to sysB.
EqSystem hide(const EqSystem& sys_a, const IntVector& unit, const IndexSet& hidden, const EqSystem& sys_b);

/// Equations whose solution set is M(𝒮). Throws std::invalid_argument when
/// validation fails or a cyclic base case has a lattice of rank other than 1.
EqSystem ss_to_eq(const SupportSystem& ss);

}  // namespace affmon
