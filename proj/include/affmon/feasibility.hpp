#pragma once

// Exact rational feasibility. Two independent engines: a phase-one simplex
// with Bland's rule, and Fourier–Motzkin elimination. No floating point.

#include "affmon/scalar.hpp"

#include <optional>
#include <vector>

namespace affmon {

/// x ≥ 0 with a·x = b, or nullopt when no such x exists.
std::optional<RatVector> nonnegative_solution(const RatMatrix& a, const RatVector& b);

enum class Bound { Free, NonNegative, AtLeastOne, Zero };

/// Equality constraints over variables with simple bounds.
struct LinearSystem {
  RatMatrix equalities;  ///< rows × variables
  RatVector rhs;
  std::vector<Bound> bounds;  ///< one per variable

  explicit LinearSystem(Eigen::Index variables);
  void add_equality(const RatVector& row, const Rational& value);
};

/// A feasible point of the system, found by the simplex engine.
std::optional<RatVector> find_feasible_point(const LinearSystem& system);

/// Feasibility of { x : eq·x = eq_rhs, le·x ≤ le_rhs } by substitution of the
/// equalities followed by Fourier–Motzkin elimination.
bool fourier_motzkin_feasible(const RatMatrix& eq, const RatVector& eq_rhs, const RatMatrix& le,
                              const RatVector& le_rhs);

}  // namespace affmon
