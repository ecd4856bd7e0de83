#pragma once

// Pullback trees whose induced monoid is computed compositionally.

#include "affmon/eqsystem.hpp"

#include <memory>
#include <string>
#include <vector>

namespace affmon {

struct RealizationPlan;
using PlanPtr = std::shared_ptr<const RealizationPlan>;

struct RealizationPlan {
  enum class Kind { FreeCyclic, FreeDiagonal, Semisimple, Pullback };

  Kind kind = Kind::Semisimple;
  std::size_t k = 0;  ///< ambient dimension
  IntVector unit;     ///< order unit in the induced monoid
  Integer modulus;    ///< FreeCyclic: the leaf monoid is modulus·N0*
  IntMatrix inducing; ///< Pullback: bottom dimension -> top dimension
  PlanPtr top, bottom;
  // block multiplicities of the gluing maps; empty for plain intersections
  IntVector a, b;
  Integer ell;
};

PlanPtr free_cyclic_leaf(const Integer& m, const Integer& unit);
PlanPtr free_diagonal_leaf(const Integer& unit);
PlanPtr semisimple_leaf(const IntVector& unit);
/// Checks that `inducing` has matching shape and sends the bottom unit into
/// the top monoid.
PlanPtr pullback(PlanPtr top, IntMatrix inducing, PlanPtr bottom);
/// Both plans over the same ambient space with the same unit.
PlanPtr intersect_plans(const PlanPtr& bottom, const PlanPtr& top);

PlanPtr plan_congruence(const IntVector& a, const Integer& m, const IntVector& unit);
PlanPtr plan_equation(const IntVector& a, const IntVector& b, const IntVector& unit);
PlanPtr plan_system(const EqSystem& sys, const IntVector& unit);

bool evaluate_plan(const RealizationPlan& plan, const DimVector& x);

/// Indented construction script, one line per entry.
std::vector<std::string> describe_plan(const RealizationPlan& plan);

std::size_t plan_node_count(const RealizationPlan& plan);

}  // namespace affmon
