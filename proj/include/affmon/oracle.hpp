#pragma once

// Brute-force ground truth over finite boxes.

#include "affmon/eqsystem.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace affmon {

using Predicate = std::function<bool(const DimVector&)>;

/// ({0..bound} ∪ {∞})^k, or {0..bound}^k without infinity. Lexicographic,
/// ∞ last.
struct Box {
  std::size_t k = 0;
  unsigned bound = 5;
  bool include_infinity = true;

  std::size_t size() const;
  bool contains(const DimVector& x) const;
  std::string to_string() const;
};

std::vector<DimVector> box_points(const Box& box);

/// Members of the box accepted by `pred`, in box order. Evaluated in parallel.
std::vector<DimVector> enumerate_box(const Predicate& pred, const Box& box);

struct AxiomViolation {
  std::string axiom;  ///< "zero", "closure", "M1", "M2"
  DimVector witness;
  std::optional<DimVector> other;  ///< second summand for closure failures
};

struct AxiomReport {
  Box box;
  std::vector<AxiomViolation> violations;
  bool passed() const { return violations.empty(); }
};

AxiomReport check_monoid_axioms(const std::vector<DimVector>& members, const Box& box);

/// First box point where the predicates disagree.
std::optional<DimVector> equal_on_box(const Predicate& a, const Predicate& b, const Box& box);

struct FullnessWitness {
  DimVector a;
  DimVector t;
};

/// a ∈ members, t in the finite box outside members, with a + t ∈ members.
/// Infinite members are ignored.
std::optional<FullnessWitness> fullness_check(const std::vector<DimVector>& members, const Box& box);

/// Nonzero members with no smaller nonzero member below them.
std::vector<DimVector> minimal_members(const std::vector<DimVector>& members, const Box& box);

struct FixtureEntry {
  std::string name;
  std::size_t k = 0;
  Predicate predicate;
  std::string citation;
  bool full = true;
  std::optional<EqSystem> system;  ///< set when equation-definable
  IntVector unit;
};

/// Known fixtures; parameterized ones use `n` (at least 2).
FixtureEntry builtin(const std::string& name, unsigned n = 2);

struct FixtureInfo {
  std::string name;
  bool parameterized;
};
std::vector<FixtureInfo> builtin_names();

}  // namespace affmon
