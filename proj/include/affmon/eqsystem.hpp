#pragma once

#include "affmon/extnat.hpp"

#include <optional>
#include <vector>

namespace affmon {

inline constexpr std::size_t kDefaultPatternCap = 16;

/// A system of congruences D·t ∈ m·N0* and equalities E1·t = E2·t with
/// nonnegative integer coefficients, read over (N0*)^k.
///
/// Rows are stored as Eigen matrices with k columns; an empty block has zero
/// rows. Every modulus is at least 2.
class EqSystem {
 public:
  explicit EqSystem(std::size_t k = 0);
  EqSystem(std::size_t k, IntMatrix congruence_rows, IntVector moduli, IntMatrix lhs, IntMatrix rhs);

  std::size_t dimension() const { return k_; }
  const IntMatrix& congruence_rows() const { return congruence_rows_; }
  const IntVector& moduli() const { return moduli_; }
  const IntMatrix& lhs() const { return lhs_; }
  const IntMatrix& rhs() const { return rhs_; }
  std::size_t congruence_count() const { return static_cast<std::size_t>(congruence_rows_.rows()); }
  std::size_t equality_count() const { return static_cast<std::size_t>(lhs_.rows()); }
  bool empty() const { return congruence_count() == 0 && equality_count() == 0; }

  void add_congruence(const IntVector& coeffs, const Integer& modulus);
  void add_equality(const IntVector& lhs, const IntVector& rhs);

  friend bool operator==(const EqSystem& a, const EqSystem& b);

 private:
  void validate() const;

  std::size_t k_ = 0;
  IntMatrix congruence_rows_;
  IntVector moduli_;
  IntMatrix lhs_;
  IntMatrix rhs_;
};

/// Membership of x in the solution set over (N0*)^k.
bool member(const EqSystem& sys, const DimVector& x);

/// Index of the first violated constraint (congruences first, then
/// equalities, 0-based), or nullopt for members.
std::optional<std::size_t> first_violation(const EqSystem& sys, const DimVector& x);

/// Concatenation of both systems; the solution set is the intersection.
EqSystem intersect(const EqSystem& a, const EqSystem& b);

/// Identical rows are dropped (the solution set is unchanged).
EqSystem without_duplicate_rows(const EqSystem& sys);

/// The equality-only system over k + n unknowns obtained by turning every
/// congruence d·t ∈ m·N0* into d·t = m·t_{k+i}, together with the embedding
/// x ↦ (x, d_1·x / m_1, ...), where ∞/m = ∞.
struct SlackEmbedding {
  EqSystem equalities;
  IntMatrix congruence_rows;
  IntVector moduli;

  /// The image of x, or nullopt when some slack coordinate is not an integer
  /// (in which case x violates a congruence).
  std::optional<DimVector> operator()(const DimVector& x) const;
};

SlackEmbedding slack_embed(const EqSystem& sys);

/// Every I ⊆ {1..k} whose ∞-pattern vector is a solution, in lexicographic
/// order. These are exactly the supports (and infinite supports) realized by
/// solutions. Throws std::length_error when k exceeds `cap`.
std::vector<IndexSet> infinite_support_patterns(const EqSystem& sys, std::size_t cap = kDefaultPatternCap);

/// The system over the complementary coordinates {1..k}∖I whose N0-solutions
/// are the finite parts of solutions with infinite support I. Rows touching I
/// are deleted, then the I-columns. Throws if the pattern of I is not a
/// solution.
EqSystem subsystem_for_support(const EqSystem& sys, const IndexSet& pattern);

/// Reads a system over {1..k}∖I as a system over {1..k} that ignores the
/// coordinates in I.
EqSystem lift(const EqSystem& sys, const IndexSet& ignored, std::size_t k);

}  // namespace affmon
