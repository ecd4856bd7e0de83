#pragma once

#include "affmon/eqsystem.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace affmon {

/// A subgroup of Z^k, stored as its row-style Hermite normal form. Two
/// lattices are equal exactly when their stored bases are equal.
class LatticeBasis {
 public:
  explicit LatticeBasis(std::size_t k = 0);
  /// Generators are the rows of `generators`.
  LatticeBasis(std::size_t k, const IntMatrix& generators);

  std::size_t dimension() const { return k_; }
  Eigen::Index rank() const { return rows_.rows(); }
  const IntMatrix& rows() const { return rows_; }

  bool contains(const IntVector& v) const;
  /// Sublattice test: every basis row of `other` lies in this lattice.
  bool contains(const LatticeBasis& other) const;

  friend bool operator==(const LatticeBasis& a, const LatticeBasis& b) {
    return a.k_ == b.k_ && a.rows_ == b.rows_;
  }

 private:
  std::size_t k_;
  IntMatrix rows_;
  std::vector<Eigen::Index> pivots_;
};

LatticeBasis lattice_from_generators(std::size_t k, const std::vector<IntVector>& generators);

/// Image under the coordinate projection that deletes `removed`.
LatticeBasis project_out(const LatticeBasis& lattice, const IndexSet& removed);

/// L ∩ { x : x_j = 0 for j outside `kept` }.
LatticeBasis restrict_to_coordinates(const LatticeBasis& lattice, const IndexSet& kept);

/// { x ∈ Z^k : D·x ≡ 0 (mod m), E1·x = E2·x }. Its intersection with N0^k is
/// the set of N0-solutions of the system.
LatticeBasis solution_lattice(const EqSystem& sys);

/// Structure of L inside its saturation L' = span(L) ∩ Z^k.
struct LatticeStructure {
  IntMatrix orthogonal;          ///< primitive integer rows spanning span(L)^⊥
  IntMatrix saturation;          ///< rows v_1..v_r, a basis of L'
  std::vector<Integer> invariant_factors;  ///< d_1 | ... | d_r, L has basis d_i v_i
  IntMatrix coordinate_functionals;        ///< rows w_i with w_i·v_j = δ_ij
  /// d_r, the exponent of L'/L: every x ∈ L' has d_r·x ∈ L.
  Integer saturation_factor() const;
};

LatticeStructure lattice_structure(const LatticeBasis& lattice);

/// Equalities from span(L)^⊥ (split into disjoint positive and negative
/// parts) plus one congruence per invariant factor above one. The
/// N0^k-solutions are exactly L ∩ N0^k; nothing is claimed at ∞.
EqSystem defining_system(const LatticeBasis& lattice);

/// span(V) ∩ N0^d = {0}, decided by the simplex engine. Rows of `v` span V.
bool positive_kernel_trivial(const RatMatrix& v, std::size_t d);

/// V^⊥ contains a vector with all entries ≥ 1, decided by Fourier–Motzkin.
/// Equivalent to positive_kernel_trivial by the theorem of alternatives.
bool has_strictly_positive_orthogonal(const RatMatrix& v, std::size_t d);

/// The full affine monoid A = L ∩ N0^k.
///
/// On construction the lattice is replaced by the subgroup generated by A,
/// namely L ∩ Z^S for the largest support S of A. The stored lattice is
/// therefore canonical for A.
class FullAffineMonoid {
 public:
  explicit FullAffineMonoid(const LatticeBasis& lattice);
  static FullAffineMonoid from_generators(std::size_t k, const std::vector<IntVector>& generators);

  std::size_t dimension() const { return lattice_.dimension(); }
  const LatticeBasis& lattice() const { return lattice_; }
  const LatticeStructure& structure() const { return structure_; }
  const EqSystem& defining_system() const { return defining_; }
  /// Integer rows spanning A^⊥.
  const IntMatrix& orthogonal_basis() const { return structure_.orthogonal; }

  bool contains(const IntVector& v) const;
  bool contains(const DimVector& v) const;

  /// Supports of elements of A, lexicographic, ∅ first. Cached.
  const std::vector<IndexSet>& supports() const;

  friend bool operator==(const FullAffineMonoid& a, const FullAffineMonoid& b) {
    return a.lattice_ == b.lattice_;
  }

 private:
  struct Cache {
    std::mutex mutex;
    std::optional<std::vector<IndexSet>> supports;
  };

  LatticeBasis lattice_;
  LatticeStructure structure_;
  EqSystem defining_;
  std::shared_ptr<Cache> cache_;
};

/// Supports realized by elements of A (∅ included), via exact feasibility of
/// { x ∈ span(A) : x_j = 0 off I, x_i ≥ 1 on I }.
std::vector<IndexSet> support_set(const FullAffineMonoid& monoid, std::size_t cap = kDefaultPatternCap);

/// An element of A whose support is exactly I, if one exists.
std::optional<IntVector> support_witness(const FullAffineMonoid& monoid, const IndexSet& support);

/// Nonempty I such that every π_I(v) is zero or has entries of both signs.
std::vector<IndexSet> mixed_sign_family(const std::vector<IntVector>& vectors, std::size_t k,
                                        std::size_t cap = kDefaultPatternCap);

/// Extends `seed` ⊆ A^⊥ to a spanning family of A^⊥ whose mixed-sign family
/// equals Supp(A∖{0}). Offending supports are removed greedily in
/// lexicographic order; the seed is kept as a prefix of the result.
std::vector<IntVector> minimal_orthogonal_family(const FullAffineMonoid& monoid, std::vector<IntVector> seed);

/// p_I(A) as a full affine monoid over the remaining coordinates. I must be
/// the support of an element of A.
FullAffineMonoid project_out(const FullAffineMonoid& monoid, const IndexSet& removed);

/// A system whose N0-solutions are A and whose realized ∞-patterns are
/// exactly the supports of A.
EqSystem fas_step_one(const FullAffineMonoid& monoid);

/// A system whose (N0*)^k-solutions are exactly A + ∞·A.
EqSystem fas_system(const FullAffineMonoid& monoid);

}  // namespace affmon
