#include "affmon/fullaffine.hpp"

#include "affmon/feasibility.hpp"
#include "affmon/normal_forms.hpp"

#include <algorithm>
#include <stdexcept>

namespace affmon {

namespace {

RatMatrix to_rational(const IntMatrix& m) { return m.cast<Rational>(); }

void check_cap(std::size_t k, std::size_t cap, const char* what) {
  if (k > cap || k >= 8 * sizeof(unsigned long))
    throw std::length_error(std::string(what) + ": k = " + std::to_string(k) + " exceeds the cap of " +
                            std::to_string(cap));
}

/// A point of { x : orth·x = 0, x_j = 0 off I, x_i ≥ 1 on I }.
std::optional<RatVector> cone_point(const IntMatrix& orth, std::size_t k, const IndexSet& support) {
  LinearSystem sys(static_cast<Eigen::Index>(k));
  for (Eigen::Index i = 0; i < orth.rows(); ++i) sys.add_equality(orth.row(i).transpose().cast<Rational>(), 0);
  for (std::size_t j = 0; j < k; ++j) sys.bounds[j] = contains(support, j) ? Bound::AtLeastOne : Bound::Zero;
  return find_feasible_point(sys);
}

IntMatrix stack_rows(const std::vector<IntVector>& rows, std::size_t k) {
  IntMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(k));
  for (std::size_t i = 0; i < rows.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
  return m;
}

IntMatrix inverse_unimodular(const IntMatrix& q) {
  const Eigen::Index n = q.rows();
  RatMatrix aug(n, 2 * n);
  aug << to_rational(q), RatMatrix::Identity(n, n);
  reduce_row_echelon(aug);
  IntMatrix inv(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      const Rational& x = aug(i, n + j);
      if (denominator(x) != 1) throw std::logic_error("inverse_unimodular: not unimodular");
      inv(i, j) = numerator(x);
    }
  return inv;
}

void add_split_equality(EqSystem& sys, const IntVector& v) {
  IntVector pos = v, neg = v;
  for (Eigen::Index j = 0; j < v.size(); ++j) {
    pos(j) = v(j) > 0 ? v(j) : Integer(0);
    neg(j) = v(j) < 0 ? Integer(-v(j)) : Integer(0);
  }
  sys.add_equality(pos, neg);
}

}  // namespace

LatticeBasis::LatticeBasis(std::size_t k) : k_(k), rows_(0, static_cast<Eigen::Index>(k)) {}

LatticeBasis::LatticeBasis(std::size_t k, const IntMatrix& generators) : LatticeBasis(k) {
  if (generators.rows() == 0) return;
  require_same_size(k, static_cast<std::size_t>(generators.cols()), "LatticeBasis");
  auto dec = hermite_decompose(generators);
  rows_ = dec.form.topRows(dec.rank);
  pivots_ = std::move(dec.pivot_columns);
}

bool LatticeBasis::contains(const IntVector& v) const {
  require_same_size(k_, static_cast<std::size_t>(v.size()), "LatticeBasis::contains");
  IntVector rest = v;
  for (Eigen::Index p = 0; p < rows_.rows(); ++p) {
    const Eigen::Index c = pivots_[static_cast<std::size_t>(p)];
    if (rest(c) % rows_(p, c) != 0) return false;
    const Integer q = rest(c) / rows_(p, c);
    if (q != 0) rest -= q * rows_.row(p).transpose();
  }
  for (Eigen::Index j = 0; j < rest.size(); ++j)
    if (rest(j) != 0) return false;
  return true;
}

bool LatticeBasis::contains(const LatticeBasis& other) const {
  if (other.k_ != k_) return false;
  for (Eigen::Index i = 0; i < other.rows_.rows(); ++i)
    if (!contains(IntVector(other.rows_.row(i).transpose()))) return false;
  return true;
}

LatticeBasis lattice_from_generators(std::size_t k, const std::vector<IntVector>& generators) {
  for (const auto& g : generators) require_same_size(k, static_cast<std::size_t>(g.size()), "lattice generator");
  return LatticeBasis(k, stack_rows(generators, k));
}

LatticeBasis project_out(const LatticeBasis& lattice, const IndexSet& removed) {
  return LatticeBasis(lattice.dimension() - removed.size(), drop_columns(lattice.rows(), removed));
}

LatticeBasis restrict_to_coordinates(const LatticeBasis& lattice, const IndexSet& kept) {
  const auto outside = complement(kept, lattice.dimension());
  if (outside.empty() || lattice.rank() == 0) return lattice;
  IntMatrix off(lattice.rank(), static_cast<Eigen::Index>(outside.size()));
  for (std::size_t j = 0; j < outside.size(); ++j)
    off.col(static_cast<Eigen::Index>(j)) = lattice.rows().col(static_cast<Eigen::Index>(outside[j]));
  const IntMatrix combos = left_integer_kernel(off);
  return LatticeBasis(lattice.dimension(), IntMatrix(combos * lattice.rows()));
}

LatticeBasis solution_lattice(const EqSystem& sys) {
  const auto k = static_cast<Eigen::Index>(sys.dimension());
  const auto n = static_cast<Eigen::Index>(sys.congruence_count());
  const auto l = static_cast<Eigen::Index>(sys.equality_count());
  if (k == 0) return LatticeBasis(0);
  // x ∈ Z^k, y ∈ Z^n with D·x - diag(m)·y = 0 and (E1 - E2)·x = 0
  IntMatrix big = IntMatrix::Zero(n + l, k + n);
  for (Eigen::Index i = 0; i < n; ++i) {
    big.row(i).head(k) = sys.congruence_rows().row(i);
    big(i, k + i) = -sys.moduli()(i);
  }
  for (Eigen::Index i = 0; i < l; ++i) big.row(n + i).head(k) = sys.lhs().row(i) - sys.rhs().row(i);
  const IntMatrix kernel = integer_kernel(big);
  return LatticeBasis(sys.dimension(), IntMatrix(kernel.leftCols(k)));
}

Integer LatticeStructure::saturation_factor() const {
  return invariant_factors.empty() ? Integer(1) : invariant_factors.back();
}

LatticeStructure lattice_structure(const LatticeBasis& lattice) {
  LatticeStructure s;
  const auto k = static_cast<Eigen::Index>(lattice.dimension());
  const Eigen::Index r = lattice.rank();
  const RatMatrix orth = nullspace(to_rational(lattice.rows()));
  s.orthogonal.resize(orth.rows(), k);
  for (Eigen::Index i = 0; i < orth.rows(); ++i)
    s.orthogonal.row(i) = clear_denominators(RatVector(orth.row(i).transpose())).transpose();

  if (r == 0) {
    s.saturation.resize(0, k);
    s.coordinate_functionals.resize(0, k);
    return s;
  }
  auto snf = smith_decompose(lattice.rows());
  s.invariant_factors = snf.invariant_factors;
  const IntMatrix q_inv = inverse_unimodular(snf.right);
  s.saturation = q_inv.topRows(r);
  s.coordinate_functionals = snf.right.leftCols(r).transpose();
  return s;
}

EqSystem defining_system(const LatticeBasis& lattice) {
  const LatticeStructure s = lattice_structure(lattice);
  EqSystem sys(lattice.dimension());
  for (std::size_t i = 0; i < s.invariant_factors.size(); ++i) {
    const Integer& d = s.invariant_factors[i];
    if (d <= 1) continue;
    IntVector row = s.coordinate_functionals.row(static_cast<Eigen::Index>(i)).transpose();
    for (Eigen::Index j = 0; j < row.size(); ++j) row(j) = mod_floor(row(j), d);
    sys.add_congruence(row, d);
  }
  for (Eigen::Index i = 0; i < s.orthogonal.rows(); ++i)
    add_split_equality(sys, IntVector(s.orthogonal.row(i).transpose()));
  return sys;
}

bool positive_kernel_trivial(const RatMatrix& v, std::size_t d) {
  const auto dim = static_cast<Eigen::Index>(d);
  if (v.rows() > 0 && v.cols() != dim) throw std::invalid_argument("positive_kernel_trivial: row size");
  const RatMatrix spanning = v.rows() > 0 ? v : RatMatrix(0, dim);
  const RatMatrix perp = nullspace(spanning);
  LinearSystem sys(dim);
  for (Eigen::Index i = 0; i < perp.rows(); ++i) sys.add_equality(perp.row(i).transpose(), 0);
  sys.add_equality(RatVector::Ones(dim), 1);
  for (auto& b : sys.bounds) b = Bound::NonNegative;
  return !find_feasible_point(sys).has_value();
}

bool has_strictly_positive_orthogonal(const RatMatrix& v, std::size_t d) {
  const auto dim = static_cast<Eigen::Index>(d);
  if (v.rows() > 0 && v.cols() != dim) throw std::invalid_argument("has_strictly_positive_orthogonal: row size");
  const RatMatrix eq = v.rows() > 0 ? v : RatMatrix(0, dim);
  return fourier_motzkin_feasible(eq, RatVector::Zero(eq.rows()), -RatMatrix::Identity(dim, dim),
                                  -RatVector::Ones(dim));
}

FullAffineMonoid::FullAffineMonoid(const LatticeBasis& lattice)
    : lattice_(lattice.dimension()), defining_(lattice.dimension()), cache_(std::make_shared<Cache>()) {
  const std::size_t k = lattice.dimension();
  const LatticeStructure raw = lattice_structure(lattice);
  IndexSet largest;
  for (std::size_t i = 0; i < k; ++i) {
    LinearSystem sys(static_cast<Eigen::Index>(k));
    for (Eigen::Index r = 0; r < raw.orthogonal.rows(); ++r)
      sys.add_equality(raw.orthogonal.row(r).transpose().cast<Rational>(), 0);
    for (std::size_t j = 0; j < k; ++j) sys.bounds[j] = j == i ? Bound::AtLeastOne : Bound::NonNegative;
    if (find_feasible_point(sys)) largest.push_back(i);
  }
  lattice_ = restrict_to_coordinates(lattice, largest);
  structure_ = lattice_structure(lattice_);
  defining_ = affmon::defining_system(lattice_);
}

FullAffineMonoid FullAffineMonoid::from_generators(std::size_t k, const std::vector<IntVector>& generators) {
  return FullAffineMonoid(lattice_from_generators(k, generators));
}

bool FullAffineMonoid::contains(const IntVector& v) const {
  for (Eigen::Index j = 0; j < v.size(); ++j)
    if (v(j) < 0) return false;
  return lattice_.contains(v);
}

bool FullAffineMonoid::contains(const DimVector& v) const {
  require_same_size(dimension(), v.size(), "FullAffineMonoid::contains");
  return v.is_finite() && contains(v.to_integers());
}

const std::vector<IndexSet>& FullAffineMonoid::supports() const {
  std::lock_guard lock(cache_->mutex);
  if (!cache_->supports) cache_->supports = support_set(*this);
  return *cache_->supports;
}

std::vector<IndexSet> support_set(const FullAffineMonoid& monoid, std::size_t cap) {
  const std::size_t k = monoid.dimension();
  check_cap(k, cap, "support_set");
  std::vector<IndexSet> out{IndexSet{}};
  for (unsigned long mask = 1; mask < (1UL << k); ++mask) {
    IndexSet s = index_set_from_mask(mask, k);
    if (cone_point(monoid.orthogonal_basis(), k, s)) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<IntVector> support_witness(const FullAffineMonoid& monoid, const IndexSet& support) {
  const std::size_t k = monoid.dimension();
  if (support.empty()) return IntVector(IntVector::Zero(static_cast<Eigen::Index>(k)));
  auto point = cone_point(monoid.orthogonal_basis(), k, support);
  if (!point) return std::nullopt;
  IntVector x = clear_denominators(*point);
  x *= monoid.structure().saturation_factor();
  if (!monoid.contains(x)) throw std::logic_error("support_witness: scaled point not in the monoid");
  return x;
}

std::vector<IndexSet> mixed_sign_family(const std::vector<IntVector>& vectors, std::size_t k, std::size_t cap) {
  check_cap(k, cap, "mixed_sign_family");
  for (const auto& v : vectors) require_same_size(k, static_cast<std::size_t>(v.size()), "mixed_sign_family");
  std::vector<IndexSet> out;
  for (unsigned long mask = 1; mask < (1UL << k); ++mask) {
    IndexSet s = index_set_from_mask(mask, k);
    const bool ok = std::all_of(vectors.begin(), vectors.end(), [&](const IntVector& v) {
      bool pos = false, neg = false;
      for (auto i : s) {
        pos = pos || v(static_cast<Eigen::Index>(i)) > 0;
        neg = neg || v(static_cast<Eigen::Index>(i)) < 0;
      }
      return pos == neg;
    });
    if (ok) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IntVector> minimal_orthogonal_family(const FullAffineMonoid& monoid, std::vector<IntVector> seed) {
  const std::size_t k = monoid.dimension();
  const IntMatrix& basis = monoid.lattice().rows();
  for (const auto& v : seed) {
    require_same_size(k, static_cast<std::size_t>(v.size()), "minimal_orthogonal_family");
    if (basis.rows() > 0 && !(basis * v).isZero())
      throw std::invalid_argument("minimal_orthogonal_family: seed vector " + to_string(v) +
                                  " is not orthogonal to the monoid");
  }
  std::vector<IndexSet> target = monoid.supports();
  target.erase(target.begin());  // drop ∅

  std::vector<IntVector> family = std::move(seed);
  for (;;) {
    const auto current = mixed_sign_family(family, k);
    const auto offending = std::find_if(current.begin(), current.end(), [&](const IndexSet& s) {
      return !std::binary_search(target.begin(), target.end(), s);
    });
    if (offending == current.end()) break;
    const IndexSet& s = *offending;
    LinearSystem sys(static_cast<Eigen::Index>(k));
    for (Eigen::Index r = 0; r < basis.rows(); ++r) sys.add_equality(basis.row(r).transpose().cast<Rational>(), 0);
    RatVector total = RatVector::Zero(static_cast<Eigen::Index>(k));
    for (auto i : s) {
      total(static_cast<Eigen::Index>(i)) = 1;
      sys.bounds[i] = Bound::NonNegative;
    }
    sys.add_equality(total, 1);
    auto v = find_feasible_point(sys);
    if (!v) throw std::logic_error("minimal_orthogonal_family: no separating vector for " + to_string(s));
    family.push_back(clear_denominators(*v));
  }

  // complete to a spanning set of A^⊥
  const IntMatrix& orth = monoid.orthogonal_basis();
  for (Eigen::Index i = 0; i < orth.rows(); ++i) {
    const Eigen::Index before = field_rank(to_rational(stack_rows(family, k)));
    family.push_back(orth.row(i).transpose());
    if (field_rank(to_rational(stack_rows(family, k))) == before) family.pop_back();
  }
  return family;
}

FullAffineMonoid project_out(const FullAffineMonoid& monoid, const IndexSet& removed) {
  const auto& supports = monoid.supports();
  if (removed.size() != monoid.dimension() && !std::binary_search(supports.begin(), supports.end(), removed))
    throw std::invalid_argument("project_out: " + to_string(removed) + " is not a support of the monoid");
  return FullAffineMonoid(project_out(monoid.lattice(), removed));
}

EqSystem fas_step_one(const FullAffineMonoid& monoid) {
  EqSystem sys = monoid.defining_system();
  std::vector<IntVector> seed;
  for (Eigen::Index i = 0; i < sys.lhs().rows(); ++i) seed.emplace_back((sys.lhs().row(i) - sys.rhs().row(i)).transpose());
  const std::size_t given = seed.size();
  const auto family = minimal_orthogonal_family(monoid, std::move(seed));
  for (std::size_t i = given; i < family.size(); ++i) add_split_equality(sys, family[i]);
  return sys;
}

EqSystem fas_system(const FullAffineMonoid& monoid) {
  const std::size_t k = monoid.dimension();
  EqSystem out(k);
  for (const auto& s : monoid.supports()) {
    if (s.size() == k) continue;
    const EqSystem part = fas_step_one(project_out(monoid, s));
    out = intersect(out, lift(part, s, k));
  }
  return without_duplicate_rows(out);
}

}  // namespace affmon
