#include "affmon/support_system.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace affmon {

namespace {

const FullAffineMonoid& trivial_monoid() {
  static const FullAffineMonoid zero(LatticeBasis(0));
  return zero;
}

bool strictly_positive(const IntVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v(i) <= 0) return false;
  return true;
}

bool well_formed(const IndexSet& s, std::size_t k) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] >= k) return false;
    if (i > 0 && s[i - 1] >= s[i]) return false;
  }
  return true;
}

std::string render_rows(const IntMatrix& m) {
  std::ostringstream out;
  out << '[';
  for (Eigen::Index i = 0; i < m.rows(); ++i) out << (i ? " " : "") << to_string(IntVector(m.row(i).transpose()));
  out << ']';
  return out.str();
}

// First point of {0..bound}^dim (lexicographic) accepted by `pred`.
template <class Pred>
std::optional<IntVector> first_in_box(std::size_t dim, unsigned bound, Pred pred) {
  IntVector x = IntVector::Zero(static_cast<Eigen::Index>(dim));
  for (;;) {
    if (pred(x)) return x;
    Eigen::Index i = x.size() - 1;
    while (i >= 0 && x(i) == bound) x(i--) = 0;
    if (i < 0) return std::nullopt;
    x(i) += 1;
  }
}

IntVector row_shift(const IntVector& row, const IntVector& unit, std::size_t i) {
  IntVector out = row;
  out(static_cast<Eigen::Index>(i)) += row.dot(unit);
  return out;
}

}  // namespace

const FullAffineMonoid& SupportSystem::monoid(const IndexSet& pattern) const {
  if (auto it = monoids.find(pattern); it != monoids.end()) return it->second;
  if (pattern.size() == k) return trivial_monoid();
  throw std::out_of_range("SupportSystem: no monoid for " + to_string(pattern));
}

bool SupportSystem::has_support(const IndexSet& pattern) const {
  return std::binary_search(supports.begin(), supports.end(), pattern);
}

std::vector<Violation> validate(const SupportSystem& ss, unsigned box_bound) {
  std::vector<Violation> out;
  const std::size_t k = ss.k;

  if (static_cast<std::size_t>(ss.unit.size()) != k)
    out.push_back({2, "unit has " + std::to_string(ss.unit.size()) + " entries, expected " + std::to_string(k), ""});
  if (!std::is_sorted(ss.supports.begin(), ss.supports.end()) ||
      std::adjacent_find(ss.supports.begin(), ss.supports.end()) != ss.supports.end())
    out.push_back({2, "support list is not sorted and duplicate free", ""});
  for (const auto& s : ss.supports) {
    if (!well_formed(s, k)) {
      out.push_back({2, "malformed index set", to_string(s)});
      continue;
    }
    if (s.size() == k && !ss.monoids.count(s)) continue;
    auto it = ss.monoids.find(s);
    if (it == ss.monoids.end())
      out.push_back({2, "no monoid attached", to_string(s)});
    else if (it->second.dimension() != k - s.size())
      out.push_back({2, "monoid has dimension " + std::to_string(it->second.dimension()) + ", expected " +
                            std::to_string(k - s.size()),
                     to_string(s)});
  }
  for (const auto& [s, m] : ss.monoids)
    if (!ss.has_support(s)) out.push_back({2, "monoid attached to a pattern outside the family", to_string(s)});
  if (!out.empty()) return out;

  // (i)
  if (!ss.has_support({}))
    out.push_back({1, "the empty pattern is missing", "{}"});
  else if (!strictly_positive(ss.unit))
    out.push_back({1, "unit is not strictly positive", to_string(ss.unit)});
  else if (!ss.monoid({}).contains(ss.unit))
    out.push_back({1, "unit is not in A_{}", to_string(ss.unit)});

  // (iii)
  for (std::size_t a = 0; a < ss.supports.size(); ++a)
    for (std::size_t b = a + 1; b < ss.supports.size(); ++b) {
      const auto u = set_union(ss.supports[a], ss.supports[b]);
      if (!ss.has_support(u))
        out.push_back({3, "not closed under unions",
                       to_string(ss.supports[a]) + " ∪ " + to_string(ss.supports[b]) + " = " + to_string(u)});
    }
  for (const auto& s : ss.supports) {
    if (s.size() == k) continue;
    const auto& m = ss.monoid(s);
    for (const auto& j : m.supports()) {
      const auto u = set_union(s, lift_index_set(j, s, k));
      if (ss.has_support(u)) continue;
      const auto w = support_witness(m, j);
      out.push_back({3, "A_" + to_string(s) + " has an element whose support gives " + to_string(u),
                     w ? to_string(*w) : to_string(j)});
    }
  }

  // (iv)
  for (const auto& i : ss.supports)
    for (const auto& kk : ss.supports) {
      if (i == kk || !is_subset(i, kk) || kk.size() == k) continue;
      const auto& ai = ss.monoid(i);
      const auto& ak = ss.monoid(kk);
      const auto rel = reindex_outside(set_difference(kk, i), i);
      if (ak.lattice().contains(project_out(ai.lattice(), rel))) continue;
      auto w = first_in_box(ai.dimension(), box_bound, [&](const IntVector& x) {
        return ai.contains(x) && !ak.contains(project_out(x, rel));
      });
      std::string witness;
      if (w) {
        witness = to_string(*w);
      } else {
        const IntMatrix rows = drop_columns(ai.lattice().rows(), rel);
        for (Eigen::Index r = 0; r < rows.rows(); ++r)
          if (!ak.lattice().contains(IntVector(rows.row(r).transpose()))) {
            witness = "lattice generator " + to_string(IntVector(rows.row(r).transpose()));
            break;
          }
      }
      out.push_back({4, "projection of A_" + to_string(i) + " is not inside A_" + to_string(kk), witness});
    }
  return out;
}

bool member_MS(const SupportSystem& ss, const DimVector& x) {
  require_same_size(ss.k, x.size(), "member_MS");
  const IndexSet pattern = infinite_support(x);
  if (!ss.has_support(pattern)) return false;
  return ss.monoid(pattern).contains(project_out(x, pattern));
}

IndexSet reindex_outside(const IndexSet& s, const IndexSet& removed) {
  IndexSet out;
  out.reserve(s.size());
  for (auto j : s) {
    if (contains(removed, j)) throw std::invalid_argument("reindex_outside: index sets overlap");
    const auto below = static_cast<std::size_t>(std::lower_bound(removed.begin(), removed.end(), j) - removed.begin());
    out.push_back(j - below);
  }
  return out;
}

IndexSet lift_index_set(const IndexSet& s, const IndexSet& removed, std::size_t k) {
  const IndexSet kept = complement(removed, k);
  IndexSet out;
  out.reserve(s.size());
  for (auto j : s) {
    if (j >= kept.size()) throw std::out_of_range("lift_index_set: index out of range");
    out.push_back(kept[j]);
  }
  return out;
}

SupportSystem derived_ss(const SupportSystem& ss, const IndexSet& pattern) {
  if (!ss.has_support(pattern))
    throw std::invalid_argument("derived_ss: " + to_string(pattern) + " is not in the family");
  SupportSystem out;
  out.k = ss.k - pattern.size();
  out.unit = project_out(ss.unit, pattern);
  for (const auto& s : ss.supports) {
    if (!is_subset(pattern, s)) continue;
    IndexSet rel = reindex_outside(set_difference(s, pattern), pattern);
    if (auto it = ss.monoids.find(s); it != ss.monoids.end()) out.monoids.emplace(rel, it->second);
    out.supports.push_back(std::move(rel));
  }
  std::sort(out.supports.begin(), out.supports.end());
  return out;
}

std::vector<IndexSet> minimal_supports(const SupportSystem& ss) {
  std::vector<IndexSet> out;
  for (const auto& s : ss.supports) {
    if (s.empty()) continue;
    const bool minimal = std::none_of(ss.supports.begin(), ss.supports.end(), [&](const IndexSet& t) {
      return !t.empty() && t != s && is_subset(t, s);
    });
    if (minimal) out.push_back(s);
  }
  return out;
}

SupportSystem eq_to_ss(const EqSystem& sys, const IntVector& unit) {
  require_same_size(sys.dimension(), static_cast<std::size_t>(unit.size()), "eq_to_ss unit");
  if (!strictly_positive(unit)) throw std::invalid_argument("eq_to_ss: unit must be strictly positive");
  if (!member(sys, DimVector::from_integers(unit)))
    throw std::invalid_argument("eq_to_ss: unit " + to_string(unit) + " is not a solution");
  SupportSystem ss;
  ss.k = sys.dimension();
  ss.unit = unit;
  ss.supports = infinite_support_patterns(sys);
  for (const auto& s : ss.supports)
    ss.monoids.emplace(s, FullAffineMonoid(solution_lattice(subsystem_for_support(sys, s))));
  return ss;
}

EqSystem hide(const EqSystem& sys_a, const IntVector& unit, const IndexSet& hidden, const EqSystem& sys_b) {
  const std::size_t k = sys_a.dimension();
  require_same_size(k, static_cast<std::size_t>(unit.size()), "hide unit");
  if (hidden.empty() || !well_formed(hidden, k)) throw std::invalid_argument("hide: bad index set " + to_string(hidden));
  require_same_size(k - hidden.size(), sys_b.dimension(), "hide inner system");
  if (!member(sys_a, DimVector::from_integers(unit)))
    throw std::invalid_argument("hide: unit is not a solution of the outer system");
  if (!member(sys_b, DimVector::from_integers(project_out(unit, hidden))))
    throw std::invalid_argument("hide: projected unit is not a solution of the inner system");

  EqSystem out(k);
  for (auto i : hidden) {
    for (Eigen::Index r = 0; r < sys_a.congruence_rows().rows(); ++r)
      out.add_congruence(row_shift(sys_a.congruence_rows().row(r).transpose(), unit, i), sys_a.moduli()(r));
    for (Eigen::Index r = 0; r < sys_a.lhs().rows(); ++r)
      out.add_equality(row_shift(sys_a.lhs().row(r).transpose(), unit, i),
                       row_shift(sys_a.rhs().row(r).transpose(), unit, i));
  }
  return without_duplicate_rows(intersect(out, lift(sys_b, hidden, k)));
}

namespace {

class Converter {
 public:
  explicit Converter(const SupportSystem& root) : root_(root) {}

  // Equations for the system derived at the absolute pattern `at`.
  EqSystem solve(const IndexSet& at) {
    if (auto it = memo_.find(at); it != memo_.end()) return it->second;
    const SupportSystem ss = at.empty() ? root_ : derived_ss(root_, at);
    EqSystem result(ss.k);
    if (ss.k > 0 && ss.supports.size() == 2) {
      const auto& base = ss.monoid({});
      if (base.lattice().rank() != 1)
        throw std::invalid_argument("ss_to_eq: A_{} at " + to_string(at) + " must be cyclic, lattice " +
                                    render_rows(base.lattice().rows()));
      result = fas_system(base);
    } else if (ss.k > 0) {
      result = fas_system(ss.monoid({}));
      for (const auto& s : minimal_supports(ss)) {
        const EqSystem inner = solve(set_union(at, lift_index_set(s, at, root_.k)));
        result = hide(result, ss.unit, s, inner);
      }
    }
    memo_.emplace(at, result);
    return result;
  }

 private:
  const SupportSystem& root_;
  std::map<IndexSet, EqSystem> memo_;
};

}  // namespace

EqSystem ss_to_eq(const SupportSystem& ss) {
  const auto violations = validate(ss);
  if (!violations.empty()) {
    const auto& v = violations.front();
    throw std::invalid_argument("ss_to_eq: invalid system, condition " + std::to_string(v.condition) + ": " +
                                v.detail + (v.witness.empty() ? "" : " (" + v.witness + ")"));
  }
  return Converter(ss).solve({});
}

}  // namespace affmon
