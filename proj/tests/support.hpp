#pragma once

// Generators and independent oracles shared by the test binaries. Nothing in
// here calls the Hermite/Smith code or the LP engines.

#include "affmon/oracle.hpp"

#include <map>
#include <random>
#include <set>
#include <vector>

namespace testkit {

using namespace affmon;

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(20240611);
  return engine;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline IntVector random_vector(std::size_t k, long lo, long hi) {
  IntVector v(static_cast<Eigen::Index>(k));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = uniform(lo, hi);
  return v;
}

inline IntMatrix random_matrix(std::size_t rows, std::size_t cols, long lo, long hi) {
  IntMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = uniform(lo, hi);
  return m;
}

inline DimVector random_dim_vector(std::size_t k, long hi, int inf_percent) {
  DimVector x(k);
  for (std::size_t i = 0; i < k; ++i) x[i] = uniform(0, 99) < inf_percent ? ExtNat::infinity() : ExtNat(uniform(0, hi));
  return x;
}

/// Fraction-free determinant (Bareiss).
inline Integer determinant(IntMatrix m) {
  const Eigen::Index n = m.rows();
  if (n == 0) return 1;
  Integer sign = 1, prev = 1;
  for (Eigen::Index p = 0; p < n - 1; ++p) {
    if (m(p, p) == 0) {
      Eigen::Index s = p + 1;
      while (s < n && m(s, p) == 0) ++s;
      if (s == n) return 0;
      m.row(p).swap(m.row(s));
      sign = -sign;
    }
    for (Eigen::Index i = p + 1; i < n; ++i)
      for (Eigen::Index j = p + 1; j < n; ++j) m(i, j) = (m(i, j) * m(p, p) - m(i, p) * m(p, j)) / prev;
    prev = m(p, p);
  }
  return sign * m(n - 1, n - 1);
}

inline void subsets(std::size_t n, std::size_t r, std::vector<std::vector<Eigen::Index>>& out) {
  std::vector<Eigen::Index> cur;
  std::function<void(Eigen::Index)> rec = [&](Eigen::Index start) {
    if (cur.size() == r) {
      out.push_back(cur);
      return;
    }
    for (Eigen::Index i = start; i < static_cast<Eigen::Index>(n); ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

/// (rank, gcd of the maximal nonzero minors) of the row lattice.
inline std::pair<std::size_t, Integer> determinantal_divisor(const IntMatrix& g) {
  const std::size_t rows = static_cast<std::size_t>(g.rows()), cols = static_cast<std::size_t>(g.cols());
  for (std::size_t r = std::min(rows, cols); r > 0; --r) {
    std::vector<std::vector<Eigen::Index>> rs, cs;
    subsets(rows, r, rs);
    subsets(cols, r, cs);
    Integer d = 0;
    for (const auto& ri : rs)
      for (const auto& ci : cs) {
        IntMatrix minor(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r));
        for (std::size_t a = 0; a < r; ++a)
          for (std::size_t b = 0; b < r; ++b) minor(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = g(ri[a], ci[b]);
        d = gcd(d, abs(determinant(minor)));
      }
    if (d != 0) return {r, d};
  }
  return {0, 1};
}

/// Membership in the lattice spanned by the rows of g: adjoining x keeps the
/// rank and the determinantal divisor.
class LatticeOracle {
 public:
  explicit LatticeOracle(IntMatrix g) : g_(std::move(g)), base_(determinantal_divisor(g_)) {}

  bool contains(const IntVector& x) const {
    IntMatrix h(g_.rows() + 1, g_.cols());
    h << g_, x.transpose();
    return determinantal_divisor(h) == base_;
  }

  bool contains_nonnegative(const DimVector& x) const { return x.is_finite() && contains(x.to_integers()); }

 private:
  IntMatrix g_;
  std::pair<std::size_t, Integer> base_;
};

/// A + ∞·A over a box for A = L ∩ N0^k, from brute force over {0..reach}^k.
class SumWithInfinityOracle {
 public:
  SumWithInfinityOracle(const LatticeOracle& lattice, std::size_t k, long reach) : k_(k) {
    DimVector a(k);
    std::vector<long> idx(k, 0);
    for (;;) {
      for (std::size_t i = 0; i < k; ++i) a[i] = ExtNat(idx[i]);
      if (lattice.contains(a.to_integers())) members_.push_back(a);
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == reach) idx[--i] = 0;
      if (i == 0) break;
      ++idx[i - 1];
    }
    for (const auto& m : members_) realized_.insert(support(m));
  }

  bool operator()(const DimVector& x) const {
    const IndexSet j = infinite_support(x);
    if (!realized_.count(j)) return false;
    const DimVector px = project_out(x, j);
    for (const auto& a : members_)
      if (project_out(a, j) == px) return true;
    return false;
  }

 private:
  std::size_t k_;
  std::vector<DimVector> members_;
  std::set<IndexSet> realized_;
};

inline std::set<DimVector> as_set(const std::vector<DimVector>& v) { return {v.begin(), v.end()}; }

inline Predicate system_predicate(const EqSystem& sys) {
  return [sys](const DimVector& x) { return member(sys, x); };
}

/// A random system with `unit` among its solutions. unit(0) must be 1.
inline EqSystem random_system_with_unit(std::size_t k, const IntVector& unit, int congruences, int equalities) {
  EqSystem sys(k);
  for (int c = 0; c < congruences; ++c) {
    const long m = uniform(2, 3);
    IntVector d = random_vector(k, 0, 3);
    const Integer r = mod_floor(d.dot(unit), m);
    if (r != 0) d(0) += m - r;
    sys.add_congruence(d, m);
  }
  for (int e = 0; e < equalities; ++e) {
    IntVector a = random_vector(k, 0, 2), b = random_vector(k, 0, 2);
    const Integer diff = a.dot(unit) - b.dot(unit);
    if (diff > 0) b(0) += diff;
    if (diff < 0) a(0) -= diff;
    sys.add_equality(a, b);
  }
  return sys;
}

inline IntVector random_unit(std::size_t k) {
  IntVector u = random_vector(k, 1, 3);
  u(0) = 1;
  return u;
}

}  // namespace testkit
