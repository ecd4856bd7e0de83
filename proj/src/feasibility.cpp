#include "affmon/feasibility.hpp"

#include "affmon/normal_forms.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace affmon {

std::optional<RatVector> nonnegative_solution(const RatMatrix& a, const RatVector& b) {
  const Eigen::Index m = a.rows();
  const Eigen::Index n = a.cols();
  if (b.size() != m) throw std::invalid_argument("nonnegative_solution: rhs size");
  if (m == 0) return RatVector(RatVector::Zero(n));

  // Phase-one tableau [A | I | b] with the artificial objective in the last row.
  const Eigen::Index rhs = n + m;
  RatMatrix t = RatMatrix::Zero(m + 1, n + m + 1);
  std::vector<Eigen::Index> basis(static_cast<std::size_t>(m));
  for (Eigen::Index i = 0; i < m; ++i) {
    const Rational sign = b(i) < 0 ? Rational(-1) : Rational(1);
    t.row(i).head(n) = sign * a.row(i);
    t(i, n + i) = 1;
    t(i, rhs) = sign * b(i);
    basis[static_cast<std::size_t>(i)] = n + i;
  }
  for (Eigen::Index i = 0; i < m; ++i) {
    t.row(m).head(n) -= t.row(i).head(n);
    t(m, rhs) -= t(i, rhs);
  }

  for (;;) {
    Eigen::Index entering = -1;
    for (Eigen::Index j = 0; j < n + m; ++j)
      if (t(m, j) < 0) {
        entering = j;
        break;
      }
    if (entering < 0) break;
    Eigen::Index leaving = -1;
    Rational best;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (t(i, entering) <= 0) continue;
      const Rational ratio = t(i, rhs) / t(i, entering);
      if (leaving < 0 || ratio < best ||
          (ratio == best && basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leaving)])) {
        leaving = i;
        best = ratio;
      }
    }
    // Phase one is bounded below by zero, so some row always qualifies.
    if (leaving < 0) throw std::logic_error("simplex: unbounded phase one");
    const Rational pivot = t(leaving, entering);
    t.row(leaving) /= pivot;
    for (Eigen::Index i = 0; i <= m; ++i) {
      if (i == leaving || t(i, entering) == 0) continue;
      const Rational f = t(i, entering);
      t.row(i) -= f * t.row(leaving);
    }
    basis[static_cast<std::size_t>(leaving)] = entering;
  }

  if (t(m, rhs) != 0) return std::nullopt;
  RatVector x = RatVector::Zero(n);
  for (Eigen::Index i = 0; i < m; ++i)
    if (basis[static_cast<std::size_t>(i)] < n) x(basis[static_cast<std::size_t>(i)]) = t(i, rhs);
  return x;
}

LinearSystem::LinearSystem(Eigen::Index variables)
    : equalities(0, variables), rhs(0), bounds(static_cast<std::size_t>(variables), Bound::Free) {}

void LinearSystem::add_equality(const RatVector& row, const Rational& value) {
  if (row.size() != equalities.cols()) throw std::invalid_argument("LinearSystem: row size");
  const Eigen::Index r = equalities.rows();
  equalities.conservativeResize(r + 1, Eigen::NoChange);
  equalities.row(r) = row.transpose();
  rhs.conservativeResize(r + 1);
  rhs(r) = value;
}

std::optional<RatVector> find_feasible_point(const LinearSystem& system) {
  const Eigen::Index vars = system.equalities.cols();
  const Eigen::Index rows = system.equalities.rows();
  // column layout of the standard-form problem
  std::vector<Eigen::Index> pos(static_cast<std::size_t>(vars), -1), neg(static_cast<std::size_t>(vars), -1);
  Eigen::Index cols = 0;
  for (Eigen::Index j = 0; j < vars; ++j) {
    const auto bound = system.bounds[static_cast<std::size_t>(j)];
    if (bound == Bound::Zero) continue;
    pos[static_cast<std::size_t>(j)] = cols++;
    if (bound == Bound::Free) neg[static_cast<std::size_t>(j)] = cols++;
  }
  RatMatrix a = RatMatrix::Zero(rows, cols);
  RatVector b = system.rhs;
  for (Eigen::Index j = 0; j < vars; ++j) {
    const auto p = pos[static_cast<std::size_t>(j)];
    if (p < 0) continue;
    a.col(p) = system.equalities.col(j);
    if (const auto q = neg[static_cast<std::size_t>(j)]; q >= 0) a.col(q) = -system.equalities.col(j);
    if (system.bounds[static_cast<std::size_t>(j)] == Bound::AtLeastOne) b -= system.equalities.col(j);
  }
  auto y = nonnegative_solution(a, b);
  if (!y) return std::nullopt;
  RatVector x = RatVector::Zero(vars);
  for (Eigen::Index j = 0; j < vars; ++j) {
    const auto p = pos[static_cast<std::size_t>(j)];
    if (p < 0) continue;
    x(j) = (*y)(p);
    if (const auto q = neg[static_cast<std::size_t>(j)]; q >= 0) x(j) -= (*y)(q);
    if (system.bounds[static_cast<std::size_t>(j)] == Bound::AtLeastOne) x(j) += 1;
  }
  return x;
}

namespace {

struct Inequality {
  RatVector coeffs;  // coeffs·x ≤ bound
  Rational bound;
};

// Scales so the first nonzero coefficient has absolute value one; returns
// false for a violated constant constraint and drops satisfied ones by
// clearing `keep`.
bool normalize(Inequality& c, bool& keep) {
  Eigen::Index lead = -1;
  for (Eigen::Index j = 0; j < c.coeffs.size(); ++j)
    if (c.coeffs(j) != 0) {
      lead = j;
      break;
    }
  if (lead < 0) {
    keep = false;
    return c.bound >= 0;
  }
  const Rational s = abs(c.coeffs(lead));
  c.coeffs /= s;
  c.bound /= s;
  keep = true;
  return true;
}

std::string key_of(const Inequality& c) {
  std::string k;
  for (Eigen::Index j = 0; j < c.coeffs.size(); ++j) k += c.coeffs(j).str() + ',';
  return k;
}

}  // namespace

bool fourier_motzkin_feasible(const RatMatrix& eq, const RatVector& eq_rhs, const RatMatrix& le,
                              const RatVector& le_rhs) {
  const Eigen::Index vars = std::max(eq.cols(), le.cols());
  // Substitute the equalities away.
  RatMatrix aug(eq.rows(), vars + 1);
  if (eq.rows() > 0) aug << eq, eq_rhs;
  const auto pivots = reduce_row_echelon(aug);
  for (auto p : pivots)
    if (p == vars) return false;  // 0 = nonzero
  std::vector<bool> is_pivot(static_cast<std::size_t>(vars), false);
  for (auto p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  std::vector<Inequality> current;
  for (Eigen::Index i = 0; i < le.rows(); ++i) {
    Inequality c{RatVector(le.row(i).transpose()), le_rhs(i)};
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      const auto p = pivots[r];
      const Rational f = c.coeffs(p);
      if (f == 0) continue;
      // x_p = aug(r, vars) - Σ_{free} aug(r, j) x_j
      c.bound -= f * aug(static_cast<Eigen::Index>(r), vars);
      for (Eigen::Index j = 0; j < vars; ++j)
        if (!is_pivot[static_cast<std::size_t>(j)]) c.coeffs(j) -= f * aug(static_cast<Eigen::Index>(r), j);
      c.coeffs(p) = 0;
    }
    bool keep = false;
    if (!normalize(c, keep)) return false;
    if (keep) current.push_back(std::move(c));
  }

  for (Eigen::Index v = 0; v < vars; ++v) {
    std::vector<Inequality> upper, lower, next;
    for (auto& c : current) {
      if (c.coeffs(v) > 0)
        upper.push_back(std::move(c));
      else if (c.coeffs(v) < 0)
        lower.push_back(std::move(c));
      else
        next.push_back(std::move(c));
    }
    for (const auto& u : upper)
      for (const auto& l : lower) {
        const Rational fu = -l.coeffs(v);
        const Rational fl = u.coeffs(v);
        Inequality c{RatVector(fu * u.coeffs + fl * l.coeffs), fu * u.bound + fl * l.bound};
        c.coeffs(v) = 0;
        bool keep = false;
        if (!normalize(c, keep)) return false;
        if (keep) next.push_back(std::move(c));
      }
    // keep the tightest bound per direction
    std::map<std::string, Inequality> tightest;
    for (auto& c : next) {
      auto key = key_of(c);
      auto it = tightest.find(key);
      if (it == tightest.end())
        tightest.emplace(std::move(key), std::move(c));
      else if (c.bound < it->second.bound)
        it->second = std::move(c);
    }
    current.clear();
    for (auto& [key, c] : tightest) current.push_back(std::move(c));
  }
  return true;
}

}  // namespace affmon
