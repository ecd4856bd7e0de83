#include "affmon/realization.hpp"

#include <stdexcept>

namespace affmon {

namespace {

bool strictly_positive(const IntVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v(i) <= 0) return false;
  return true;
}

void require_nonnegative(const IntVector& v, const char* what) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v(i) < 0) throw std::invalid_argument(std::string(what) + ": coefficients must be nonnegative");
}

DimVector apply(const IntMatrix& m, const DimVector& x) {
  DimVector out(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) out[static_cast<std::size_t>(i)] = dot(m.row(i), x);
  return out;
}

std::string row_list(const IntMatrix& m) {
  std::string s;
  for (Eigen::Index i = 0; i < m.rows(); ++i) s += (i ? " " : "") + to_string(IntVector(m.row(i).transpose()));
  return s;
}

void describe(const RealizationPlan& p, const std::string& indent, std::vector<std::string>& out) {
  using Kind = RealizationPlan::Kind;
  switch (p.kind) {
    case Kind::FreeCyclic:
      out.push_back(indent + "leaf free-cyclic m=" + p.modulus.str() + ": semilocal PID R (skew polynomial ring over a field, Ore-localized) with R/J(R) = M_" +
                    p.modulus.str() + "(E) for a division ring E; f.g. projectives are free; dim V* = " +
                    p.modulus.str() + "N0*");
      break;
    case Kind::FreeDiagonal:
      out.push_back(indent +
                    "leaf free-diagonal: PID F1[x] localized away from x and x-1, two simple factors F1 x F1; "
                    "f.g. projectives are free; dim V* = {(x,x)}");
      break;
    case Kind::Semisimple:
      out.push_back(indent + "leaf semisimple k=" + std::to_string(p.k) + ": product of " + std::to_string(p.k) +
                    " simple artinian rings; dim V* = (N0*)^" + std::to_string(p.k));
      break;
    case Kind::Pullback: {
      std::string line = indent + "pullback dim=" + std::to_string(p.k) + " unit=" + to_string(p.unit);
      if (p.a.size() > 0) {
        line += " l=" + p.ell.str() + " j2 multiplicities a=" + to_string(p.a);
        if (p.b.size() > 0) line += " b=" + to_string(p.b);
      } else {
        line += " intersection";
      }
      line += " inducing=[" + row_list(p.inducing) + "]";
      out.push_back(line);
      out.push_back(indent + "  top:");
      describe(*p.top, indent + "    ", out);
      out.push_back(indent + "  bottom:");
      describe(*p.bottom, indent + "    ", out);
      break;
    }
  }
}

}  // namespace

PlanPtr free_cyclic_leaf(const Integer& m, const Integer& unit) {
  if (m < 1) throw std::invalid_argument("free_cyclic_leaf: modulus must be positive");
  auto p = std::make_shared<RealizationPlan>();
  p->kind = RealizationPlan::Kind::FreeCyclic;
  p->k = 1;
  p->modulus = m;
  p->unit = IntVector::Constant(1, unit);
  return p;
}

PlanPtr free_diagonal_leaf(const Integer& unit) {
  auto p = std::make_shared<RealizationPlan>();
  p->kind = RealizationPlan::Kind::FreeDiagonal;
  p->k = 2;
  p->unit = IntVector::Constant(2, unit);
  return p;
}

PlanPtr semisimple_leaf(const IntVector& unit) {
  auto p = std::make_shared<RealizationPlan>();
  p->kind = RealizationPlan::Kind::Semisimple;
  p->k = static_cast<std::size_t>(unit.size());
  p->unit = unit;
  return p;
}

PlanPtr pullback(PlanPtr top, IntMatrix inducing, PlanPtr bottom) {
  if (!top || !bottom) throw std::invalid_argument("pullback: missing child");
  if (static_cast<std::size_t>(inducing.rows()) != top->k || static_cast<std::size_t>(inducing.cols()) != bottom->k)
    throw std::invalid_argument("pullback: inducing matrix has shape " + std::to_string(inducing.rows()) + "x" +
                                std::to_string(inducing.cols()) + ", expected " + std::to_string(top->k) + "x" +
                                std::to_string(bottom->k));
  for (Eigen::Index i = 0; i < inducing.rows(); ++i) require_nonnegative(inducing.row(i).transpose(), "pullback");
  if (!evaluate_plan(*top, apply(inducing, DimVector::from_integers(bottom->unit))))
    throw std::invalid_argument("pullback: bottom unit is not sent into the top monoid");
  auto p = std::make_shared<RealizationPlan>();
  p->kind = RealizationPlan::Kind::Pullback;
  p->k = bottom->k;
  p->unit = bottom->unit;
  p->inducing = std::move(inducing);
  p->top = std::move(top);
  p->bottom = std::move(bottom);
  return p;
}

PlanPtr intersect_plans(const PlanPtr& bottom, const PlanPtr& top) {
  if (bottom->k != top->k || bottom->unit != top->unit)
    throw std::invalid_argument("intersect_plans: plans differ in dimension or unit");
  const auto k = static_cast<Eigen::Index>(bottom->k);
  return pullback(top, IntMatrix::Identity(k, k), bottom);
}

PlanPtr plan_congruence(const IntVector& a, const Integer& m, const IntVector& unit) {
  require_same_size(static_cast<std::size_t>(unit.size()), static_cast<std::size_t>(a.size()), "plan_congruence");
  require_nonnegative(a, "plan_congruence");
  if (m < 2) throw std::invalid_argument("plan_congruence: modulus must be at least 2");
  const Integer s = a.dot(unit);
  if (s <= 0) throw std::invalid_argument("plan_congruence: a·unit must be positive");
  if (s % m != 0)
    throw std::invalid_argument("plan_congruence: a·unit = " + s.str() + " is not divisible by " + m.str());
  IntMatrix row(1, a.size());
  row.row(0) = a.transpose();
  auto node = pullback(free_cyclic_leaf(m, s), row, semisimple_leaf(unit));
  auto p = std::make_shared<RealizationPlan>(*node);
  p->a = a;
  p->ell = s / m;
  return p;
}

PlanPtr plan_equation(const IntVector& a, const IntVector& b, const IntVector& unit) {
  require_same_size(static_cast<std::size_t>(unit.size()), static_cast<std::size_t>(a.size()), "plan_equation");
  require_same_size(static_cast<std::size_t>(unit.size()), static_cast<std::size_t>(b.size()), "plan_equation");
  require_nonnegative(a, "plan_equation");
  require_nonnegative(b, "plan_equation");
  const Integer s = a.dot(unit);
  if (s != b.dot(unit)) throw std::invalid_argument("plan_equation: a·unit and b·unit differ");
  if (s <= 0) throw std::invalid_argument("plan_equation: a·unit must be positive");
  IntMatrix rows(2, a.size());
  rows.row(0) = a.transpose();
  rows.row(1) = b.transpose();
  auto node = pullback(free_diagonal_leaf(s), rows, semisimple_leaf(unit));
  auto p = std::make_shared<RealizationPlan>(*node);
  p->a = a;
  p->b = b;
  p->ell = s;
  return p;
}

PlanPtr plan_system(const EqSystem& sys, const IntVector& unit) {
  require_same_size(sys.dimension(), static_cast<std::size_t>(unit.size()), "plan_system unit");
  if (!strictly_positive(unit)) throw std::invalid_argument("plan_system: unit must be strictly positive");
  if (!member(sys, DimVector::from_integers(unit)))
    throw std::invalid_argument("plan_system: unit " + to_string(unit) + " is not a solution");

  PlanPtr congruences, equalities;
  for (Eigen::Index i = 0; i < sys.congruence_rows().rows(); ++i) {
    const IntVector row = sys.congruence_rows().row(i).transpose();
    if (row.isZero()) continue;
    auto p = plan_congruence(row, sys.moduli()(i), unit);
    congruences = congruences ? intersect_plans(congruences, p) : p;
  }
  for (Eigen::Index i = 0; i < sys.lhs().rows(); ++i) {
    const IntVector l = sys.lhs().row(i).transpose();
    const IntVector r = sys.rhs().row(i).transpose();
    if (l.isZero() && r.isZero()) continue;
    auto p = plan_equation(l, r, unit);
    equalities = equalities ? intersect_plans(equalities, p) : p;
  }
  if (congruences && equalities) return intersect_plans(congruences, equalities);
  if (congruences) return congruences;
  if (equalities) return equalities;
  return semisimple_leaf(unit);
}

bool evaluate_plan(const RealizationPlan& plan, const DimVector& x) {
  require_same_size(plan.k, x.size(), "evaluate_plan");
  using Kind = RealizationPlan::Kind;
  switch (plan.kind) {
    case Kind::FreeCyclic:
      return x[0].in_multiples_of(plan.modulus);
    case Kind::FreeDiagonal:
      return x[0] == x[1];
    case Kind::Semisimple:
      return true;
    case Kind::Pullback:
      return evaluate_plan(*plan.bottom, x) && evaluate_plan(*plan.top, apply(plan.inducing, x));
  }
  return false;
}

std::vector<std::string> describe_plan(const RealizationPlan& plan) {
  std::vector<std::string> out;
  describe(plan, "", out);
  return out;
}

std::size_t plan_node_count(const RealizationPlan& plan) {
  if (plan.kind != RealizationPlan::Kind::Pullback) return 1;
  return 1 + plan_node_count(*plan.top) + plan_node_count(*plan.bottom);
}

}  // namespace affmon
