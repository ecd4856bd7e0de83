// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "affmon/feasibility.hpp"
#include "affmon/realization.hpp"
#include "affmon/support_system.hpp"

#include "support.hpp"

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>

using namespace affmon;
using testkit::LatticeOracle;
using testkit::system_predicate;

namespace {

const ExtNat inf = ExtNat::infinity();

struct Outcome {
  bool ok = true;
  std::string note;

  void fail(const std::string& what) {
    if (ok) note = what;
    ok = false;
  }
};

EqSystem equation(const IntVector& l, const IntVector& r) {
  EqSystem s(static_cast<std::size_t>(l.size()));
  s.add_equality(l, r);
  return s;
}

EqSystem congruence(const IntVector& d, const Integer& m) {
  EqSystem s(static_cast<std::size_t>(d.size()));
  s.add_congruence(d, m);
  return s;
}

void expect_equal(Outcome& out, const Predicate& a, const Predicate& b, const Box& box, const std::string& label) {
  if (const auto w = equal_on_box(a, b, box)) out.fail(label + " differs at " + w->to_string());
}

IntMatrix random_generators(std::size_t k, long lo, long hi) {
  const auto rows = static_cast<std::size_t>(testkit::uniform(1, static_cast<long>(k)));
  IntMatrix g;
  do g = testkit::random_matrix(rows, k, lo, hi);
  while (g.isZero());
  return g;
}

std::string matrix_text(const IntMatrix& m) {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < m.rows(); ++i) os << (i ? " " : "") << to_string(IntVector(m.row(i).transpose()));
  return os.str();
}

// {(n,n)} ∪ {(∞,∞)}, optionally with ∞ in the first or second slot
std::set<DimVector> worked_set(unsigned bound, bool inf_first, bool inf_second) {
  std::set<DimVector> out;
  for (long n = 0; n <= bound; ++n) out.insert(DimVector{n, n});
  out.insert(DimVector{inf, inf});
  for (long n = 0; n <= bound; ++n) {
    if (inf_first) out.insert(DimVector{inf, n});
    if (inf_second) out.insert(DimVector{n, inf});
  }
  return out;
}

Outcome worked_equations() {
  Outcome out;
  const Box box{2, 4, true};
  const std::vector<std::pair<EqSystem, std::set<DimVector>>> cases = {
      {equation(int_vector({1, 0}), int_vector({0, 1})), worked_set(4, false, false)},
      {equation(int_vector({2, 0}), int_vector({1, 1})), worked_set(4, true, false)},
      {equation(int_vector({2, 1}), int_vector({1, 2})), worked_set(4, true, true)},
  };
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto got = testkit::as_set(enumerate_box(system_predicate(cases[i].first), box));
    if (got != cases[i].second) out.fail("solution set of equation " + std::to_string(i + 1) + " differs");
  }
  return out;
}

Outcome lattice_extraction() {
  Outcome out;
  std::vector<std::pair<std::size_t, IntMatrix>> lattices = {
      {2, int_matrix({{2, 0}, {0, 2}, {1, 1}})},
      {2, int_matrix({{1, 1}})},
  };
  for (std::uint64_t seed : {11u, 23u, 37u, 41u, 53u, 67u}) {
    testkit::rng().seed(seed);
    for (int i = 0; i < 3; ++i) {
      const auto k = static_cast<std::size_t>(testkit::uniform(1, 4));
      lattices.emplace_back(k, random_generators(k, -3, 3));
    }
  }
  for (const auto& [k, g] : lattices) {
    const LatticeOracle oracle(g);
    const auto sys = defining_system(LatticeBasis(k, g));
    expect_equal(out, system_predicate(sys), [&](const DimVector& x) { return oracle.contains_nonnegative(x); },
                 Box{k, 6, false}, "lattice " + matrix_text(g));
  }
  if (lattices.size() != 20) out.fail("expected 20 lattices");
  return out;
}

Outcome duality() {
  Outcome out;
  testkit::rng().seed(3);
  for (int i = 0; i < 50; ++i) {
    const auto d = static_cast<std::size_t>(testkit::uniform(1, 5));
    const auto dim = static_cast<std::size_t>(testkit::uniform(0, static_cast<long>(d)));
    RatMatrix basis(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(d));
    for (Eigen::Index r = 0; r < basis.rows(); ++r)
      for (Eigen::Index c = 0; c < basis.cols(); ++c)
        basis(r, c) = Rational(testkit::uniform(-3, 3), testkit::uniform(1, 4));
    if (positive_kernel_trivial(basis, d) != has_strictly_positive_orthogonal(basis, d))
      out.fail("subspace " + std::to_string(i) + " disagrees");
  }
  return out;
}

Outcome fas_cases() {
  Outcome out;
  std::vector<std::pair<std::size_t, IntMatrix>> monoids = {
      {2, int_matrix({{1, 1}})},
      {2, int_matrix({{2, 0}, {1, 1}})},
      {3, int_matrix({{1, 1, 0}, {0, 0, 1}})},
  };
  testkit::rng().seed(5);
  for (int i = 0; i < 5; ++i) {
    const auto k = static_cast<std::size_t>(testkit::uniform(1, 3));
    monoids.emplace_back(k, random_generators(k, -3, 3));
  }
  for (const auto& [k, g] : monoids) {
    const testkit::SumWithInfinityOracle oracle(LatticeOracle(g), k, 10);
    const auto sys = fas_system(FullAffineMonoid(LatticeBasis(k, g)));
    expect_equal(out, system_predicate(sys), std::ref(oracle), Box{k, 6, true}, "monoid " + matrix_text(g));
  }
  return out;
}

Outcome round_trip() {
  Outcome out;
  std::vector<std::pair<std::string, FixtureEntry>> systems;
  for (const char* name : {"worked-1", "worked-2", "worked-3", "nk2-0", "nk2-1", "nk2-1p", "nk2-2"})
    systems.emplace_back(name, builtin(name));
  for (unsigned n : {2u, 3u}) systems.emplace_back("free n=" + std::to_string(n), builtin("free", n));
  testkit::rng().seed(7);
  for (int i = 0; i < 10; ++i) {
    FixtureEntry e;
    e.k = static_cast<std::size_t>(testkit::uniform(1, 4));
    e.unit = testkit::random_unit(e.k);
    e.system = testkit::random_system_with_unit(e.k, e.unit, static_cast<int>(testkit::uniform(0, 2)),
                                                static_cast<int>(testkit::uniform(0, 2)));
    systems.emplace_back("random " + std::to_string(i), e);
  }
  for (const auto& [label, e] : systems) {
    const auto back = ss_to_eq(eq_to_ss(*e.system, e.unit));
    expect_equal(out, system_predicate(back), system_predicate(*e.system), Box{e.k, 5, true}, label);
  }
  return out;
}

Outcome hide_cross_check() {
  Outcome out;
  const auto hidden = hide(equation(int_vector({1, 0}), int_vector({0, 1})), int_vector({1, 1}), {0}, EqSystem(1));
  expect_equal(out, system_predicate(hidden), system_predicate(equation(int_vector({2, 0}), int_vector({1, 1}))),
               Box{2, 5, true}, "hidden system");
  return out;
}

Outcome plan_soundness() {
  Outcome out;
  for (const auto& info : builtin_names())
    for (unsigned n : info.parameterized ? std::vector<unsigned>{2, 3} : std::vector<unsigned>{2}) {
      const auto e = builtin(info.name, n);
      if (!e.system) continue;
      const auto plan = plan_system(*e.system, e.unit);
      expect_equal(out, [&](const DimVector& x) { return evaluate_plan(*plan, x); }, system_predicate(*e.system),
                   Box{e.k, 5, true}, info.name);
    }
  return out;
}

Outcome free_generation() {
  Outcome out;
  for (long n : {2L, 3L}) {
    const auto bound = static_cast<unsigned>(2 * n);
    const Box box{2, bound, true};
    // every c1(1,1) + c2(n,0) + c3(0,n) with c_i ∈ {0..2n, ∞} that lands in the box
    std::set<DimVector> generated;
    std::vector<ExtNat> coeffs;
    for (long c = 0; c <= 2 * n; ++c) coeffs.emplace_back(c);
    coeffs.push_back(inf);
    for (const auto& c1 : coeffs)
      for (const auto& c2 : coeffs)
        for (const auto& c3 : coeffs) {
          const DimVector x{c1 + Integer(n) * c2, c1 + Integer(n) * c3};
          if (box.contains(x)) generated.insert(x);
        }
    const auto sys = congruence(int_vector({1, n - 1}), n);
    if (testkit::as_set(enumerate_box(system_predicate(sys), box)) != generated)
      out.fail("n=" + std::to_string(n) + " differs");
  }
  return out;
}

Outcome negative_fixtures() {
  Outcome out;
  const auto gs = builtin("gs-right");
  const Box box{2, 2, false};
  const auto w = fullness_check(enumerate_box(gs.predicate, box), box);
  if (!w) {
    out.fail("no fullness witness for {x >= y}");
  } else {
    out.note = "witness a=" + w->a.to_string() + " t=" + w->t.to_string();
    if (!gs.predicate(w->a) || gs.predicate(w->t) || !gs.predicate(w->a + w->t)) out.fail("invalid witness");
  }
  const auto nodiv = builtin("nodiv-right");
  const DimVector b{1, 0, 0}, a{1, 1, 0}, gap{0, 1, 0};
  if (!nodiv.predicate(b) || !nodiv.predicate(a)) out.fail("order gap endpoints are not members");
  if (!componentwise_leq(b, a) || b + gap != a) out.fail("order gap arithmetic");
  if (nodiv.predicate(gap)) out.fail("a - b is a member");
  return out;
}

Outcome fixture_axioms() {
  Outcome out;
  for (const auto& info : builtin_names())
    for (unsigned n : info.parameterized ? std::vector<unsigned>{2, 3} : std::vector<unsigned>{2}) {
      const auto e = builtin(info.name, n);
      if (!e.system) continue;
      const Box box{e.k, 5, true};
      const auto report = check_monoid_axioms(enumerate_box(system_predicate(*e.system), box), box);
      if (!report.passed())
        out.fail(info.name + ": " + report.violations.front().axiom + " at " + report.violations.front().witness.to_string());
    }
  return out;
}

struct Criterion {
  int number;
  std::string title;
  double limit_seconds;  ///< 0 for no limit
  Outcome (*run)();
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "worked equations x=y, 2x=x+y, 2x+y=x+2y on {0..4,inf}^2", 1, worked_equations},
      {2, "defining systems of 20 lattices vs determinantal oracle on {0..6}^k", 5, lattice_extraction},
      {3, "positive kernel test vs strictly positive orthogonal on 50 subspaces", 0, duality},
      {4, "fas_system vs brute-force A + inf*A on {0..6,inf}^k", 0, fas_cases},
      {5, "eq_to_ss then ss_to_eq round trip on {0..5,inf}^k", 10, round_trip},
      {6, "hide(x=y, (1,1), {1}, {}) vs 2x=x+y", 0, hide_cross_check},
      {7, "realization plans vs fixture systems on {0..5,inf}^k", 0, plan_soundness},
      {8, "(1,1)N0*+(n,0)N0*+(0,n)N0* vs x+(n-1)y in nN0*, n=2,3", 0, free_generation},
      {9, "fullness witness for {x>=y} and order gap of {x>=y>=z}", 0, negative_fixtures},
      {10, "monoid axioms of equation fixtures on {0..5,inf}^k", 0, fixture_axioms},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds > c.limit_seconds) {
      std::ostringstream os;
      os << "took longer than " << c.limit_seconds << " s";
      out.fail(os.str());
    }
    if (!out.ok) ++failures;
    std::printf("%s %2d  %s  (%.3f s)%s%s\n", out.ok ? "PASS" : "FAIL", c.number, c.title.c_str(), seconds,
                out.note.empty() ? "" : "  ", out.note.c_str());
  }
  std::fflush(stdout);
  return failures == 0 ? 0 : 1;
}
