#include "affmon/fullaffine.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace affmon;
using testkit::as_set;
using testkit::system_predicate;

namespace {

const ExtNat inf = ExtNat::infinity();

EqSystem equation(std::initializer_list<long> l, std::initializer_list<long> r) {
  EqSystem s(l.size());
  s.add_equality(int_vector(l), int_vector(r));
  return s;
}

EqSystem congruence(std::initializer_list<long> d, long m) {
  EqSystem s(d.size());
  s.add_congruence(int_vector(d), m);
  return s;
}

std::set<DimVector> diagonal_with_infinity(unsigned b) {
  std::set<DimVector> out;
  for (long n = 0; n <= b; ++n) out.insert(DimVector{n, n});
  out.insert(DimVector{inf, inf});
  return out;
}

}  // namespace

TEST_CASE("construction checks") {
  CHECK_THROWS(congruence({1, 1}, 1));
  CHECK_THROWS(equation({-1, 0}, {0, 1}));
  CHECK_THROWS(EqSystem(2, int_matrix({{1, 1}}), IntVector(0), IntMatrix(0, 2), IntMatrix(0, 2)));
  CHECK(EqSystem(3).empty());
}

TEST_CASE("member: worked equations") {
  CHECK(member(equation({1, 0}, {0, 1}), DimVector{2, 2}));
  CHECK(member(equation({2, 0}, {1, 1}), DimVector{inf, 3}));
  CHECK_FALSE(member(congruence({1, 1}, 2), DimVector{1, 0}));
  CHECK(member(congruence({1, 1}, 2), DimVector{1, 1}));
  CHECK(first_violation(congruence({1, 1}, 2), DimVector{1, 0}) == 0u);
  CHECK_THROWS(member(congruence({1, 1}, 2), DimVector{1}));
}

TEST_CASE("intersect") {
  const Box box{2, 4, true};
  const auto eq = equation({1, 0}, {0, 1});
  CHECK(intersect(eq, EqSystem(2)) == eq);
  CHECK(as_set(enumerate_box(system_predicate(intersect(equation({2, 0}, {1, 1}), equation({1, 1}, {0, 2}))), box)) ==
        diagonal_with_infinity(4));
  CHECK(as_set(enumerate_box(system_predicate(intersect(congruence({1, 1}, 2), eq)), box)) ==
        diagonal_with_infinity(4));
}

TEST_CASE("no cancellation of common parts") {
  // 2x = x + y and x = y differ exactly where x is infinite
  const auto with_common = equation({2, 0}, {1, 1});
  const auto cancelled = equation({1, 0}, {0, 1});
  CHECK(member(with_common, DimVector{inf, 0}));
  CHECK_FALSE(member(cancelled, DimVector{inf, 0}));
}

TEST_CASE("slack embedding") {
  const auto emb = slack_embed(congruence({1, 1}, 2));
  CHECK(emb.equalities.dimension() == 3);
  CHECK(emb.equalities.lhs() == int_matrix({{1, 1, 0}}));
  CHECK(emb.equalities.rhs() == int_matrix({{0, 0, 2}}));
  CHECK(emb(DimVector{1, 1}) == DimVector{1, 1, 1});
  CHECK(emb(DimVector{inf, 0}) == DimVector{inf, 0, inf});
  CHECK_FALSE(emb(DimVector{1, 0}).has_value());
  const auto plain = slack_embed(equation({1, 0}, {0, 1}));
  CHECK(plain.equalities == equation({1, 0}, {0, 1}));
  CHECK(plain(DimVector{3, 3}) == DimVector{3, 3});
}

TEST_CASE("infinite support patterns") {
  CHECK(infinite_support_patterns(equation({1, 0}, {0, 1})) == std::vector<IndexSet>{{}, {0, 1}});
  CHECK(infinite_support_patterns(equation({2, 0}, {1, 1})) == std::vector<IndexSet>{{}, {0}, {0, 1}});
  CHECK(infinite_support_patterns(equation({2, 1}, {1, 2})) == std::vector<IndexSet>{{}, {0}, {0, 1}, {1}});
  CHECK_THROWS_AS(infinite_support_patterns(EqSystem(5), 4), std::length_error);
}

TEST_CASE("subsystem for support") {
  CHECK(subsystem_for_support(equation({1, 0}, {0, 1}), {0, 1}).dimension() == 0);
  const auto sub = subsystem_for_support(equation({2, 0}, {1, 1}), {0});
  CHECK(sub.dimension() == 1);
  CHECK(sub.empty());
  const auto both = intersect(congruence({1, 1}, 2), equation({1, 0}, {0, 1}));
  CHECK(subsystem_for_support(both, {}) == both);
  CHECK_THROWS(subsystem_for_support(equation({1, 0}, {0, 1}), {0}));
}

TEST_CASE("lift") {
  const auto lifted = lift(congruence({1, 1}, 2), {1}, 3);
  CHECK(lifted.congruence_rows() == int_matrix({{1, 0, 1}}));
  CHECK(member(lifted, DimVector{1, 7, 1}));
}

TEST_CASE("property: monoid laws for random systems") {
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t k = static_cast<std::size_t>(testkit::uniform(1, 3));
    const IntVector unit = testkit::random_unit(k);
    const auto sys = testkit::random_system_with_unit(k, unit, static_cast<int>(testkit::uniform(0, 2)),
                                                      static_cast<int>(testkit::uniform(0, 2)));
    const Box box{k, 3, true};
    const auto members = enumerate_box(system_predicate(sys), box);
    CHECK(check_monoid_axioms(members, box).passed());
    CHECK(member(sys, DimVector::from_integers(unit)));
    // pure infinity patterns: congruence rows evaluate to 0 or inf
    for (const auto& pattern : infinite_support_patterns(sys)) {
      const auto x = pattern_vector(k, pattern);
      for (Eigen::Index r = 0; r < sys.congruence_rows().rows(); ++r) {
        const ExtNat v = dot(sys.congruence_rows().row(r), x);
        CHECK((v.is_zero() || v.is_infinite()));
      }
    }
  }
}

TEST_CASE("property: mixed-sign criterion for disjoint equality rows") {
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t k = static_cast<std::size_t>(testkit::uniform(1, 4));
    EqSystem sys(k);
    std::vector<IntVector> diffs;
    for (int r = 0; r < 2; ++r) {
      IntVector a = testkit::random_vector(k, 0, 2), b = testkit::random_vector(k, 0, 2);
      for (Eigen::Index j = 0; j < a.size(); ++j)
        if (a(j) > 0 && b(j) > 0) b(j) = 0;
      sys.add_equality(a, b);
      diffs.emplace_back(a - b);
    }
    const auto patterns = infinite_support_patterns(sys);
    auto expected = mixed_sign_family(diffs, k);
    expected.insert(expected.begin(), IndexSet{});
    CHECK(patterns == expected);
  }
}

TEST_CASE("property: slack embedding is compatible with membership") {
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t k = 2;
    const IntVector unit = testkit::random_unit(k);
    const auto sys = testkit::random_system_with_unit(k, unit, 1, 1);
    const auto emb = slack_embed(sys);
    for (const auto& x : box_points(Box{k, 3, true})) {
      const auto image = emb(x);
      const bool via_slack = image && member(emb.equalities, *image);
      CHECK(via_slack == member(sys, x));
    }
  }
}
