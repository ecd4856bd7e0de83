#include "affmon/oracle.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <stdexcept>

namespace affmon {

namespace {

std::vector<ExtNat> coordinate_values(const Box& box) {
  std::vector<ExtNat> v;
  for (unsigned i = 0; i <= box.bound; ++i) v.emplace_back(static_cast<long>(i));
  if (box.include_infinity) v.push_back(ExtNat::infinity());
  return v;
}

// Calls f on every point with the first coordinate fixed, in box order.
template <class F>
void for_each_with_head(const Box& box, const std::vector<ExtNat>& values, const ExtNat& head, F f) {
  std::vector<std::size_t> idx(box.k, 0);
  DimVector x(box.k);
  x[0] = head;
  for (;;) {
    for (std::size_t i = 1; i < box.k; ++i) x[i] = values[idx[i]];
    f(x);
    std::size_t i = box.k;
    while (i > 1 && idx[i - 1] + 1 == values.size()) idx[--i] = 0;
    if (i <= 1) return;
    ++idx[i - 1];
  }
}

template <class F>
auto parallel_by_head(const Box& box, F per_head) {
  const auto values = coordinate_values(box);
  using Result = decltype(per_head(values, values.front()));
  std::vector<std::future<Result>> jobs;
  for (const auto& head : values)
    jobs.push_back(std::async(std::launch::async, [&, head] { return per_head(values, head); }));
  std::vector<Result> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

bool geq(const DimVector& x, std::size_t i, std::size_t j) { return x[i] >= x[j]; }

EqSystem single_equation(std::initializer_list<long> lhs, std::initializer_list<long> rhs) {
  EqSystem sys(lhs.size());
  sys.add_equality(int_vector(lhs), int_vector(rhs));
  return sys;
}

EqSystem free_congruence(unsigned n) {
  EqSystem sys(2);
  sys.add_congruence(int_vector({1, static_cast<long>(n) - 1}), Integer(n));
  return sys;
}

}  // namespace

std::size_t Box::size() const {
  std::size_t per = bound + 1 + (include_infinity ? 1 : 0), total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= per;
  return total;
}

bool Box::contains(const DimVector& x) const {
  if (x.size() != k) return false;
  return std::all_of(x.begin(), x.end(), [&](const ExtNat& v) {
    return v.is_infinite() ? include_infinity : v.value() <= bound;
  });
}

std::string Box::to_string() const {
  return "{0.." + std::to_string(bound) + (include_infinity ? ",inf" : "") + "}^" + std::to_string(k);
}

std::vector<DimVector> box_points(const Box& box) {
  return enumerate_box([](const DimVector&) { return true; }, box);
}

std::vector<DimVector> enumerate_box(const Predicate& pred, const Box& box) {
  if (box.k == 0) return pred(DimVector()) ? std::vector<DimVector>{DimVector()} : std::vector<DimVector>{};
  auto parts = parallel_by_head(box, [&](const std::vector<ExtNat>& values, const ExtNat& head) {
    std::vector<DimVector> found;
    for_each_with_head(box, values, head, [&](const DimVector& x) {
      if (pred(x)) found.push_back(x);
    });
    return found;
  });
  std::vector<DimVector> out;
  for (auto& p : parts) out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  return out;
}

AxiomReport check_monoid_axioms(const std::vector<DimVector>& members, const Box& box) {
  AxiomReport report{box, {}};
  const std::set<DimVector> in(members.begin(), members.end());
  if (!in.count(DimVector(box.k))) report.violations.push_back({"zero", DimVector(box.k), std::nullopt});
  for (const auto& a : members)
    for (const auto& b : members) {
      if (b < a) continue;
      const DimVector s = a + b;
      if (box.contains(s) && !in.count(s)) report.violations.push_back({"closure", a, b});
    }
  if (box.include_infinity)
    for (const auto& a : members) {
      if (!in.count(star(a))) report.violations.push_back({"M1", a, std::nullopt});
      if (!in.count(inf_scale(a))) report.violations.push_back({"M2", a, std::nullopt});
    }
  return report;
}

std::optional<DimVector> equal_on_box(const Predicate& a, const Predicate& b, const Box& box) {
  const auto diff = enumerate_box([&](const DimVector& x) { return a(x) != b(x); }, box);
  if (diff.empty()) return std::nullopt;
  return diff.front();
}

std::optional<FullnessWitness> fullness_check(const std::vector<DimVector>& members, const Box& box) {
  std::vector<DimVector> finite;
  std::copy_if(members.begin(), members.end(), std::back_inserter(finite),
               [](const DimVector& x) { return x.is_finite(); });
  const std::set<DimVector> in(finite.begin(), finite.end());
  Box finite_box = box;
  finite_box.include_infinity = false;
  const auto outside = enumerate_box([&](const DimVector& t) { return !in.count(t); }, finite_box);
  for (const auto& a : finite)
    for (const auto& t : outside)
      if (in.count(a + t)) return FullnessWitness{a, t};
  return std::nullopt;
}

std::vector<DimVector> minimal_members(const std::vector<DimVector>& members, const Box& box) {
  const DimVector zero(box.k);
  std::vector<DimVector> out;
  for (const auto& m : members) {
    if (m == zero || !box.contains(m)) continue;
    const bool minimal = std::none_of(members.begin(), members.end(), [&](const DimVector& o) {
      return o != zero && o != m && box.contains(o) && componentwise_leq(o, m);
    });
    if (minimal) out.push_back(m);
  }
  return out;
}

FixtureEntry builtin(const std::string& name, unsigned n) {
  if (n < 2) throw std::invalid_argument("builtin: parameter n must be at least 2");
  const long nn = n;
  const auto inf = [](const DimVector& x, std::size_t i) { return x[i].is_infinite(); };
  const auto congruent = [nn](const DimVector& x) {
    return x[0].is_infinite() || x[1].is_infinite() || (x[0].value() + (nn - 1) * x[1].value()) % nn == 0;
  };
  FixtureEntry e;
  e.name = name;
  e.k = 2;
  e.unit = int_vector({1, 1});

  auto equation = [&](EqSystem sys, Predicate p, std::string cite) {
    e.system = std::move(sys);
    e.predicate = std::move(p);
    e.citation = std::move(cite);
  };

  if (name == "nk2-0" || name == "worked-1") {
    equation(single_equation({1, 0}, {0, 1}), [](const DimVector& x) { return x[0] == x[1]; },
             name == "nk2-0" ? "rank-one diagonal monoid (1,1)N0*, two simple factors"
                             : "worked example: solutions of x = y");
  } else if (name == "nk2-1") {
    equation(single_equation({1, 1}, {0, 2}), [=](const DimVector& x) { return x[0] == x[1] || inf(x, 1); },
             "(1,1)N0* + (0,inf)N0*, solutions of x + y = 2y");
  } else if (name == "nk2-1p") {
    equation(single_equation({1, 1}, {2, 0}), [=](const DimVector& x) { return x[0] == x[1] || inf(x, 0); },
             "(1,1)N0* + (inf,0)N0*, solutions of x + y = 2x");
  } else if (name == "nk2-2" || name == "worked-3") {
    equation(single_equation({2, 1}, {1, 2}),
             [=](const DimVector& x) { return x[0] == x[1] || inf(x, 0) || inf(x, 1); },
             name == "nk2-2" ? "(1,1)N0* + (inf,0)N0* + (0,inf)N0*, solutions of 2x + y = x + 2y"
                             : "worked example: solutions of 2x + y = x + 2y");
  } else if (name == "worked-2") {
    equation(single_equation({2, 0}, {1, 1}), [=](const DimVector& x) { return x[0] == x[1] || inf(x, 0); },
             "worked example: solutions of 2x = x + y");
  } else if (name == "free") {
    equation(free_congruence(n), congruent,
             "(1,1)N0* + (n,0)N0* + (0,n)N0*, solutions of x + (n-1)y in nN0*");
  } else if (name == "gs-right" || name == "gs-left") {
    const bool right = name == "gs-right";
    e.full = false;
    e.predicate = [right](const DimVector& x) { return right ? geq(x, 0, 1) : geq(x, 1, 0); };
    e.citation = right ? "{x >= y} = (1,1)N0* + (1,0)N0*, right modules over a semilocal algebra"
                       : "{y >= x} = (1,1)N0* + (0,1)N0*, left modules over a semilocal algebra";
  } else if (name == "noniso-right" || name == "noniso-left") {
    const bool right = name == "noniso-right";
    e.full = false;
    e.predicate = [=](const DimVector& x) { return (right ? geq(x, 0, 1) : geq(x, 1, 0)) && congruent(x); };
    e.citation = right ? "N1 = (1,1)N0* + (n,0)N0*: x >= y and x + (n-1)y in nN0*"
                       : "N2 = (1,1)N0* + (0,n)N0*: x <= y and x + (n-1)y in nN0*";
  } else if (name == "noniso-ii-right" || name == "noniso-ii-left") {
    const bool right = name == "noniso-ii-right";
    e.full = false;
    e.predicate = [=](const DimVector& x) {
      const DimVector f{Integer(2) * x[0] + x[1], Integer(2) * x[1] + x[0]};
      return (right ? geq(f, 0, 1) : geq(f, 1, 0)) && congruent(x);
    };
    e.citation = right ? "N1 + (0,inf)N0*: 2x + y >= 2y + x and x + (n-1)y in nN0*"
                       : "N2 + (inf,0)N0*: 2x + y <= 2y + x and x + (n-1)y in nN0*";
  } else if (name == "nodiv-right" || name == "nodiv-left") {
    const bool right = name == "nodiv-right";
    e.k = 3;
    e.unit = int_vector({1, 1, 1});
    e.full = false;
    e.predicate = [right](const DimVector& x) {
      return right ? geq(x, 0, 1) && geq(x, 1, 2) : geq(x, 1, 0) && geq(x, 2, 1);
    };
    e.citation = right ? "M1 = {x >= y >= z}: (1,0,0) <= (1,1,0) without a complement in M1"
                       : "M2 = {x <= y <= z}";
  } else {
    throw std::invalid_argument("unknown builtin '" + name + "'");
  }
  return e;
}

std::vector<FixtureInfo> builtin_names() {
  return {{"nk2-0", false},          {"nk2-1", false},         {"nk2-1p", false},      {"nk2-2", false},
          {"worked-1", false},       {"worked-2", false},      {"worked-3", false},    {"free", true},
          {"gs-right", false},       {"gs-left", false},       {"noniso-right", true}, {"noniso-left", true},
          {"noniso-ii-right", true}, {"noniso-ii-left", true}, {"nodiv-right", false}, {"nodiv-left", false}};
}

}  // namespace affmon
