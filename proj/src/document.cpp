#include "affmon/document.hpp"

#include <limits>

namespace affmon {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& msg) { throw DocumentError(msg); }

Integer parse_integer(const json& j, const std::string& where) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>()) : Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    const bool ok = !s.empty() && std::all_of(s.begin() + (s[0] == '-' ? 1 : 0), s.end(),
                                              [](char c) { return c >= '0' && c <= '9'; }) &&
                    s != "-";
    if (!ok) fail(where + ": '" + s + "' is not an integer");
    return Integer(s);
  }
  fail(where + ": expected an integer, got " + j.dump());
}

IntVector parse_vector(const json& j, std::size_t k, const std::string& where) {
  if (!j.is_array()) fail(where + ": expected an array");
  if (j.size() != k) fail(where + ": expected " + std::to_string(k) + " entries, got " + std::to_string(j.size()));
  IntVector v(static_cast<Eigen::Index>(k));
  for (std::size_t i = 0; i < k; ++i) v(static_cast<Eigen::Index>(i)) = parse_integer(j[i], where);
  return v;
}

IntMatrix parse_rows(const json& j, std::size_t k, const std::string& where) {
  if (!j.is_array()) fail(where + ": expected an array of rows");
  IntMatrix m(static_cast<Eigen::Index>(j.size()), static_cast<Eigen::Index>(k));
  for (std::size_t i = 0; i < j.size(); ++i)
    m.row(static_cast<Eigen::Index>(i)) = parse_vector(j[i], k, where).transpose();
  return m;
}

std::size_t parse_size(const json& j, const std::string& where) {
  const Integer v = parse_integer(j, where);
  if (v < 0 || v > 64) fail(where + ": out of range");
  return v.convert_to<std::size_t>();
}

EqSystem parse_equations(const json& j, std::size_t k, const std::string& where) {
  EqSystem sys(k);
  try {
    if (j.contains("congruences"))
      for (const auto& c : j.at("congruences")) {
        if (!c.is_object() || !c.contains("coeffs") || !c.contains("modulus"))
          fail(where + ": congruence needs coeffs and modulus");
        sys.add_congruence(parse_vector(c.at("coeffs"), k, where + " congruence"),
                           parse_integer(c.at("modulus"), where + " modulus"));
      }
    if (j.contains("equalities"))
      for (const auto& e : j.at("equalities")) {
        if (!e.is_object() || !e.contains("lhs") || !e.contains("rhs")) fail(where + ": equality needs lhs and rhs");
        sys.add_equality(parse_vector(e.at("lhs"), k, where + " lhs"), parse_vector(e.at("rhs"), k, where + " rhs"));
      }
  } catch (const std::invalid_argument& e) {
    fail(where + ": " + e.what());
  }
  return sys;
}

IndexSet parse_set(const json& j, std::size_t k, const std::string& where) {
  try {
    if (j.is_string()) return parse_index_set(j.get<std::string>(), k);
    if (!j.is_array()) fail(where + ": index set must be an array or a string");
    std::vector<std::size_t> items;
    for (const auto& x : j) {
      const Integer v = parse_integer(x, where);
      if (v < 1 || v > static_cast<long>(k)) fail(where + ": index " + v.str() + " out of range");
      items.push_back(v.convert_to<std::size_t>() - 1);
    }
    return make_index_set(std::move(items));
  } catch (const std::invalid_argument& e) {
    fail(where + ": " + e.what());
  }
}

FullAffineMonoid parse_monoid(const json& j, std::size_t dim, const std::string& where) {
  if (!j.is_object()) fail(where + ": monoid must be an object");
  const bool lattice = j.contains("lattice") || j.contains("generators");
  const bool eqs = j.contains("congruences") || j.contains("equalities");
  if (lattice == eqs) fail(where + ": give either generators or equations");
  if (lattice) {
    const auto& rows = j.contains("lattice") ? j.at("lattice") : j.at("generators");
    return FullAffineMonoid(LatticeBasis(dim, parse_rows(rows, dim, where)));
  }
  return FullAffineMonoid(solution_lattice(parse_equations(j, dim, where)));
}

SupportSystem parse_support_system(const json& j, std::size_t k, const IntVector& unit) {
  if (!j.is_object() || !j.contains("supports")) fail("support_system: needs supports");
  SupportSystem ss;
  ss.k = k;
  ss.unit = unit;
  for (const auto& s : j.at("supports")) ss.supports.push_back(parse_set(s, k, "support_system.supports"));
  std::sort(ss.supports.begin(), ss.supports.end());
  ss.supports.erase(std::unique(ss.supports.begin(), ss.supports.end()), ss.supports.end());
  if (j.contains("monoids")) {
    const auto& monoids = j.at("monoids");
    if (!monoids.is_object()) fail("support_system.monoids: expected an object");
    for (const auto& [key, value] : monoids.items()) {
      const IndexSet s = parse_set(json(key), k, "support_system.monoids key");
      ss.monoids.emplace(s, parse_monoid(value, k - s.size(), "support_system.monoids " + key));
    }
  }
  return ss;
}

PlanPtr parse_plan(const json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("kind")) fail(where + ": plan node needs a kind");
  const auto kind = j.at("kind").get<std::string>();
  try {
    if (kind == "free-cyclic") return free_cyclic_leaf(parse_integer(j.at("modulus"), where), parse_integer(j.at("unit").at(0), where));
    if (kind == "free-diagonal") return free_diagonal_leaf(parse_integer(j.at("unit").at(0), where));
    if (kind == "semisimple") {
      const auto& u = j.at("unit");
      return semisimple_leaf(parse_vector(u, u.size(), where));
    }
    if (kind == "pullback") {
      auto top = parse_plan(j.at("top"), where + ".top");
      auto bottom = parse_plan(j.at("bottom"), where + ".bottom");
      auto node = pullback(top, parse_rows(j.at("inducing"), bottom->k, where + ".inducing"), bottom);
      auto p = std::make_shared<RealizationPlan>(*node);
      if (j.contains("a")) p->a = parse_vector(j.at("a"), p->k, where + ".a");
      if (j.contains("b")) p->b = parse_vector(j.at("b"), p->k, where + ".b");
      if (j.contains("ell")) p->ell = parse_integer(j.at("ell"), where + ".ell");
      return p;
    }
  } catch (const json::exception& e) {
    fail(where + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    fail(where + ": " + e.what());
  }
  fail(where + ": unknown plan kind '" + kind + "'");
}

}  // namespace

MonoidDocument parse_document(const json& j) {
  if (!j.is_object()) fail("document must be a JSON object");
  MonoidDocument doc;
  const bool has_eq = j.contains("congruences") || j.contains("equalities");
  const int payloads = int(has_eq) + int(j.contains("support_system")) + int(j.contains("lattice")) +
                       int(j.contains("plan")) + int(j.contains("builtin"));
  if (payloads > 1) fail("document has more than one payload");

  if (j.contains("builtin")) {
    if (!j.at("builtin").is_string()) fail("builtin: expected a name");
    const unsigned n = j.contains("n") ? static_cast<unsigned>(parse_size(j.at("n"), "n")) : 2;
    try {
      doc.fixture = builtin(j.at("builtin").get<std::string>(), n);
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
    doc.kind = PayloadKind::Builtin;
    doc.k = doc.fixture->k;
    doc.unit = doc.fixture->unit;
    if (doc.fixture->system) doc.equations = *doc.fixture->system;
    return doc;
  }

  if (j.contains("plan")) {
    doc.plan = parse_plan(j.at("plan"), "plan");
    doc.kind = PayloadKind::Plan;
    doc.k = doc.plan->k;
    if (j.contains("k") && parse_size(j.at("k"), "k") != doc.k) fail("k does not match the plan dimension");
    doc.unit = doc.plan->unit;
    return doc;
  }

  if (!j.contains("k")) fail("document needs k");
  doc.k = parse_size(j.at("k"), "k");
  if (j.contains("unit")) doc.unit = parse_vector(j.at("unit"), doc.k, "unit");

  if (j.contains("support_system")) {
    if (!doc.unit) fail("support_system needs a unit");
    doc.kind = PayloadKind::Supports;
    doc.supports = parse_support_system(j.at("support_system"), doc.k, *doc.unit);
  } else if (j.contains("lattice")) {
    doc.kind = PayloadKind::Lattice;
    doc.lattice = LatticeBasis(doc.k, parse_rows(j.at("lattice"), doc.k, "lattice"));
  } else {
    doc.kind = PayloadKind::Equations;
    doc.equations = parse_equations(j, doc.k, "equations");
  }
  return doc;
}

MonoidDocument parse_document_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
  try {
    return parse_document(j);
  } catch (const json::exception& e) {
    fail(e.what());
  }
}

Predicate document_predicate(const MonoidDocument& doc) {
  switch (doc.kind) {
    case PayloadKind::Equations:
      return [sys = doc.equations](const DimVector& x) { return member(sys, x); };
    case PayloadKind::Supports:
      return [ss = *doc.supports](const DimVector& x) { return member_MS(ss, x); };
    case PayloadKind::Lattice:
      return [a = FullAffineMonoid(*doc.lattice)](const DimVector& x) { return a.contains(x); };
    case PayloadKind::Plan:
      return [p = doc.plan](const DimVector& x) { return evaluate_plan(*p, x); };
    case PayloadKind::Builtin:
      return doc.fixture->predicate;
  }
  return {};
}

json integer_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return x.convert_to<std::int64_t>();
  return x.str();
}

json vector_json(const IntVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(integer_json(v(i)));
  return out;
}

json index_set_json(const IndexSet& s) {
  json out = json::array();
  for (auto i : s) out.push_back(i + 1);
  return out;
}

namespace {

json rows_json(const IntMatrix& m) {
  json out = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) out.push_back(vector_json(m.row(i).transpose()));
  return out;
}

void put_equations(json& out, const EqSystem& sys) {
  out["congruences"] = json::array();
  for (Eigen::Index i = 0; i < sys.congruence_rows().rows(); ++i)
    out["congruences"].push_back(
        {{"coeffs", vector_json(sys.congruence_rows().row(i).transpose())}, {"modulus", integer_json(sys.moduli()(i))}});
  out["equalities"] = json::array();
  for (Eigen::Index i = 0; i < sys.lhs().rows(); ++i)
    out["equalities"].push_back(
        {{"lhs", vector_json(sys.lhs().row(i).transpose())}, {"rhs", vector_json(sys.rhs().row(i).transpose())}});
}

}  // namespace

json equations_json(const EqSystem& sys, const std::optional<IntVector>& unit) {
  json out = json::object();
  out["k"] = sys.dimension();
  if (unit) out["unit"] = vector_json(*unit);
  put_equations(out, sys);
  return out;
}

json support_system_json(const SupportSystem& ss) {
  json block = json::object();
  block["supports"] = json::array();
  for (const auto& s : ss.supports) block["supports"].push_back(index_set_json(s));
  block["monoids"] = json::object();
  for (const auto& [s, m] : ss.monoids) block["monoids"][to_string(s)] = {{"lattice", rows_json(m.lattice().rows())}};
  json out = json::object();
  out["k"] = ss.k;
  out["unit"] = vector_json(ss.unit);
  out["support_system"] = block;
  return out;
}

json plan_json(const RealizationPlan& plan) {
  using Kind = RealizationPlan::Kind;
  json out = json::object();
  switch (plan.kind) {
    case Kind::FreeCyclic:
      out["kind"] = "free-cyclic";
      out["modulus"] = integer_json(plan.modulus);
      break;
    case Kind::FreeDiagonal:
      out["kind"] = "free-diagonal";
      break;
    case Kind::Semisimple:
      out["kind"] = "semisimple";
      break;
    case Kind::Pullback:
      out["kind"] = "pullback";
      out["inducing"] = rows_json(plan.inducing);
      if (plan.a.size() > 0) {
        out["a"] = vector_json(plan.a);
        out["ell"] = integer_json(plan.ell);
      }
      if (plan.b.size() > 0) out["b"] = vector_json(plan.b);
      out["top"] = plan_json(*plan.top);
      out["bottom"] = plan_json(*plan.bottom);
      break;
  }
  out["unit"] = vector_json(plan.unit);
  return out;
}

}  // namespace affmon
