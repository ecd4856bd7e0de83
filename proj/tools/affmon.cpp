#include "affmon/document.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

using namespace affmon;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_source(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// "builtin:NAME" or "builtin:NAME:N" names a fixture without a file.
MonoidDocument load(const std::string& path) {
  constexpr std::string_view prefix = "builtin:";
  if (path.rfind(prefix, 0) == 0) {
    std::string rest = path.substr(prefix.size());
    json j = json::object();
    if (auto colon = rest.find(':'); colon != std::string::npos) {
      j["n"] = rest.substr(colon + 1);
      rest.resize(colon);
    }
    j["builtin"] = rest;
    return parse_document(j);
  }
  return parse_document_text(read_source(path));
}

int cmd_check(const MonoidDocument& doc, const std::vector<std::string>& tokens) {
  std::string joined;
  for (const auto& t : tokens) joined += t + ' ';
  DimVector x;
  try {
    x = DimVector::parse(joined);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (x.size() != doc.k)
    throw UsageError("vector has " + std::to_string(x.size()) + " entries, document has k = " + std::to_string(doc.k));
  if (doc.kind == PayloadKind::Equations || (doc.kind == PayloadKind::Builtin && doc.fixture->system)) {
    if (auto v = first_violation(doc.equations, x)) {
      std::cout << "non-member (constraint " << *v + 1 << ")\n";
      return 1;
    }
    std::cout << "member\n";
    return 0;
  }
  if (document_predicate(doc)(x)) {
    std::cout << "member\n";
    return 0;
  }
  std::cout << "non-member\n";
  return 1;
}

int cmd_supports(const MonoidDocument& doc) {
  std::vector<IndexSet> sets;
  switch (doc.kind) {
    case PayloadKind::Equations:
      sets = infinite_support_patterns(doc.equations);
      break;
    case PayloadKind::Lattice:
      sets = FullAffineMonoid(*doc.lattice).supports();
      break;
    case PayloadKind::Supports:
      sets = doc.supports->supports;
      break;
    case PayloadKind::Builtin:
      if (!doc.fixture->system) throw UsageError("builtin '" + doc.fixture->name + "' has no equations");
      sets = infinite_support_patterns(doc.equations);
      break;
    case PayloadKind::Plan:
      throw UsageError("supports needs an equation, lattice or support-system document");
  }
  for (const auto& s : sets) std::cout << to_string(s) << '\n';
  return 0;
}

int cmd_convert(const MonoidDocument& doc, const std::string& to) {
  if (to == "supports") {
    const bool eq = doc.kind == PayloadKind::Equations || (doc.kind == PayloadKind::Builtin && doc.fixture->system);
    if (!eq) throw UsageError("convert --to supports needs an equation document");
    if (!doc.unit) throw UsageError("convert --to supports needs a unit");
    std::cout << support_system_json(eq_to_ss(doc.equations, *doc.unit)).dump(2) << '\n';
    return 0;
  }
  if (doc.kind != PayloadKind::Supports) throw UsageError("convert --to equations needs a support-system document");
  std::cout << equations_json(ss_to_eq(*doc.supports), doc.unit).dump(2) << '\n';
  return 0;
}

int cmd_realize(const MonoidDocument& doc, const Box& box) {
  const bool eq = doc.kind == PayloadKind::Equations || (doc.kind == PayloadKind::Builtin && doc.fixture->system);
  if (!eq) throw UsageError("realize needs an equation document");
  if (!doc.unit) throw UsageError("realize needs a unit");
  const PlanPtr plan = plan_system(doc.equations, *doc.unit);
  const auto witness = equal_on_box([&](const DimVector& x) { return evaluate_plan(*plan, x); },
                                    document_predicate(doc), box);
  json out = json::object();
  out["k"] = doc.k;
  out["plan"] = plan_json(*plan);
  out["description"] = describe_plan(*plan);
  out["verification"] = {{"box", box.to_string()}, {"status", witness ? "fail" : "pass"}};
  if (witness) out["verification"]["witness"] = witness->to_string();
  std::cout << out.dump(2) << '\n';
  return witness ? 1 : 0;
}

std::string describe_axioms(const AxiomReport& r) {
  if (r.passed()) return "pass";
  const auto& v = r.violations.front();
  std::string s = "fail " + v.axiom + " at " + v.witness.to_string();
  if (v.other) s += " + " + v.other->to_string();
  return s + " (" + std::to_string(r.violations.size()) + " violations)";
}

int cmd_verify(const MonoidDocument& a, const MonoidDocument& b, Box box) {
  if (a.k != b.k) throw UsageError("documents differ in k");
  box.k = a.k;
  const auto pa = document_predicate(a), pb = document_predicate(b);
  const auto witness = equal_on_box(pa, pb, box);
  std::cout << "box: " << box.to_string() << '\n';
  std::cout << "equal: " << (witness ? "fail witness " + witness->to_string() : std::string("pass")) << '\n';
  const auto ra = check_monoid_axioms(enumerate_box(pa, box), box);
  const auto rb = check_monoid_axioms(enumerate_box(pb, box), box);
  std::cout << "axioms A: " << describe_axioms(ra) << '\n';
  std::cout << "axioms B: " << describe_axioms(rb) << '\n';
  return witness || !ra.passed() || !rb.passed() ? 1 : 0;
}

int cmd_examples() {
  for (const auto& info : builtin_names()) {
    const auto e = builtin(info.name);
    std::cout << info.name << (info.parameterized ? " [n]" : "") << "  k=" << e.k
              << (e.full ? " full" : " not-full") << (e.system ? " equations" : "") << "  " << e.citation << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monoids of dimension vectors over (N0*)^k: membership, supports, conversion, realization"};
  app.require_subcommand(1);
  Box box;
  bool no_infinity = false;
  app.add_option("--box", box.bound, "box bound B for oracle checks")->capture_default_str();
  app.add_flag("--no-infinity", no_infinity, "leave inf out of oracle boxes");

  std::string doc_path, other_path, to;
  std::vector<std::string> tokens;

  auto* check = app.add_subcommand("check", "membership of a vector");
  check->add_option("document", doc_path)->required();
  check->add_option("vector", tokens, "entries, decimals or inf")->required();
  auto* supports = app.add_subcommand("supports", "infinite-support patterns or supports");
  supports->add_option("document", doc_path)->required();
  auto* convert = app.add_subcommand("convert", "equations <-> support system");
  convert->add_option("document", doc_path)->required();
  convert->add_option("--to", to)->required()->check(CLI::IsMember({"supports", "equations"}));
  auto* realize = app.add_subcommand("realize", "pullback plan for an equation system");
  realize->add_option("document", doc_path)->required();
  auto* verify = app.add_subcommand("verify", "compare two monoids on a box");
  verify->add_option("a", doc_path)->required();
  verify->add_option("b", other_path)->required();
  auto* examples = app.add_subcommand("examples", "list builtin fixtures");

  for (auto* sub : {check, supports, convert, realize, verify, examples}) {
    sub->add_option("--box", box.bound, "box bound B for oracle checks");
    sub->add_flag("--no-infinity", no_infinity, "leave inf out of oracle boxes");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  box.include_infinity = !no_infinity;

  try {
    if (*examples) return cmd_examples();
    const MonoidDocument doc = load(doc_path);
    box.k = doc.k;
    if (*check) return cmd_check(doc, tokens);
    if (*supports) return cmd_supports(doc);
    if (*convert) return cmd_convert(doc, to);
    if (*realize) return cmd_realize(doc, box);
    if (*verify) return cmd_verify(doc, load(other_path), box);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
