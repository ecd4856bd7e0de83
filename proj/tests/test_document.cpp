#include "affmon/document.hpp"

#include "support.hpp"

#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

using namespace affmon;
using nlohmann::json;
using testkit::system_predicate;

namespace {

const ExtNat inf = ExtNat::infinity();

struct RunResult {
  int status;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(AFFMON_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 512> buf{};
  while (std::fgets(buf.data(), static_cast<int>(buf.size()), pipe)) out += buf.data();
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("affmon_test_" + name + ".json");
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("parse equations") {
  const auto doc = parse_document_text(R"({"k": 2, "unit": [1, 1],
    "congruences": [{"coeffs": [1, 1], "modulus": 2}],
    "equalities": [{"lhs": [1, 0], "rhs": ["0", "1"]}]})");
  CHECK(doc.kind == PayloadKind::Equations);
  CHECK(doc.k == 2);
  CHECK(doc.unit == int_vector({1, 1}));
  CHECK(doc.equations.congruence_count() == 1);
  CHECK(doc.equations.equality_count() == 1);
  const auto pred = document_predicate(doc);
  CHECK(pred(DimVector{2, 2}));
  CHECK(pred(DimVector{inf, inf}));
  CHECK_FALSE(pred(DimVector{1, 3}));
}

TEST_CASE("big integers survive as strings") {
  const std::string big = "123456789012345678901234567890";
  const auto doc = parse_document_text(R"({"k": 1, "congruences": [{"coeffs": [1], "modulus": ")" + big + R"("}]})");
  CHECK(doc.equations.moduli()(0) == Integer(big));
  const json back = equations_json(doc.equations);
  CHECK(back["congruences"][0]["modulus"] == big);
  CHECK(integer_json(Integer(7)) == 7);
}

TEST_CASE("malformed documents") {
  CHECK_THROWS_AS(parse_document_text("[1,2]"), DocumentError);
  CHECK_THROWS_AS(parse_document_text("{not json"), DocumentError);
  CHECK_THROWS_AS(parse_document_text(R"({"unit": [1]})"), DocumentError);
  CHECK_THROWS_AS(parse_document_text(R"({"k": 2, "equalities": [{"lhs": [1], "rhs": [0, 1]}]})"), DocumentError);
  CHECK_THROWS_AS(parse_document_text(R"({"k": 2, "equalities": [{"lhs": [-1, 0], "rhs": [0, 1]}]})"), DocumentError);
  CHECK_THROWS_AS(parse_document_text(R"({"k": 1, "congruences": [{"coeffs": [1], "modulus": 1}]})"), DocumentError);
  CHECK_THROWS_AS(parse_document_text(R"({"k": 2, "lattice": [[1, 1]], "builtin": "nk2-0"})"), DocumentError);
  CHECK_THROWS_AS(parse_document_text(R"({"builtin": "no-such-fixture"})"), DocumentError);
  CHECK_THROWS_AS(parse_document_text(R"({"k": 1, "congruences": [{"coeffs": [1], "modulus": "x"}]})"), DocumentError);
}

TEST_CASE("lattice and builtin payloads") {
  const auto lat = parse_document_text(R"({"k": 2, "lattice": [[2, 0], [1, 1]]})");
  CHECK(lat.kind == PayloadKind::Lattice);
  const auto pred = document_predicate(lat);
  CHECK(pred(DimVector{3, 1}));
  CHECK_FALSE(pred(DimVector{1, 0}));
  CHECK_FALSE(pred(DimVector{inf, inf}));

  const auto fx = parse_document_text(R"({"builtin": "free", "n": 3})");
  CHECK(fx.kind == PayloadKind::Builtin);
  CHECK(document_predicate(fx)(DimVector{3, 0}));
  CHECK_FALSE(document_predicate(fx)(DimVector{2, 0}));
}

TEST_CASE("round trips") {
  const Box box{2, 4, true};
  const auto fixture = builtin("nk2-2");
  const auto ss = eq_to_ss(*fixture.system, fixture.unit);

  const auto eq_doc = parse_document(equations_json(*fixture.system, fixture.unit));
  CHECK(eq_doc.equations == *fixture.system);

  const auto ss_doc = parse_document(support_system_json(ss));
  REQUIRE(ss_doc.supports);
  CHECK(ss_doc.supports->supports == ss.supports);
  CHECK_FALSE(equal_on_box(document_predicate(ss_doc), fixture.predicate, box));

  const auto plan = plan_system(*fixture.system, fixture.unit);
  const auto plan_doc = parse_document(json{{"plan", plan_json(*plan)}});
  CHECK(plan_json(*plan_doc.plan) == plan_json(*plan));
  CHECK_FALSE(equal_on_box(document_predicate(plan_doc), fixture.predicate, box));

  CHECK(index_set_json({0, 2}) == json::array({1, 3}));
}

TEST_CASE("support system documents accept generators and equation blocks") {
  const auto doc = parse_document_text(R"({"k": 2, "unit": [1, 1], "support_system": {
    "supports": [[], [2], [1, 2]],
    "monoids": {"{}": {"generators": [[1, 1]]},
                "{2}": {"equalities": [], "congruences": []},
                "{1,2}": {"lattice": []}}}})");
  const auto pred = document_predicate(doc);
  CHECK(pred(DimVector{3, inf}));
  CHECK_FALSE(pred(DimVector{inf, 3}));
}

TEST_CASE("cli: exit codes and output") {
  auto r = run("check builtin:worked-2 inf 3");
  CHECK(r.status == 0);
  CHECK(r.out == "member\n");

  r = run("check builtin:worked-1 1 2");
  CHECK(r.status == 1);
  CHECK(r.out == "non-member (constraint 1)\n");

  r = run("verify --box 1 builtin:worked-1 builtin:worked-2");
  CHECK(r.status == 1);
  CHECK(r.out.find("box: {0..1,inf}^2") != std::string::npos);
  CHECK(r.out.find("equal: fail witness inf 0") != std::string::npos);

  r = run("verify builtin:free:2 builtin:free:2");
  CHECK(r.status == 0);
  CHECK(r.out.find("equal: pass") != std::string::npos);

  CHECK(run("check builtin:bogus 1 1").status == 2);
  CHECK(run("check builtin:worked-1 1").status == 2);
  CHECK(run("frobnicate").status == 2);

  r = run("supports builtin:nk2-2");
  CHECK(r.status == 0);
  CHECK(r.out == "{}\n{1}\n{1,2}\n{2}\n");

  r = run("examples");
  CHECK(r.status == 0);
  CHECK(r.out.find("nodiv-right") != std::string::npos);
}

TEST_CASE("cli: convert round trip through files") {
  const auto eq_path = write_temp("w2", R"({"k": 2, "unit": [1, 1], "equalities": [{"lhs": [2, 0], "rhs": [1, 1]}]})");
  auto r = run("convert --to supports " + eq_path);
  REQUIRE(r.status == 0);
  const auto ss_path = write_temp("w2_ss", r.out);
  r = run("convert --to equations " + ss_path);
  REQUIRE(r.status == 0);
  const auto back_path = write_temp("w2_back", r.out);
  r = run("verify " + eq_path + " " + back_path);
  CHECK(r.status == 0);

  r = run("realize builtin:worked-3");
  REQUIRE(r.status == 0);
  const auto out = json::parse(r.out);
  CHECK(out["verification"]["status"] == "pass");
  CHECK(out["k"] == 2);

  CHECK(run("convert --to supports " + write_temp("broken", "{")).status == 2);
}
