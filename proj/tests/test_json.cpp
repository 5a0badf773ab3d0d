#include <fstream>

#include <doctest.h>

#include "qfe/json_io.hpp"

using namespace qfe;

TEST_CASE("condition serialization") {
  auto cs = conditions(EquationId{5, 10, ""});
  auto j = to_json(cs);
  REQUIRE(j.is_array());
  CHECK(j[0] == json{{"kind", "group"}, {"abelian", false}});
  CHECK(j[1] == json{{"kind", "constCompat"}});
  CHECK(j[2]["kind"] == "linear");
  CHECK(j[2]["variable"] == "x");
  bool saw_sandwich = false, saw_twist = false;
  for (const auto& c : j) {
    if (c["kind"] == "sandwich") {
      saw_sandwich = true;
      CHECK((c["constantIndex"] == 1 || c["constantIndex"] == 2));
      CHECK(c["first"].is_array());
    }
    if (c["kind"] == "dualTwist") saw_twist = true;
  }
  CHECK(saw_sandwich);
  CHECK(saw_twist);
}

TEST_CASE("branch words serialize as symbol arrays") {
  auto e = catalog(EquationId{4, 1, ""});
  CHECK(to_json(lbranch("x", e)) == json::array({"a1", "a2"}));
}

TEST_CASE("graph serialization is stable") {
  auto g = build_graph(catalog(EquationId{4, 1, ""}));
  auto j = to_json(g);
  CHECK(j["vertices"].size() == 6);
  CHECK(j["edges"].size() == 9);
  CHECK(j["edges"][0].contains("u"));
  CHECK(j["edges"][0].contains("label"));
  CHECK(j.dump() == to_json(build_graph(catalog(EquationId{4, 1, ""}))).dump());
}

TEST_CASE("solution pair serialization") {
  auto pairs = synthesize(EquationId{4, 1, ""}, make_group("Z3"), 1);
  REQUIRE(pairs.size() == 1);
  auto j = to_json(pairs[0]);
  CHECK(j["group"]["spec"] == "Z3");
  CHECK(j["ops"].size() == 2);
  CHECK(j["ops"][0]["alpha"].is_array());
  CHECK(j["ops"][0].contains("c"));
  CHECK(j["ops"][0].contains("reversed"));
  CHECK(j["ops"][0]["table"].size() == 3);
  CHECK(j["verified"] == true);
}

TEST_CASE("file ingestion") {
  {
    std::ofstream out("/tmp/qfe_tables.json");
    out << R"({"order":2,"tables":[[[0,1],[1,0]],[[1,0],[0,1]]]})";
  }
  auto ts = tables_from_file("/tmp/qfe_tables.json");
  REQUIRE(ts.size() == 2);
  CHECK(ts[0].n == 2);
  CHECK(ts[1].at(0, 0) == 1);

  {
    std::ofstream out("/tmp/qfe_algebra.json");
    out << R"({"order":2,"operations":[[[0,1],[1,0]]]})";
  }
  auto a = algebra_from_file("/tmp/qfe_algebra.json");
  CHECK(a.n == 2);
  CHECK(a.operations.size() == 1);

  // malformed inputs are rejected with domain errors
  {
    std::ofstream out("/tmp/qfe_bad.json");
    out << R"({"order":2,"tables":[[[0,7],[1,0]]]})";  // entry out of range
  }
  CHECK_THROWS_AS(tables_from_file("/tmp/qfe_bad.json"), Error);
  {
    std::ofstream out("/tmp/qfe_bad2.json");
    out << "not json";
  }
  CHECK_THROWS_AS(tables_from_file("/tmp/qfe_bad2.json"), Error);
  CHECK_THROWS_AS(tables_from_file("/tmp/qfe_nonexistent.json"), Error);

  // non-Latin tables are allowed through: verification finds the break
  {
    std::ofstream out("/tmp/qfe_notlatin.json");
    out << R"({"order":2,"tables":[[[0,0],[1,1]]]})";
  }
  CHECK(tables_from_file("/tmp/qfe_notlatin.json").size() == 1);
}

TEST_CASE("table specs") {
  CHECK(table_from_spec("Z4").n == 4);
  CHECK(table_from_spec("sloop10").n == 10);
  CHECK_THROWS_AS(table_from_spec("mystery"), Error);
}
