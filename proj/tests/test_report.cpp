#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "json.hpp"
#include "qpg/numtheory.hpp"
#include "qpg/report.hpp"

using namespace qpg;

namespace {
const nt::PrimeTable& table() {
  static const nt::PrimeTable pt;
  return pt;
}
const cli::Options kDefault{};
}  // namespace

TEST_CASE("number formatting") {
  CHECK(cli::format_double(4.527873719755, false) == "4.528");
  CHECK(cli::format_double(6.0, false) == "6");
  CHECK(cli::format_fixed2(0.379721) == "0.38");
  CHECK(cli::format_fixed2(-0.0593) == "-0.06");
  // precise mode round-trips doubles
  CHECK(cli::format_double(0.1, true) == "0.10000000000000001");
}

TEST_CASE("index-table record") {
  const auto rec = cli::cmd_table1(10, 200, table());
  REQUIRE(rec.rows.size() == 11);
  CHECK(rec.columns == std::vector<std::string>{"index", "count", "values"});
  CHECK(rec.rows[0][0] == "0");
  CHECK(rec.rows[0][1] == "12");
  CHECK(rec.rows[0][2] == "1 2 3 4 5 6 8 10 12 18 24 30");
  CHECK(rec.rows[4][2] == "11 21 40 78");
}

TEST_CASE("rendering is deterministic") {
  const auto a = cli::cmd_table1(10, 200, table()).render("csv");
  const auto b = cli::cmd_table1(10, 200, table()).render("csv");
  CHECK(a == b);
  const auto c = cli::cmd_qudit_table({12}, table(), kDefault).render("json");
  const auto d = cli::cmd_qudit_table({12}, table(), kDefault).render("json");
  CHECK(c == d);
}

TEST_CASE("JSON output parses and carries the record") {
  const auto rec = cli::cmd_table1(3, 50, table());
  const auto j = nlohmann::json::parse(rec.to_json());
  CHECK(j["command"] == "table1");
  CHECK(j["columns"].size() == 3);
  CHECK(j["rows"].size() == 4);
  CHECK(j["violations_empty"] == true);
  CHECK(j["parameters"]["max_n"] == "50");
}

TEST_CASE("primorial-ratio table rows") {
  const auto rec = cli::cmd_table4({2, 10}, table(), kDefault);
  REQUIRE(rec.rows.size() == 2);
  CHECK(rec.columns ==
        std::vector<std::string>{"r", "p_r", "N", "u", "u_minus_eg"});
  CHECK(rec.rows[0][0] == "2");
  CHECK(rec.rows[0][1] == "3");
  CHECK(rec.rows[0][2] == "6e0");
  CHECK(rec.rows[0][3] == "4.528");
  CHECK(rec.rows[0][4] == "2.747");
  CHECK(rec.rows[1][1] == "29");
  CHECK(rec.rows[1][2] == "6.47e9");
  CHECK(rec.rows[1][3] == "2.016");
  CHECK(rec.rows[1][4] == "0.2346");
}

TEST_CASE("scan records") {
  const auto prop2 = cli::cmd_scan("prop2", 10000, table(), kDefault);
  CHECK(prop2.violations_empty);
  CHECK(prop2.rows.empty());

  const auto t1 = cli::cmd_scan("theorem1", 100, table(), kDefault);
  CHECK(t1.violations_empty);
  REQUIRE(t1.rows.size() == 10);
  CHECK(t1.rows[0][0] == "2");
  CHECK(t1.rows[9][0] == "30");

  const auto xc = cli::cmd_scan("x-champions", 210, table(), kDefault);
  REQUIRE(xc.rows.size() == 4);
  CHECK(xc.rows[3][0] == "210");

  const auto mg = cli::cmd_scan("max-g", 100, table(), kDefault);
  // 2,3,4,5,6,8,10,12,18,24,30,7,14,16,36,42,48,60,90 (within 100)
  REQUIRE(mg.rows.size() == 19);

  CHECK_THROWS_AS(cli::cmd_scan("bogus", 10, table(), kDefault),
                  std::domain_error);
}

TEST_CASE("graph edge payload for the smallest prime moduli") {
  const auto rec = cli::cmd_graph(3, "edges", false, table(), kDefault);
  CHECK(rec.raw == "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
  CHECK(rec.render("csv") == rec.raw);  // raw wins over format
  CHECK(rec.render("json") == rec.raw);
}

TEST_CASE("graph spectrum payload") {
  const auto rec = cli::cmd_graph(5, "spectrum", false, table(), kDefault);
  const auto j = nlohmann::json::parse(rec.raw);
  CHECK(j["order"] == 6);
  CHECK(j["edges"] == 15);
  CHECK(j["certified"] == true);
  REQUIRE(j["spectrum"].size() == 2);
  CHECK(j["spectrum"][0][0] == 5);
  CHECK(j["spectrum"][0][1] == 1);
  CHECK(j["spectrum"][1][0] == -1);
  CHECK(j["spectrum"][1][1] == 5);
  CHECK(j["class"] == "type1(q=5)");
}

TEST_CASE("graph component payload") {
  const auto rec = cli::cmd_graph(4, "components", false, table(), kDefault);
  REQUIRE(rec.rows.size() == 2);
  CHECK(rec.rows[0] == std::vector<std::string>{"6"});
  CHECK(rec.rows[1] == std::vector<std::string>{"1"});
}

TEST_CASE("qudit-table row for modulus 12") {
  const auto rec = cli::cmd_qudit_table({12}, table(), kDefault);
  REQUIRE(rec.rows.size() == 1);
  const auto& row = rec.rows[0];
  REQUIRE(row.size() == rec.columns.size());
  CHECK(row[0] == "12");
  CHECK(row[1] == "0");        // totally-Goldbach index (12 is index 0)
  CHECK(row[2] == "2");        // ordered pair count
  CHECK(row[3] == "24+4");     // free + extra maximal commuting sets
  CHECK(row[4] == "0.38");     // epsilon
  CHECK(row[8] == "type4(r=3)");
  CHECK(row[10] == "24 1 1 1 1");  // dual components: free core + 4 isolated
}
