#include <optional>

#include "amphichiral/build.hpp"
#include "amphichiral/error.hpp"
#include "amphichiral/report.hpp"
#include "doctest.h"
#include "json.hpp"
#include "support.hpp"

using namespace amphi;
using nlohmann::json;

TEST_CASE("configuration") {
  const RunConfig d = default_config();
  CHECK(d.iso_mode == GraphIsoMode::Abstract);
  CHECK_FALSE(d.reflection.allow_reflection);
  CHECK(d.threads >= 1);
  CHECK(d.max_orbit >= 16);

  RunConfig c = d;
  apply_config_json(c, R"({"iso_mode":"embedded","reflection":true,"max_orbit":50,"threads":3,"format":"table"})");
  CHECK(c.iso_mode == GraphIsoMode::Embedded);
  CHECK(c.reflection.allow_reflection);
  CHECK(c.max_orbit == 50);
  CHECK(c.threads == 3);
  CHECK(c.format == OutputFormat::Table);

  RunConfig back = default_config();
  apply_config_json(back, config_to_json(c));
  CHECK(config_to_json(back) == config_to_json(c));

  auto kind_of = [](const char* text) -> std::optional<ErrorKind> {
    RunConfig x = default_config();
    try {
      apply_config_json(x, text);
    } catch (const Error& e) {
      return e.kind();
    }
    return std::nullopt;
  };
  CHECK(kind_of("{") == ErrorKind::Parse);
  CHECK(kind_of(R"({"max_orbit":0})") == ErrorKind::InvalidArgument);
  CHECK(kind_of(R"({"threads":0})") == ErrorKind::InvalidArgument);
  CHECK(kind_of(R"({"iso_mode":"planar"})") == ErrorKind::InvalidArgument);
  CHECK_THROWS_AS(parse_output_format("xml"), Error);
  CHECK(parse_output_format("dot") == OutputFormat::Dot);
}

TEST_CASE("classify report") {
  const json j = json::parse(report_classify(fixtures::kDH, default_config()));
  CHECK(j["input"] == fixtures::kDH);
  const json& v = j["verdict"];
  CHECK(v["crossings"] == 14);
  CHECK(v["orbit_size"] == 4);
  CHECK(v["labeled_orbit_size"] == 16);
  CHECK(v["amphicheiral"] == true);
  CHECK(v["dh_link"] == true);
  CHECK(v["self_dual_diagrams"].empty());
  CHECK(v["single_diagram_criterion"].is_null());
  CHECK(v["iso_mode"] == "abstract");
  CHECK(v["mirror_diagram"].is_number_integer());
  for (const auto& p : v["cross_dual_pairs"]) CHECK(p.size() == 2);
  CHECK_FALSE(j.contains("oracle"));
  CHECK_FALSE(j["config"].contains("threads"));

  const json m = json::parse(report_classify(fixtures::kMutantAmph, default_config()));
  CHECK(m["verdict"]["single_diagram_criterion"] == true);
  CHECK(m["verdict"]["self_dual_diagrams"] == json::array({1}));

  RunConfig oracle = default_config();
  oracle.oracle_checks = true;
  const json o = json::parse(report_classify("2 2", oracle));
  CHECK(o["oracle"]["raw_constant_on_orbit"] == true);
  CHECK(o["oracle"]["mirror_symmetric"] == true);
  CHECK(o["oracle"]["consistent_with_verdict"] == true);

  RunConfig table = default_config();
  table.format = OutputFormat::Table;
  const std::string t = report_classify("3", table);
  CHECK(t.find("amphicheiral") != std::string::npos);
  CHECK_FALSE(json::accept(t));

  CHECK_THROWS_AS(report_classify("not a tangle", default_config()), ParseError);
  CHECK_THROWS_AS(report_classify("3 0", default_config()), Error);
}

TEST_CASE("orbit report") {
  const json j = json::parse(report_orbit(fixtures::kDH, default_config(), {fixtures::kDHDiagrams[2], "3"}));
  CHECK(j["orbit_size"] == 4);
  CHECK(j["complete"] == true);
  REQUIRE(j["diagrams"].size() == 4);
  CHECK(j["diagrams"][0]["index"] == 1);
  CHECK(j["diagrams"][0]["path"] == json::array({1}));
  CHECK(j["diagrams"][0]["pd"].is_object());
  CHECK(j["not_in_orbit"] == json::array({"3"}));
  int labeled = 0;
  for (const auto& d : j["diagrams"]) labeled += static_cast<int>(d["labeled_members"].get<int>());
  CHECK(labeled == j["labeled_orbit_size"].get<int>());
}

TEST_CASE("graph export") {
  const RunConfig c = default_config();
  auto both = report_graphs(fixtures::kMutantAmph, GraphSelection::Both, c);
  REQUIRE(both.size() == 2);
  CHECK(both[0].name == "G_1.json");
  CHECK(both[1].name == "Gstar_1.json");
  RunConfig dot = c;
  dot.format = OutputFormat::Dot;
  const auto all = report_graphs(fixtures::kDH, GraphSelection::AllOrbit, dot);
  CHECK(all.size() == 8);
  for (const auto& g : all) CHECK(g.name.ends_with(".dot"));
  CHECK(report_graphs(Diagram::unknot(), GraphSelection::G, c).size() == 1);
  CHECK(parse_graph_selection("Gdual") == GraphSelection::GDual);
  CHECK_THROWS_AS(parse_graph_selection("H"), Error);
}

TEST_CASE("scan report") {
  const json j = json::parse(report_scan({fixtures::kDH, "3"}, 16, default_config()));
  const json& s = j["scan"];
  CHECK(s["crossing_cap"] == 16);
  CHECK(s["instances"].size() == 2);
  CHECK(s["scoreboard"]["instances"] == 2);
  CHECK(s["scoreboard"]["match"] == 1);
  CHECK(s["scoreboard"]["no_expectation"] == 1);
}

TEST_CASE("reports do not depend on the thread count") {
  RunConfig one = default_config(), four = default_config();
  four.threads = 4;
  one.oracle_checks = four.oracle_checks = true;
  CHECK(report_classify(fixtures::kSixStar, one) == report_classify(fixtures::kSixStar, four));
  CHECK(report_orbit(fixtures::kDH, one) == report_orbit(fixtures::kDH, four));
  const std::vector<std::string> syms = {fixtures::kDH, "(2 1,2) 1 1 (2 1,2)", "(2,3) 1 1 (2,3)"};
  CHECK(report_scan(syms, 16, one) == report_scan(syms, 16, four));
}
