#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "bisect/generators.hpp"
#include "bisect/io.hpp"
#include "support.hpp"

using namespace bisect;

TEST_CASE("parse point files") {
  const PointSet p = parse_pointset_text("0 0\n1/2 2/3\n");
  REQUIRE(p.size() == 2);
  CHECK(p[1] == Point(Rational(1, 2), Rational(2, 3)));

  const PointSet q = parse_pointset_text("# header comment\n\n  3   -4 # trailing\n\t-1/3 7\n");
  REQUIRE(q.size() == 2);
  CHECK(q[0] == Point(3, -4));
  CHECK(q[1] == Point(Rational(-1, 3), 7));
  CHECK(parse_pointset_text("").size() == 0);
}

TEST_CASE("parse errors carry the line number") {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse_pointset_text(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("1 1\n1 1\n") == 2);
  CHECK(line_of("0 0\n# c\n1 2 3\n") == 3);
  CHECK(line_of("1/0 2\n") == 1);
  CHECK(line_of("0 0\n\nx 1\n") == 3);
  CHECK(line_of("7\n") == 1);
  CHECK(line_of("2/4 1\n1/2 1\n") == 2);
}

TEST_CASE("round trip of rational point sets") {
  testing::Gen gen(61);
  for (int trial = 0; trial < 50; ++trial) {
    const PointSet p = gen.set(1 + gen.integer(0, 30), false, 1000000000, 1000000000);
    std::stringstream buffer;
    write_pointset(p, buffer);
    CHECK(parse_pointset(buffer) == p);
  }
  const PointSet train = gen_ellipse_train(16, 8);
  const auto path = std::filesystem::temp_directory_path() / "bisect_io_roundtrip.txt";
  write_pointset(train, path);
  CHECK(parse_pointset(path) == train);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(parse_pointset(std::filesystem::path("/nonexistent/dir/points.txt")), Error);
}

TEST_CASE("stats JSON schema") {
  const nlohmann::json j = to_json(stats_report(testing::square()));
  for (const char* key : {"n", "generic", "energy", "distinct_bisectors", "distinct_distances",
                          "max_collinear", "max_cocircular", "isoceles_triples", "incidence_mult",
                          "sum_m_squared", "rich_lines", "violations"})
    CHECK(j.contains(key));
  CHECK(j["energy"] == 40);
  CHECK(j["isoceles_triples"] == 8);
  CHECK(j["violations"].empty());
  CHECK(to_json(stats_report(testing::square(), {false}))["max_cocircular"].is_null());
  const nlohmann::json line = to_json(stats_report(gen_line(5)));
  CHECK(line["rich_lines"]["5"] == 1);
}

TEST_CASE("report violations flag broken invariants") {
  StatsReport r = stats_report(testing::square());
  CHECK(report_violations(r).empty());
  r.incidence_mult += 1;
  r.energy = 1;
  const auto v = report_violations(r);
  CHECK(v.size() == 2);
  CHECK(format_table(r).find("incidence_identity") != std::string::npos);
}

TEST_CASE("audit JSON schema") {
  AuditReport a;
  a.name = "demo";
  a.checked = 3;
  a.violations = {"bad thing"};
  a.counters["x"] = 2;
  const nlohmann::json j = to_json(std::vector<AuditReport>{a});
  CHECK(j["audits"][0]["passed"] == false);
  CHECK(j["audits"][0]["counters"]["x"] == 2);
  CHECK(j["violations"][0] == "demo: bad thing");
}
