#include <doctest.h>

#include <cmath>
#include <sstream>

#include "bisect/scan.hpp"

using namespace bisect;

TEST_CASE("scan rows reproduce stats_report") {
  const ScanRow row = scan_row(EllipseTrainFamily{32, 8});
  CHECK(row.family == "ellipse");
  CHECK(row.m == 8);
  CHECK(row.stats == stats_report(gen_ellipse_train(32, 8)));
  CHECK(row.ratio_lower == doctest::Approx(row.stats.energy / (8.0 * 32 * 32)));
  CHECK(row.ratio_upper ==
        doctest::Approx(row.stats.energy / (std::pow(8.0, 0.4) * std::pow(32.0, 2.4))));

  const ScanRow line = scan_row(LineFamily{6});
  CHECK(line.m == 7);  // max_collinear + 1
  const ScanRow random = scan_row(scan_spec("random", 20, std::nullopt, {true, 0, 4}));
  CHECK(random.stats == stats_report(gen_random(20, 200, 4)));
}

TEST_CASE("slope fit recovers exact power laws") {
  std::vector<ScanRow> rows;
  for (std::size_t n : {10, 20, 40, 80}) {
    ScanRow r;
    r.family = "synthetic";
    r.n = n;
    r.stats.energy = 3 * n * n * n;
    rows.push_back(r);
  }
  const SlopeFit fit = fit_slope(rows);
  CHECK(fit.slope == doctest::Approx(3.0));
  CHECK(fit.intercept == doctest::Approx(std::log(3.0)));
  rows.pop_back();
  CHECK_THROWS_AS(fit_slope(rows), PreconditionViolated);
}

TEST_CASE("run_scan sorts rows and fits fixed-M groups") {
  std::vector<GeneratorSpec> specs;
  for (std::size_t n : {64, 16, 48, 32}) specs.push_back(EllipseTrainFamily{n, 8});
  specs.push_back(LineFamily{5});
  const ScanResult result = run_scan(specs, {false});
  REQUIRE(result.rows.size() == 5);
  CHECK(result.rows[0].family == "ellipse");
  CHECK(result.rows[0].n == 16);
  CHECK(result.rows[3].n == 64);
  CHECK(result.rows[4].family == "line");
  REQUIRE(result.fits.size() == 1);
  CHECK(result.fits[0].m == 8);
  CHECK(result.fits[0].slope > 1.5);

  std::ostringstream csv;
  write_csv(result, csv);
  const std::string text = csv.str();
  CHECK(text.rfind("family,n,M,E,B,D,M_line,M_circle,T,sum_m2,ratio_lower,ratio_upper\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 6);
  CHECK(fit_summary(result).find("ellipse M=8") != std::string::npos);
}

TEST_CASE("scan_spec") {
  CHECK(std::get<GridFamily>(scan_spec("grid", 17, std::nullopt)).k == 4);
  CHECK_THROWS_AS(scan_spec("ellipse", 64, std::nullopt), PreconditionViolated);
  CHECK_THROWS_AS(scan_spec("hexagon", 64, std::nullopt), PreconditionViolated);
}
