// bisect: generate point sets, report bisector statistics, run the surface
// audits and scan growth rates.
//
// Exit codes: 0 success, 1 usage or I/O error, 2 audit violation.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "bisect/generators.hpp"
#include "bisect/io.hpp"
#include "bisect/scan.hpp"
#include "bisect/stats.hpp"
#include "bisect/surfaces.hpp"

namespace {

constexpr int kUsageOrIo = 1;
constexpr int kAuditViolation = 2;

struct GenArgs {
  std::string family;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t m = 0;
  std::int64_t range = 0;
  std::uint64_t seed = 1;
  std::string out;
  bool generic = false;
};

struct StatsArgs {
  std::string in;
  bool json = false;
  bool no_cocircular = false;
};

struct AuditArgs {
  std::string in;
  std::vector<std::string> which;
  std::size_t cap = 0;
  bool json = false;
  bool generic = false;
};

struct ScanArgs {
  std::string family;
  std::size_t m = 0;
  std::vector<std::size_t> sizes;
  std::string out;
  bool no_cocircular = false;
  std::int64_t range = 0;
  std::uint64_t seed = 1;
};

bisect::PointSet read_input(const std::string& path) {
  if (path == "-") return bisect::parse_pointset(std::cin);
  try {
    return bisect::parse_pointset(std::filesystem::path(path));
  } catch (const bisect::ParseError& e) {
    throw bisect::Error(path + ": " + e.what());
  }
}

int run_gen(const GenArgs& a) {
  bisect::GeneratorSpec spec;
  if (a.family == "grid") {
    spec = bisect::GridFamily{a.k};
  } else if (a.family == "line") {
    spec = bisect::LineFamily{a.n};
  } else if (a.family == "circle") {
    spec = bisect::CircleFamily{a.n};
  } else if (a.family == "ellipse") {
    spec = bisect::EllipseTrainFamily{a.n, a.m};
  } else {
    spec = bisect::RandomFamily{a.n, a.range > 0 ? a.range : 10 * static_cast<std::int64_t>(a.n),
                                a.seed};
  }
  bisect::PointSet points = bisect::generate(spec);
  if (a.generic) points = bisect::ensure_generic(points).points;
  if (a.out.empty() || a.out == "-")
    bisect::write_pointset(points, std::cout);
  else
    bisect::write_pointset(points, std::filesystem::path(a.out));
  return 0;
}

int run_stats(const StatsArgs& a) {
  const bisect::PointSet points = read_input(a.in);
  const bisect::StatsReport report =
      bisect::stats_report(points, bisect::StatsOptions{!a.no_cocircular});
  if (a.json)
    std::cout << bisect::to_json(report).dump(2) << '\n';
  else
    std::cout << bisect::format_table(report);
  return 0;
}

int run_audit(const AuditArgs& a) {
  bisect::PointSet points = read_input(a.in);
  if (a.generic) points = bisect::ensure_generic(points).points;
  bisect::AuditCaps caps;
  if (a.cap) caps = {a.cap, a.cap, a.cap, a.cap};
  auto wants = [&](const std::string& name) {
    if (a.which.empty()) return true;
    for (const auto& w : a.which)
      if (w == name || w == "all") return true;
    return false;
  };

  std::vector<bisect::AuditReport> reports;
  if (wants("containment")) reports.push_back(bisect::containment_audit(points, caps.containment));
  if (wants("lemma32")) reports.push_back(bisect::lemma32_audit(points, caps.lemma32));
  if (wants("quadruple"))
    reports.push_back(bisect::quadruple_invariant_audit(points, caps.quadruple));
  if (wants("k2m")) reports.push_back(bisect::k2m_audit(points, caps.k2m).report);

  bool ok = true;
  for (const auto& r : reports) ok = ok && r.passed();
  if (a.json) {
    std::cout << bisect::to_json(reports).dump(2) << '\n';
  } else {
    for (const auto& r : reports) {
      std::cout << r.name << ": " << (r.passed() ? "ok" : "FAILED") << " (" << r.checked
                << " checked";
      for (const auto& [key, value] : r.counters) std::cout << ", " << key << "=" << value;
      std::cout << ")\n";
      for (const auto& v : r.violations) std::cout << "  " << v << '\n';
    }
  }
  return ok ? 0 : kAuditViolation;
}

int run_scan(const ScanArgs& a) {
  bisect::ScanOptions options;
  options.cocircular = !a.no_cocircular;
  options.random_range = a.range;
  options.seed = a.seed;
  std::vector<bisect::GeneratorSpec> specs;
  for (std::size_t n : a.sizes)
    specs.push_back(bisect::scan_spec(a.family, n,
                                      a.m ? std::optional<std::size_t>(a.m) : std::nullopt,
                                      options));
  const bisect::ScanResult result = bisect::run_scan(specs, options);
  if (a.out.empty() || a.out == "-") {
    bisect::write_csv(result, std::cout);
    std::cerr << bisect::fit_summary(result);
  } else {
    std::ofstream out(a.out);
    if (!out) throw bisect::Error("cannot write " + a.out);
    bisect::write_csv(result, out);
    std::cout << bisect::fit_summary(result);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bisector statistics of planar point sets"};
  app.require_subcommand(1);
  const std::vector<std::string> families{"grid", "line", "circle", "ellipse", "random"};

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a generated point set");
  gen_cmd->add_option("family", gen.family, "grid | line | circle | ellipse | random")
      ->required()
      ->check(CLI::IsMember(families));
  gen_cmd->add_option("-n,--n", gen.n, "Number of points");
  gen_cmd->add_option("-k,--k", gen.k, "Grid side");
  gen_cmd->add_option("-M,--M", gen.m, "Ellipse-train M (multiple of 8 dividing n)");
  gen_cmd->add_option("--range", gen.range, "Random coordinate bound (default 10n)");
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_option("-o,--out", gen.out, "Output file (default stdout)");
  gen_cmd->add_flag("--generic", gen.generic, "Rotate until no coordinate repeats");

  StatsArgs stats;
  auto* stats_cmd = app.add_subcommand("stats", "Report the statistics of a point file");
  stats_cmd->add_option("file", stats.in, "Point file, - for stdin")->required();
  stats_cmd->add_flag("--json", stats.json, "JSON output");
  stats_cmd->add_flag("--no-cocircular", stats.no_cocircular, "Skip max_cocircular");

  AuditArgs audit;
  auto* audit_cmd = app.add_subcommand("audit", "Run the bisector-surface audits");
  audit_cmd->add_option("file", audit.in, "Point file, - for stdin")->required();
  audit_cmd->add_option("--which", audit.which, "containment, lemma32, quadruple, k2m or all")
      ->delimiter(',')
      ->check(CLI::IsMember({"containment", "lemma32", "quadruple", "k2m", "all"}));
  audit_cmd->add_option("--cap", audit.cap, "Size cap applied to every selected audit");
  audit_cmd->add_flag("--json", audit.json, "JSON output");
  audit_cmd->add_flag("--generic", audit.generic, "Rotate to a generic image first");

  ScanArgs scan;
  auto* scan_cmd = app.add_subcommand("scan", "Tabulate statistics over a family");
  scan_cmd->add_option("--family", scan.family)->required()->check(CLI::IsMember(families));
  scan_cmd->add_option("-M,--M", scan.m, "Ellipse-train M");
  scan_cmd->add_option("--sizes", scan.sizes, "Comma-separated sizes")
      ->required()
      ->delimiter(',');
  scan_cmd->add_option("-o,--out", scan.out, "CSV file (default stdout)");
  scan_cmd->add_flag("--no-cocircular", scan.no_cocircular, "Skip max_cocircular");
  scan_cmd->add_option("--range", scan.range, "Random coordinate bound (default 10n)");
  scan_cmd->add_option("--seed", scan.seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageOrIo;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*stats_cmd) return run_stats(stats);
    if (*audit_cmd) return run_audit(audit);
    if (*scan_cmd) return run_scan(scan);
  } catch (const std::exception& e) {
    std::cerr << "bisect: " << e.what() << '\n';
    return kUsageOrIo;
  }
  return kUsageOrIo;
}
