#include "bisect/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <unordered_map>

namespace bisect {

PointSet parse_pointset(std::istream& in) {
  std::vector<Point> pts;
  std::unordered_map<Point, std::size_t> first_seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (tokens.size() != 2)
      throw ParseError(line_no, "expected 2 coordinates, found " + std::to_string(tokens.size()));
    Point p;
    try {
      p = Point(parse_rational(tokens[0]), parse_rational(tokens[1]));
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
    if (const auto [it, fresh] = first_seen.emplace(p, line_no); !fresh)
      throw ParseError(line_no, "duplicate point " + to_string(p) + " (first on line " +
                                    std::to_string(it->second) + ")");
    pts.push_back(std::move(p));
  }
  if (in.bad()) throw Error("read failure");
  return PointSet(std::move(pts));
}

PointSet parse_pointset(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return parse_pointset(in);
}

PointSet parse_pointset_text(const std::string& text) {
  std::istringstream in(text);
  return parse_pointset(in);
}

void write_pointset(const PointSet& points, std::ostream& out) {
  for (const Point& p : points) out << to_string(p.x) << ' ' << to_string(p.y) << '\n';
}

void write_pointset(const PointSet& points, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  write_pointset(points, out);
  if (!out) throw Error("write failure on " + path.string());
}

std::vector<std::string> report_violations(const StatsReport& r) {
  std::vector<std::string> out;
  const BigInt pairs = BigInt(r.n) * (r.n - 1);
  if (BigInt(r.energy) * r.distinct_bisectors < pairs * pairs) out.push_back("cauchy_schwarz");
  if (r.n >= 2 && r.distinct_bisectors + 1 < r.n) out.push_back("trivial_bisector_bound");
  if (r.isoceles_triples != r.incidence_mult) out.push_back("incidence_identity");
  return out;
}

nlohmann::json to_json(const StatsReport& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["generic"] = r.generic;
  j["energy"] = r.energy;
  j["distinct_bisectors"] = r.distinct_bisectors;
  j["distinct_distances"] = r.distinct_distances;
  j["max_collinear"] = r.max_collinear;
  j["max_cocircular"] = r.max_cocircular ? nlohmann::json(*r.max_cocircular) : nlohmann::json();
  j["isoceles_triples"] = r.isoceles_triples;
  j["incidence_mult"] = r.incidence_mult;
  j["sum_m_squared"] = r.sum_m_squared;
  nlohmann::json rich = nlohmann::json::object();
  for (const auto& [k, count] : r.rich_lines) rich[std::to_string(k)] = count;
  j["rich_lines"] = rich;
  j["violations"] = report_violations(r);
  return j;
}

nlohmann::json to_json(const AuditReport& r) {
  nlohmann::json j;
  j["name"] = r.name;
  j["checked"] = r.checked;
  j["passed"] = r.passed();
  j["counters"] = r.counters;
  j["violations"] = r.violations;
  return j;
}

nlohmann::json to_json(const std::vector<AuditReport>& reports) {
  nlohmann::json j;
  j["audits"] = nlohmann::json::array();
  j["violations"] = nlohmann::json::array();
  for (const AuditReport& r : reports) {
    j["audits"].push_back(to_json(r));
    for (const std::string& v : r.violations) j["violations"].push_back(r.name + ": " + v);
  }
  return j;
}

std::string format_table(const StatsReport& r) {
  std::ostringstream out;
  auto row = [&](const std::string& name, const std::string& value) {
    out << std::left << std::setw(22) << name << value << '\n';
  };
  row("n", std::to_string(r.n));
  row("generic", r.generic ? "yes" : "no");
  row("energy", std::to_string(r.energy));
  row("distinct_bisectors", std::to_string(r.distinct_bisectors));
  row("distinct_distances", std::to_string(r.distinct_distances));
  row("max_collinear", std::to_string(r.max_collinear));
  row("max_cocircular", r.max_cocircular ? std::to_string(*r.max_cocircular) : "skipped");
  row("isoceles_triples", std::to_string(r.isoceles_triples));
  row("incidence_mult", std::to_string(r.incidence_mult));
  row("sum_m_squared", std::to_string(r.sum_m_squared));
  for (const auto& [k, count] : r.rich_lines)
    row("rich_lines[>=" + std::to_string(k) + "]", std::to_string(count));
  const auto bad = report_violations(r);
  std::string flagged;
  for (const auto& v : bad) flagged += (flagged.empty() ? "" : ", ") + v;
  row("violations", bad.empty() ? "none" : flagged);
  return out.str();
}

}  // namespace bisect
