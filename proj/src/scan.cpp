#include "bisect/scan.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace bisect {

GeneratorSpec scan_spec(const std::string& family, std::size_t n, std::optional<std::size_t> m,
                        const ScanOptions& options) {
  if (family == "grid") {
    std::size_t k = 1;
    while ((k + 1) * (k + 1) <= n) ++k;
    return GridFamily{k};
  }
  if (family == "line") return LineFamily{n};
  if (family == "circle") return CircleFamily{n};
  if (family == "random") {
    const std::int64_t range =
        options.random_range > 0 ? options.random_range : 10 * static_cast<std::int64_t>(n);
    return RandomFamily{n, range, options.seed};
  }
  if (family == "ellipse") {
    if (!m) throw PreconditionViolated("ellipse scan requires M");
    return EllipseTrainFamily{n, *m};
  }
  throw PreconditionViolated("unknown family '" + family + "'");
}

ScanRow scan_row(const GeneratorSpec& spec, const ScanOptions& options) {
  const PointSet points = generate(spec);
  ScanRow row;
  row.family = family_name(spec);
  row.n = points.size();
  row.stats = stats_report(points, StatsOptions{options.cocircular});
  if (const auto* train = std::get_if<EllipseTrainFamily>(&spec)) {
    row.m = train->m;
  } else {
    row.m = std::max(row.stats.max_collinear, row.stats.max_cocircular.value_or(0)) + 1;
  }
  const double e = static_cast<double>(row.stats.energy);
  const double n = static_cast<double>(row.n);
  const double m = static_cast<double>(row.m);
  row.ratio_lower = e / (m * n * n);
  row.ratio_upper = e / (std::pow(m, 0.4) * std::pow(n, 2.4));
  return row;
}

SlopeFit fit_slope(const std::vector<ScanRow>& rows) {
  std::set<std::size_t> sizes;
  for (const ScanRow& r : rows) sizes.insert(r.n);
  if (sizes.size() < 4) throw PreconditionViolated("slope fit needs at least 4 sizes");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const ScanRow& r : rows) {
    const double x = std::log(static_cast<double>(r.n));
    const double y = std::log(static_cast<double>(r.stats.energy));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double k = static_cast<double>(rows.size());
  SlopeFit fit;
  fit.family = rows.front().family;
  fit.sizes = sizes.size();
  fit.slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
  fit.intercept = (sy - fit.slope * sx) / k;
  return fit;
}

ScanResult run_scan(const std::vector<GeneratorSpec>& specs, const ScanOptions& options) {
  ScanResult result;
  for (const GeneratorSpec& spec : specs) result.rows.push_back(scan_row(spec, options));
  std::sort(result.rows.begin(), result.rows.end(), [](const ScanRow& a, const ScanRow& b) {
    return std::tie(a.family, a.m, a.n) < std::tie(b.family, b.m, b.n);
  });

  std::map<std::pair<std::string, std::size_t>, std::vector<ScanRow>> groups;
  for (const ScanRow& r : result.rows)
    groups[{r.family, r.family == "ellipse" ? r.m : 0}].push_back(r);
  for (const auto& [key, rows] : groups) {
    std::set<std::size_t> sizes;
    for (const ScanRow& r : rows) sizes.insert(r.n);
    if (sizes.size() < 4) continue;
    SlopeFit fit = fit_slope(rows);
    fit.m = key.second;
    result.fits.push_back(fit);
  }
  return result;
}

void write_csv(const ScanResult& result, std::ostream& out) {
  out << "family,n,M,E,B,D,M_line,M_circle,T,sum_m2,ratio_lower,ratio_upper\n";
  const auto old_flags = out.flags();
  const auto old_precision = out.precision();
  out << std::setprecision(10);
  for (const ScanRow& r : result.rows) {
    const StatsReport& s = r.stats;
    out << r.family << ',' << r.n << ',' << r.m << ',' << s.energy << ',' << s.distinct_bisectors
        << ',' << s.distinct_distances << ',' << s.max_collinear << ',';
    if (s.max_cocircular) out << *s.max_cocircular;
    out << ',' << s.isoceles_triples << ',' << s.sum_m_squared << ',' << r.ratio_lower << ','
        << r.ratio_upper << '\n';
  }
  out.flags(old_flags);
  out.precision(old_precision);
}

std::string fit_summary(const ScanResult& result) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(4);
  if (result.fits.empty()) out << "no family has 4 or more sizes; no slope fitted\n";
  for (const SlopeFit& f : result.fits) {
    out << f.family;
    if (f.m) out << " M=" << f.m;
    out << ": log E = " << f.slope << " log n + " << f.intercept << " (" << f.sizes
        << " sizes)\n";
  }
  return out.str();
}

}  // namespace bisect
