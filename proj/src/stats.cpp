#include "bisect/stats.hpp"

#include <algorithm>
#include <numeric>

namespace bisect {

namespace {

void require_size(const PointSet& points, std::size_t minimum, const char* op) {
  if (points.size() < minimum)
    throw PreconditionViolated(std::string(op) + " requires at least " + std::to_string(minimum) +
                               " points");
}

std::vector<HomPoint> homogeneous(const PointSet& points) {
  std::vector<HomPoint> out;
  out.reserve(points.size());
  for (const Point& p : points) out.push_back(to_hom(p));
  return out;
}

// Sorts keys, writes the rank of each key's class into ids and returns the
// distinct keys with their class sizes.
template <typename Key>
std::vector<std::pair<Key, std::uint64_t>> group_keys(std::vector<Key>& keys,
                                                      std::vector<std::uint32_t>& ids) {
  std::vector<std::uint32_t> order(keys.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(),
            [&](std::uint32_t l, std::uint32_t r) { return keys[l] < keys[r]; });
  ids.assign(keys.size(), 0);
  std::vector<std::pair<Key, std::uint64_t>> classes;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const std::uint32_t idx = order[k];
    if (classes.empty() || !(keys[idx] == classes.back().first))
      classes.emplace_back(std::move(keys[idx]), 0);
    ++classes.back().second;
    ids[idx] = static_cast<std::uint32_t>(classes.size() - 1);
  }
  keys.clear();
  keys.shrink_to_fit();
  return classes;
}

}  // namespace

std::optional<std::size_t> BisectorSpectrum::find(const CanonicalLine& line) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), line,
                             [](const auto& e, const CanonicalLine& l) { return e.first < l; });
  if (it == entries.end() || !(it->first == line)) return std::nullopt;
  return static_cast<std::size_t>(it - entries.begin());
}

std::uint64_t BisectorSpectrum::multiplicity(const CanonicalLine& line) const {
  const auto idx = find(line);
  return idx ? entries[*idx].second : 0;
}

std::uint64_t DistanceSpectrum::count(const Rational& squared_distance) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), squared_distance,
                             [](const auto& e, const Rational& d) { return e.first < d; });
  if (it == entries.end() || it->first != squared_distance) return 0;
  return it->second;
}

BisectorAnalysis::BisectorAnalysis(const PointSet& points) : n_(points.size()) {
  require_size(points, 2, "bisector statistics");
  const std::vector<HomPoint> hom = homogeneous(points);
  const std::size_t pairs = n_ * (n_ - 1) / 2;

  {
    std::vector<CanonicalLine> lines;
    lines.reserve(pairs);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j) lines.push_back(bisector(hom[i], hom[j]));
    spectrum_.n = n_;
    spectrum_.entries = group_keys(lines, line_ids_);
    for (auto& e : spectrum_.entries) e.second *= 2;
  }
  {
    std::vector<Rational> d2;
    d2.reserve(pairs);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j) d2.push_back(dist2(hom[i], hom[j]));
    distances_.n = n_;
    distances_.entries = group_keys(d2, distance_ids_);
    for (auto& e : distances_.entries) e.second *= 2;
  }

  // Per apex p: group the other points by distance. Each class of size Δ gives
  // Δ(Δ − 1) ordered isoceles triples, and p lies on the bisector of every
  // pair inside the class.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> by_distance;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> incidences;  // (line id, point)
  for (std::size_t p = 0; p < n_; ++p) {
    by_distance.clear();
    for (std::size_t q = 0; q < n_; ++q)
      if (q != p) by_distance.emplace_back(distance_id(p, q), static_cast<std::uint32_t>(q));
    std::sort(by_distance.begin(), by_distance.end());
    for (std::size_t lo = 0; lo < by_distance.size();) {
      std::size_t hi = lo;
      while (hi < by_distance.size() && by_distance[hi].first == by_distance[lo].first) ++hi;
      const std::uint64_t delta = hi - lo;
      isoceles_ += delta * (delta - 1);
      for (std::size_t s = lo; s < hi; ++s)
        for (std::size_t t = s + 1; t < hi; ++t)
          incidences.emplace_back(line_id(by_distance[s].second, by_distance[t].second),
                                  static_cast<std::uint32_t>(p));
      lo = hi;
    }
  }
  std::sort(incidences.begin(), incidences.end());
  incidences.erase(std::unique(incidences.begin(), incidences.end()), incidences.end());
  richness_.assign(spectrum_.size(), 0);
  for (const auto& [line, point] : incidences) ++richness_[line];
}

std::uint64_t BisectorAnalysis::energy() const {
  std::uint64_t e = 0;
  for (const auto& [line, mu] : spectrum_.entries) e += mu * mu;
  return e;
}

std::uint64_t BisectorAnalysis::sum_m_squared() const {
  std::uint64_t s = 0;
  for (const auto& [d, m] : distances_.entries) s += m * m;
  return s;
}

std::uint64_t BisectorAnalysis::incidence_mult() const {
  std::uint64_t total = 0;
  for (std::size_t k = 0; k < spectrum_.size(); ++k)
    total += spectrum_.entries[k].second * richness_[k];
  return total;
}

std::uint64_t BisectorAnalysis::rich_bisectors(std::size_t threshold) const {
  if (threshold < 2) throw PreconditionViolated("rich_bisectors threshold must be >= 2");
  return static_cast<std::uint64_t>(
      std::count_if(richness_.begin(), richness_.end(),
                    [&](std::uint32_t rho) { return rho >= threshold; }));
}

// ---------------------------------------------------------------------------

std::uint64_t LineCensus::lines_with_at_least(std::size_t k) const {
  std::uint64_t total = 0;
  for (auto it = lines_by_size.lower_bound(k); it != lines_by_size.end(); ++it)
    total += it->second;
  return total;
}

LineCensus line_census(const PointSet& points) {
  require_size(points, 2, "line census");
  const std::size_t n = points.size();
  const std::vector<HomPoint> hom = homogeneous(points);
  LineCensus census;
  std::vector<std::pair<Direction, std::uint32_t>> dirs;
  dirs.reserve(n);
  // A line with r points shows up as a class of r − 1 directions at each of its
  // points; it is counted at its lowest-index point only.
  for (std::size_t i = 0; i < n; ++i) {
    dirs.clear();
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) dirs.emplace_back(direction(hom[i], hom[j]), static_cast<std::uint32_t>(j));
    std::sort(dirs.begin(), dirs.end(),
              [](const auto& l, const auto& r) { return l.first < r.first; });
    for (std::size_t lo = 0; lo < dirs.size();) {
      std::size_t hi = lo;
      std::uint32_t lowest = dirs[lo].second;
      while (hi < dirs.size() && dirs[hi].first == dirs[lo].first) {
        lowest = std::min(lowest, dirs[hi].second);
        ++hi;
      }
      const std::size_t size = hi - lo + 1;
      census.max_collinear = std::max(census.max_collinear, size);
      if (lowest > i) ++census.lines_by_size[size];
      lo = hi;
    }
  }
  return census;
}

// ---------------------------------------------------------------------------

BisectorSpectrum bisector_spectrum(const PointSet& points) {
  return BisectorAnalysis(points).spectrum();
}

std::uint64_t bisector_energy(const PointSet& points) { return BisectorAnalysis(points).energy(); }

std::size_t distinct_bisectors(const PointSet& points) {
  return BisectorAnalysis(points).distinct_bisectors();
}

DistanceSpectrum distance_spectrum(const PointSet& points) {
  return BisectorAnalysis(points).distances();
}

std::size_t distinct_distances(const PointSet& points) {
  return BisectorAnalysis(points).distinct_distances();
}

std::uint64_t sum_m_squared(const PointSet& points) {
  return BisectorAnalysis(points).sum_m_squared();
}

std::uint64_t isoceles_triples(const PointSet& points) {
  require_size(points, 3, "isoceles_triples");
  return BisectorAnalysis(points).isoceles_triples();
}

std::uint64_t incidence_mult(const PointSet& points) {
  return BisectorAnalysis(points).incidence_mult();
}

std::size_t max_collinear(const PointSet& points) { return line_census(points).max_collinear; }

std::uint64_t rich_bisectors(const PointSet& points, std::size_t threshold) {
  return BisectorAnalysis(points).rich_bisectors(threshold);
}

std::uint64_t rich_lines(const PointSet& points, std::size_t k) {
  if (k < 2) throw PreconditionViolated("rich_lines requires K >= 2");
  return line_census(points).lines_with_at_least(k);
}

StatsReport stats_report(const PointSet& points, const StatsOptions& options) {
  require_size(points, 3, "stats_report");
  const BisectorAnalysis analysis(points);
  const LineCensus census = line_census(points);
  StatsReport r;
  r.n = points.size();
  r.generic = points.generic();
  r.energy = analysis.energy();
  r.distinct_bisectors = analysis.distinct_bisectors();
  r.distinct_distances = analysis.distinct_distances();
  r.max_collinear = census.max_collinear;
  if (options.cocircular) r.max_cocircular = max_cocircular(points);
  r.isoceles_triples = analysis.isoceles_triples();
  r.incidence_mult = analysis.incidence_mult();
  r.sum_m_squared = analysis.sum_m_squared();
  for (std::size_t k = 3; k <= census.max_collinear; ++k)
    r.rich_lines[k] = census.lines_with_at_least(k);
  return r;
}

bool report_invariants_hold(const StatsReport& r) {
  const BigInt pairs = BigInt(r.n) * (r.n - 1);
  const bool cauchy_schwarz = BigInt(r.energy) * r.distinct_bisectors >= pairs * pairs;
  const bool trivial_lower = r.n < 2 || r.distinct_bisectors + 1 >= r.n;
  return cauchy_schwarz && trivial_lower && r.isoceles_triples == r.incidence_mult;
}

}  // namespace bisect
