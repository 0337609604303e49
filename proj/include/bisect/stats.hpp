#pragma once

// Global bisector and distance statistics of a point set.
//
// Multiplicities are over ordered pairs: (a, b) and (b, a) share a bisector,
// so every μ(ℓ) is even and Σ μ(ℓ) = n(n − 1). The same convention holds for
// the distance counts m_i.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "bisect/point_set.hpp"

namespace bisect {

struct BisectorSpectrum {
  std::size_t n = 0;
  // Sorted by line (canonical key order).
  std::vector<std::pair<CanonicalLine, std::uint64_t>> entries;

  std::size_t size() const { return entries.size(); }
  std::optional<std::size_t> find(const CanonicalLine& line) const;
  // 0 when the line is not a bisector of the set.
  std::uint64_t multiplicity(const CanonicalLine& line) const;
};

struct DistanceSpectrum {
  std::size_t n = 0;
  // Squared distance → ordered-pair count, sorted by distance.
  std::vector<std::pair<Rational, std::uint64_t>> entries;

  std::size_t size() const { return entries.size(); }
  std::uint64_t count(const Rational& squared_distance) const;
};

// Pairwise tables shared by the bisector/distance statistics. Building it costs
// O(n² log n) exact operations; everything else is read off the tables.
class BisectorAnalysis {
 public:
  // Throws PreconditionViolated when |P| < 2.
  explicit BisectorAnalysis(const PointSet& points);

  std::size_t n() const { return n_; }
  const BisectorSpectrum& spectrum() const { return spectrum_; }
  const DistanceSpectrum& distances() const { return distances_; }

  // Index into spectrum().entries / distances().entries for the pair i ≠ j.
  std::uint32_t line_id(std::size_t i, std::size_t j) const { return line_ids_[pair_index(i, j)]; }
  std::uint32_t distance_id(std::size_t i, std::size_t j) const {
    return distance_ids_[pair_index(i, j)];
  }

  std::uint64_t energy() const;
  std::size_t distinct_bisectors() const { return spectrum_.size(); }
  std::size_t distinct_distances() const { return distances_.size(); }
  std::uint64_t sum_m_squared() const;
  std::uint64_t isoceles_triples() const { return isoceles_; }
  // Σ μ(ℓ) ρ(ℓ) over the bisector lines.
  std::uint64_t incidence_mult() const;
  // ρ(ℓ) = |ℓ ∩ P| for each spectrum entry.
  const std::vector<std::uint32_t>& richness() const { return richness_; }
  std::uint64_t rich_bisectors(std::size_t threshold) const;

 private:
  std::size_t pair_index(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    return i * n_ - i * (i + 1) / 2 + (j - i - 1);
  }

  std::size_t n_ = 0;
  BisectorSpectrum spectrum_;
  DistanceSpectrum distances_;
  std::vector<std::uint32_t> line_ids_;
  std::vector<std::uint32_t> distance_ids_;
  std::vector<std::uint32_t> richness_;
  std::uint64_t isoceles_ = 0;
};

// Distinct lines spanned by the set, counted by how many points they hold.
struct LineCensus {
  // r → number of distinct lines containing exactly r ≥ 2 points.
  std::map<std::size_t, std::uint64_t> lines_by_size;
  std::size_t max_collinear = 0;

  std::uint64_t lines_with_at_least(std::size_t k) const;
};

LineCensus line_census(const PointSet& points);

BisectorSpectrum bisector_spectrum(const PointSet& points);
std::uint64_t bisector_energy(const PointSet& points);
std::size_t distinct_bisectors(const PointSet& points);
DistanceSpectrum distance_spectrum(const PointSet& points);
std::size_t distinct_distances(const PointSet& points);
std::uint64_t sum_m_squared(const PointSet& points);
std::uint64_t isoceles_triples(const PointSet& points);
std::uint64_t incidence_mult(const PointSet& points);
std::size_t max_collinear(const PointSet& points);
std::size_t max_cocircular(const PointSet& points);
std::uint64_t rich_bisectors(const PointSet& points, std::size_t threshold);
std::uint64_t rich_lines(const PointSet& points, std::size_t k);

namespace detail {
// Exact O(n³) inversion path.
std::size_t max_cocircular_exact(const PointSet& points);
// Inversion keys reduced modulo a prime, arg-max certified exactly. Empty when
// the prime is unlucky for this input (a needed residue vanished or the
// certification failed).
std::optional<std::size_t> max_cocircular_modular(const PointSet& points, std::uint64_t prime);
}  // namespace detail

struct StatsOptions {
  bool cocircular = true;
};

struct StatsReport {
  std::size_t n = 0;
  bool generic = false;
  std::uint64_t energy = 0;
  std::size_t distinct_bisectors = 0;
  std::size_t distinct_distances = 0;
  std::size_t max_collinear = 0;
  std::optional<std::size_t> max_cocircular;
  std::uint64_t isoceles_triples = 0;
  std::uint64_t incidence_mult = 0;
  std::uint64_t sum_m_squared = 0;
  // threshold K → lines with at least K points, for K = 3 … max_collinear.
  std::map<std::size_t, std::uint64_t> rich_lines;

  friend bool operator==(const StatsReport&, const StatsReport&) = default;
};

// Throws PreconditionViolated when |P| < 3.
StatsReport stats_report(const PointSet& points, const StatsOptions& options = {});

// E·|B| ≥ (n(n−1))², |B| ≥ n − 1, |T| = Σμρ.
bool report_invariants_hold(const StatsReport& report);

}  // namespace bisect
