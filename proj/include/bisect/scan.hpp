#pragma once

// Growth scans of the statistics over a family of generated sets.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "bisect/generators.hpp"
#include "bisect/stats.hpp"

namespace bisect {

struct ScanRow {
  std::string family;
  std::size_t n = 0;
  // Construction parameter for the ellipse train, max(M_line, M_circle) + 1
  // otherwise (M_line + 1 when cocircularity is skipped).
  std::size_t m = 0;
  StatsReport stats;
  double ratio_lower = 0;  // E / (M n²)
  double ratio_upper = 0;  // E / (M^{2/5} n^{12/5})
};

struct SlopeFit {
  std::string family;
  std::size_t m = 0;  // 0 unless the family fixes M
  std::size_t sizes = 0;
  double slope = 0;
  double intercept = 0;
};

struct ScanResult {
  std::vector<ScanRow> rows;  // sorted by (family, M, n)
  std::vector<SlopeFit> fits;
};

struct ScanOptions {
  bool cocircular = true;
  std::int64_t random_range = 0;  // 0: 10·n
  std::uint64_t seed = 1;
};

// Family names as accepted by family_name(). For "grid" a size n selects the
// k × k grid with k = ⌊√n⌋; "ellipse" needs m.
GeneratorSpec scan_spec(const std::string& family, std::size_t n, std::optional<std::size_t> m,
                        const ScanOptions& options = {});

ScanRow scan_row(const GeneratorSpec& spec, const ScanOptions& options = {});

// Least-squares slope of log E against log n; throws PreconditionViolated with
// fewer than 4 distinct sizes.
SlopeFit fit_slope(const std::vector<ScanRow>& rows);

// Rows for every size, one fit per (family, fixed M) group with ≥ 4 sizes.
ScanResult run_scan(const std::vector<GeneratorSpec>& specs, const ScanOptions& options = {});

void write_csv(const ScanResult& result, std::ostream& out);
std::string fit_summary(const ScanResult& result);

}  // namespace bisect
