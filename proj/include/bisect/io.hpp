#pragma once

// Point-set text format and JSON reports.
//
// Point files are UTF-8 text with one point per line: two whitespace-separated
// rationals written "p/q" or as bare integers. "#" starts a comment that runs
// to the end of the line; blank lines are ignored; there is no header.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "bisect/point_set.hpp"
#include "bisect/stats.hpp"
#include "bisect/surfaces.hpp"

namespace bisect {

// Throws ParseError (malformed rational, wrong field count, duplicate point).
PointSet parse_pointset(std::istream& in);
PointSet parse_pointset(const std::filesystem::path& path);
PointSet parse_pointset_text(const std::string& text);

void write_pointset(const PointSet& points, std::ostream& out);
void write_pointset(const PointSet& points, const std::filesystem::path& path);

// Flat object of the report fields plus "violations" (failed invariants).
nlohmann::json to_json(const StatsReport& report);
nlohmann::json to_json(const AuditReport& report);
// {"audits": [...], "violations": [...]} with every violation prefixed by its
// audit name.
nlohmann::json to_json(const std::vector<AuditReport>& reports);

// Names of the report invariants that fail (empty when all hold).
std::vector<std::string> report_violations(const StatsReport& report);

std::string format_table(const StatsReport& report);

}  // namespace bisect
