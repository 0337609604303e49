#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <sstream>

#include "bisect/generators.hpp"
#include "bisect/io.hpp"
#include "bisect/stats.hpp"
#include "bisect/surfaces.hpp"

namespace py = pybind11;

namespace {

// Coordinates cross the boundary as decimal strings ("p/q" or "p").
using RawPoint = std::pair<std::string, std::string>;

bisect::Point to_point(const RawPoint& p) {
  return {bisect::parse_rational(p.first), bisect::parse_rational(p.second)};
}

bisect::PointSet to_set(const std::vector<RawPoint>& raw) {
  std::vector<bisect::Point> pts;
  pts.reserve(raw.size());
  for (const auto& p : raw) pts.push_back(to_point(p));
  return bisect::PointSet(std::move(pts));
}

std::vector<RawPoint> from_set(const bisect::PointSet& points) {
  std::vector<RawPoint> out;
  out.reserve(points.size());
  for (const auto& p : points) out.emplace_back(bisect::to_string(p.x), bisect::to_string(p.y));
  return out;
}

std::string stats_json(const std::vector<RawPoint>& raw, bool cocircular) {
  return bisect::to_json(bisect::stats_report(to_set(raw), bisect::StatsOptions{cocircular}))
      .dump();
}

std::string audit_json(const std::vector<RawPoint>& raw, const std::vector<std::string>& which) {
  const bisect::PointSet points = to_set(raw);
  auto wants = [&](const char* name) {
    return which.empty() || std::find(which.begin(), which.end(), name) != which.end();
  };
  std::vector<bisect::AuditReport> reports;
  if (wants("containment")) reports.push_back(bisect::containment_audit(points));
  if (wants("lemma32")) reports.push_back(bisect::lemma32_audit(points));
  if (wants("quadruple")) reports.push_back(bisect::quadruple_invariant_audit(points));
  if (wants("k2m")) reports.push_back(bisect::k2m_audit(points).report);
  return bisect::to_json(reports).dump();
}

std::tuple<std::string, std::string, std::string> bisector(const RawPoint& a, const RawPoint& b) {
  const bisect::CanonicalLine l = bisect::bisector(to_point(a), to_point(b));
  return {bisect::to_string(l.a()), bisect::to_string(l.b()), bisect::to_string(l.c())};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact bisector statistics of planar point sets";

  static py::exception<bisect::Error> error(m, "BisectError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const bisect::Error& e) {
      error(e.what());
    } catch (const std::invalid_argument& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def("stats_json", &stats_json, py::arg("points"), py::arg("cocircular") = true);
  m.def("audit_json", &audit_json, py::arg("points"), py::arg("which") = std::vector<std::string>{});
  m.def("bisector", &bisector, py::arg("a"), py::arg("b"));
  m.def("dist2", [](const RawPoint& a, const RawPoint& b) {
    return bisect::to_string(bisect::dist2(to_point(a), to_point(b)));
  });
  m.def("bisector_energy",
        [](const std::vector<RawPoint>& p) { return bisect::bisector_energy(to_set(p)); });
  m.def("distinct_bisectors",
        [](const std::vector<RawPoint>& p) { return bisect::distinct_bisectors(to_set(p)); });
  m.def("max_collinear",
        [](const std::vector<RawPoint>& p) { return bisect::max_collinear(to_set(p)); });
  m.def("max_cocircular",
        [](const std::vector<RawPoint>& p) { return bisect::max_cocircular(to_set(p)); });

  m.def("gen_grid", [](std::size_t k) { return from_set(bisect::gen_grid(k)); });
  m.def("gen_line", [](std::size_t n) { return from_set(bisect::gen_line(n)); });
  m.def("gen_rational_circle",
        [](std::size_t n) { return from_set(bisect::gen_rational_circle(n)); });
  m.def("gen_ellipse_train", [](std::size_t n, std::size_t mm) {
    return from_set(bisect::gen_ellipse_train(n, mm));
  });
  m.def("gen_random", [](std::size_t n, std::int64_t range, std::uint64_t seed) {
    return from_set(bisect::gen_random(n, range, seed));
  });
  m.def("ensure_generic", [](const std::vector<RawPoint>& p) {
    const bisect::GenericImage img = bisect::ensure_generic(to_set(p));
    return std::make_pair(from_set(img.points), img.rotations);
  });

  m.def("parse_pointset_text",
        [](const std::string& text) { return from_set(bisect::parse_pointset_text(text)); });
  m.def("format_pointset", [](const std::vector<RawPoint>& p) {
    std::ostringstream out;
    bisect::write_pointset(to_set(p), out);
    return out.str();
  });
}
