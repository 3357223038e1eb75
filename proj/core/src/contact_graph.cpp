#include "ccg/contact_graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ccg {

namespace {

std::string pair_message(const char* what, int i, int j) {
  std::ostringstream out;
  out << what << " between cuboids " << i << " and " << j;
  return out.str();
}

}  // namespace

ValidationReport validate_configuration(const Configuration& cfg) {
  ValidationReport report;
  const auto allowed = orientations(cfg.dims, cfg.freedom);
  const int n = static_cast<int>(cfg.cuboids.size());

  for (int i = 0; i < n; ++i) {
    const Vec3& d = cfg.cuboids[i].dims;
    bool ok = std::any_of(allowed.begin(), allowed.end(),
                          [&](const Vec3& o) { return o == d; });
    if (!ok) {
      std::ostringstream out;
      out << "cuboid " << i << " has orientation " << to_string(d)
          << " not permitted for dims " << to_string(cfg.dims) << " at freedom "
          << static_cast<int>(cfg.freedom);
      report.violation =
          Violation{ViolationKind::bad_orientation, i, -1, out.str()};
      return report;
    }
  }

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (collide(cfg.cuboids[i], cfg.cuboids[j])) {
        report.violation = Violation{ViolationKind::collision, i, j,
                                     pair_message("interior overlap", i, j)};
        return report;
      }
    }
  }
  return report;
}

ContactGraph build_contact_graph_unchecked(const Configuration& cfg) {
  const int n = static_cast<int>(cfg.cuboids.size());
  ContactGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (touch(cfg.cuboids[i], cfg.cuboids[j])) g.add_edge(i, j);
  return g;
}

ContactGraph build_contact_graph(const Configuration& cfg) {
  ValidationReport report = validate_configuration(cfg);
  if (!report.ok()) throw std::invalid_argument(report.violation->message);
  return build_contact_graph_unchecked(cfg);
}

std::optional<Vec3> common_point(const std::vector<Cuboid>& boxes) {
  if (boxes.empty()) return Vec3{0, 0, 0};
  Vec3 point{0, 0, 0};
  for (int axis = 0; axis < 3; ++axis) {
    i64 lo = boxes[0].lo(axis);
    i64 hi = boxes[0].hi(axis);
    for (const Cuboid& b : boxes) {
      lo = std::max(lo, b.lo(axis));
      hi = std::min(hi, b.hi(axis));
    }
    // Closed intervals on a line have the Helly property, so an empty
    // running intersection certifies a disjoint pair on this axis.
    if (lo > hi) return std::nullopt;
    point[axis] = lo;
  }
  return point;
}

}  // namespace ccg
