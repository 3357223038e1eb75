#ifndef CCG_CONTACT_GRAPH_HPP
#define CCG_CONTACT_GRAPH_HPP

#include <optional>
#include <string>
#include <vector>

#include "ccg/geometry.hpp"
#include "ccg/graph.hpp"

namespace ccg {

// Contact graphs are plain graphs over cuboid indices in input order.
using ContactGraph = Graph;

enum class ViolationKind { collision, bad_orientation };

struct Violation {
  ViolationKind kind;
  int index_a = -1;
  int index_b = -1;  // -1 for single-cuboid violations
  std::string message;
};

struct ValidationReport {
  std::optional<Violation> violation;
  bool ok() const { return !violation.has_value(); }
};

// Checks that every cuboid uses an orientation permitted by the
// configuration's dims/freedom and that all pairs are interior-disjoint.
// Reports the first offending index or pair instead of throwing.
ValidationReport validate_configuration(const Configuration& cfg);

// Builds the graph whose edges are exactly the touching pairs.
// Throws std::invalid_argument carrying the violation message when the
// configuration does not validate.
ContactGraph build_contact_graph(const Configuration& cfg);

// Builds the touch graph without validating; for callers that construct
// configurations collision-free by construction.
ContactGraph build_contact_graph_unchecked(const Configuration& cfg);

// If all pairs of closed boxes intersect, returns the componentwise maximum
// of the lower corners, a point contained in every box. Returns nullopt when
// some pair is disjoint.
std::optional<Vec3> common_point(const std::vector<Cuboid>& boxes);

}  // namespace ccg

#endif
