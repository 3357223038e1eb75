#ifndef CCG_PERIODIC_HPP
#define CCG_PERIODIC_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ccg/budget.hpp"
#include "ccg/chroma.hpp"
#include "ccg/geometry.hpp"
#include "ccg/graph.hpp"

namespace ccg {

// A color for every placement (root cell, allowed orientation), repeating
// with the given period on each axis. Roots are folded into the fundamental
// domain [0,X) x [0,Y) x [0,Z) before lookup, so the assignment is total
// on all of space.
struct PeriodicColoring {
  std::string name;
  Vec3 dims;
  Freedom freedom = Freedom::F1;
  Vec3 period;
  int k = 0;                // palette size; stored colors lie in 1..k
  std::vector<Vec3> orients;
  std::vector<int> table;   // ((x*Y + y)*Z + z) * orients.size() + orientation

  int orientation_index(const Vec3& oriented) const;
  int color_at(const Vec3& root, int orientation) const;
  int color_of(const Cuboid& c) const;
};

// Evaluates `color` at every (cell, orientation) of the fundamental domain
// and stores the dense table. Throws std::invalid_argument when the inputs
// are inconsistent or a produced color falls outside 1..k.
PeriodicColoring materialize_periodic(
    std::string name, const Vec3& dims, Freedom freedom, const Vec3& period,
    int k, const std::function<int(const Vec3&, int)>& color);

struct PeriodicViolation {
  Cuboid a;
  Cuboid b;
  int color = 0;
};

// Properness check: for every placement rooted in one fundamental domain and
// every placement within touching reach of it (per axis, second roots range
// over [first root - max side, first root + first's side + max side]), two
// touching placements must receive distinct colors. Returns the first
// violating pair, which covers a placement touching its own periodic
// translate. nullopt means proper everywhere.
std::optional<PeriodicViolation> verify_periodic(const PeriodicColoring& pc);

// Closed-form colorings. Names: checkerboard2 (unit cube, 2 colors),
// octant8_F1 (any dims, 8), oddxy8_F2 (odd x/y sides, 8),
// allodd8_F3 (all sides odd, 8), stripes4_ax1x1 (dims (a,1,1), 4).
// Incompatible dims throw std::invalid_argument.
PeriodicColoring formula_coloring(const std::string& name, const Vec3& dims);

// Tabulated colorings. Names: b_2x1x1_3col, d_2x2x1_5col, e_ax2x1_6col,
// f_ax3x1_7col, g_ax4x1_7col, chi2_2x1x1_5col, chi3_2x1x1_6col.
// The stripe-shift families e/f/g take the free side length `a`
// (0 selects the smallest tabulated instance: 2, 3 and 4 respectively);
// the other fixtures have fixed shapes and ignore `a` unless it conflicts.
PeriodicColoring fixture_coloring(const std::string& name, i64 a = 0);

enum class Partition { orientation_class, z_parity_layers };

// Combines a base coloring into one for a richer class by giving each part
// of a partition its own copy of the base palette.
//   orientation_class: base must be translate-only; the result colors each
//     orientation class of `target` by the base evaluated at coordinates
//     permuted so that the class's boxes map onto base-shaped boxes.
//   z_parity_layers: base dims must have z side 1 and `target` must equal
//     the base freedom; placements are split by root z parity, so the base
//     only needs to be proper within single layers.
PeriodicColoring product_coloring(const PeriodicColoring& base,
                                  Partition partition, Freedom target);

// Registry of all built-in colorings by name. Formula colorings take their
// dimensions from `dims`; fixtures validate `dims` against their fixed shape
// (the stripe-shift fixtures read the free side length from it).
PeriodicColoring named_coloring(const std::string& name,
                                const std::optional<Vec3>& dims = std::nullopt);
std::vector<std::string> named_coloring_names();

// Colors of cfg's cuboids under pc. Throws std::invalid_argument when a
// cuboid's orientation is not covered by pc.
Coloring inherited_coloring(const PeriodicColoring& pc,
                            const Configuration& cfg);

// Vertices are all placements rooted in the fundamental domain of `period`;
// two vertices are adjacent when any of their periodic translates touch.
// has_loop marks a placement touching its own translate.
struct TorusGraph {
  Graph graph{0};
  bool has_loop = false;
  std::vector<Cuboid> vertices;
};

TorusGraph build_torus_graph(const Vec3& dims, Freedom freedom,
                             const Vec3& period);

struct PercoResult {
  SolveStatus status = SolveStatus::found;
  bool infinite = false;  // some placement touches its own translate
  bool exceeded = false;  // proven larger than max_k (when max_k > 0)
  int value = 0;          // exact minimum palette size when found
  int lower_bound = 0;
  int upper_bound = 0;
  int vertices = 0;
  std::int64_t edge_count = 0;
};

// Minimum palette size over all colorings with the given period: infinite
// when the torus graph has a loop, otherwise its chromatic number. max_k
// only flags `exceeded`; the value is still computed exactly when the
// budget allows.
PercoResult perco(const Vec3& dims, Freedom freedom, const Vec3& period,
                  int max_k, const Budget& budget);

}  // namespace ccg

#endif
