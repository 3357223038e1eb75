#ifndef CCG_BOUNDS_HPP
#define CCG_BOUNDS_HPP

#include <vector>

#include "ccg/geometry.hpp"
#include "ccg/graph.hpp"

namespace ccg {

// All candidate neighbors of the fixed center box [0,A]x[0,B]x[0,C]: cuboids
// in the freedom class that touch the center without colliding and could
// still neighbor a cuboid extremal along one distinguished axis. A candidate
// is admitted iff its root is non-negative on that axis and either lies at
// level >= 1, or lies at level 0 while abutting one of the center's two far
// faces transverse to the axis; contacts on the distinguished axis itself
// come from the far side only. The distinguished axis is the vertical (z)
// for translates-only and the two-orientation class, and x for the full
// class, whose values do not depend on the choice. Roots are enumerated over
// [-(neighbor side), center side] per axis, which covers every touching
// position.
std::vector<Cuboid> enumerate_neighbors(const Vec3& center_orientation,
                                        const Vec3& dims, Freedom freedom);

// Exact maximum number of pairwise non-colliding candidates: the
// independence number of the collision graph, computed as a maximum clique
// of its complement.
int independence_number(const std::vector<Cuboid>& candidates);

struct OrientationBound {
  Vec3 center;          // center orientation this value was computed for
  int value;            // independence number of its candidate set
  int candidate_count;  // size of the candidate set
};

struct BoundResult {
  int n_value = 0;  // max over computed center orientations
  std::vector<OrientationBound> per_orientation;
};

// The neighbor bound for the dimension triple: the maximum, over a
// mirror-symmetry-reduced set of center orientations, of the candidate
// independence number. Swapping the two center sides transverse to the
// distinguished axis maps candidate sets onto each other, so one
// representative per mirror pair is computed: the sole orientation for
// translates-only, (a,b,c) for the two-orientation class, and for the full
// class the first orientation of each y<->z pair in enumeration order. The
// chromatic number of every graph in the class is at most n_value + 1.
BoundResult n_bound(const Vec3& dims, Freedom freedom);

}  // namespace ccg

#endif
