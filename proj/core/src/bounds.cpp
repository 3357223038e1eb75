#include "ccg/bounds.hpp"

#include <algorithm>

namespace ccg {

namespace {

// Axis (0..2) and side (-1 min face, +1 max face) of the single abutting
// face between the center at the origin and a touching candidate.
std::pair<int, int> contact_face(const Cuboid& center, const Cuboid& q) {
  for (int axis = 0; axis < 3; ++axis) {
    if (overlap_len(center, q, axis) == 0) {
      int side = q.root[axis] == center.hi(axis) ? +1 : -1;
      return {axis, side};
    }
  }
  return {-1, 0};
}

// A neighbor is counted when it could still touch a cuboid that is extremal
// along one distinguished axis: its root cannot be below the center on that
// axis, contacts on that axis come from the far side only, and at level zero
// only contacts on the far faces of the remaining two axes survive. The
// distinguished axis is the vertical for F1 and F2 (the height plays that
// role in the layered arguments); F3 values are invariant under relabeling,
// and the x axis is used there so that per-orientation values are reported
// against the orientation of the center's x side.
bool admitted(const Cuboid& center, const Cuboid& q, int special) {
  if (q.root[special] < 0) return false;
  auto [axis, side] = contact_face(center, q);
  if (axis == special) return side > 0;
  if (q.root[special] >= 1) return true;
  return side > 0;
}

int special_axis(Freedom freedom) {
  return freedom == Freedom::F3 ? 0 : 2;
}

}  // namespace

std::vector<Cuboid> enumerate_neighbors(const Vec3& center_orientation,
                                        const Vec3& dims, Freedom freedom) {
  const Cuboid center{{0, 0, 0}, center_orientation};
  const int special = special_axis(freedom);
  std::vector<Cuboid> out;
  for (const Vec3& o : orientations(dims, freedom)) {
    for (i64 x = -o.x; x <= center_orientation.x; ++x) {
      for (i64 y = -o.y; y <= center_orientation.y; ++y) {
        for (i64 z = -o.z; z <= center_orientation.z; ++z) {
          Cuboid q{{x, y, z}, o};
          if (!touch(center, q)) continue;
          if (!admitted(center, q, special)) continue;
          out.push_back(q);
        }
      }
    }
  }
  return out;
}

int independence_number(const std::vector<Cuboid>& candidates) {
  const int n = static_cast<int>(candidates.size());
  Graph compatible(n);  // complement of the collision graph
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!collide(candidates[static_cast<size_t>(i)], candidates[static_cast<size_t>(j)]))
        compatible.add_edge(i, j);
  return clique_number(compatible);
}

BoundResult n_bound(const Vec3& dims, Freedom freedom) {
  std::vector<Vec3> centers;

  switch (freedom) {
    case Freedom::F1:
      centers.push_back(dims);
      break;
    case Freedom::F2:
      // The two orientations are mirrors in the axes transverse to the
      // vertical, so one center represents both.
      centers.push_back(dims);
      break;
    case Freedom::F3: {
      // Swapping the sides transverse to the distinguished x axis mirrors
      // the candidate set, so one center per y<->z pair suffices.
      auto swap_yz = [](const Vec3& v) { return Vec3{v.x, v.z, v.y}; };
      std::vector<Vec3> seen;
      for (const Vec3& o : orientations(dims, Freedom::F3)) {
        Vec3 m = swap_yz(o);
        if (std::find(seen.begin(), seen.end(), m) != seen.end()) continue;
        seen.push_back(o);
        centers.push_back(o);
      }
      break;
    }
  }

  BoundResult result;
  for (const Vec3& center : centers) {
    std::vector<Cuboid> cands = enumerate_neighbors(center, dims, freedom);
    int value = independence_number(cands);
    result.per_orientation.push_back(
        {center, value, static_cast<int>(cands.size())});
    result.n_value = std::max(result.n_value, value);
  }
  return result;
}

}  // namespace ccg
