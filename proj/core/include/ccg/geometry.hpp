#ifndef CCG_GEOMETRY_HPP
#define CCG_GEOMETRY_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace ccg {

using i64 = std::int64_t;

// Coordinates and side lengths are kept within |v| <= 2^31 - 1 so that any
// face sum (root + side) fits in an i64 with room to spare.
inline constexpr i64 kCoordLimit = 2147483647;

struct Vec3 {
  i64 x = 0, y = 0, z = 0;

  i64 operator[](int axis) const { return axis == 0 ? x : axis == 1 ? y : z; }
  i64& operator[](int axis) {
    return axis == 0 ? x : axis == 1 ? y : z;
  }
  friend bool operator==(const Vec3&, const Vec3&) = default;
  friend Vec3 operator+(const Vec3& a, const Vec3& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend Vec3 operator-(const Vec3& a, const Vec3& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
  }
};

std::string to_string(const Vec3& v);

// Which axis permutations of the dimension triple a configuration may use:
// F1 translates only, F2 additionally swaps the two horizontal sides,
// F3 allows all six permutations.
enum class Freedom : int { F1 = 1, F2 = 2, F3 = 3 };

Freedom freedom_from_int(int level);

// Closed integer box [root, root + dims] per axis. dims is the oriented
// side-length triple; all entries are >= 1.
struct Cuboid {
  Vec3 root;
  Vec3 dims;

  i64 lo(int axis) const { return root[axis]; }
  i64 hi(int axis) const { return root[axis] + dims[axis]; }
  friend bool operator==(const Cuboid&, const Cuboid&) = default;
};

// Length of the closed overlap of the two boxes' extents on one axis.
// Negative means separated, zero means abutting faces.
inline i64 overlap_len(const Cuboid& p, const Cuboid& q, int axis) {
  i64 lo = p.lo(axis) > q.lo(axis) ? p.lo(axis) : q.lo(axis);
  i64 hi = p.hi(axis) < q.hi(axis) ? p.hi(axis) : q.hi(axis);
  return hi - lo;
}

// True iff the open interiors intersect (strict overlap on all three axes).
bool collide(const Cuboid& p, const Cuboid& q);

// True iff the boxes meet in a non-degenerate 2-D rectangle: exactly one
// axis has abutting faces and the other two overlap with positive length.
bool touch(const Cuboid& p, const Cuboid& q);

// The oriented dimension triples permitted by the freedom class, in a fixed
// deterministic order with duplicates (from equal sides) removed.
std::vector<Vec3> orientations(const Vec3& dims, Freedom freedom);

bool orientation_allowed(const Vec3& dims, Freedom freedom, const Vec3& oriented);

struct Configuration {
  Vec3 dims;
  Freedom freedom = Freedom::F1;
  std::vector<Cuboid> cuboids;
};

// Per-coordinate floored rescaling (x = q*a + r with 0 <= r < a maps to
// q*a' + r, per axis). Requires freedom F1 and target >= dims per axis;
// preserves the contact graph edge set exactly.
Configuration rescale(const Configuration& cfg, const Vec3& target);

}  // namespace ccg

#endif
