#include "ccg/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace ccg {

std::string to_string(const Vec3& v) {
  return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + "," +
         std::to_string(v.z) + ")";
}

Freedom freedom_from_int(int level) {
  if (level < 1 || level > 3)
    throw std::invalid_argument("freedom level must be 1, 2 or 3");
  return static_cast<Freedom>(level);
}

bool collide(const Cuboid& p, const Cuboid& q) {
  return overlap_len(p, q, 0) > 0 && overlap_len(p, q, 1) > 0 &&
         overlap_len(p, q, 2) > 0;
}

bool touch(const Cuboid& p, const Cuboid& q) {
  int zeros = 0;
  for (int axis = 0; axis < 3; ++axis) {
    i64 len = overlap_len(p, q, axis);
    if (len < 0) return false;
    if (len == 0) ++zeros;
  }
  return zeros == 1;
}

std::vector<Vec3> orientations(const Vec3& dims, Freedom freedom) {
  std::vector<Vec3> out;
  auto push_unique = [&out](const Vec3& v) {
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  };
  const i64 a = dims.x, b = dims.y, c = dims.z;
  switch (freedom) {
    case Freedom::F1:
      push_unique({a, b, c});
      break;
    case Freedom::F2:
      push_unique({a, b, c});
      push_unique({b, a, c});
      break;
    case Freedom::F3:
      push_unique({a, b, c});
      push_unique({a, c, b});
      push_unique({b, a, c});
      push_unique({b, c, a});
      push_unique({c, a, b});
      push_unique({c, b, a});
      break;
  }
  return out;
}

bool orientation_allowed(const Vec3& dims, Freedom freedom, const Vec3& oriented) {
  auto allowed = orientations(dims, freedom);
  return std::find(allowed.begin(), allowed.end(), oriented) != allowed.end();
}

Configuration rescale(const Configuration& cfg, const Vec3& target) {
  if (cfg.freedom != Freedom::F1)
    throw std::invalid_argument("rescale requires a translates-only configuration");
  for (int axis = 0; axis < 3; ++axis) {
    if (target[axis] < cfg.dims[axis])
      throw std::invalid_argument("rescale target must dominate dims per axis");
  }
  Configuration out;
  out.dims = target;
  out.freedom = Freedom::F1;
  out.cuboids.reserve(cfg.cuboids.size());
  for (const Cuboid& cub : cfg.cuboids) {
    Cuboid mapped;
    mapped.dims = target;
    for (int axis = 0; axis < 3; ++axis) {
      i64 old_side = cfg.dims[axis];
      i64 coord = cub.root[axis];
      i64 q = coord >= 0 ? coord / old_side : -((-coord + old_side - 1) / old_side);
      i64 r = coord - q * old_side;
      mapped.root[axis] = q * target[axis] + r;
    }
    out.cuboids.push_back(mapped);
  }
  return out;
}

}  // namespace ccg
