#include <doctest.h>

#include <algorithm>
#include <tuple>
#include <vector>

#include "ccg/bounds.hpp"
#include "ccg/geometry.hpp"
#include "helpers.hpp"

using namespace ccg;
using namespace ccg::testing;

namespace {

// Independent re-derivation of the candidate set, enumerated over a window
// two cells wider than necessary on every side: a neighbor of the center
// [0,A]x[0,B]x[0,C] is admitted when it touches without colliding and its
// root is at level >= 1 on the distinguished axis, or at level 0 while
// abutting a far face on one of the other two axes. The distinguished axis
// is z for translates-only and the two-orientation class, x for the full
// class.
std::vector<Cuboid> candidate_oracle(const Vec3& center, const Vec3& dims,
                                     Freedom freedom) {
  Cuboid middle{{0, 0, 0}, center};
  std::vector<Cuboid> out;
  for (const Vec3& o : orientations(dims, freedom)) {
    for (i64 x = -o.x - 2; x <= center.x + 2; ++x)
      for (i64 y = -o.y - 2; y <= center.y + 2; ++y)
        for (i64 z = -o.z - 2; z <= center.z + 2; ++z) {
          Cuboid q{{x, y, z}, o};
          if (!touch(q, middle) || collide(q, middle)) continue;
          bool keep;
          if (freedom == Freedom::F3)
            keep = x >= 1 || (x == 0 && (y == center.y || z == center.z));
          else
            keep = z >= 1 || (z == 0 && (x == center.x || y == center.y));
          if (keep) out.push_back(q);
        }
  }
  return out;
}

std::vector<std::tuple<i64, i64, i64, i64, i64, i64>> keyed(
    std::vector<Cuboid> cs) {
  std::vector<std::tuple<i64, i64, i64, i64, i64, i64>> keys;
  keys.reserve(cs.size());
  for (const Cuboid& c : cs)
    keys.emplace_back(c.root.x, c.root.y, c.root.z, c.dims.x, c.dims.y,
                      c.dims.z);
  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace

TEST_SUITE("bounds") {

TEST_CASE("unit cubes admit exactly three candidates") {
  // The three surviving face neighbors sit on the far faces at x=1, y=1 and
  // z=1, for every freedom class.
  std::vector<std::tuple<i64, i64, i64, i64, i64, i64>> expected = {
      {0, 0, 1, 1, 1, 1}, {0, 1, 0, 1, 1, 1}, {1, 0, 0, 1, 1, 1}};
  std::sort(expected.begin(), expected.end());
  for (Freedom f : {Freedom::F1, Freedom::F2, Freedom::F3}) {
    auto cands = enumerate_neighbors({1, 1, 1}, {1, 1, 1}, f);
    CHECK(keyed(cands) == expected);
    CHECK(independence_number(cands) == 3);
    CHECK(n_bound({1, 1, 1}, f).n_value == 3);
  }
}

TEST_CASE("worked candidate counts for a 3x2x1 box and its upright twin") {
  // Center [0,3]x[0,2]x[0,1], translates only. Root offsets (dx,dy,dz) give
  // per-axis overlaps 3-|dx|, 2-|dy|, 1-|dz|; touching means exactly one is
  // zero. Top-face contacts (dz=1): |dx|<=2 and |dy|<=1, 5*3 = 15. At floor
  // level (dz=0) only the far x face (dx=3, |dy|<=1: 3 roots) and the far y
  // face (dy=2, |dx|<=2: 5 roots) are admitted, so 23 in total.
  CHECK(enumerate_neighbors({3, 2, 1}, {3, 2, 1}, Freedom::F1).size() == 23);
  // Standing upright: top contacts dz=3 give 1*3 = 3 roots; x contacts
  // (|dx|=1, |dy|<=1, dz in {0,1,2}) give 2*3*2 = 12 above the floor plus 3
  // at dx=1, dz=0; y contacts (dy=+-2, dx=0) give 4 above plus 1 at dy=2.
  CHECK(enumerate_neighbors({1, 2, 3}, {1, 2, 3}, Freedom::F1).size() == 23);
}

TEST_CASE("per-center independence values for the 1x2x3 shape") {
  BoundResult r = n_bound({1, 2, 3}, Freedom::F3);
  REQUIRE(r.per_orientation.size() == 3);
  // One representative per x<->y mirror pair; the value depends only on the
  // center's height: largest standing on the smallest face, smallest flat.
  for (const OrientationBound& ob : r.per_orientation) {
    if (ob.center.z == 3) CHECK(ob.value == 16);
    if (ob.center.z == 2) CHECK(ob.value == 14);
    if (ob.center.z == 1) CHECK(ob.value == 10);
  }
  CHECK(r.n_value == 16);
}

TEST_CASE("candidates touch the center, avoid its interior and the floor") {
  const Vec3 combos[][2] = {
      {{2, 2, 1}, {2, 2, 1}},
      {{3, 1, 1}, {3, 1, 1}},
      {{1, 3, 1}, {3, 1, 1}},
      {{2, 3, 2}, {2, 3, 2}},
  };
  for (const auto& combo : combos) {
    const Vec3& center = combo[0];
    const Vec3& dims = combo[1];
    for (Freedom f : {Freedom::F1, Freedom::F2, Freedom::F3}) {
      Cuboid middle{{0, 0, 0}, center};
      auto cands = enumerate_neighbors(center, dims, f);
      for (const Cuboid& q : cands) {
        CAPTURE(q.root.x); CAPTURE(q.root.y); CAPTURE(q.root.z);
        REQUIRE(touch(q, middle));
        REQUIRE_FALSE(collide(q, middle));
        REQUIRE(orientation_allowed(dims, f, q.dims));
        REQUIRE(q.root.z >= 0);
        if (q.root.z == 0)
          REQUIRE((q.root.x == center.x || q.root.y == center.y));
      }
      auto keys = keyed(cands);
      auto dedup = keys;
      dedup.erase(std::unique(dedup.begin(), dedup.end()), dedup.end());
      REQUIRE(dedup.size() == keys.size());
    }
  }
}

TEST_CASE("the candidate set matches an independent re-derivation") {
  const std::tuple<Vec3, Vec3, Freedom> cases[] = {
      {{1, 1, 1}, {1, 1, 1}, Freedom::F1},
      {{1, 2, 3}, {1, 2, 3}, Freedom::F1},
      {{3, 2, 1}, {3, 2, 1}, Freedom::F1},
      {{2, 1, 2}, {2, 1, 2}, Freedom::F2},
      {{1, 3, 1}, {3, 1, 1}, Freedom::F2},
      {{2, 2, 1}, {2, 2, 1}, Freedom::F2},
      {{1, 2, 3}, {1, 2, 3}, Freedom::F3},
      {{2, 1, 1}, {2, 1, 1}, Freedom::F3},
  };
  for (const auto& [center, dims, freedom] : cases) {
    CAPTURE(to_string(center));
    CAPTURE(static_cast<int>(freedom));
    REQUIRE(keyed(enumerate_neighbors(center, dims, freedom)) ==
            keyed(candidate_oracle(center, dims, freedom)));
  }
}

TEST_CASE("swapping the horizontal sides of the center changes nothing") {
  Vec3 dims{1, 2, 3};
  auto all = orientations(dims, Freedom::F3);
  int best = 0;
  for (const Vec3& center : all) {
    int v = independence_number(enumerate_neighbors(center, dims, Freedom::F3));
    Vec3 mirrored{center.y, center.x, center.z};
    int vm =
        independence_number(enumerate_neighbors(mirrored, dims, Freedom::F3));
    CAPTURE(to_string(center));
    REQUIRE(v == vm);
    best = std::max(best, v);
  }
  CHECK(n_bound(dims, Freedom::F3).n_value == best);
}

TEST_CASE("per-orientation entries are internally consistent") {
  BoundResult r = n_bound({3, 2, 1}, Freedom::F2);
  REQUIRE_FALSE(r.per_orientation.empty());
  int best = 0;
  for (const auto& ob : r.per_orientation) {
    auto cands = enumerate_neighbors(ob.center, {3, 2, 1}, Freedom::F2);
    REQUIRE(ob.candidate_count == static_cast<int>(cands.size()));
    REQUIRE(ob.value == independence_number(cands));
    best = std::max(best, ob.value);
  }
  CHECK(r.n_value == best);
}

TEST_CASE("the two-orientation bound ignores the vertical side") {
  int first = n_bound({2, 1, 2}, Freedom::F2).n_value;
  CHECK(first == 8);
  CHECK(n_bound({2, 1, 3}, Freedom::F2).n_value == first);
  CHECK(n_bound({2, 1, 4}, Freedom::F2).n_value == first);
}

TEST_CASE("spot values of the neighbor bound") {
  CHECK(n_bound({1, 1, 2}, Freedom::F2).n_value == 5);
  CHECK(n_bound({2, 2, 2}, Freedom::F2).n_value == 7);
  CHECK(n_bound({1, 1, 1}, Freedom::F3).n_value == 3);
  CHECK(n_bound({2, 1, 1}, Freedom::F3).n_value == 7);
}

}  // TEST_SUITE
