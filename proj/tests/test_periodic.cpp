#include <doctest.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ccg/budget.hpp"
#include "ccg/contact_graph.hpp"
#include "ccg/periodic.hpp"
#include "ccg/rng.hpp"
#include "helpers.hpp"

using namespace ccg;
using namespace ccg::testing;

namespace {

int digit(char c) { return c - '0'; }

// Layer z = 0 of the tabulated 5-coloring of 2x2x1 translates, as printed in
// the source (rows indexed by y, columns by x).
const char* const kDLayer0[10] = {
    "1122334455", "1122334455", "4455112233", "4455112233", "2233445511",
    "2233445511", "5511223344", "5511223344", "3344551122", "3344551122"};

const char* const kDLayer1[10] = {
    "4551122334", "2334455112", "2334455112", "5112233445", "5112233445",
    "3445511223", "3445511223", "1223344551", "1223344551", "4551122334"};

}  // namespace

TEST_SUITE("periodic") {

TEST_CASE("the registry lists every built-in coloring") {
  std::vector<std::string> expected = {
      "checkerboard2",  "octant8_F1",      "oddxy8_F2",
      "allodd8_F3",     "stripes4_ax1x1",  "b_2x1x1_3col",
      "d_2x2x1_5col",   "e_ax2x1_6col",    "f_ax3x1_7col",
      "g_ax4x1_7col",   "chi2_2x1x1_5col", "chi3_2x1x1_6col"};
  CHECK(named_coloring_names() == expected);
}

TEST_CASE("registry entries carry the advertised palette and freedom") {
  struct Row {
    const char* name;
    std::optional<Vec3> dims;
    int k;
    Freedom freedom;
  };
  const Row rows[] = {
      {"checkerboard2", std::nullopt, 2, Freedom::F1},
      {"octant8_F1", Vec3{2, 2, 2}, 8, Freedom::F1},
      {"oddxy8_F2", Vec3{3, 3, 2}, 8, Freedom::F2},
      {"allodd8_F3", Vec3{3, 1, 1}, 8, Freedom::F3},
      {"stripes4_ax1x1", Vec3{3, 1, 1}, 4, Freedom::F1},
      {"b_2x1x1_3col", std::nullopt, 3, Freedom::F1},
      {"d_2x2x1_5col", std::nullopt, 5, Freedom::F1},
      {"e_ax2x1_6col", std::nullopt, 6, Freedom::F1},
      {"f_ax3x1_7col", std::nullopt, 7, Freedom::F1},
      {"g_ax4x1_7col", std::nullopt, 7, Freedom::F1},
      {"chi2_2x1x1_5col", std::nullopt, 5, Freedom::F2},
      {"chi3_2x1x1_6col", std::nullopt, 6, Freedom::F3},
  };
  for (const Row& row : rows) {
    CAPTURE(row.name);
    PeriodicColoring pc = named_coloring(row.name, row.dims);
    CHECK(pc.k == row.k);
    CHECK(pc.freedom == row.freedom);
    for (int c : pc.table) {
      REQUIRE(c >= 1);
      REQUIRE(c <= pc.k);
    }
  }
}

TEST_CASE("registry validates dims against fixed shapes") {
  CHECK_THROWS_AS(named_coloring("octant8_F1"), std::invalid_argument);
  CHECK_THROWS_AS(named_coloring("d_2x2x1_5col", Vec3{3, 2, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(named_coloring("e_ax2x1_6col", Vec3{5, 3, 1}),
                  std::invalid_argument);
  CHECK(named_coloring("e_ax2x1_6col", Vec3{5, 2, 1}).dims == Vec3{5, 2, 1});
  CHECK(named_coloring("chi2_2x1x1_5col", Vec3{2, 1, 1}).k == 5);
  CHECK_THROWS_AS(named_coloring("no_such_coloring"), std::invalid_argument);
  CHECK_THROWS_AS(fixture_coloring("b_2x1x1_3col", 7), std::invalid_argument);
}

TEST_CASE("formula colorings reject incompatible dimensions") {
  CHECK_THROWS_AS(formula_coloring("checkerboard2", {2, 1, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(formula_coloring("oddxy8_F2", {2, 3, 2}),
                  std::invalid_argument);
  CHECK_THROWS_AS(formula_coloring("allodd8_F3", {3, 2, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(formula_coloring("stripes4_ax1x1", {2, 2, 1}),
                  std::invalid_argument);
  CHECK_NOTHROW(formula_coloring("octant8_F1", {5, 3, 2}));
}

TEST_CASE("checkerboard layers alternate as printed") {
  PeriodicColoring pc = formula_coloring("checkerboard2", {1, 1, 1});
  const char* const sq[2][2] = {{"12", "21"}, {"21", "12"}};
  for (i64 z = 0; z < 2; ++z)
    for (i64 y = 0; y < 2; ++y)
      for (i64 x = 0; x < 2; ++x)
        REQUIRE(pc.color_at({x, y, z}, 0) == digit(sq[z][y][x]));
  CHECK_FALSE(verify_periodic(pc).has_value());
}

TEST_CASE("octant colors reproduce the printed 4x4x4 block") {
  PeriodicColoring pc = formula_coloring("octant8_F1", {2, 2, 2});
  const char* const block[4][4] = {{"1122", "1122", "3344", "3344"},
                                   {"1122", "1122", "3344", "3344"},
                                   {"5566", "5566", "7788", "7788"},
                                   {"5566", "5566", "7788", "7788"}};
  for (i64 z = 0; z < 4; ++z)
    for (i64 y = 0; y < 4; ++y)
      for (i64 x = 0; x < 4; ++x)
        REQUIRE(pc.color_at({x, y, z}, 0) == digit(block[z][y][x]));
}

TEST_CASE("stripe colors reproduce the printed rows") {
  PeriodicColoring pc = formula_coloring("stripes4_ax1x1", {4, 1, 1});
  const char* const rows[2][2] = {{"11112222", "33334444"},
                                  {"33334444", "11112222"}};
  for (i64 z = 0; z < 2; ++z)
    for (i64 y = 0; y < 2; ++y)
      for (i64 x = 0; x < 8; ++x)
        REQUIRE(pc.color_at({x, y, z}, 0) == digit(rows[z][y][x]));
  CHECK_FALSE(verify_periodic(pc).has_value());
}

TEST_CASE("the 3-coloring of double cubes matches its printed squares") {
  PeriodicColoring pc = fixture_coloring("b_2x1x1_3col");
  const char* const sq[2][2] = {{"112233", "233112"}, {"233112", "112233"}};
  for (i64 z = 0; z < 2; ++z)
    for (i64 y = 0; y < 2; ++y)
      for (i64 x = 0; x < 6; ++x)
        REQUIRE(pc.color_at({x, y, z}, 0) == digit(sq[z][y][x]));
  CHECK_FALSE(verify_periodic(pc).has_value());
}

TEST_CASE("the 5-coloring of square tiles matches its printed squares") {
  PeriodicColoring pc = fixture_coloring("d_2x2x1_5col");
  REQUIRE(pc.period == Vec3{10, 10, 2});
  for (i64 z = 0; z < 2; ++z)
    for (i64 y = 0; y < 10; ++y)
      for (i64 x = 0; x < 10; ++x)
        REQUIRE(pc.color_at({x, y, z}, 0) ==
                digit((z == 0 ? kDLayer0 : kDLayer1)[y][x]));
  CHECK_FALSE(verify_periodic(pc).has_value());
}

TEST_CASE("stripe-shift families match their printed tables") {
  // Tables transcribed from the source; indexed [z][x], strings along y.
  const char* const e_rows[2][4] = {
      {"112233445566", "112233445566", "445566112233", "445566112233"},
      {"566112233445", "566112233445", "233445566112", "233445566112"}};
  PeriodicColoring e = fixture_coloring("e_ax2x1_6col", 2);
  REQUIRE(e.period == Vec3{4, 12, 2});
  for (i64 z = 0; z < 2; ++z)
    for (i64 x = 0; x < 4; ++x)
      for (i64 y = 0; y < 12; ++y)
        REQUIRE(e.color_at({x, y, z}, 0) == digit(e_rows[z][x][y]));

  const char* const f_rows[2][2] = {
      {"111222333444555666777", "455566677711122233344"},
      {"667771112223334445556", "333444555666777111222"}};
  PeriodicColoring f = fixture_coloring("f_ax3x1_7col", 3);
  REQUIRE(f.period == Vec3{6, 21, 2});
  for (i64 z = 0; z < 2; ++z)
    for (i64 x = 0; x < 6; ++x)
      for (i64 y = 0; y < 21; ++y)
        REQUIRE(f.color_at({x, y, z}, 0) == digit(f_rows[z][x / 3][y]));

  const char* const g_rows[2][2] = {
      {"1111222233334444555566667777", "4455556666777711112222333344"},
      {"6667777111122223333444455556", "2333344445555666677771111222"}};
  PeriodicColoring g = fixture_coloring("g_ax4x1_7col", 4);
  REQUIRE(g.period == Vec3{8, 28, 2});
  for (i64 z = 0; z < 2; ++z)
    for (i64 x = 0; x < 8; ++x)
      for (i64 y = 0; y < 28; ++y)
        REQUIRE(g.color_at({x, y, z}, 0) == digit(g_rows[z][x / 4][y]));
}

TEST_CASE("the two-orientation 5-coloring matches its printed squares") {
  // Digits sit on cells of even coordinate sum; '_' marks the others.
  const char* const base[2][10] = {
      {"1_2_3_4_5_", "_3_4_5_1_2", "4_5_1_2_3_", "_1_2_3_4_5", "2_3_4_5_1_",
       "_4_5_1_2_3", "5_1_2_3_4_", "_2_3_4_5_1", "3_4_5_1_2_", "_5_1_2_3_4"},
      {"_4_5_1_2_3", "5_1_2_3_4_", "_2_3_4_5_1", "3_4_5_1_2_", "_5_1_2_3_4",
       "1_2_3_4_5_", "_3_4_5_1_2", "4_5_1_2_3_", "_1_2_3_4_5", "2_3_4_5_1_"}};

  PeriodicColoring pc = fixture_coloring("chi2_2x1x1_5col");
  REQUIRE(pc.period == Vec3{10, 10, 2});
  REQUIRE(pc.orients.size() == 2);
  auto cell = [&](i64 x, i64 y, i64 z) { return base[z % 2][y % 10][x % 10]; };
  for (i64 z = 0; z < 2; ++z)
    for (i64 y = 0; y < 10; ++y)
      for (i64 x = 0; x < 10; ++x) {
        if ((x + y + z) % 2 == 0) {
          REQUIRE(pc.color_at({x, y, z}, 0) == digit(cell(x, y, z)));
          REQUIRE(pc.color_at({x, y, z}, 1) == digit(cell(x, y, z)));
        } else {
          // Placements rooted on odd cells read the even cell one step along
          // their long axis.
          REQUIRE(pc.color_at({x, y, z}, 0) ==
                  digit(cell((x + 1) % 10, y, z)));
          REQUIRE(pc.color_at({x, y, z}, 1) ==
                  digit(cell(x, (y + 1) % 10, z)));
        }
      }
}

TEST_CASE("the six-orientation 6-coloring matches both printed layers") {
  // Rows printed top to bottom, so row 0 holds the largest y.
  const char* const layer0[12] = {
      "_3_6_3_6_3_6", "2_5_2_5_2_5_", "_4_1_4_1_4_1", "3_6_3_6_3_6_",
      "_5_2_5_2_5_2", "4_1_4_1_4_1_", "_6_3_6_3_6_3", "5_2_5_2_5_2_",
      "_1_4_1_4_1_4", "6_3_6_3_6_3_", "_2_5_2_5_2_5", "1_4_1_4_1_4_"};
  const char* const layer1[12] = {
      "5_2_5_2_5_2_", "_1_4_1_4_1_4", "6_3_6_3_6_3_", "_2_5_2_5_2_5",
      "1_4_1_4_1_4_", "_3_6_3_6_3_6", "2_5_2_5_2_5_", "_4_1_4_1_4_1",
      "3_6_3_6_3_6_", "_5_2_5_2_5_2", "4_1_4_1_4_1_", "_6_3_6_3_6_3"};

  PeriodicColoring pc = fixture_coloring("chi3_2x1x1_6col");
  REQUIRE(pc.period == Vec3{12, 12, 12});
  REQUIRE(pc.orients ==
          std::vector<Vec3>{{2, 1, 1}, {1, 2, 1}, {1, 1, 2}});

  // Each layer repeats the one below shifted two cells along x and one cell
  // down along y.
  auto even_color = [&](i64 x, i64 y, i64 z) {
    i64 xx = ((x + 2 * z) % 12 + 12) % 12;
    i64 yy = ((y - z) % 12 + 12) % 12;
    return digit(layer0[11 - yy][xx]);
  };

  // The printed second layer obeys exactly that shift.
  for (i64 y = 0; y < 12; ++y)
    for (i64 x = 0; x < 12; ++x)
      if ((x + y + 1) % 2 == 0)
        REQUIRE(digit(layer1[11 - y][x]) == even_color(x, y, 1));

  for (i64 z = 0; z < 2; ++z)
    for (i64 y = 0; y < 12; ++y)
      for (i64 x = 0; x < 12; ++x) {
        if ((x + y + z) % 2 == 0) {
          for (int oi = 0; oi < 3; ++oi)
            REQUIRE(pc.color_at({x, y, z}, oi) == even_color(x, y, z));
        } else {
          REQUIRE(pc.color_at({x, y, z}, 0) == even_color(x + 1, y, z));
          REQUIRE(pc.color_at({x, y, z}, 1) == even_color(x, y + 1, z));
          REQUIRE(pc.color_at({x, y, z}, 2) == even_color(x, y, z + 1));
        }
      }
}

TEST_CASE("verify_periodic reports within-period conflicts") {
  // Columns of constant x share a color with their z neighbors.
  PeriodicColoring broken = materialize_periodic(
      "columns", {1, 1, 1}, Freedom::F1, {3, 1, 1}, 3,
      [](const Vec3& r, int) { return 1 + static_cast<int>(r.x % 3); });
  auto v = verify_periodic(broken);
  REQUIRE(v.has_value());
  CHECK(touch(v->a, v->b));
  CHECK(broken.color_of(v->a) == broken.color_of(v->b));
  CHECK(v->color == broken.color_of(v->a));
}

TEST_CASE("verify_periodic reports conflicts across the period seam") {
  // A checkerboard with an odd x period is proper inside the fundamental
  // domain and breaks only where the pattern wraps.
  PeriodicColoring seam = materialize_periodic(
      "odd_wrap", {1, 1, 1}, Freedom::F1, {3, 2, 2}, 2,
      [](const Vec3& r, int) {
        return 1 + static_cast<int>((r.x + r.y + r.z) % 2);
      });
  auto v = verify_periodic(seam);
  REQUIRE(v.has_value());
  CHECK(touch(v->a, v->b));
  CHECK(seam.color_of(v->a) == seam.color_of(v->b));
  // The conflicting pair must straddle the x seam.
  i64 dx = v->a.root.x - v->b.root.x;
  CHECK((dx == 1 || dx == -1));
  bool wraps = v->a.root.x < 0 || v->a.root.x >= 3 || v->b.root.x < 0 ||
               v->b.root.x >= 3;
  CHECK(wraps);
}

TEST_CASE("materialize_periodic validates inputs") {
  auto one = [](const Vec3&, int) { return 1; };
  CHECK_THROWS_AS(
      materialize_periodic("p", {1, 1, 1}, Freedom::F1, {0, 1, 1}, 1, one),
      std::invalid_argument);
  CHECK_THROWS_AS(
      materialize_periodic("p", {1, 0, 1}, Freedom::F1, {1, 1, 1}, 1, one),
      std::invalid_argument);
  CHECK_THROWS_AS(
      materialize_periodic("p", {1, 1, 1}, Freedom::F1, {1, 1, 1}, 0, one),
      std::invalid_argument);
  auto big = [](const Vec3&, int) { return 9; };
  CHECK_THROWS_AS(
      materialize_periodic("p", {1, 1, 1}, Freedom::F1, {2, 2, 2}, 8, big),
      std::invalid_argument);
}

TEST_CASE("color lookups fold roots and validate orientations") {
  PeriodicColoring pc = fixture_coloring("d_2x2x1_5col");
  CHECK(pc.color_at({13, -7, 4}, 0) == pc.color_at({3, 3, 0}, 0));
  CHECK(pc.orientation_index({2, 2, 1}) == 0);
  CHECK(pc.orientation_index({1, 2, 2}) == -1);
  CHECK_THROWS_AS(pc.color_at({0, 0, 0}, 1), std::out_of_range);
  CHECK_THROWS_AS(pc.color_of(Cuboid{{0, 0, 0}, {1, 2, 2}}),
                  std::invalid_argument);
  CHECK(pc.color_of(Cuboid{{2, 0, 0}, {2, 2, 1}}) == digit(kDLayer0[0][2]));
}

TEST_CASE("orientation products color richer classes properly") {
  PeriodicColoring base = formula_coloring("octant8_F1", {3, 2, 1});
  PeriodicColoring f2 = product_coloring(base, Partition::orientation_class,
                                         Freedom::F2);
  CHECK(f2.freedom == Freedom::F2);
  CHECK(f2.k == 16);
  CHECK_FALSE(verify_periodic(f2).has_value());

  PeriodicColoring f3 = product_coloring(base, Partition::orientation_class,
                                         Freedom::F3);
  CHECK(f3.freedom == Freedom::F3);
  CHECK(f3.k == 48);
  CHECK_FALSE(verify_periodic(f3).has_value());

  PeriodicColoring same = product_coloring(base, Partition::orientation_class,
                                           Freedom::F1);
  CHECK(same.k == base.k);
  CHECK(same.table == base.table);
}

TEST_CASE("layer products repair colorings that are only proper per layer") {
  PeriodicColoring flat = materialize_periodic(
      "single_layer", {2, 2, 1}, Freedom::F1, {10, 10, 1}, 5,
      [](const Vec3& r, int) {
        return kDLayer0[r.y % 10][r.x % 10] - '0';
      });
  // Stacked copies of one layer collide in color along z.
  CHECK(verify_periodic(flat).has_value());

  PeriodicColoring layered =
      product_coloring(flat, Partition::z_parity_layers, Freedom::F1);
  CHECK(layered.k == 10);
  CHECK(layered.period == Vec3{10, 10, 2});
  CHECK_FALSE(verify_periodic(layered).has_value());
}

TEST_CASE("product colorings reject mismatched bases") {
  PeriodicColoring chi2 = fixture_coloring("chi2_2x1x1_5col");
  CHECK_THROWS_AS(
      product_coloring(chi2, Partition::orientation_class, Freedom::F3),
      std::invalid_argument);
  CHECK_THROWS_AS(
      product_coloring(chi2, Partition::z_parity_layers, Freedom::F1),
      std::invalid_argument);

  PeriodicColoring tall = formula_coloring("octant8_F1", {1, 1, 2});
  CHECK_THROWS_AS(
      product_coloring(tall, Partition::z_parity_layers, Freedom::F1),
      std::invalid_argument);

  // chi2 has z side 1 and keeps its freedom, so its layer product exists.
  PeriodicColoring doubled =
      product_coloring(chi2, Partition::z_parity_layers, Freedom::F2);
  CHECK(doubled.k == 10);
  CHECK_FALSE(verify_periodic(doubled).has_value());
}

TEST_CASE("inherited colorings are proper on random configurations") {
  SplitMix64 rng(0x5eed0401);
  PeriodicColoring octant = formula_coloring("octant8_F1", {2, 3, 2});
  PeriodicColoring chi2 = fixture_coloring("chi2_2x1x1_5col");
  PeriodicColoring chi3 = fixture_coloring("chi3_2x1x1_6col");
  PeriodicColoring prod = product_coloring(
      formula_coloring("octant8_F1", {3, 2, 1}), Partition::orientation_class,
      Freedom::F3);

  struct Combo {
    const PeriodicColoring* pc;
    Vec3 dims;
    Freedom freedom;
  };
  const Combo combos[] = {
      {&octant, {2, 3, 2}, Freedom::F1},
      {&chi2, {2, 1, 1}, Freedom::F2},
      {&chi3, {2, 1, 1}, Freedom::F3},
      {&prod, {3, 2, 1}, Freedom::F3},
  };
  for (const Combo& combo : combos) {
    for (int it = 0; it < 50; ++it) {
      Configuration cfg =
          random_configuration(rng, combo.dims, combo.freedom, 12, 11);
      Coloring col = inherited_coloring(*combo.pc, cfg);
      REQUIRE(col.size() == cfg.cuboids.size());
      for (int c : col) {
        REQUIRE(c >= 1);
        REQUIRE(c <= combo.pc->k);
      }
      ContactGraph g = build_contact_graph_unchecked(cfg);
      REQUIRE_FALSE(verify_coloring(g, col).has_value());
    }
  }

  Configuration vertical{{2, 1, 1}, Freedom::F3,
                         {Cuboid{{0, 0, 0}, {1, 1, 2}}}};
  CHECK_THROWS_AS(inherited_coloring(chi2, vertical), std::invalid_argument);
}

TEST_CASE("torus graphs identify translates and report loops") {
  TorusGraph tg = build_torus_graph({1, 1, 1}, Freedom::F1, {2, 2, 2});
  CHECK(tg.graph.n == 8);
  CHECK(tg.graph.edge_count() == 12);
  CHECK_FALSE(tg.has_loop);
  for (int v = 0; v < tg.graph.n; ++v) CHECK(tg.graph.degree(v) == 3);

  TorusGraph loop = build_torus_graph({2, 1, 1}, Freedom::F1, {1, 1, 1});
  CHECK(loop.has_loop);

  CHECK_THROWS_AS(build_torus_graph({1, 1, 1}, Freedom::F1, {30, 30, 30}),
                  std::invalid_argument);
}

TEST_CASE("periodic palette minima on small tori") {
  Budget budget{30.0};
  PercoResult unit = perco({1, 1, 1}, Freedom::F1, {2, 2, 2}, 0, budget);
  CHECK(unit.status == SolveStatus::found);
  CHECK_FALSE(unit.infinite);
  CHECK(unit.value == 2);
  CHECK(unit.vertices == 8);

  PercoResult wrapped = perco({2, 1, 1}, Freedom::F1, {1, 1, 1}, 0, budget);
  CHECK(wrapped.infinite);

  PercoResult capped = perco({1, 1, 1}, Freedom::F1, {3, 3, 3}, 2, budget);
  CHECK(capped.status == SolveStatus::found);
  CHECK(capped.value == 3);  // odd wrap forces a third color
  CHECK(capped.exceeded);
}

}  // TEST_SUITE
