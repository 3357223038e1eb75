#include "ccg/periodic.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ccg {
namespace {

i64 imod(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

i64 floor_div(i64 a, i64 b) {
  i64 q = a / b;
  return q * b > a ? q - 1 : q;
}

i64 ceil_div(i64 a, i64 b) { return -floor_div(-a, b); }

Vec3 fold(const Vec3& p, const Vec3& period) {
  return {imod(p.x, period.x), imod(p.y, period.y), imod(p.z, period.z)};
}

void check_positive(const Vec3& v, const char* what) {
  if (v.x < 1 || v.y < 1 || v.z < 1)
    throw std::invalid_argument(std::string(what) +
                                " must be positive: " + to_string(v));
}

int digit(char c) { return c == '_' ? 0 : c - '0'; }

constexpr i64 kMaxTableCells = i64{1} << 24;
constexpr i64 kMaxTorusVertices = 16384;

}  // namespace

int PeriodicColoring::orientation_index(const Vec3& oriented) const {
  for (int i = 0; i < static_cast<int>(orients.size()); ++i)
    if (orients[static_cast<std::size_t>(i)] == oriented) return i;
  return -1;
}

int PeriodicColoring::color_at(const Vec3& root, int orientation) const {
  if (orientation < 0 || orientation >= static_cast<int>(orients.size()))
    throw std::out_of_range("orientation index out of range");
  Vec3 p = fold(root, period);
  std::size_t idx =
      (static_cast<std::size_t>((p.x * period.y + p.y) * period.z + p.z)) *
          orients.size() +
      static_cast<std::size_t>(orientation);
  return table[idx];
}

int PeriodicColoring::color_of(const Cuboid& c) const {
  int oi = orientation_index(c.dims);
  if (oi < 0)
    throw std::invalid_argument("orientation not covered by coloring " + name +
                                ": " + to_string(c.dims));
  return color_at(c.root, oi);
}

PeriodicColoring materialize_periodic(
    std::string name, const Vec3& dims, Freedom freedom, const Vec3& period,
    int k, const std::function<int(const Vec3&, int)>& color) {
  check_positive(dims, "dims");
  check_positive(period, "period");
  if (k < 1) throw std::invalid_argument("palette size must be positive");
  PeriodicColoring pc;
  pc.name = std::move(name);
  pc.dims = dims;
  pc.freedom = freedom;
  pc.period = period;
  pc.k = k;
  pc.orients = orientations(dims, freedom);
  i64 cells = static_cast<i64>(pc.orients.size());
  for (int ax = 0; ax < 3; ++ax) {
    cells *= period[ax];
    if (cells > kMaxTableCells)
      throw std::invalid_argument("period too large to materialize: " +
                                  to_string(period));
  }
  pc.table.reserve(static_cast<std::size_t>(cells));
  for (i64 x = 0; x < period.x; ++x)
    for (i64 y = 0; y < period.y; ++y)
      for (i64 z = 0; z < period.z; ++z)
        for (int oi = 0; oi < static_cast<int>(pc.orients.size()); ++oi) {
          int c = color(Vec3{x, y, z}, oi);
          if (c < 1 || c > k)
            throw std::invalid_argument(
                pc.name + ": color " + std::to_string(c) + " at " +
                to_string(Vec3{x, y, z}) + " outside 1.." + std::to_string(k));
          pc.table.push_back(c);
        }
  return pc;
}

std::optional<PeriodicViolation> verify_periodic(const PeriodicColoring& pc) {
  const i64 maxside = std::max({pc.dims.x, pc.dims.y, pc.dims.z});
  const int no = static_cast<int>(pc.orients.size());
  for (int op = 0; op < no; ++op) {
    const Vec3& od_p = pc.orients[static_cast<std::size_t>(op)];
    for (i64 x = 0; x < pc.period.x; ++x)
      for (i64 y = 0; y < pc.period.y; ++y)
        for (i64 z = 0; z < pc.period.z; ++z) {
          Cuboid p{{x, y, z}, od_p};
          int cp = pc.color_at(p.root, op);
          for (int oq = 0; oq < no; ++oq) {
            const Vec3& od_q = pc.orients[static_cast<std::size_t>(oq)];
            for (i64 qx = x - maxside; qx <= x + od_p.x + maxside; ++qx)
              for (i64 qy = y - maxside; qy <= y + od_p.y + maxside; ++qy)
                for (i64 qz = z - maxside; qz <= z + od_p.z + maxside; ++qz) {
                  if (oq == op && qx == x && qy == y && qz == z) continue;
                  Cuboid q{{qx, qy, qz}, od_q};
                  if (!touch(p, q)) continue;
                  if (pc.color_at(q.root, oq) == cp)
                    return PeriodicViolation{p, q, cp};
                }
          }
        }
  }
  return std::nullopt;
}

PeriodicColoring formula_coloring(const std::string& name, const Vec3& dims) {
  check_positive(dims, "dims");
  const i64 a = dims.x, b = dims.y, c = dims.z;
  if (name == "checkerboard2") {
    if (!(dims == Vec3{1, 1, 1}))
      throw std::invalid_argument("checkerboard2 requires dims 1,1,1");
    return materialize_periodic(
        name, dims, Freedom::F1, {2, 2, 2}, 2, [](const Vec3& r, int) {
          return 1 + static_cast<int>(imod(r.x + r.y + r.z, 2));
        });
  }
  if (name == "octant8_F1") {
    return materialize_periodic(
        name, dims, Freedom::F1, {2 * a, 2 * b, 2 * c}, 8,
        [=](const Vec3& r, int) {
          int t0 = static_cast<int>(imod(r.x, 2 * a) / a);
          int t1 = static_cast<int>(imod(r.y, 2 * b) / b);
          int t2 = static_cast<int>(imod(r.z, 2 * c) / c);
          return 1 + t0 + 2 * t1 + 4 * t2;
        });
  }
  if (name == "oddxy8_F2") {
    if (a % 2 == 0 || b % 2 == 0)
      throw std::invalid_argument("oddxy8_F2 requires odd x and y sides");
    return materialize_periodic(
        name, dims, Freedom::F2, {2, 2, 2 * c}, 8, [=](const Vec3& r, int) {
          int t0 = static_cast<int>(imod(r.x, 2));
          int t1 = static_cast<int>(imod(r.y, 2));
          int t2 = static_cast<int>(imod(r.z, 2 * c) / c);
          return 1 + t0 + 2 * t1 + 4 * t2;
        });
  }
  if (name == "allodd8_F3") {
    if (a % 2 == 0 || b % 2 == 0 || c % 2 == 0)
      throw std::invalid_argument("allodd8_F3 requires all sides odd");
    return materialize_periodic(
        name, dims, Freedom::F3, {2, 2, 2}, 8, [](const Vec3& r, int) {
          return 1 + static_cast<int>(imod(r.x, 2) + 2 * imod(r.y, 2) +
                                      4 * imod(r.z, 2));
        });
  }
  if (name == "stripes4_ax1x1") {
    if (b != 1 || c != 1)
      throw std::invalid_argument("stripes4_ax1x1 requires dims a,1,1");
    return materialize_periodic(
        name, dims, Freedom::F1, {2 * a, 2, 2}, 4, [=](const Vec3& r, int) {
          int stripe = static_cast<int>(imod(r.x, 2 * a) / a);
          int parity = static_cast<int>(imod(r.y + r.z, 2));
          return 1 + stripe + 2 * parity;
        });
  }
  throw std::invalid_argument("unknown formula coloring: " + name);
}

namespace {

// Bands of b consecutive rows cycle through k colors; the second stripe of
// width a starts the cycle odd_stripe_shift rows later, and odd z layers
// shift it by another odd_layer_shift rows.
PeriodicColoring stripe_shift(const std::string& name, i64 a, i64 b, int k,
                              i64 odd_stripe_shift, i64 odd_layer_shift) {
  if (a < 1) throw std::invalid_argument(name + ": side length must be >= 1");
  const i64 cycle = static_cast<i64>(k) * b;
  return materialize_periodic(
      name, Vec3{a, b, 1}, Freedom::F1, {2 * a, cycle, 2}, k,
      [=](const Vec3& r, int) {
        i64 j = imod(r.x, 2 * a) / a;
        i64 band =
            imod(r.y + j * odd_stripe_shift + imod(r.z, 2) * odd_layer_shift,
                 cycle) /
            b;
        return 1 + static_cast<int>(band);
      });
}

void check_fixed_side(const std::string& name, i64 a, i64 expected) {
  if (a != 0 && a != expected)
    throw std::invalid_argument(name + " has a fixed shape");
}

}  // namespace

PeriodicColoring fixture_coloring(const std::string& name, i64 a) {
  if (a < 0) throw std::invalid_argument("side length must be nonnegative");
  if (name == "b_2x1x1_3col") {
    check_fixed_side(name, a, 2);
    static constexpr int rows[2][6] = {{1, 1, 2, 2, 3, 3}, {2, 3, 3, 1, 1, 2}};
    return materialize_periodic(
        name, {2, 1, 1}, Freedom::F1, {6, 2, 2}, 3, [](const Vec3& r, int) {
          return rows[imod(r.y + r.z, 2)][imod(r.x, 6)];
        });
  }
  if (name == "d_2x2x1_5col") {
    check_fixed_side(name, a, 2);
    static constexpr const char* layers[2][10] = {
        {"1122334455", "1122334455", "4455112233", "4455112233", "2233445511",
         "2233445511", "5511223344", "5511223344", "3344551122", "3344551122"},
        {"4551122334", "2334455112", "2334455112", "5112233445", "5112233445",
         "3445511223", "3445511223", "1223344551", "1223344551", "4551122334"}};
    return materialize_periodic(
        name, {2, 2, 1}, Freedom::F1, {10, 10, 2}, 5, [](const Vec3& r, int) {
          return digit(layers[imod(r.z, 2)][imod(r.y, 10)][imod(r.x, 10)]);
        });
  }
  if (name == "e_ax2x1_6col")
    return stripe_shift(name, a > 0 ? a : 2, 2, 6, 6, 9);
  if (name == "f_ax3x1_7col")
    return stripe_shift(name, a > 0 ? a : 3, 3, 7, 11, 16);
  if (name == "g_ax4x1_7col")
    return stripe_shift(name, a > 0 ? a : 4, 4, 7, 14, 21);
  if (name == "chi2_2x1x1_5col") {
    check_fixed_side(name, a, 2);
    // Colors live on cells with even coordinate sum; a placement rooted on an
    // odd cell takes the color of the even cell one step along its long axis.
    static constexpr const char* base[2][10] = {
        {"1_2_3_4_5_", "_3_4_5_1_2", "4_5_1_2_3_", "_1_2_3_4_5", "2_3_4_5_1_",
         "_4_5_1_2_3", "5_1_2_3_4_", "_2_3_4_5_1", "3_4_5_1_2_", "_5_1_2_3_4"},
        {"_4_5_1_2_3", "5_1_2_3_4_", "_2_3_4_5_1", "3_4_5_1_2_", "_5_1_2_3_4",
         "1_2_3_4_5_", "_3_4_5_1_2", "4_5_1_2_3_", "_1_2_3_4_5",
         "2_3_4_5_1_"}};
    auto k0 = [](i64 x, i64 y, i64 z) {
      return digit(base[imod(z, 2)][imod(y, 10)][imod(x, 10)]);
    };
    Vec3 dims{2, 1, 1};
    auto os = orientations(dims, Freedom::F2);
    return materialize_periodic(
        name, dims, Freedom::F2, {10, 10, 2}, 5, [=](const Vec3& r, int oi) {
          if (imod(r.x + r.y + r.z, 2) == 0) return k0(r.x, r.y, r.z);
          return os[static_cast<std::size_t>(oi)].x == 2
                     ? k0(r.x + 1, r.y, r.z)
                     : k0(r.x, r.y + 1, r.z);
        });
  }
  if (name == "chi3_2x1x1_6col") {
    check_fixed_side(name, a, 2);
    // top[0] is the row with the largest y; layer z repeats layer z-1
    // shifted two cells along x and one cell down along y.
    static constexpr const char* top[12] = {
        "_3_6_3_6_3_6", "2_5_2_5_2_5_", "_4_1_4_1_4_1", "3_6_3_6_3_6_",
        "_5_2_5_2_5_2", "4_1_4_1_4_1_", "_6_3_6_3_6_3", "5_2_5_2_5_2_",
        "_1_4_1_4_1_4", "6_3_6_3_6_3_", "_2_5_2_5_2_5", "1_4_1_4_1_4_"};
    auto k0 = [](i64 x, i64 y, i64 z) {
      i64 xx = imod(x + 2 * z, 12);
      i64 yy = imod(y - z, 12);
      return digit(top[11 - yy][xx]);
    };
    Vec3 dims{2, 1, 1};
    auto os = orientations(dims, Freedom::F3);
    return materialize_periodic(
        name, dims, Freedom::F3, {12, 12, 12}, 6, [=](const Vec3& r, int oi) {
          if (imod(r.x + r.y + r.z, 2) == 0) return k0(r.x, r.y, r.z);
          const Vec3& o = os[static_cast<std::size_t>(oi)];
          if (o.x == 2) return k0(r.x + 1, r.y, r.z);
          if (o.y == 2) return k0(r.x, r.y + 1, r.z);
          return k0(r.x, r.y, r.z + 1);
        });
  }
  throw std::invalid_argument("unknown fixture coloring: " + name);
}

PeriodicColoring product_coloring(const PeriodicColoring& base,
                                  Partition partition, Freedom target) {
  if (partition == Partition::z_parity_layers) {
    if (base.dims.z != 1)
      throw std::invalid_argument("z_parity_layers requires z side 1");
    if (target != base.freedom)
      throw std::invalid_argument("z_parity_layers keeps the base freedom");
    Vec3 period{base.period.x, base.period.y,
                std::lcm(base.period.z, i64{2})};
    return materialize_periodic(
        base.name + "_by_layer", base.dims, base.freedom, period, 2 * base.k,
        [&base](const Vec3& r, int oi) {
          return static_cast<int>(imod(r.z, 2)) * base.k +
                 base.color_at(r, oi);
        });
  }
  if (base.freedom != Freedom::F1)
    throw std::invalid_argument(
        "orientation_class requires a translate-only base");
  if (target == Freedom::F1) return base;
  auto classes = orientations(base.dims, target);
  // For each class find the axis relabeling under which its boxes become
  // base-shaped boxes; the class is then colored by the base at the
  // relabeled coordinates, with its own copy of the palette.
  static constexpr int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                      {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  std::vector<std::array<int, 3>> taus;
  taus.reserve(classes.size());
  for (const Vec3& o : classes) {
    const int* found = nullptr;
    for (const auto& p : perms) {
      if (o[p[0]] == base.dims.x && o[p[1]] == base.dims.y &&
          o[p[2]] == base.dims.z) {
        found = p;
        break;
      }
    }
    if (!found)
      throw std::invalid_argument("class is not a permutation of base dims");
    taus.push_back({found[0], found[1], found[2]});
  }
  Vec3 period{1, 1, 1};
  for (std::size_t ci = 0; ci < classes.size(); ++ci) {
    for (int i = 0; i < 3; ++i) {
      int j = 0;
      while (taus[ci][static_cast<std::size_t>(j)] != i) ++j;
      period[i] = std::lcm(period[i], base.period[j]);
    }
  }
  const std::string suffix =
      target == Freedom::F2 ? "_by_class_f2" : "_by_class_f3";
  return materialize_periodic(
      base.name + suffix, base.dims, target, period,
      static_cast<int>(classes.size()) * base.k,
      [&base, &taus](const Vec3& r, int ci) {
        const auto& t = taus[static_cast<std::size_t>(ci)];
        Vec3 m{r[t[0]], r[t[1]], r[t[2]]};
        return ci * base.k + base.color_at(m, 0);
      });
}

PeriodicColoring named_coloring(const std::string& name,
                                const std::optional<Vec3>& dims) {
  auto fixed = [&](const Vec3& d) {
    if (dims && !(*dims == d))
      throw std::invalid_argument(name + " has fixed dims " + to_string(d));
  };
  auto free_side = [&](i64 b_side, i64 fallback) -> i64 {
    if (!dims) return fallback;
    if (dims->y != b_side || dims->z != 1)
      throw std::invalid_argument(name + " requires dims a," +
                                  std::to_string(b_side) + ",1");
    return dims->x;
  };
  if (name == "checkerboard2")
    return formula_coloring(name, dims.value_or(Vec3{1, 1, 1}));
  if (name == "octant8_F1" || name == "oddxy8_F2" || name == "allodd8_F3" ||
      name == "stripes4_ax1x1") {
    if (!dims) throw std::invalid_argument(name + " requires dims");
    return formula_coloring(name, *dims);
  }
  if (name == "b_2x1x1_3col") {
    fixed({2, 1, 1});
    return fixture_coloring(name);
  }
  if (name == "d_2x2x1_5col") {
    fixed({2, 2, 1});
    return fixture_coloring(name);
  }
  if (name == "chi2_2x1x1_5col" || name == "chi3_2x1x1_6col") {
    fixed({2, 1, 1});
    return fixture_coloring(name);
  }
  if (name == "e_ax2x1_6col") return fixture_coloring(name, free_side(2, 2));
  if (name == "f_ax3x1_7col") return fixture_coloring(name, free_side(3, 3));
  if (name == "g_ax4x1_7col") return fixture_coloring(name, free_side(4, 4));
  throw std::invalid_argument("unknown coloring name: " + name);
}

std::vector<std::string> named_coloring_names() {
  return {"checkerboard2",  "octant8_F1",      "oddxy8_F2",
          "allodd8_F3",     "stripes4_ax1x1",  "b_2x1x1_3col",
          "d_2x2x1_5col",   "e_ax2x1_6col",    "f_ax3x1_7col",
          "g_ax4x1_7col",   "chi2_2x1x1_5col", "chi3_2x1x1_6col"};
}

Coloring inherited_coloring(const PeriodicColoring& pc,
                            const Configuration& cfg) {
  Coloring col;
  col.reserve(cfg.cuboids.size());
  for (const Cuboid& c : cfg.cuboids) col.push_back(pc.color_of(c));
  return col;
}

TorusGraph build_torus_graph(const Vec3& dims, Freedom freedom,
                             const Vec3& period) {
  check_positive(dims, "dims");
  check_positive(period, "period");
  auto os = orientations(dims, freedom);
  i64 n = static_cast<i64>(os.size());
  for (int ax = 0; ax < 3; ++ax) {
    n *= period[ax];
    if (n > kMaxTorusVertices)
      throw std::invalid_argument("torus too large: over " +
                                  std::to_string(kMaxTorusVertices) +
                                  " placements");
  }
  TorusGraph tg;
  tg.graph = Graph(static_cast<int>(n));
  tg.vertices.reserve(static_cast<std::size_t>(n));
  for (i64 x = 0; x < period.x; ++x)
    for (i64 y = 0; y < period.y; ++y)
      for (i64 z = 0; z < period.z; ++z)
        for (const Vec3& o : os) tg.vertices.push_back(Cuboid{{x, y, z}, o});
  const int nn = static_cast<int>(n);
  for (int u = 0; u < nn; ++u) {
    const Cuboid& cu = tg.vertices[static_cast<std::size_t>(u)];
    for (int v = u; v < nn; ++v) {
      const Cuboid& cv = tg.vertices[static_cast<std::size_t>(v)];
      // Per axis, the translate multiples that keep the boxes' closed
      // extents overlapping form one integer interval.
      i64 lo[3], hi[3];
      bool feasible = true;
      for (int ax = 0; ax < 3; ++ax) {
        lo[ax] = ceil_div(cu.lo(ax) - cv.dims[ax] - cv.root[ax], period[ax]);
        hi[ax] = floor_div(cu.hi(ax) - cv.root[ax], period[ax]);
        if (lo[ax] > hi[ax]) {
          feasible = false;
          break;
        }
      }
      if (!feasible) continue;
      bool linked = false;
      for (i64 i = lo[0]; i <= hi[0] && !linked; ++i)
        for (i64 j = lo[1]; j <= hi[1] && !linked; ++j)
          for (i64 l = lo[2]; l <= hi[2] && !linked; ++l) {
            if (u == v && i == 0 && j == 0 && l == 0) continue;
            Cuboid t{{cv.root.x + i * period.x, cv.root.y + j * period.y,
                      cv.root.z + l * period.z},
                     cv.dims};
            if (!touch(cu, t)) continue;
            if (u == v)
              tg.has_loop = true;
            else
              tg.graph.add_edge(u, v);
            linked = true;
          }
    }
  }
  return tg;
}

PercoResult perco(const Vec3& dims, Freedom freedom, const Vec3& period,
                  int max_k, const Budget& budget) {
  TorusGraph tg = build_torus_graph(dims, freedom, period);
  PercoResult r;
  r.vertices = tg.graph.n;
  r.edge_count = tg.graph.edge_count();
  if (tg.has_loop) {
    r.infinite = true;
    return r;
  }
  ChromaOutcome out = chromatic_number(tg.graph, budget);
  r.status = out.status;
  if (out.status == SolveStatus::found) {
    r.value = out.chi;
    r.lower_bound = out.chi;
    r.upper_bound = out.chi;
  } else {
    r.lower_bound = out.lower_bound;
    r.upper_bound = out.upper_bound;
  }
  if (max_k > 0) r.exceeded = r.lower_bound > max_k;
  return r;
}

}  // namespace ccg
