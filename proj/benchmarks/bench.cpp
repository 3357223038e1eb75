#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ccg/bounds.hpp"
#include "ccg/budget.hpp"
#include "ccg/chroma.hpp"
#include "ccg/contact_graph.hpp"
#include "ccg/formats.hpp"
#include "ccg/geometry.hpp"
#include "ccg/graph.hpp"
#include "ccg/rng.hpp"

namespace {

using namespace ccg;

#ifndef CCG_DATA_DIR
#define CCG_DATA_DIR "data"
#endif

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Configuration eight_two_one() {
  static const Configuration cfg =
      parse_document(read_file(std::string(CCG_DATA_DIR) + "/configs/821.txt"),
                     Vec3{8, 2, 1}, Freedom::F2)
          .to_configuration();
  return cfg;
}

// Valid configuration by rejection placement; touching allowed.
Configuration random_config(std::uint64_t seed, const Vec3& dims,
                            Freedom freedom, int count, i64 box) {
  SplitMix64 rng(seed);
  Configuration cfg{dims, freedom, {}};
  const auto os = orientations(dims, freedom);
  while (static_cast<int>(cfg.cuboids.size()) < count) {
    const Vec3& o = os[static_cast<std::size_t>(
        rng.below(static_cast<std::uint64_t>(os.size())))];
    Cuboid c{{static_cast<i64>(rng.below(static_cast<std::uint64_t>(box))),
              static_cast<i64>(rng.below(static_cast<std::uint64_t>(box))),
              static_cast<i64>(rng.below(static_cast<std::uint64_t>(box)))},
             o};
    bool ok = true;
    for (const Cuboid& p : cfg.cuboids)
      if (collide(c, p)) {
        ok = false;
        break;
      }
    if (ok) cfg.cuboids.push_back(c);
  }
  return cfg;
}

void BM_touch(benchmark::State& state) {
  SplitMix64 rng(42);
  std::vector<Cuboid> cuboids;
  for (int i = 0; i < 512; ++i) {
    auto side = [&rng]() { return static_cast<i64>(1 + rng.below(4)); };
    auto coord = [&rng]() { return static_cast<i64>(rng.below(13)) - 6; };
    cuboids.push_back(Cuboid{{coord(), coord(), coord()},
                             {side(), side(), side()}});
  }
  std::size_t i = 0;
  for (auto _ : state) {
    const Cuboid& a = cuboids[i % cuboids.size()];
    const Cuboid& b = cuboids[(i * 7 + 13) % cuboids.size()];
    benchmark::DoNotOptimize(touch(a, b));
    ++i;
  }
}
BENCHMARK(BM_touch);

void BM_build_contact_graph(benchmark::State& state) {
  const Configuration cfg = random_config(
      7, {2, 2, 1}, Freedom::F3, static_cast<int>(state.range(0)), 12);
  for (auto _ : state) {
    ContactGraph g = build_contact_graph_unchecked(cfg);
    benchmark::DoNotOptimize(g.edge_count());
  }
}
BENCHMARK(BM_build_contact_graph)->Arg(50)->Arg(200);

void BM_max_clique(benchmark::State& state) {
  const ContactGraph g = build_contact_graph_unchecked(
      random_config(11, {2, 2, 1}, Freedom::F3, 200, 12));
  for (auto _ : state) {
    benchmark::DoNotOptimize(clique_number(g));
  }
}
BENCHMARK(BM_max_clique);

void BM_k_colorable_sat(benchmark::State& state) {
  const ContactGraph g = build_contact_graph_unchecked(eight_two_one());
  for (auto _ : state) {
    KColorResult r = k_colorable(g, 6, Budget{0.0});
    benchmark::DoNotOptimize(r.status);
  }
}
BENCHMARK(BM_k_colorable_sat);

void BM_k_colorable_unsat(benchmark::State& state) {
  const ContactGraph g = build_contact_graph_unchecked(eight_two_one());
  for (auto _ : state) {
    KColorResult r = k_colorable(g, 5, Budget{0.0});
    benchmark::DoNotOptimize(r.status);
  }
}
BENCHMARK(BM_k_colorable_unsat);

void BM_n_bound(benchmark::State& state) {
  for (auto _ : state) {
    BoundResult r = n_bound({2, 2, 2}, Freedom::F2);
    benchmark::DoNotOptimize(r.n_value);
  }
}
BENCHMARK(BM_n_bound);

}  // namespace

BENCHMARK_MAIN();
