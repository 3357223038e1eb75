#ifndef CCG_TESTS_HELPERS_HPP
#define CCG_TESTS_HELPERS_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ccg/chroma.hpp"
#include "ccg/geometry.hpp"
#include "ccg/graph.hpp"
#include "ccg/rng.hpp"

namespace ccg::testing {

inline std::string data_dir() {
#ifdef CCG_DATA_DIR
  return CCG_DATA_DIR;
#else
  return "data";
#endif
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string fixture_path(const std::string& file) {
  return data_dir() + "/configs/" + file;
}

struct IndexEntry {
  std::string name;
  std::string file;
  Vec3 dims;
  Freedom freedom = Freedom::F1;
  int chi = 0;
  int count = 0;
};

inline std::vector<IndexEntry> load_index() {
  auto j = nlohmann::json::parse(read_file(fixture_path("index.json")));
  std::vector<IndexEntry> out;
  for (const auto& e : j) {
    IndexEntry entry;
    entry.name = e.at("name").get<std::string>();
    entry.file = e.at("file").get<std::string>();
    entry.dims = {e.at("dims")[0].get<i64>(), e.at("dims")[1].get<i64>(),
                  e.at("dims")[2].get<i64>()};
    entry.freedom = freedom_from_int(e.at("freedom").get<int>());
    entry.chi = e.at("chi").get<int>();
    entry.count = e.at("count").get<int>();
    out.push_back(entry);
  }
  return out;
}

inline IndexEntry index_entry(const std::string& name) {
  for (auto& e : load_index())
    if (e.name == name) return e;
  throw std::runtime_error("no fixture named " + name);
}

// Random valid configuration by rejection placement: collisions are
// rejected, touching is allowed.
inline Configuration random_configuration(SplitMix64& rng, const Vec3& dims,
                                          Freedom freedom, int count,
                                          i64 box) {
  Configuration cfg{dims, freedom, {}};
  auto os = orientations(dims, freedom);
  int attempts = 0;
  while (static_cast<int>(cfg.cuboids.size()) < count) {
    if (++attempts > 20000)
      throw std::runtime_error("random_configuration: box too crowded");
    Cuboid c{{static_cast<i64>(rng.below(static_cast<std::uint64_t>(box))),
              static_cast<i64>(rng.below(static_cast<std::uint64_t>(box))),
              static_cast<i64>(rng.below(static_cast<std::uint64_t>(box)))},
             os[rng.below(os.size())]};
    bool bad = false;
    for (const auto& p : cfg.cuboids) bad = bad || collide(p, c);
    if (!bad) cfg.cuboids.push_back(c);
  }
  return cfg;
}

// Interior-overlap witness by unit-cell enumeration: some lattice cell
// [x,x+1] x [y,y+1] x [z,z+1] lies inside both boxes.
inline bool cell_collide(const Cuboid& p, const Cuboid& q) {
  for (i64 x = std::max(p.lo(0), q.lo(0)); x < std::min(p.hi(0), q.hi(0));
       ++x)
    for (i64 y = std::max(p.lo(1), q.lo(1)); y < std::min(p.hi(1), q.hi(1));
         ++y)
      for (i64 z = std::max(p.lo(2), q.lo(2)); z < std::min(p.hi(2), q.hi(2));
           ++z)
        return true;
  return false;
}

// Contact witness by unit-square enumeration: no shared cell, but some unit
// square lies in both closed boxes.
inline bool cell_touch(const Cuboid& p, const Cuboid& q) {
  if (cell_collide(p, q)) return false;
  for (int k = 0; k < 3; ++k) {
    int i = (k + 1) % 3, j = (k + 2) % 3;
    for (i64 w = std::max(p.lo(k), q.lo(k)); w <= std::min(p.hi(k), q.hi(k));
         ++w)
      for (i64 u = std::max(p.lo(i), q.lo(i));
           u + 1 <= std::min(p.hi(i), q.hi(i)); ++u)
        for (i64 v = std::max(p.lo(j), q.lo(j));
             v + 1 <= std::min(p.hi(j), q.hi(j)); ++v)
          return true;
  }
  return false;
}

inline std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(g.n), 0);
  for (int u = 0; u < g.n; ++u)
    for (int v = 0; v < g.n; ++v)
      if (u != v && g.adjacent(u, v)) adj[static_cast<std::size_t>(u)] |= 1ull << v;
  return adj;
}

// Exact maximum clique by subset enumeration; n <= 20.
inline int brute_force_clique(const Graph& g) {
  if (g.n > 20) throw std::invalid_argument("brute_force_clique: too large");
  auto adj = adjacency_masks(g);
  int best = 0;
  for (std::uint64_t mask = 0; mask < (1ull << g.n); ++mask) {
    bool ok = true;
    for (int u = 0; ok && u < g.n; ++u)
      if (mask >> u & 1)
        ok = (adj[static_cast<std::size_t>(u)] & mask) ==
             (mask & ~(1ull << u));
    if (ok) best = std::max(best, std::popcount(mask));
  }
  return best;
}

inline int brute_force_independence(const Graph& g) {
  return brute_force_clique(g.complement());
}

namespace detail {
inline bool colorable_rec(const std::vector<std::uint64_t>& adj, int k,
                          std::vector<int>& col, int v) {
  if (v == static_cast<int>(col.size())) return true;
  int used = 0;
  for (int u = 0; u < v; ++u) used = std::max(used, col[static_cast<std::size_t>(u)]);
  int limit = std::min(k, used + 1);
  for (int c = 1; c <= limit; ++c) {
    bool ok = true;
    for (int u = 0; ok && u < v; ++u)
      ok = !(adj[static_cast<std::size_t>(v)] >> u & 1) ||
           col[static_cast<std::size_t>(u)] != c;
    if (!ok) continue;
    col[static_cast<std::size_t>(v)] = c;
    if (colorable_rec(adj, k, col, v + 1)) return true;
    col[static_cast<std::size_t>(v)] = 0;
  }
  return false;
}
}  // namespace detail

// Exact chromatic number by backtracking; n <= 16 or so.
inline int brute_force_chromatic(const Graph& g) {
  if (g.n == 0) return 0;
  auto adj = adjacency_masks(g);
  for (int k = 1;; ++k) {
    std::vector<int> col(static_cast<std::size_t>(g.n), 0);
    if (detail::colorable_rec(adj, k, col, 0)) return k;
  }
}

inline Graph random_graph(SplitMix64& rng, int n, int density_percent) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.below(100) < static_cast<std::uint64_t>(density_percent))
        g.add_edge(u, v);
  return g;
}

}  // namespace ccg::testing

#endif
