#ifndef CCG_GRAPH_HPP
#define CCG_GRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace ccg {

// Simple undirected graph over {0..n-1} with bitset adjacency rows.
// Irreflexive and symmetric by construction.
struct Graph {
  int n = 0;
  int words = 0;
  std::vector<std::uint64_t> bits;

  Graph() = default;
  explicit Graph(int vertex_count);

  void add_edge(int u, int v);
  bool adjacent(int u, int v) const {
    return (bits[static_cast<std::size_t>(u) * words + (v >> 6)] >>
            (v & 63)) & 1u;
  }
  const std::uint64_t* row(int u) const {
    return bits.data() + static_cast<std::size_t>(u) * words;
  }
  int degree(int u) const;
  long long edge_count() const;
  std::vector<std::pair<int, int>> edges() const;
  Graph complement() const;
};

// Exact maximum clique via branch and bound with a greedy-coloring upper
// bound. Returns the vertex set of one maximum clique.
std::vector<int> max_clique(const Graph& g);

int clique_number(const Graph& g);

// Exact maximum independent set size (clique number of the complement).
int independence_number(const Graph& g);

}  // namespace ccg

#endif
