#include "ccg/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace ccg {

Graph::Graph(int vertex_count) : n(vertex_count) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  words = (n + 63) / 64;
  bits.assign(static_cast<std::size_t>(n) * words, 0);
}

void Graph::add_edge(int u, int v) {
  if (u == v) return;
  bits[static_cast<std::size_t>(u) * words + (v >> 6)] |= 1ull << (v & 63);
  bits[static_cast<std::size_t>(v) * words + (u >> 6)] |= 1ull << (u & 63);
}

int Graph::degree(int u) const {
  int d = 0;
  const std::uint64_t* r = row(u);
  for (int w = 0; w < words; ++w) d += std::popcount(r[w]);
  return d;
}

long long Graph::edge_count() const {
  long long total = 0;
  for (int u = 0; u < n; ++u) total += degree(u);
  return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

Graph Graph::complement() const {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!adjacent(u, v)) g.add_edge(u, v);
  return g;
}

namespace {

// Working bitset helpers over raw word arrays.
struct Bits {
  static void copy(std::uint64_t* dst, const std::uint64_t* src, int words) {
    std::copy(src, src + words, dst);
  }
  static bool test(const std::uint64_t* s, int v) {
    return (s[v >> 6] >> (v & 63)) & 1u;
  }
  static void clear(std::uint64_t* s, int v) { s[v >> 6] &= ~(1ull << (v & 63)); }
  static bool empty(const std::uint64_t* s, int words) {
    for (int w = 0; w < words; ++w)
      if (s[w]) return false;
    return true;
  }
  static int count(const std::uint64_t* s, int words) {
    int c = 0;
    for (int w = 0; w < words; ++w) c += std::popcount(s[w]);
    return c;
  }
};

// Tomita-style maximum clique search: candidates are greedily colored and
// explored in decreasing color order so that color count bounds the clique.
class CliqueSolver {
 public:
  explicit CliqueSolver(const Graph& g) : g_(g), words_(g.words) {}

  std::vector<int> solve() {
    if (g_.n == 0) return {};
    std::vector<std::uint64_t> cand(static_cast<std::size_t>(words_), 0);
    for (int v = 0; v < g_.n; ++v) cand[v >> 6] |= 1ull << (v & 63);
    best_.clear();
    current_.clear();
    expand(cand.data());
    return best_;
  }

 private:
  void expand(std::uint64_t* cand) {
    std::size_t count = static_cast<std::size_t>(Bits::count(cand, words_));
    if (current_.size() + count <= best_.size()) return;

    // Greedy coloring; vertices listed in increasing color classes.
    std::vector<int> order;
    std::vector<std::size_t> color;
    order.reserve(count);
    color.reserve(count);
    std::vector<std::uint64_t> uncolored(cand, cand + words_);
    std::vector<std::uint64_t> classbuf(static_cast<std::size_t>(words_));
    std::size_t color_index = 0;
    while (!Bits::empty(uncolored.data(), words_)) {
      ++color_index;
      Bits::copy(classbuf.data(), uncolored.data(), words_);
      while (!Bits::empty(classbuf.data(), words_)) {
        int v = first_bit(classbuf.data());
        Bits::clear(classbuf.data(), v);
        Bits::clear(uncolored.data(), v);
        const std::uint64_t* adj = g_.row(v);
        for (int w = 0; w < words_; ++w) classbuf[w] &= ~adj[w];
        order.push_back(v);
        color.push_back(color_index);
      }
    }

    std::vector<std::uint64_t> sub(static_cast<std::size_t>(words_));
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (current_.size() + color[i] <= best_.size()) return;
      int v = order[i];
      current_.push_back(v);
      const std::uint64_t* adj = g_.row(v);
      for (int w = 0; w < words_; ++w) sub[w] = cand[w] & adj[w];
      if (Bits::empty(sub.data(), words_)) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(sub.data());
      }
      current_.pop_back();
      Bits::clear(cand, v);
    }
  }

  int first_bit(const std::uint64_t* s) const {
    for (int w = 0; w < words_; ++w)
      if (s[w]) return (w << 6) + std::countr_zero(s[w]);
    return -1;
  }

  const Graph& g_;
  int words_;
  std::vector<int> best_;
  std::vector<int> current_;
};

}  // namespace

std::vector<int> max_clique(const Graph& g) {
  CliqueSolver solver(g);
  std::vector<int> clique = solver.solve();
  std::sort(clique.begin(), clique.end());
  return clique;
}

int clique_number(const Graph& g) {
  return static_cast<int>(max_clique(g).size());
}

int independence_number(const Graph& g) {
  return clique_number(g.complement());
}

}  // namespace ccg
