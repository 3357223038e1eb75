#include "ccg/chroma.hpp"

#include <algorithm>
#include <stdexcept>

#include "ccg/sat.hpp"

namespace ccg {

int color_count(const Coloring& col) {
  std::vector<int> distinct(col);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  return static_cast<int>(distinct.size());
}

std::optional<std::pair<int, int>> verify_coloring(const Graph& g,
                                                   const Coloring& col) {
  if (static_cast<int>(col.size()) != g.n)
    throw std::invalid_argument("coloring length does not match vertex count");
  for (int c : col)
    if (c < 1) throw std::invalid_argument("colors must be positive");
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if (g.adjacent(u, v) && col[static_cast<size_t>(u)] == col[static_cast<size_t>(v)])
        return std::make_pair(u, v);
  return std::nullopt;
}

namespace {

// Shared DSATUR vertex selection state: saturation = number of distinct
// neighbor colors, ties by uncolored degree, then lowest index.
struct DsaturState {
  const Graph& g;
  std::vector<int> color;                       // 0 = uncolored
  std::vector<std::vector<char>> neighbor_has;  // vertex -> color -> count>0
  std::vector<int> saturation;
  std::vector<int> neighbor_color_uses;  // vertex*maxc flattened counts
  std::vector<int> uncolored_degree;
  int max_colors;

  DsaturState(const Graph& graph, int maxc)
      : g(graph),
        color(static_cast<size_t>(graph.n), 0),
        saturation(static_cast<size_t>(graph.n), 0),
        neighbor_color_uses(static_cast<size_t>(graph.n) * (maxc + 1), 0),
        uncolored_degree(static_cast<size_t>(graph.n), 0),
        max_colors(maxc) {
    for (int v = 0; v < graph.n; ++v)
      uncolored_degree[static_cast<size_t>(v)] = graph.degree(v);
  }

  int& uses(int v, int c) {
    return neighbor_color_uses[static_cast<size_t>(v) * (max_colors + 1) + c];
  }

  void assign(int v, int c) {
    color[static_cast<size_t>(v)] = c;
    for (int u = 0; u < g.n; ++u) {
      if (!g.adjacent(v, u)) continue;
      --uncolored_degree[static_cast<size_t>(u)];
      if (uses(u, c)++ == 0) ++saturation[static_cast<size_t>(u)];
    }
  }

  void unassign(int v, int c) {
    color[static_cast<size_t>(v)] = 0;
    for (int u = 0; u < g.n; ++u) {
      if (!g.adjacent(v, u)) continue;
      ++uncolored_degree[static_cast<size_t>(u)];
      if (--uses(u, c) == 0) --saturation[static_cast<size_t>(u)];
    }
  }

  int pick() const {
    int best = -1;
    for (int v = 0; v < g.n; ++v) {
      if (color[static_cast<size_t>(v)] != 0) continue;
      if (best < 0) {
        best = v;
        continue;
      }
      int sv = saturation[static_cast<size_t>(v)], sb = saturation[static_cast<size_t>(best)];
      if (sv > sb ||
          (sv == sb && uncolored_degree[static_cast<size_t>(v)] >
                           uncolored_degree[static_cast<size_t>(best)]))
        best = v;
    }
    return best;
  }
};

Coloring dsatur_greedy(const Graph& g) {
  DsaturState st(g, g.n == 0 ? 1 : g.n);
  for (int step = 0; step < g.n; ++step) {
    int v = st.pick();
    int c = 1;
    while (st.uses(v, c) > 0) ++c;
    st.assign(v, c);
  }
  return st.color;
}

struct DsaturDecision {
  DsaturState st;
  int k;
  const Deadline& deadline;
  std::uint64_t nodes = 0;
  bool timed_out = false;

  DsaturDecision(const Graph& g, int kk, const Deadline& dl)
      : st(g, kk), k(kk), deadline(dl) {}

  bool recurse(int colored, int used) {
    if ((++nodes & 4095) == 0 && deadline.expired()) {
      timed_out = true;
      return false;
    }
    if (colored == st.g.n) return true;
    int v = st.pick();
    int limit = std::min(k, used + 1);
    for (int c = 1; c <= limit; ++c) {
      if (st.uses(v, c) > 0) continue;
      st.assign(v, c);
      if (recurse(colored + 1, std::max(used, c))) return true;
      st.unassign(v, c);
      if (timed_out) return false;
    }
    return false;
  }
};

KColorResult dsatur_k_colorable(const Graph& g, int k, const Deadline& deadline) {
  if (g.n == 0) return {SolveStatus::found, {}};
  if (k < 1) return {SolveStatus::unsat, {}};
  DsaturDecision dec(g, k, deadline);
  if (dec.recurse(0, 0)) return {SolveStatus::found, dec.st.color};
  if (dec.timed_out) return {SolveStatus::timeout, {}};
  return {SolveStatus::unsat, {}};
}

KColorResult sat_k_colorable(const Graph& g, int k, const Deadline& deadline,
                             bool break_symmetry) {
  if (g.n == 0) return {SolveStatus::found, {}};
  if (k < 1) return {SolveStatus::unsat, {}};

  std::vector<int> clique;
  if (break_symmetry) {
    clique = max_clique(g);
    if (static_cast<int>(clique.size()) > k) return {SolveStatus::unsat, {}};
  }

  SatSolver solver;
  solver.reserve_vars(g.n * k);
  auto var = [k](int v, int c) { return v * k + c; };  // c in 1..k

  std::vector<int> clause;
  for (int v = 0; v < g.n; ++v) {
    clause.clear();
    for (int c = 1; c <= k; ++c) clause.push_back(var(v, c));
    solver.add_clause(clause);
  }
  for (int u = 0; u < g.n; ++u) {
    const std::uint64_t* row = g.row(u);
    for (int v = u + 1; v < g.n; ++v) {
      if (!((row[v >> 6] >> (v & 63)) & 1u)) continue;
      for (int c = 1; c <= k; ++c)
        solver.add_clause({-var(u, c), -var(v, c)});
    }
  }
  for (size_t j = 0; j < clique.size(); ++j)
    solver.add_clause({var(clique[j], static_cast<int>(j) + 1)});

  switch (solver.solve(deadline)) {
    case SatResult::unsat:
      return {SolveStatus::unsat, {}};
    case SatResult::unknown:
      return {SolveStatus::timeout, {}};
    case SatResult::sat:
      break;
  }
  Coloring witness(static_cast<size_t>(g.n), 0);
  for (int v = 0; v < g.n; ++v) {
    for (int c = 1; c <= k; ++c) {
      if (solver.model_value(var(v, c))) {
        witness[static_cast<size_t>(v)] = c;
        break;
      }
    }
  }
  return {SolveStatus::found, witness};
}

}  // namespace

Coloring greedy_bound(const Graph& g) { return dsatur_greedy(g); }

KColorResult k_colorable(const Graph& g, int k, const Budget& budget,
                         ColorEngine engine, bool break_symmetry) {
  Deadline deadline(budget);
  if (engine == ColorEngine::dsatur_bnb)
    return dsatur_k_colorable(g, k, deadline);
  return sat_k_colorable(g, k, deadline, break_symmetry);
}

ChromaOutcome chromatic_number(const Graph& g, const Budget& budget,
                               ColorEngine engine, const Coloring* warm_start) {
  ChromaOutcome out;
  if (g.n == 0) {
    out.status = SolveStatus::found;
    out.chi = 0;
    out.lower_bound = out.upper_bound = 0;
    return out;
  }

  Coloring best = greedy_bound(g);
  if (warm_start != nullptr && !warm_start->empty()) {
    if (verify_coloring(g, *warm_start).has_value())
      throw std::invalid_argument("warm start coloring is not proper");
    if (color_count(*warm_start) < color_count(best)) best = *warm_start;
  }
  int upper = color_count(best);
  int lower = clique_number(g);

  while (upper > lower) {
    int k = upper - 1;
    KColorResult r = k_colorable(g, k, budget, engine);
    if (r.status == SolveStatus::found) {
      best = r.witness;
      upper = k;
      continue;
    }
    if (r.status == SolveStatus::unsat) {
      lower = upper;
      break;
    }
    out.status = SolveStatus::timeout;
    out.lower_bound = lower;
    out.upper_bound = upper;
    out.witness = best;
    return out;
  }

  out.status = SolveStatus::found;
  out.chi = upper;
  out.lower_bound = out.upper_bound = upper;
  out.witness = best;
  return out;
}

}  // namespace ccg
