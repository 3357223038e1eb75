#ifndef CCG_CHROMA_HPP
#define CCG_CHROMA_HPP

#include <optional>
#include <utility>
#include <vector>

#include "ccg/budget.hpp"
#include "ccg/graph.hpp"

namespace ccg {

// 1-based colors, one entry per vertex.
using Coloring = std::vector<int>;

int color_count(const Coloring& col);

// nullopt when proper; otherwise the first edge (u,v), u < v, whose
// endpoints share a color. Throws std::invalid_argument when the coloring
// length does not match the graph or a color is not positive.
std::optional<std::pair<int, int>> verify_coloring(const Graph& g,
                                                   const Coloring& col);

// Saturation-degree greedy (DSATUR): proper coloring whose color count is
// an upper bound on the chromatic number.
Coloring greedy_bound(const Graph& g);

enum class SolveStatus { found, unsat, timeout };

enum class ColorEngine { clause_learning, dsatur_bnb };

struct KColorResult {
  SolveStatus status;
  Coloring witness;  // proper k-coloring iff status == found
};

// Decides whether g admits a proper coloring with at most k colors.
// The clause-learning engine encodes one boolean per (vertex, color) with
// at-least-one-color clauses per vertex and one difference clause per edge
// and color; one maximum clique is precolored 1..w to break color symmetry
// (sound for the decision: some maximum clique must use w distinct colors,
// and color names are interchangeable). The branch-and-bound engine is an
// independent implementation used for cross-checking; both must agree.
KColorResult k_colorable(const Graph& g, int k, const Budget& budget,
                         ColorEngine engine = ColorEngine::clause_learning,
                         bool break_symmetry = true);

struct ChromaOutcome {
  SolveStatus status = SolveStatus::found;  // found | timeout
  int chi = 0;                              // exact value when found
  Coloring witness;                         // proper chi-coloring when found
  int lower_bound = 0;  // best proven bounds; meaningful on timeout
  int upper_bound = 0;
};

// Exact chromatic number: starts at the DSATUR upper bound and decreases k
// until the first unsat. The budget applies to each k-decision separately.
// warm_start, when given, must be a proper coloring of g and seeds the
// upper bound.
ChromaOutcome chromatic_number(
    const Graph& g, const Budget& budget,
    ColorEngine engine = ColorEngine::clause_learning,
    const Coloring* warm_start = nullptr);

}  // namespace ccg

#endif
