#ifndef CCG_SEARCH_HPP
#define CCG_SEARCH_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ccg/budget.hpp"
#include "ccg/chroma.hpp"
#include "ccg/geometry.hpp"
#include "ccg/rng.hpp"

namespace ccg {

// Algorithm 1 scores a placement by the number of distinct colors among the
// cuboids it would touch and recolors after every placement; algorithm 2
// scores by the raw number of touched cuboids and colors once at the end.
enum class SearchAlgorithm { color_guided = 1, contact_guided = 2 };

struct SearchParams {
  Vec3 dims;
  Freedom freedom = Freedom::F1;
  i64 box = 0;   // side of the placement box [0,box]^3; 0 selects 4*max side
  int n00 = 3;   // pairwise non-touching seed cuboids per trial
  int n0 = 60;   // cuboid cap per trial
  int chi0 = 0;  // target chromatic number, >= 2
  std::uint64_t seed = 1;  // trial t uses seed + t
  SearchAlgorithm algorithm = SearchAlgorithm::contact_guided;
  int trials = 1;
  Budget chroma_budget = default_budget();
};

struct SearchOutcome {
  bool found = false;
  bool timed_out = false;  // some chromatic-number call hit its budget
  int chi = 0;             // chromatic number of `configuration` when found
  int trial = -1;          // index of the successful trial
  // Critical witness when found; otherwise the last trial's final state.
  Configuration configuration;
  std::string trace;  // line-oriented log, identical across reruns
};

// Runs up to `trials` independent trials (trial t seeded with seed + t) and
// stops at the first one that reaches chi0; the returned configuration is
// then critical at chi0. Deterministic for fixed params as long as no
// chromatic call times out.
SearchOutcome run_search(const SearchParams& params);

struct ReduceResult {
  SolveStatus status = SolveStatus::found;  // found | timeout
  Configuration config;
};

// Removes, scanning in index order and restarting after every removal, each
// cuboid whose removal keeps the chromatic number at chi_target. The result
// is critical: deleting any single cuboid drops the chromatic number to
// chi_target - 1. Throws std::invalid_argument when cfg's chromatic number
// is not chi_target (the check itself may time out, reported as status).
ReduceResult criticality_reduce(const Configuration& cfg, int chi_target,
                                const Budget& budget);

// n00 cuboids inside [0,box]^3 whose closed boxes are pairwise disjoint
// (neither colliding nor touching), by rejection sampling. Each attempt
// draws orientation, x, y, z in that order. Throws std::runtime_error when
// the retry budget runs out.
std::vector<Cuboid> seed_nontouching(const Vec3& dims, Freedom freedom,
                                     i64 box, int n00, SplitMix64& rng);

// Bookkeeping for every legal placement (root, orientation) inside the box:
// alive means the placement collides with no placed cuboid; the neighbor
// count is the number of placed cuboids it touches. place() updates only
// the placements within reach of the new cuboid.
class CandidateGrid {
 public:
  CandidateGrid(const Vec3& dims, Freedom freedom, i64 box);

  void place(const Cuboid& c);

  i64 box() const { return box_; }
  const std::vector<Vec3>& orients() const { return orients_; }
  int alive_count() const { return alive_count_; }
  bool alive(const Cuboid& c) const;
  int neighbor_count(const Cuboid& c) const;

  // Visits alive placements in lexicographic (x, y, z, orientation) order.
  template <typename Fn>
  void for_each_alive(Fn&& fn) const {
    const int no = static_cast<int>(orients_.size());
    for (i64 x = 0; x <= box_; ++x)
      for (i64 y = 0; y <= box_; ++y)
        for (i64 z = 0; z <= box_; ++z)
          for (int oi = 0; oi < no; ++oi) {
            const Vec3& o = orients_[static_cast<std::size_t>(oi)];
            if (x + o.x > box_ || y + o.y > box_ || z + o.z > box_) continue;
            std::size_t id = index(x, y, z, oi);
            if (!alive_[id]) continue;
            fn(Cuboid{{x, y, z}, o}, nbrs_[id]);
          }
  }

 private:
  std::size_t index(i64 x, i64 y, i64 z, int oi) const {
    i64 side = box_ + 1;
    return static_cast<std::size_t>(((x * side + y) * side + z) *
                                        static_cast<i64>(orients_.size()) +
                                    oi);
  }
  int orientation_of(const Cuboid& c) const;

  Vec3 dims_;
  i64 box_ = 0;
  std::vector<Vec3> orients_;
  std::vector<std::uint8_t> alive_;
  std::vector<int> nbrs_;
  int alive_count_ = 0;
};

}  // namespace ccg

#endif
