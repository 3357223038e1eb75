#include "ccg/search.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "ccg/contact_graph.hpp"

namespace ccg {
namespace {

constexpr int kSeedAttempts = 10000;

i64 max_side(const Vec3& d) { return std::max({d.x, d.y, d.z}); }

std::string vec_csv(const Vec3& v) {
  return std::to_string(v.x) + "," + std::to_string(v.y) + "," +
         std::to_string(v.z);
}

}  // namespace

CandidateGrid::CandidateGrid(const Vec3& dims, Freedom freedom, i64 box)
    : dims_(dims), box_(box), orients_(orientations(dims, freedom)) {
  if (box_ < max_side(dims_))
    throw std::invalid_argument("box side " + std::to_string(box_) +
                                " cannot hold a cuboid with sides " +
                                to_string(dims_));
  const i64 side = box_ + 1;
  const i64 cells = side * side * side * static_cast<i64>(orients_.size());
  if (cells > (i64{1} << 24))
    throw std::invalid_argument("box too large for the placement grid");
  alive_.assign(static_cast<std::size_t>(cells), 0);
  nbrs_.assign(static_cast<std::size_t>(cells), 0);
  for (i64 x = 0; x <= box_; ++x)
    for (i64 y = 0; y <= box_; ++y)
      for (i64 z = 0; z <= box_; ++z)
        for (int oi = 0; oi < static_cast<int>(orients_.size()); ++oi) {
          const Vec3& o = orients_[static_cast<std::size_t>(oi)];
          if (x + o.x > box_ || y + o.y > box_ || z + o.z > box_) continue;
          alive_[index(x, y, z, oi)] = 1;
          ++alive_count_;
        }
}

int CandidateGrid::orientation_of(const Cuboid& c) const {
  for (int i = 0; i < static_cast<int>(orients_.size()); ++i)
    if (orients_[static_cast<std::size_t>(i)] == c.dims) return i;
  throw std::invalid_argument("orientation not in grid: " + to_string(c.dims));
}

bool CandidateGrid::alive(const Cuboid& c) const {
  return alive_[index(c.root.x, c.root.y, c.root.z, orientation_of(c))] != 0;
}

int CandidateGrid::neighbor_count(const Cuboid& c) const {
  return nbrs_[index(c.root.x, c.root.y, c.root.z, orientation_of(c))];
}

void CandidateGrid::place(const Cuboid& c) {
  for (int oi = 0; oi < static_cast<int>(orients_.size()); ++oi) {
    const Vec3& o = orients_[static_cast<std::size_t>(oi)];
    // Only roots in this window can have closed-box contact with c.
    i64 lo[3], hi[3];
    for (int ax = 0; ax < 3; ++ax) {
      lo[ax] = std::max<i64>(0, c.lo(ax) - o[ax]);
      hi[ax] = std::min<i64>(box_ - o[ax], c.hi(ax));
    }
    for (i64 x = lo[0]; x <= hi[0]; ++x)
      for (i64 y = lo[1]; y <= hi[1]; ++y)
        for (i64 z = lo[2]; z <= hi[2]; ++z) {
          const std::size_t id = index(x, y, z, oi);
          Cuboid cand{{x, y, z}, o};
          if (collide(cand, c)) {
            if (alive_[id]) {
              alive_[id] = 0;
              --alive_count_;
            }
          } else if (touch(cand, c)) {
            ++nbrs_[id];
          }
        }
  }
}

std::vector<Cuboid> seed_nontouching(const Vec3& dims, Freedom freedom,
                                     i64 box, int n00, SplitMix64& rng) {
  if (n00 < 0) throw std::invalid_argument("n00 must be nonnegative");
  if (box < max_side(dims))
    throw std::invalid_argument("box side cannot hold the cuboid");
  const auto os = orientations(dims, freedom);
  std::vector<Cuboid> placed;
  placed.reserve(static_cast<std::size_t>(n00));
  int attempts = 0;
  while (static_cast<int>(placed.size()) < n00) {
    if (++attempts > kSeedAttempts)
      throw std::runtime_error(
          "could not place " + std::to_string(n00) +
          " disjoint cuboids in a box of side " + std::to_string(box));
    const Vec3& o = os[static_cast<std::size_t>(
        rng.below(static_cast<std::uint64_t>(os.size())))];
    Vec3 root;
    for (int ax = 0; ax < 3; ++ax)
      root[ax] = static_cast<i64>(
          rng.below(static_cast<std::uint64_t>(box - o[ax] + 1)));
    Cuboid c{root, o};
    bool ok = true;
    for (const Cuboid& p : placed)
      if (collide(c, p) || touch(c, p)) {
        ok = false;
        break;
      }
    if (ok) placed.push_back(c);
  }
  return placed;
}

ReduceResult criticality_reduce(const Configuration& cfg, int chi_target,
                                const Budget& budget) {
  if (chi_target < 1)
    throw std::invalid_argument("chi target must be positive");
  Configuration work = cfg;
  {
    ContactGraph g = build_contact_graph(work);
    ChromaOutcome check = chromatic_number(g, budget);
    if (check.status == SolveStatus::timeout)
      return {SolveStatus::timeout, std::move(work)};
    if (check.chi != chi_target)
      throw std::invalid_argument("configuration has chromatic number " +
                                  std::to_string(check.chi) + ", not " +
                                  std::to_string(chi_target));
  }
  std::size_t i = 0;
  while (i < work.cuboids.size()) {
    Configuration cand = work;
    cand.cuboids.erase(cand.cuboids.begin() +
                       static_cast<std::ptrdiff_t>(i));
    ContactGraph g = build_contact_graph_unchecked(cand);
    KColorResult res = k_colorable(g, chi_target - 1, budget);
    if (res.status == SolveStatus::timeout)
      return {SolveStatus::timeout, std::move(work)};
    if (res.status == SolveStatus::unsat) {
      work = std::move(cand);
      i = 0;
    } else {
      ++i;
    }
  }
  return {SolveStatus::found, std::move(work)};
}

SearchOutcome run_search(const SearchParams& params) {
  if (params.dims.x < 1 || params.dims.y < 1 || params.dims.z < 1)
    throw std::invalid_argument("dims must be positive");
  if (params.chi0 < 2)
    throw std::invalid_argument("target chromatic number must be >= 2");
  if (params.n00 < 0 || params.n00 > params.n0)
    throw std::invalid_argument("need 0 <= n00 <= n0");
  if (params.trials < 1) throw std::invalid_argument("trials must be >= 1");
  const i64 box = params.box > 0 ? params.box : 4 * max_side(params.dims);

  SearchOutcome out;
  std::string trace;
  auto result_line = [&trace](std::size_t n, int chi, bool found,
                              bool timeout) {
    trace += "result n=" + std::to_string(n);
    if (chi > 0) trace += " chi=" + std::to_string(chi);
    trace += found ? " found=1" : " found=0";
    if (timeout) trace += " timeout=1";
    trace += "\n";
  };
  auto step_line = [&trace](int step, const Cuboid& c, int score) {
    trace += "step " + std::to_string(step) + " root " + vec_csv(c.root) +
             " orient " + vec_csv(c.dims) + " score " + std::to_string(score);
  };

  for (int t = 0; t < params.trials; ++t) {
    const std::uint64_t trial_seed =
        params.seed + static_cast<std::uint64_t>(t);
    SplitMix64 rng(trial_seed);
    trace += "trial " + std::to_string(t) + " seed " +
             std::to_string(trial_seed) + " algorithm A" +
             std::to_string(static_cast<int>(params.algorithm)) + "\n";
    Configuration cfg{params.dims, params.freedom,
                      seed_nontouching(params.dims, params.freedom, box,
                                       params.n00, rng)};
    CandidateGrid grid(params.dims, params.freedom, box);
    for (const Cuboid& c : cfg.cuboids) grid.place(c);

    bool trial_timeout = false;
    int chi = 0;
    Configuration critical;
    bool success = false;

    if (params.algorithm == SearchAlgorithm::color_guided) {
      Coloring col;
      {
        ContactGraph g = build_contact_graph_unchecked(cfg);
        ChromaOutcome start = chromatic_number(g, params.chroma_budget);
        if (start.status == SolveStatus::timeout)
          trial_timeout = true;
        else {
          chi = start.chi;
          col = start.witness;
        }
      }
      int step = 0;
      std::vector<int> seen;
      int tick = 0;
      while (!trial_timeout &&
             static_cast<int>(cfg.cuboids.size()) < params.n0 &&
             chi < params.chi0) {
        std::vector<Cuboid> best;
        int best_score = -1;
        seen.assign(static_cast<std::size_t>(chi) + 1, -1);
        tick = 0;
        grid.for_each_alive([&](const Cuboid& cand, int) {
          ++tick;
          int score = 0;
          for (std::size_t i = 0; i < cfg.cuboids.size(); ++i) {
            if (!touch(cand, cfg.cuboids[i])) continue;
            const int c = col[i];
            if (seen[static_cast<std::size_t>(c)] != tick) {
              seen[static_cast<std::size_t>(c)] = tick;
              ++score;
            }
          }
          if (score > best_score) {
            best_score = score;
            best.clear();
          }
          if (score == best_score) best.push_back(cand);
        });
        if (best.empty()) break;
        const Cuboid chosen =
            best[static_cast<std::size_t>(rng.below(best.size()))];
        cfg.cuboids.push_back(chosen);
        grid.place(chosen);
        ContactGraph g = build_contact_graph_unchecked(cfg);
        // The chromatic number rises by at most one per added vertex, so a
        // single decision at the old value recolors exactly.
        KColorResult res = k_colorable(g, chi, params.chroma_budget);
        ++step;
        step_line(step, chosen, best_score);
        if (res.status == SolveStatus::found) {
          col = res.witness;
        } else if (res.status == SolveStatus::unsat) {
          chi += 1;
          col.push_back(chi);
        } else {
          trace += " chi unknown\ntimeout\n";
          trial_timeout = true;
          break;
        }
        trace += " chi " + std::to_string(chi) + "\n";
      }
    } else {
      int step = 0;
      while (static_cast<int>(cfg.cuboids.size()) < params.n0) {
        std::vector<Cuboid> best;
        int best_score = -1;
        grid.for_each_alive([&](const Cuboid& cand, int nbrs) {
          if (nbrs > best_score) {
            best_score = nbrs;
            best.clear();
          }
          if (nbrs == best_score) best.push_back(cand);
        });
        if (best.empty()) break;
        const Cuboid chosen =
            best[static_cast<std::size_t>(rng.below(best.size()))];
        cfg.cuboids.push_back(chosen);
        grid.place(chosen);
        ++step;
        step_line(step, chosen, best_score);
        trace += "\n";
      }
      ContactGraph g = build_contact_graph_unchecked(cfg);
      ChromaOutcome end = chromatic_number(g, params.chroma_budget);
      if (end.status == SolveStatus::timeout) {
        trace += "timeout\n";
        trial_timeout = true;
      } else {
        chi = end.chi;
      }
    }

    if (!trial_timeout && chi >= params.chi0) {
      // Walk down to the target: reducing to a critical configuration and
      // then deleting any one cuboid lowers the chromatic number exactly 1.
      Configuration work = cfg;
      int cur = chi;
      while (!trial_timeout && cur > params.chi0) {
        ReduceResult red =
            criticality_reduce(work, cur, params.chroma_budget);
        if (red.status != SolveStatus::found) {
          trace += "timeout\n";
          trial_timeout = true;
          break;
        }
        work = std::move(red.config);
        work.cuboids.erase(work.cuboids.begin());
        --cur;
      }
      if (!trial_timeout) {
        ReduceResult red =
            criticality_reduce(work, params.chi0, params.chroma_budget);
        if (red.status == SolveStatus::found) {
          critical = std::move(red.config);
          success = true;
        } else {
          trace += "timeout\n";
          trial_timeout = true;
        }
      }
    }

    out.timed_out = out.timed_out || trial_timeout;
    if (success) {
      result_line(critical.cuboids.size(), params.chi0, true, false);
      out.found = true;
      out.chi = params.chi0;
      out.trial = t;
      out.configuration = std::move(critical);
      out.trace = std::move(trace);
      return out;
    }
    result_line(cfg.cuboids.size(), chi, false, trial_timeout);
    out.chi = chi;
    out.configuration = std::move(cfg);
  }
  out.trace = std::move(trace);
  return out;
}

}  // namespace ccg
