#ifndef CCG_SAT_HPP
#define CCG_SAT_HPP

#include <cstdint>
#include <vector>

#include "ccg/budget.hpp"

namespace ccg {

enum class SatResult { sat, unsat, unknown };

// Small clause-learning propositional solver: two-watched-literal
// propagation, activity-driven decisions with index tie-break, first-UIP
// learning with basic clause minimization, phase saving, Luby restarts, and
// periodic learned-clause reduction. Deterministic for a fixed clause set
// (unknown is only ever returned on deadline expiry).
class SatSolver {
 public:
  SatSolver() = default;

  // Variables are 1-based; a literal is +v or -v. All clauses must be added
  // before solve() is called.
  int new_var();
  void reserve_vars(int n);
  int num_vars() const { return static_cast<int>(activity_.size()); }
  void add_clause(const std::vector<int>& lits);

  SatResult solve(const Deadline& deadline);

  // Valid after solve() returned sat.
  bool model_value(int var) const { return model_[static_cast<size_t>(var) - 1]; }

  std::uint64_t conflicts() const { return conflicts_; }

 private:
  struct Clause {
    std::vector<int> lits;
    float act = 0.0f;
    bool learned = false;
  };
  struct Watcher {
    int cref;
    int blocker;
  };

  static int var_of(int lit) { return lit >> 1; }
  static int neg(int lit) { return lit ^ 1; }

  int value_lit(int lit) const {
    int v = assign_[static_cast<size_t>(var_of(lit))];
    return (lit & 1) ? -v : v;
  }
  int decision_level() const { return static_cast<int>(trail_lim_.size()); }

  void attach(int cref);
  void unchecked_enqueue(int lit, int reason);
  int propagate();  // returns conflicting clause ref or -1
  void analyze(int confl, std::vector<int>& learnt, int& bt_level);
  bool literal_redundant(int lit) const;
  void cancel_until(int level);
  int pick_branch_var();
  void bump_var(int v);
  void decay_var_activity() { var_inc_ /= 0.95; }
  void bump_clause(Clause& c);
  void decay_clause_activity() { cla_inc_ /= 0.999; }
  void rescale_var_activity();
  void reduce_db();
  enum class SearchStatus { sat, unsat, restart, timeout };
  SearchStatus search(std::uint64_t conflict_budget, const Deadline& deadline);

  // Indexed max-heap over variable activities, ties broken by lower index.
  struct VarHeap {
    std::vector<int> heap;
    std::vector<int> pos;  // var -> heap position or -1
    const std::vector<double>* act = nullptr;

    bool before(int a, int b) const {
      double aa = (*act)[static_cast<size_t>(a)], ab = (*act)[static_cast<size_t>(b)];
      return aa > ab || (aa == ab && a < b);
    }
    bool contains(int v) const { return pos[static_cast<size_t>(v)] >= 0; }
    bool empty() const { return heap.empty(); }
    void grow(int v) {
      if (static_cast<int>(pos.size()) <= v) pos.resize(static_cast<size_t>(v) + 1, -1);
    }
    void sift_up(int i);
    void sift_down(int i);
    void insert(int v);
    void update(int v);
    int pop();
  };

  bool ok_ = true;
  std::vector<Clause> clauses_;
  int first_learned_ = 0;  // clauses_[i] for i >= first_learned_ are learned
  std::vector<std::vector<Watcher>> watches_;
  std::vector<std::int8_t> assign_;
  std::vector<int> level_;
  std::vector<int> reason_;
  std::vector<int> trail_;
  std::vector<int> trail_lim_;
  std::size_t qhead_ = 0;
  std::vector<double> activity_;
  std::vector<char> polarity_;
  std::vector<char> seen_;
  VarHeap order_;
  double var_inc_ = 1.0;
  double cla_inc_ = 1.0;
  std::uint64_t conflicts_ = 0;
  std::size_t max_learnts_ = 4000;
  std::vector<char> model_;
};

}  // namespace ccg

#endif
