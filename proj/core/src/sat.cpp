#include "ccg/sat.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ccg {

namespace {

// luby(i) for unit-base restarts: 1,1,2,1,1,2,4,...
std::uint64_t luby(int x) {
  int size = 1, seq = 0;
  while (size < x + 1) {
    ++seq;
    size = 2 * size + 1;
  }
  while (size - 1 != x) {
    size = (size - 1) >> 1;
    --seq;
    x = x % size;
  }
  return 1ull << seq;
}

}  // namespace

void SatSolver::VarHeap::sift_up(int i) {
  int v = heap[static_cast<size_t>(i)];
  while (i > 0) {
    int parent = (i - 1) >> 1;
    if (!before(v, heap[static_cast<size_t>(parent)])) break;
    heap[static_cast<size_t>(i)] = heap[static_cast<size_t>(parent)];
    pos[static_cast<size_t>(heap[static_cast<size_t>(i)])] = i;
    i = parent;
  }
  heap[static_cast<size_t>(i)] = v;
  pos[static_cast<size_t>(v)] = i;
}

void SatSolver::VarHeap::sift_down(int i) {
  int v = heap[static_cast<size_t>(i)];
  int n = static_cast<int>(heap.size());
  for (;;) {
    int child = 2 * i + 1;
    if (child >= n) break;
    if (child + 1 < n &&
        before(heap[static_cast<size_t>(child + 1)], heap[static_cast<size_t>(child)]))
      ++child;
    if (!before(heap[static_cast<size_t>(child)], v)) break;
    heap[static_cast<size_t>(i)] = heap[static_cast<size_t>(child)];
    pos[static_cast<size_t>(heap[static_cast<size_t>(i)])] = i;
    i = child;
  }
  heap[static_cast<size_t>(i)] = v;
  pos[static_cast<size_t>(v)] = i;
}

void SatSolver::VarHeap::insert(int v) {
  grow(v);
  if (contains(v)) return;
  heap.push_back(v);
  pos[static_cast<size_t>(v)] = static_cast<int>(heap.size()) - 1;
  sift_up(static_cast<int>(heap.size()) - 1);
}

void SatSolver::VarHeap::update(int v) {
  if (contains(v)) sift_up(pos[static_cast<size_t>(v)]);
}

int SatSolver::VarHeap::pop() {
  int v = heap[0];
  pos[static_cast<size_t>(v)] = -1;
  heap[0] = heap.back();
  heap.pop_back();
  if (!heap.empty()) {
    pos[static_cast<size_t>(heap[0])] = 0;
    sift_down(0);
  }
  return v;
}

int SatSolver::new_var() {
  int v = static_cast<int>(activity_.size());
  activity_.push_back(0.0);
  assign_.push_back(0);
  level_.push_back(0);
  reason_.push_back(-1);
  polarity_.push_back(0);
  seen_.push_back(0);
  watches_.emplace_back();
  watches_.emplace_back();
  order_.act = &activity_;
  order_.insert(v);
  return v + 1;
}

void SatSolver::reserve_vars(int n) {
  while (num_vars() < n) new_var();
}

void SatSolver::attach(int cref) {
  const Clause& c = clauses_[static_cast<size_t>(cref)];
  watches_[static_cast<size_t>(neg(c.lits[0]))].push_back({cref, c.lits[1]});
  watches_[static_cast<size_t>(neg(c.lits[1]))].push_back({cref, c.lits[0]});
}

void SatSolver::unchecked_enqueue(int lit, int reason) {
  int v = var_of(lit);
  assign_[static_cast<size_t>(v)] = (lit & 1) ? -1 : 1;
  level_[static_cast<size_t>(v)] = decision_level();
  reason_[static_cast<size_t>(v)] = reason;
  polarity_[static_cast<size_t>(v)] = (lit & 1) ? 0 : 1;
  trail_.push_back(lit);
}

void SatSolver::add_clause(const std::vector<int>& ext_lits) {
  if (!ok_) return;
  if (decision_level() != 0)
    throw std::logic_error("clauses must be added before solving");
  std::vector<int> lits;
  lits.reserve(ext_lits.size());
  for (int el : ext_lits) {
    if (el == 0) throw std::invalid_argument("zero literal");
    int v = (el > 0 ? el : -el) - 1;
    reserve_vars(v + 1);
    lits.push_back(2 * v + (el < 0 ? 1 : 0));
  }
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  for (size_t i = 1; i < lits.size(); ++i)
    if (lits[i] == neg(lits[i - 1])) return;  // tautology
  std::vector<int> kept;
  for (int l : lits) {
    int val = value_lit(l);
    if (val == 1) return;  // satisfied at top level
    if (val == 0) kept.push_back(l);
  }
  if (kept.empty()) {
    ok_ = false;
    return;
  }
  if (kept.size() == 1) {
    unchecked_enqueue(kept[0], -1);
    return;
  }
  clauses_.push_back(Clause{std::move(kept), 0.0f, false});
  attach(static_cast<int>(clauses_.size()) - 1);
}

int SatSolver::propagate() {
  int confl = -1;
  while (qhead_ < trail_.size()) {
    int p = trail_[qhead_++];
    std::vector<Watcher>& ws = watches_[static_cast<size_t>(p)];
    size_t i = 0, j = 0;
    while (i < ws.size()) {
      Watcher w = ws[i];
      if (value_lit(w.blocker) == 1) {
        ws[j++] = ws[i++];
        continue;
      }
      Clause& c = clauses_[static_cast<size_t>(w.cref)];
      int false_lit = neg(p);
      if (c.lits[0] == false_lit) std::swap(c.lits[0], c.lits[1]);
      ++i;
      int first = c.lits[0];
      if (first != w.blocker && value_lit(first) == 1) {
        ws[j++] = {w.cref, first};
        continue;
      }
      bool moved = false;
      for (size_t k = 2; k < c.lits.size(); ++k) {
        if (value_lit(c.lits[k]) != -1) {
          std::swap(c.lits[1], c.lits[k]);
          watches_[static_cast<size_t>(neg(c.lits[1]))].push_back({w.cref, first});
          moved = true;
          break;
        }
      }
      if (moved) continue;
      ws[j++] = {w.cref, first};
      if (value_lit(first) == -1) {
        confl = w.cref;
        qhead_ = trail_.size();
        while (i < ws.size()) ws[j++] = ws[i++];
      } else {
        unchecked_enqueue(first, w.cref);
      }
    }
    ws.resize(j);
  }
  return confl;
}

void SatSolver::bump_var(int v) {
  activity_[static_cast<size_t>(v)] += var_inc_;
  if (activity_[static_cast<size_t>(v)] > 1e100) rescale_var_activity();
  order_.update(v);
}

void SatSolver::rescale_var_activity() {
  for (double& a : activity_) a *= 1e-100;
  var_inc_ *= 1e-100;
}

void SatSolver::bump_clause(Clause& c) {
  c.act += static_cast<float>(cla_inc_);
  if (c.act > 1e20f) {
    for (size_t i = static_cast<size_t>(first_learned_); i < clauses_.size(); ++i)
      clauses_[i].act *= 1e-20f;
    cla_inc_ *= 1e-20;
  }
}

bool SatSolver::literal_redundant(int lit) const {
  int r = reason_[static_cast<size_t>(var_of(lit))];
  if (r < 0) return false;
  const Clause& c = clauses_[static_cast<size_t>(r)];
  for (size_t k = 1; k < c.lits.size(); ++k) {
    int v = var_of(c.lits[k]);
    if (level_[static_cast<size_t>(v)] > 0 && !seen_[static_cast<size_t>(v)])
      return false;
  }
  return true;
}

void SatSolver::analyze(int confl, std::vector<int>& learnt, int& bt_level) {
  learnt.clear();
  learnt.push_back(0);  // slot for the asserting literal
  std::vector<int> toclear;
  int path = 0;
  int p = -1;
  int index = static_cast<int>(trail_.size()) - 1;

  do {
    Clause& c = clauses_[static_cast<size_t>(confl)];
    if (c.learned) bump_clause(c);
    for (size_t k = (p == -1 ? 0 : 1); k < c.lits.size(); ++k) {
      int q = c.lits[k];
      int v = var_of(q);
      if (!seen_[static_cast<size_t>(v)] && level_[static_cast<size_t>(v)] > 0) {
        seen_[static_cast<size_t>(v)] = 1;
        toclear.push_back(v);
        bump_var(v);
        if (level_[static_cast<size_t>(v)] >= decision_level())
          ++path;
        else
          learnt.push_back(q);
      }
    }
    while (!seen_[static_cast<size_t>(var_of(trail_[static_cast<size_t>(index)]))])
      --index;
    p = trail_[static_cast<size_t>(index)];
    --index;
    confl = reason_[static_cast<size_t>(var_of(p))];
    seen_[static_cast<size_t>(var_of(p))] = 0;
    --path;
  } while (path > 0);
  learnt[0] = neg(p);

  // Basic minimization: drop literals whose entire reason is already
  // implied by the remaining clause (or level-0 facts).
  size_t out = 1;
  for (size_t i = 1; i < learnt.size(); ++i)
    if (!literal_redundant(learnt[i])) learnt[out++] = learnt[i];
  learnt.resize(out);

  bt_level = 0;
  if (learnt.size() > 1) {
    size_t max_i = 1;
    for (size_t i = 2; i < learnt.size(); ++i)
      if (level_[static_cast<size_t>(var_of(learnt[i]))] >
          level_[static_cast<size_t>(var_of(learnt[max_i]))])
        max_i = i;
    std::swap(learnt[1], learnt[max_i]);
    bt_level = level_[static_cast<size_t>(var_of(learnt[1]))];
  }

  for (int v : toclear) seen_[static_cast<size_t>(v)] = 0;
}

void SatSolver::cancel_until(int target) {
  if (decision_level() <= target) return;
  int bound = trail_lim_[static_cast<size_t>(target)];
  for (int i = static_cast<int>(trail_.size()) - 1; i >= bound; --i) {
    int v = var_of(trail_[static_cast<size_t>(i)]);
    assign_[static_cast<size_t>(v)] = 0;
    reason_[static_cast<size_t>(v)] = -1;
    order_.insert(v);
  }
  trail_.resize(static_cast<size_t>(bound));
  trail_lim_.resize(static_cast<size_t>(target));
  qhead_ = trail_.size();
}

int SatSolver::pick_branch_var() {
  while (!order_.empty()) {
    int v = order_.pop();
    if (assign_[static_cast<size_t>(v)] == 0) return v;
  }
  return -1;
}

void SatSolver::reduce_db() {
  size_t learned = clauses_.size() - static_cast<size_t>(first_learned_);
  if (learned <= max_learnts_) return;

  std::vector<int> order;
  order.reserve(learned);
  for (int i = first_learned_; i < static_cast<int>(clauses_.size()); ++i)
    order.push_back(i);
  std::sort(order.begin(), order.end(), [this](int a, int b) {
    const Clause& ca = clauses_[static_cast<size_t>(a)];
    const Clause& cb = clauses_[static_cast<size_t>(b)];
    if (ca.act != cb.act) return ca.act < cb.act;
    return a < b;
  });

  std::vector<char> drop(clauses_.size(), 0);
  size_t to_drop = learned / 2;
  for (int cref : order) {
    if (to_drop == 0) break;
    const Clause& c = clauses_[static_cast<size_t>(cref)];
    if (c.lits.size() <= 2) continue;
    int v0 = var_of(c.lits[0]);
    bool locked = reason_[static_cast<size_t>(v0)] == cref &&
                  assign_[static_cast<size_t>(v0)] != 0;
    if (locked) continue;
    drop[static_cast<size_t>(cref)] = 1;
    --to_drop;
  }

  std::vector<int> remap(clauses_.size(), -1);
  std::vector<Clause> kept;
  kept.reserve(clauses_.size() - (learned / 2 - to_drop));
  for (size_t i = 0; i < clauses_.size(); ++i) {
    if (drop[i]) continue;
    remap[i] = static_cast<int>(kept.size());
    kept.push_back(std::move(clauses_[i]));
  }
  clauses_ = std::move(kept);
  for (int& r : reason_)
    if (r >= 0) r = remap[static_cast<size_t>(r)];
  for (auto& ws : watches_) ws.clear();
  for (int i = 0; i < static_cast<int>(clauses_.size()); ++i) attach(i);
  max_learnts_ += 500;
}

SatSolver::SearchStatus SatSolver::search(std::uint64_t conflict_budget,
                                          const Deadline& deadline) {
  std::uint64_t local_conflicts = 0;
  std::vector<int> learnt;
  for (;;) {
    int confl = propagate();
    if (confl >= 0) {
      ++conflicts_;
      ++local_conflicts;
      if (decision_level() == 0) return SearchStatus::unsat;
      int bt = 0;
      analyze(confl, learnt, bt);
      cancel_until(bt);
      if (learnt.size() == 1) {
        unchecked_enqueue(learnt[0], -1);
      } else {
        clauses_.push_back(Clause{learnt, 0.0f, true});
        int cref = static_cast<int>(clauses_.size()) - 1;
        bump_clause(clauses_.back());
        attach(cref);
        unchecked_enqueue(learnt[0], cref);
      }
      decay_var_activity();
      decay_clause_activity();
      if ((conflicts_ & 511) == 0 && deadline.expired()) {
        cancel_until(0);
        return SearchStatus::timeout;
      }
    } else {
      if (local_conflicts >= conflict_budget) {
        cancel_until(0);
        return SearchStatus::restart;
      }
      if (clauses_.size() - static_cast<size_t>(first_learned_) > max_learnts_)
        reduce_db();
      int next = pick_branch_var();
      if (next < 0) {
        model_.assign(assign_.size(), 0);
        for (size_t v = 0; v < assign_.size(); ++v) model_[v] = assign_[v] == 1;
        return SearchStatus::sat;
      }
      trail_lim_.push_back(static_cast<int>(trail_.size()));
      unchecked_enqueue(2 * next + (polarity_[static_cast<size_t>(next)] ? 0 : 1),
                        -1);
    }
  }
}

SatResult SatSolver::solve(const Deadline& deadline) {
  if (!ok_) return SatResult::unsat;
  first_learned_ = static_cast<int>(clauses_.size());
  if (propagate() >= 0) {
    ok_ = false;
    return SatResult::unsat;
  }
  max_learnts_ = std::max<std::size_t>(4000, clauses_.size());

  for (int restart = 0;; ++restart) {
    std::uint64_t budget = 100 * luby(restart);
    switch (search(budget, deadline)) {
      case SearchStatus::sat:
        cancel_until(0);
        return SatResult::sat;
      case SearchStatus::unsat:
        return SatResult::unsat;
      case SearchStatus::timeout:
        return SatResult::unknown;
      case SearchStatus::restart:
        break;
    }
  }
}

}  // namespace ccg
