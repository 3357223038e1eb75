#ifndef CCG_BUDGET_HPP
#define CCG_BUDGET_HPP

#include <chrono>
#include <cstdlib>

namespace ccg {

// Wall-clock budget for solver calls; seconds <= 0 means unlimited.
struct Budget {
  double seconds = 60.0;
  static Budget unlimited() { return Budget{0.0}; }
};

// Default per-decision budget: 60 s, overridable via the CCG_TIME_LIMIT
// environment variable (seconds); explicit flags take precedence at the CLI.
inline Budget default_budget() {
  if (const char* env = std::getenv("CCG_TIME_LIMIT")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end != env) return Budget{v};
  }
  return Budget{60.0};
}

class Deadline {
 public:
  Deadline() : unlimited_(true) {}
  explicit Deadline(const Budget& b) : unlimited_(b.seconds <= 0) {
    if (!unlimited_) {
      end_ = std::chrono::steady_clock::now() +
             std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                 std::chrono::duration<double>(b.seconds));
    }
  }
  bool expired() const {
    return !unlimited_ && std::chrono::steady_clock::now() >= end_;
  }

 private:
  bool unlimited_;
  std::chrono::steady_clock::time_point end_{};
};

}  // namespace ccg

#endif
