#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "axcat/candidates.hpp"
#include "axcat/execution.hpp"

namespace axcat {

struct GenConfig {
  std::uint64_t seed = 1;
  // Program events per execution are drawn from [0, max_events]; zero yields
  // the init-writes-only floor.
  std::size_t max_events = 8;
  std::size_t max_procs = 2;
  std::size_t max_addrs = 2;
  double read_fraction = 0.5;

  // Throws UsageError on out-of-range bounds.
  void check() const;
};

// A deterministic stream of well-formed executions. Each sample draws a
// skeleton, then one candidate of it uniformly, so every coherence
// permutation and rf assignment of a drawn skeleton is reachable.
class ExecutionGenerator {
 public:
  explicit ExecutionGenerator(const GenConfig& cfg);

  Execution next();
  Skeleton next_skeleton();

 private:
  GenConfig cfg_;
  std::mt19937_64 rng_;
};

// The first execution of the stream seeded by cfg.seed.
Execution gen_execution(const GenConfig& cfg);
std::vector<Execution> random_corpus(const GenConfig& cfg, std::size_t count);

inline constexpr std::size_t kMaxExhaustiveBound = 5;

// Skeletons with 1..bound program events, canonically labelled: processes
// are numbered in order of first appearance and events are grouped by
// process; addresses are numbered in order of first appearance.
std::vector<Skeleton> exhaustive_skeletons(std::size_t bound);

// Every candidate of every exhaustive skeleton. Throws UsageError when
// bound exceeds kMaxExhaustiveBound.
void for_each_exhaustive(std::size_t bound, const std::function<void(Execution&&)>& fn);
std::vector<Execution> exhaustive_executions(std::size_t bound);

}  // namespace axcat
