#include "axcat/generators.hpp"

#include <algorithm>

#include "axcat/errors.hpp"

namespace axcat {

namespace {

std::string address_name(std::size_t i) {
  static constexpr const char* kNames[] = {"x", "y", "z", "w", "v", "u"};
  if (i < std::size(kNames)) return kNames[i];
  return "a" + std::to_string(i);
}

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace

void GenConfig::check() const {
  if (max_procs < 1 || max_addrs < 1) {
    throw UsageError("GenConfig: max_procs and max_addrs must be at least 1");
  }
  if (!(read_fraction >= 0.0 && read_fraction <= 1.0)) {
    throw UsageError("GenConfig: read_fraction must lie in [0, 1]");
  }
  if (max_events + max_addrs > kMaxEvents) {
    throw CapExceeded("GenConfig: executions would exceed " + std::to_string(kMaxEvents) +
                      " events");
  }
}

ExecutionGenerator::ExecutionGenerator(const GenConfig& cfg) : cfg_(cfg), rng_(cfg.seed) {
  cfg_.check();
}

Skeleton ExecutionGenerator::next_skeleton() {
  const std::size_t events = uniform(rng_, 0, cfg_.max_events);
  const std::size_t procs = uniform(rng_, 1, cfg_.max_procs);
  const std::size_t addrs = uniform(rng_, 1, cfg_.max_addrs);
  std::bernoulli_distribution is_read(cfg_.read_fraction);

  Skeleton s;
  for (std::size_t a = 0; a < addrs; ++a) s.addresses.push_back(address_name(a));
  s.initial.assign(addrs, 0);
  std::vector<Value> next_value(addrs, 1);
  for (std::size_t i = 0; i < events; ++i) {
    SkeletonEvent ev;
    ev.proc = static_cast<ProcId>(uniform(rng_, 0, procs - 1));
    ev.addr = Address{static_cast<std::uint32_t>(uniform(rng_, 0, addrs - 1))};
    ev.kind = is_read(rng_) ? AccessKind::kRead : AccessKind::kWrite;
    if (ev.kind == AccessKind::kWrite) ev.value = next_value[ev.addr.index]++;
    s.events.push_back(ev);
  }
  return s;
}

Execution ExecutionGenerator::next() {
  const Skeleton s = next_skeleton();
  const std::uint64_t total = candidate_count(s);
  const std::uint64_t pick = std::uniform_int_distribution<std::uint64_t>(0, total - 1)(rng_);
  return candidate_at(s, pick);
}

Execution gen_execution(const GenConfig& cfg) { return ExecutionGenerator(cfg).next(); }

std::vector<Execution> random_corpus(const GenConfig& cfg, std::size_t count) {
  ExecutionGenerator gen(cfg);
  std::vector<Execution> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(gen.next());
  return out;
}

std::vector<Skeleton> exhaustive_skeletons(std::size_t bound) {
  if (bound > kMaxExhaustiveBound) {
    throw UsageError("exhaustive bound " + std::to_string(bound) + " exceeds " +
                     std::to_string(kMaxExhaustiveBound));
  }
  std::vector<Skeleton> out;
  for (std::size_t n = 1; n <= bound; ++n) {
    // Process layout: bit i of `split` starts a new process before event i+1.
    for (std::uint32_t split = 0; split < (1u << (n - 1)); ++split) {
      std::vector<ProcId> procs(n, 0);
      for (std::size_t i = 1; i < n; ++i) {
        procs[i] = procs[i - 1] + static_cast<ProcId>((split >> (i - 1)) & 1u);
      }
      // Addresses as a restricted growth string.
      std::vector<std::uint32_t> addrs(n, 0);
      while (true) {
        const std::uint32_t addr_count = *std::max_element(addrs.begin(), addrs.end()) + 1;
        for (std::uint32_t kinds = 0; kinds < (1u << n); ++kinds) {
          Skeleton s;
          for (std::uint32_t a = 0; a < addr_count; ++a) s.addresses.push_back(address_name(a));
          s.initial.assign(addr_count, 0);
          std::vector<Value> next_value(addr_count, 1);
          for (std::size_t i = 0; i < n; ++i) {
            SkeletonEvent ev;
            ev.proc = procs[i];
            ev.addr = Address{addrs[i]};
            ev.kind = ((kinds >> i) & 1u) ? AccessKind::kRead : AccessKind::kWrite;
            if (ev.kind == AccessKind::kWrite) ev.value = next_value[addrs[i]]++;
            s.events.push_back(ev);
          }
          out.push_back(std::move(s));
        }
        // Next restricted growth string, or stop.
        std::size_t i = n;
        while (i-- > 1) {
          const std::uint32_t prefix_max =
              *std::max_element(addrs.begin(), addrs.begin() + static_cast<std::ptrdiff_t>(i));
          if (addrs[i] <= prefix_max) {
            ++addrs[i];
            std::fill(addrs.begin() + static_cast<std::ptrdiff_t>(i) + 1, addrs.end(), 0);
            break;
          }
        }
        if (i == 0) break;
      }
    }
  }
  return out;
}

void for_each_exhaustive(std::size_t bound, const std::function<void(Execution&&)>& fn) {
  for (const Skeleton& s : exhaustive_skeletons(bound)) for_each_candidate(s, fn);
}

std::vector<Execution> exhaustive_executions(std::size_t bound) {
  std::vector<Execution> out;
  for_each_exhaustive(bound, [&](Execution&& e) { out.push_back(std::move(e)); });
  return out;
}

}  // namespace axcat
