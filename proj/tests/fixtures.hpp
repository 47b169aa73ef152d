#pragma once

#include <vector>

#include "axcat/execution.hpp"
#include "axcat/generators.hpp"

namespace fixtures {

// Store buffering with the two reads resolved to the given values.
//   e0 init x, e1 init y, e2 P0 W x=1, e3 P0 R y, e4 P1 W y=1, e5 P1 R x
inline axcat::Execution sb(int r0, int r1) {
  axcat::ExecutionBuilder b;
  auto ix = b.init("x");
  auto iy = b.init("y");
  auto wx = b.write(0, "x", 1);
  auto ry = b.read(0, "y", r0);
  auto wy = b.write(1, "y", 1);
  auto rx = b.read(1, "x", r1);
  b.co(ix, wx).co(iy, wy);
  b.rf(r0 ? wy : iy, ry).rf(r1 ? wx : ix, rx);
  return b.build();
}

// One location: w1 co w2 co w3, r11 and r12 read w1, r21 reads w2, r31
// reads w3. Every event sits in its own process.
struct Location {
  axcat::Execution e;
  axcat::EventId w1, w2, w3, r11, r12, r21, r31;
};

inline Location location_view() {
  axcat::ExecutionBuilder b;
  Location l;
  l.w1 = b.write(0, "m", 1);
  l.w2 = b.write(1, "m", 2);
  l.w3 = b.write(2, "m", 3);
  l.r11 = b.read(3, "m", 1);
  l.r12 = b.read(4, "m", 1);
  l.r21 = b.read(5, "m", 2);
  l.r31 = b.read(6, "m", 3);
  b.co_chain({l.w1, l.w2, l.w3});
  b.rf(l.w1, l.r11).rf(l.w1, l.r12).rf(l.w2, l.r21).rf(l.w3, l.r31);
  l.e = b.build();
  return l;
}

// Small corpus for unit tests: everything up to three program events plus a
// few hundred random executions.
inline const std::vector<axcat::Execution>& small_corpus() {
  static const std::vector<axcat::Execution> corpus = [] {
    auto out = axcat::exhaustive_executions(3);
    axcat::GenConfig cfg;
    cfg.seed = 7;
    cfg.max_events = 6;
    cfg.max_procs = 3;
    auto extra = axcat::random_corpus(cfg, 400);
    out.insert(out.end(), extra.begin(), extra.end());
    return out;
  }();
  return corpus;
}

}  // namespace fixtures
