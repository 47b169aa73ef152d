#include <doctest.h>

#include "axcat/axioms.hpp"
#include "axcat/errors.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace axcat;

namespace {

std::vector<EventId> ids(std::initializer_list<std::uint32_t> v) {
  std::vector<EventId> out;
  for (auto i : v) out.push_back({i});
  return out;
}

Architecture fixed(std::string name, std::function<ArchitectureResult(const Execution&)> fn) {
  return Architecture{std::move(name), std::move(fn)};
}

// P0: W x=2; R x reading init.  P1: W x=1.  co: init, 1, 2.
Execution stale_read() {
  ExecutionBuilder b;
  auto ix = b.init("x");
  auto w2 = b.write(0, "x", 2);
  auto r = b.read(0, "x", 0);
  auto w1 = b.write(1, "x", 1);
  b.co_chain({ix, w1, w2}).rf(ix, r);
  return b.build();
}

}  // namespace

TEST_CASE("store buffering under sc") {
  const auto forbidden = fixtures::sb(0, 0);
  const auto v = sc_full(forbidden);
  CHECK_FALSE(v.holds);
  REQUIRE(v.witness);
  CHECK(std::get<CycleWitness>(*v.witness).nodes == ids({2, 3, 4, 5}));

  CHECK(sc_per_location_1(forbidden).holds);
  CHECK(sc_per_location_2(forbidden).holds);
  CHECK(find_forbidden_patterns(forbidden).empty());

  for (auto [r0, r1] : {std::pair{0, 1}, {1, 0}, {1, 1}}) {
    const auto v2 = sc_full(fixtures::sb(r0, r1));
    CHECK(v2.holds);
    CHECK_FALSE(v2.witness);
  }
}

TEST_CASE("framework axioms on store buffering") {
  const auto e = fixtures::sb(0, 0);
  for (const auto& arch : {sc_architecture(), store_buffer_architecture()}) {
    const auto all = check_all(e, arch);
    REQUIRE(all.size() == 7);
    CHECK_FALSE(verdict_for(all, Axiom::kFullSC).holds);
    CHECK(verdict_for(all, Axiom::kScPerLocation1).holds);
    CHECK(verdict_for(all, Axiom::kNoThinAir).holds);
    CHECK(verdict_for(all, Axiom::kObservation).holds);
    CHECK(verdict_for(all, Axiom::kPropagation).holds);
    for (const auto& v : all) CHECK(witness_validates(e, arch, v));
  }
}

TEST_CASE("the sample architectures disagree on a stale read") {
  const auto e = stale_read();
  REQUIRE(validate(e).empty());
  const auto under_sc = observation(e, sc_architecture());
  CHECK_FALSE(under_sc.holds);
  REQUIRE(under_sc.witness);
  CHECK(std::get<FixedPoint>(*under_sc.witness).event == EventId{2});
  CHECK(observation(e, store_buffer_architecture()).holds);
}

TEST_CASE("architecture results are validated") {
  const auto e = fixtures::sb(0, 0);
  const auto bad_ppo = fixed("bad", [](const Execution& x) {
    Relation ppo(x.universe(), {{2, 4}});
    return ArchitectureResult{ppo, Relation(x.universe()), Relation(x.universe())};
  });
  CHECK_THROWS_AS(apply_architecture(bad_ppo, e), UsageError);
  const auto bad_prop = fixed("bad", [](const Execution& x) {
    Relation prop(x.universe(), {{2, 3}});
    return ArchitectureResult{x.po, Relation(x.universe()), prop};
  });
  CHECK_THROWS_AS(propagation(e, bad_prop), UsageError);
  CHECK(find_architecture("sb"));
  CHECK_FALSE(find_architecture("power"));
}

TEST_CASE("propagation and observation edge cases") {
  const auto e = stale_read();
  const auto empty_prop = fixed("none", [](const Execution& x) {
    return ArchitectureResult{x.po, Relation(x.universe()), Relation(x.universe())};
  });
  CHECK(observation(e, empty_prop).holds);
  CHECK(propagation(e, empty_prop).holds);

  // e3 co e1, so prop (e1, e3) closes a 2-cycle.
  const auto against_co = fixed("against", [](const Execution& x) {
    return ArchitectureResult{x.po, Relation(x.universe()), Relation(x.universe(), {{1, 3}})};
  });
  const auto v = propagation(e, against_co);
  CHECK_FALSE(v.holds);
  CHECK(std::get<CycleWitness>(*v.witness).nodes == ids({1, 3}));
}

TEST_CASE("each coherence pattern is recognised") {
  struct Case {
    Pattern pattern;
    Execution e;
  };
  std::vector<Case> cases;
  {
    ExecutionBuilder b;  // CoWW
    auto w1 = b.write(0, "x", 1);
    auto w2 = b.write(0, "x", 2);
    b.co(w2, w1);
    cases.push_back({Pattern::kCoWW, b.build()});
  }
  {
    ExecutionBuilder b;  // CoRW-rf
    auto ix = b.init("x");
    auto r = b.read(0, "x", 1);
    auto w = b.write(0, "x", 1);
    b.co(ix, w).rf(w, r);
    cases.push_back({Pattern::kCoRWrf, b.build()});
  }
  {
    ExecutionBuilder b;  // CoWR-fr
    auto ix = b.init("x");
    auto w = b.write(0, "x", 1);
    auto r = b.read(0, "x", 0);
    b.co(ix, w).rf(ix, r);
    cases.push_back({Pattern::kCoWRfr, b.build()});
  }
  {
    ExecutionBuilder b;  // CoRW-corf
    auto ix = b.init("x");
    auto r = b.read(0, "x", 2);
    auto w1 = b.write(0, "x", 1);
    auto w2 = b.write(1, "x", 2);
    b.co_chain({ix, w1, w2}).rf(w2, r);
    cases.push_back({Pattern::kCoRWcorf, b.build()});
  }
  {
    ExecutionBuilder b;  // CoRR-frrf
    auto ix = b.init("x");
    auto r1 = b.read(0, "x", 1);
    auto r2 = b.read(0, "x", 0);
    auto w = b.write(1, "x", 1);
    b.co(ix, w).rf(w, r1).rf(ix, r2);
    cases.push_back({Pattern::kCoRRfrrf, b.build()});
  }
  for (const auto& c : cases) {
    CAPTURE(to_string(c.pattern));
    REQUIRE(validate(c.e).empty());
    const auto found = find_forbidden_patterns(c.e);
    REQUIRE(found.size() == 1);
    CHECK(found.front().pattern == c.pattern);
    CHECK_FALSE(sc_per_location_1(c.e).holds);
    const auto v2 = sc_per_location_2(c.e);
    CHECK_FALSE(v2.holds);
    CHECK(witness_validates(c.e, sc_architecture(), v2));
    const auto all = check_all(c.e, sc_architecture());
    CHECK(std::get<PatternInstance>(*verdict_for(all, Axiom::kFivePatterns).witness) ==
          found.front());
  }
}

TEST_CASE("axioms agree with the oracles over the small corpus") {
  const auto arches = {sc_architecture(), store_buffer_architecture()};
  for (const auto& e : fixtures::small_corpus()) {
    const auto d = derive(e);
    CHECK(sc_full(e, d).holds == oracle::sc(e));
    const bool scpl = oracle::sc_per_location(e);
    CHECK(sc_per_location_1(e, d).holds == scpl);
    CHECK(sc_per_location_2(e, d).holds == scpl);
    CHECK(find_forbidden_patterns(e, d).empty() == !oracle::has_coherence_pattern(e));
    for (const auto& arch : arches) {
      const auto r = apply_architecture(arch, e);
      CHECK(observation(d, r).holds == oracle::observation(e, r.prop, happens_before(d, r)));
      // On the sc architecture prop collapses to co.
      if (arch.name == "sc") CHECK(r.prop == e.co);
      CHECK(propagation(e, r).holds == is_acyclic(union_of(e.co, r.prop)));
      for (const auto& v : check_all(e, arch)) CHECK(witness_validates(e, arch, v));
    }
  }
}

TEST_CASE("empty execution satisfies everything") {
  const Execution e = ExecutionBuilder{}.build();
  for (const auto& v : check_all(e, sc_architecture())) CHECK(v.holds);
}
