#include <doctest.h>

#include <random>

#include "axcat/errors.hpp"
#include "axcat/relation.hpp"
#include "oracles.hpp"

using namespace axcat;

namespace {

Relation random_relation(std::mt19937_64& rng, std::size_t n, double density) {
  Relation r(EventSet::dense(n));
  std::bernoulli_distribution edge(density);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      if (edge(rng)) r.insert({a}, {b});
  return r;
}

// Every relation over n nodes, one per bit pattern of the n*n matrix.
Relation nth_relation(std::size_t n, std::uint32_t code) {
  Relation r(EventSet::dense(n));
  for (std::uint32_t k = 0; k < n * n; ++k)
    if ((code >> k) & 1u) r.insert({static_cast<std::uint32_t>(k / n)},
                                   {static_cast<std::uint32_t>(k % n)});
  return r;
}

}  // namespace

TEST_CASE("event sets") {
  EventSet s;
  CHECK(s.empty());
  CHECK(s.extent() == 0);
  s.insert({3});
  s.insert({0});
  CHECK(s.size() == 2);
  CHECK(s.extent() == 4);
  CHECK(s.contains({3}));
  CHECK_FALSE(s.contains({1}));
  CHECK_FALSE(s.contains({64}));
  CHECK_THROWS_AS(s.insert({64}), UsageError);
  CHECK(EventSet::dense(64).size() == 64);
}

TEST_CASE("basic algebra") {
  const auto u = EventSet::dense(3);
  Relation a(u, {{0, 1}, {1, 2}});
  Relation b(u, {{1, 2}, {2, 0}});
  CHECK(union_of(a, b) == Relation(u, {{0, 1}, {1, 2}, {2, 0}}));
  CHECK(intersection_of(a, b) == Relation(u, {{1, 2}}));
  CHECK(compose(a, b) == Relation(u, {{0, 2}, {1, 0}}));
  CHECK(inverse(a) == Relation(u, {{1, 0}, {2, 1}}));
  CHECK(a.pairs().front() == Relation::Pair{{0}, {1}});
  CHECK(a.subset_of(union_of(a, b)));
  CHECK_FALSE(union_of(a, b).subset_of(a));

  Relation other(EventSet::dense(4));
  CHECK_THROWS_AS(union_of(a, other), UsageError);
  CHECK_THROWS_AS(compose(a, other), UsageError);
  CHECK_THROWS_AS(a.insert({0}, {3}), UsageError);
}

TEST_CASE("closure examples") {
  const auto u = EventSet::dense(3);
  CHECK(transitive_closure(Relation(u)).empty());
  CHECK(transitive_closure(Relation(u, {{0, 1}, {1, 2}})) ==
        Relation(u, {{0, 1}, {1, 2}, {0, 2}}));
  // A cycle makes every member reach itself.
  CHECK(transitive_closure(Relation(u, {{0, 1}, {1, 0}})) ==
        Relation(u, {{0, 1}, {1, 0}, {0, 0}, {1, 1}}));
  CHECK(reflexive_transitive_closure(Relation(u)) == Relation::identity(u));
}

TEST_CASE("acyclicity and cycle witnesses") {
  const auto u = EventSet::dense(4);
  CHECK(is_acyclic(Relation(u)));
  CHECK(is_irreflexive(Relation(u)));
  CHECK_FALSE(is_irreflexive(Relation(u, {{1, 1}})));
  CHECK_FALSE(is_acyclic(Relation(u, {{2, 2}})));
  CHECK_FALSE(find_cycle(Relation(u, {{0, 1}, {1, 2}})));

  auto c = find_cycle(Relation(u, {{1, 2}, {2, 1}}));
  REQUIRE(c);
  CHECK(c->nodes == std::vector<EventId>{{1}, {2}});

  // The shortest cycle wins over a longer one through a smaller node.
  auto shortest = find_cycle(Relation(u, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 2}}));
  REQUIRE(shortest);
  CHECK(shortest->nodes == std::vector<EventId>{{2}, {3}});

  CHECK(canonical_cycle({{3}, {1}, {2}}).nodes == std::vector<EventId>{{1}, {2}, {3}});
  CHECK(to_string(Relation(u, {{0, 1}})) == "{(0,1)}");
}

TEST_CASE("closure matches matrix powers on every relation over three nodes") {
  for (std::size_t n = 0; n <= 3; ++n) {
    for (std::uint32_t code = 0; code < (1u << (n * n)); ++code) {
      const Relation r = nth_relation(n, code);
      const auto m = oracle::from_relation(r, n);
      REQUIRE(oracle::same_matrix(transitive_closure(r), oracle::closure_by_powers(m)));
      REQUIRE(is_acyclic(r) == oracle::acyclic(m));
    }
  }
}

TEST_CASE("relation properties on random relations") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = 1 + rng() % 12;
    const double density = std::uniform_real_distribution<double>(0.0, 0.4)(rng);
    const Relation a = random_relation(rng, n, density);
    const Relation b = random_relation(rng, n, density);
    const Relation c = random_relation(rng, n, density);
    const auto tc = transitive_closure(a);

    CHECK(oracle::same_matrix(tc, oracle::closure_by_powers(oracle::from_relation(a, n))));
    CHECK(transitive_closure(tc) == tc);
    CHECK(inverse(inverse(a)) == a);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    CHECK(union_of(a, b) == union_of(b, a));
    CHECK(a.subset_of(tc));
    if (is_acyclic(a)) CHECK(is_irreflexive(tc));

    const auto cycle = find_cycle(a);
    CHECK(is_acyclic(a) == !cycle.has_value());
    if (cycle) {
      CHECK(cycle->validates(a));
      CHECK(*cycle == canonical_cycle(cycle->nodes));
    }
  }
}

TEST_CASE("relations at the 64-event limit") {
  const auto u = EventSet::dense(64);
  Relation chain(u);
  for (std::uint32_t i = 0; i + 1 < 64; ++i) chain.insert({i}, {i + 1});
  CHECK(is_acyclic(chain));
  CHECK(transitive_closure(chain).size() == 64 * 63 / 2);
  chain.insert({63}, {0});
  auto c = find_cycle(chain);
  REQUIRE(c);
  CHECK(c->nodes.size() == 64);
  CHECK(c->validates(chain));
}
