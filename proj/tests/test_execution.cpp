#include <doctest.h>

#include <algorithm>

#include "axcat/errors.hpp"
#include "axcat/execution_json.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace axcat;

namespace {

bool has_violation(const Execution& e, ViolationKind k) {
  const auto v = validate(e);
  return std::any_of(v.begin(), v.end(), [&](const auto& w) { return w.kind == k; });
}

}  // namespace

TEST_CASE("store buffering executions are well formed") {
  for (int r0 : {0, 1})
    for (int r1 : {0, 1}) CHECK(validate(fixtures::sb(r0, r1)).empty());

  const auto e = fixtures::sb(0, 0);
  CHECK(e.po == Relation(e.universe(), {{2, 3}, {4, 5}}));
  CHECK(describe(e, {0}) == "e0 init:W x=0");
  CHECK(describe(e, {3}) == "e3 P0:R y=0");
  CHECK(rf_inv(e, {3}) == EventId{1});
  CHECK_THROWS_AS(rf_inv(e, {2}), UsageError);
}

TEST_CASE("derived relations of the per-location view") {
  const auto l = fixtures::location_view();
  REQUIRE(validate(l.e).empty());
  const auto d = derive(l.e);

  CHECK(d.com.size() == 12);
  CHECK(d.fr.contains(l.r11, l.w2));
  CHECK(d.fr.contains(l.r11, l.w3));
  CHECK(d.fr.contains(l.r21, l.w3));
  CHECK_FALSE(d.fr.contains(l.r11, l.w1));
  CHECK(d.fr.successors(l.r31).empty());

  // w1 co w2 rf r21 is only in com⁺ through the composition.
  CHECK_FALSE(d.com.contains(l.w1, l.r21));
  CHECK(d.com_plus.contains(l.w1, l.r21));
  // r11 fr w2 rf r21
  CHECK(d.com_plus.contains(l.r11, l.r21));
  CHECK_FALSE(d.com_plus.contains(l.r11, l.r12));
  CHECK(d.com_plus == transitive_closure(d.com));
  CHECK(rf_inv(l.e, l.r12) == l.w1);
}

TEST_CASE("ill-formed executions") {
  SUBCASE("duplicate rf source") {
    ExecutionBuilder b;
    auto w1 = b.write(0, "x", 1);
    auto w2 = b.write(1, "x", 1);
    auto r = b.read(2, "x", 1);
    b.co(w1, w2).rf(w1, r).rf(w2, r);
    const auto e = b.build();
    CHECK(has_violation(e, ViolationKind::kDuplicateRfSource));
    CHECK_THROWS_AS(derive(e), UsageError);
    CHECK_THROWS_AS(rf_inv(e, r), UsageError);
  }
  SUBCASE("read without a source") {
    ExecutionBuilder b;
    b.read(0, "x", 0);
    CHECK(has_violation(b.build(), ViolationKind::kReadWithoutRfSource));
  }
  SUBCASE("co not total") {
    ExecutionBuilder b;
    b.write(0, "x", 1);
    b.write(1, "x", 2);
    CHECK(has_violation(b.build(), ViolationKind::kCoNotTotal));
  }
  SUBCASE("co across addresses") {
    ExecutionBuilder b;
    auto wx = b.write(0, "x", 1);
    auto wy = b.write(0, "y", 1);
    b.co(wx, wy);
    CHECK(has_violation(b.build(), ViolationKind::kCoCrossAddress));
  }
  SUBCASE("rf value mismatch") {
    ExecutionBuilder b;
    auto w = b.write(0, "x", 1);
    auto r = b.read(1, "x", 2);
    b.rf(w, r);
    CHECK(has_violation(b.build(), ViolationKind::kRfValueMismatch));
  }
  SUBCASE("rf across addresses") {
    ExecutionBuilder b;
    auto w = b.write(0, "x", 1);
    auto r = b.read(1, "y", 1);
    b.rf(w, r);
    CHECK(has_violation(b.build(), ViolationKind::kRfAddressMismatch));
  }
  SUBCASE("po across processes") {
    auto e = fixtures::sb(0, 0);
    e.po.insert({2}, {5});
    CHECK(has_violation(e, ViolationKind::kPoCrossProcess));
  }
  SUBCASE("po not transitive") {
    ExecutionBuilder b;
    auto w1 = b.write(0, "x", 1);
    auto w2 = b.write(0, "x", 2);
    auto w3 = b.write(0, "x", 3);
    b.co_chain({w1, w2, w3});
    auto e = b.build();
    e.po = Relation(e.universe(), {{0, 1}, {1, 2}});
    CHECK(has_violation(e, ViolationKind::kPoNotTransitive));
  }
}

TEST_CASE("com plus rewrite and irreflexivity over the small corpus") {
  for (const auto& e : fixtures::small_corpus()) {
    REQUIRE(validate(e).empty());
    const auto d = derive(e);
    const auto c = oracle::comm_of(e);
    CHECK(oracle::same_matrix(d.fr, c.fr));
    CHECK(oracle::same_matrix(d.com, c.com));
    CHECK(oracle::same_matrix(d.pol, c.pol));
    CHECK(oracle::same_matrix(d.rfe, c.rfe));
    CHECK(oracle::same_matrix(d.fre, c.fre));
    CHECK(oracle::same_matrix(com_plus_rewrite(e), oracle::closure_by_powers(c.com)));
    CHECK(is_irreflexive(d.com_plus));
    for (const auto& ev : e.events) {
      if (ev.is_read()) CHECK(e.rf.contains(rf_inv(e, ev.id), ev.id));
    }
  }
}

TEST_CASE("json round trip") {
  const auto l = fixtures::location_view();
  for (const auto& e : {fixtures::sb(0, 1), l.e}) {
    const Json j = execution_to_json(e);
    CHECK(execution_from_json(j) == e);
    CHECK(execution_from_json(Json::parse(j.dump())) == e);
  }
  CHECK(execution_to_json(fixtures::sb(0, 0))["events"][0]["proc"] == -1);
  CHECK_THROWS_AS(execution_from_json(Json::parse(R"({"events": 3})")), UsageError);
}
