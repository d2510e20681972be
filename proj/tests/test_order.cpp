#include "doctest.h"
#include "support.hpp"
#include "ssg/domination.hpp"

using namespace ssg;

namespace {

void agrees_with_oracle(const DominationRelation& d) {
  const auto o = test::to_oracle(d.ctx());
  const int n = d.order();
  for (int a = 0; a < n; ++a)
    for (int s = 0; s < n; ++s)
      for (int b = 0; b < n; ++b) REQUIRE(d.dominates(a, s, b) == o.dom(a, s, b));
  if (n <= 10) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      REQUIRE(d.up_closure(ElementSet(m)).bits() == o.up(m));
      REQUIRE(d.dual(ElementSet(m)).bits() == o.dual(m));
    }
  } else {
    for (int a = 0; a < n; ++a) {
      REQUIRE(d.up_closure(ElementSet::single(a)).bits() == o.up(oracle::bit(a)));
      REQUIRE(d.dual(ElementSet::single(a)).bits() == o.dual(oracle::bit(a)));
    }
  }
}

}  // namespace

TEST_SUITE("order") {
  TEST_CASE("null semigroup: 0 is below both elements via every witness") {
    auto d = test::dom("EX-NULL");
    for (int s = 0; s < 2; ++s) {
      CHECK(d->dominates(0, s, 1));
      CHECK(d->dominates(0, s, 0));
    }
    using P = std::pair<Element, Element>;
    CHECK(d->pairs() == std::vector<P>{{0, 0}, {0, 1}});
    CHECK(d->witnesses(0, 0) == ElementSet{0, 1});
    CHECK(d->witnesses(0, 1) == ElementSet{0, 1});
    CHECK(d->up_closure(ElementSet{0}) == ElementSet{0, 1});
    CHECK(d->up_closure(ElementSet{1}).empty());
  }

  TEST_CASE("cyclic group: domination is equality with the inverse as witness") {
    auto d = test::dom("EX-Z3");
    const auto& s = d->sg();
    const Element g = test::el(s, "g"), g2 = test::el(s, "g2");
    CHECK(d->dominates(g, g2, g));
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) CHECK(d->less(a, b) == (a == b));
    CHECK(d->dual(ElementSet::single(g)) == ElementSet::single(g2));
  }

  TEST_CASE("chain: domination is the chain order") {
    auto d = test::dom("EX-CHAIN3");
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) CHECK(d->less(a, b) == (a <= b));
    CHECK(d->up_closure(test::set(d->sg(), {"e"})) == test::set(d->sg(), {"e", "f"}));
  }

  TEST_CASE("inverse semigroup: a is dominated by itself via its inverse") {
    auto d = test::dom("EX-I2");
    const auto inv = *d->sg().inverses();
    for (int a = 0; a < d->order(); ++a) CHECK(d->dominates(a, inv[a], a));
  }

  TEST_CASE("empty set conventions") {
    for (const auto& name : semigroup_fixture_names()) {
      auto d = test::dom(name);
      CHECK(d->up_closure({}).empty());
      CHECK(d->dual({}).empty());
    }
  }

  TEST_CASE("witness cube, up-closures and duals match the oracle on every fixture") {
    for (const auto& name : semigroup_fixture_names()) {
      CAPTURE(name);
      agrees_with_oracle(*test::dom(name));
    }
  }

  TEST_CASE("witness cube, up-closures and duals match the oracle up to order 3") {
    for (const auto& s : test::small_structured()) agrees_with_oracle(DominationRelation(s));
  }

  TEST_CASE("order laws hold on every fixture") {
    for (const auto& name : semigroup_fixture_names()) {
      CAPTURE(name);
      const Report r = domination_laws(*test::dom(name));
      CHECK(r.checks().size() > 0);
      CHECK(test::failure(r) == "");
    }
  }
}
