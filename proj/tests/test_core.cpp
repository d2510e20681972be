#include "doctest.h"
#include "support.hpp"
#include "ssg/semigroup.hpp"

using namespace ssg;

TEST_SUITE("core") {
  TEST_CASE("zero-product table on two elements is a semigroup") {
    auto s = FiniteSemigroup::from_table({{0, 0}, {0, 0}});
    CHECK(s.order() == 2);
    CHECK(s.zero() == 0);
  }

  TEST_CASE("one-element table is the trivial semigroup") {
    auto s = FiniteSemigroup::from_table({{0}});
    CHECK(s.order() == 1);
    CHECK(s.idempotents() == ElementSet{0});
  }

  TEST_CASE("corrupted left-zero table is rejected with a failing triple") {
    const std::vector<std::vector<int>> t{{1, 0}, {1, 1}};
    auto e = test::error_of([&] { FiniteSemigroup::from_table(t); });
    REQUIRE(e);
    CHECK(e->kind() == ErrorKind::NotAssociative);
    REQUIRE(e->witness().size() == 3);
    const int a = e->witness()[0], b = e->witness()[1], c = e->witness()[2];
    CHECK(t[t[a][b]][c] != t[a][t[b][c]]);
  }

  TEST_CASE("malformed tables") {
    CHECK(test::error_of([] { FiniteSemigroup::from_table({{0, 2}, {0, 0}}); })->kind() == ErrorKind::OutOfRange);
    CHECK(test::error_of([] { FiniteSemigroup::from_table({{0, 0}, {0}}); })->kind() == ErrorKind::InvalidTable);
    CHECK(test::error_of([] { FiniteSemigroup::from_table({}); })->kind() == ErrorKind::InvalidTable);
    CHECK(test::error_of([] { FiniteSemigroup::from_table({{0}}, {"x", "y"}); })->kind() == ErrorKind::InvalidTable);
  }

  TEST_CASE("null semigroup with N = Z = S") {
    auto s = semigroup_fixture("EX-NULL");
    CHECK(s.flags().structured);
    CHECK(s.flags().z_symmetric);
    CHECK(s.flags().n_diagonal);
    CHECK(s.flags().zero == 0);
  }

  TEST_CASE("idempotents of I_2 give a structured semigroup with N normal") {
    auto s = semigroup_fixture("EX-I2");
    CHECK(s.order() == 7);
    CHECK(s.N() == test::set(s.sg(), {"--", "-1", "0-", "01"}));
    CHECK(s.flags().structured);
    CHECK(s.flags().n_normal);
  }

  TEST_CASE("cyclic group with trivial N and Z") {
    auto s = semigroup_fixture("EX-Z3");
    CHECK(s.flags().structured);
    CHECK(s.flags().z_symmetric);
    CHECK_FALSE(s.flags().zero);
  }

  TEST_CASE("centres") {
    auto z3 = semigroup_fixture("EX-Z3").sg();
    CHECK(centre_of(z3, z3.all()) == z3.all());
    auto i2 = semigroup_fixture("EX-I2").sg();
    CHECK(centre_of(i2, i2.all()) == test::set(i2, {"--", "01"}));
    auto chain = semigroup_fixture("EX-CHAIN3").sg();
    CHECK(centre_of(chain, ElementSet{1}) == ElementSet{1});
  }

  // order-4 semigroup found by scanning all small tables for axiom failures
  const std::vector<std::vector<int>> kBadTable{{0, 0, 0, 0}, {0, 1, 2, 3}, {2, 2, 2, 2}, {2, 3, 0, 1}};

  TEST_CASE("binormality failure carries its witness") {
    auto s = FiniteSemigroup::from_table(kBadTable);
    auto e = test::error_of([&] { validate_structured(s, ElementSet{0, 1}, ElementSet{0, 1}); });
    REQUIRE(e);
    CHECK(e->kind() == ErrorKind::BinormalityFails);
    REQUIRE(e->witness().size() == 3);
    const int a = e->witness()[0], b = e->witness()[1], z = e->witness()[2];
    const ElementSet zs{0, 1};
    CHECK((!zs.contains(s.mul(s.mul(a, z), b)) || !zs.contains(s.mul(s.mul(b, z), a))));
  }

  TEST_CASE("trinormality failure carries its witness") {
    auto s = FiniteSemigroup::from_table(kBadTable);
    auto e = test::error_of([&] { validate_structured(s, ElementSet{0, 1}, ElementSet{1}); });
    REQUIRE(e);
    CHECK(e->kind() == ErrorKind::TrinormalityFails);
    REQUIRE(e->witness().size() == 3);
    const int a = e->witness()[0], b = e->witness()[1], m = e->witness()[2];
    CHECK_FALSE(ElementSet({0, 1}).contains(s.mul(s.mul(b, m), a)));
  }

  TEST_CASE("subsemigroup and centrality failures") {
    auto z3 = cyclic_group(3);
    CHECK(test::error_of([&] { validate_structured(z3, ElementSet{1}, ElementSet{1}); })->kind() ==
          ErrorKind::NotSubsemigroup);
    CHECK(test::error_of([&] { validate_structured(z3, ElementSet{0}, z3.all()); })->kind() ==
          ErrorKind::ZNotCentralInN);
    auto i2 = symmetric_inverse_monoid(2);
    // an idempotent does not commute with a non-idempotent rank-one map
    CHECK(test::error_of([&] { validate_structured(i2, i2.all(), i2.idempotents()); })->kind() ==
          ErrorKind::ZNotCentralInN);
    CHECK(test::error_of([&] { validate_structured(z3, ElementSet{5}, ElementSet{0}); })->kind() ==
          ErrorKind::OutOfRange);
  }

  TEST_CASE("structure flags match the axioms on every subsemigroup pair up to order 3") {
    int structured = 0;
    for (int k = 1; k <= 3; ++k)
      for (const auto& s : enumerate_semigroups(k))
        for (std::uint64_t n = 1; n < (1u << k); ++n)
          for (std::uint64_t z = 1; z < (1u << k); ++z) {
            if (!s.is_subsemigroup(ElementSet(n)) || !s.is_subsemigroup(ElementSet(z))) continue;
            const oracle::Sg o{k, s.table(), n, z};
            const auto f = analyze_structure(s, ElementSet(n), ElementSet(z));
            CHECK(f.structured == o.structured());
            structured += f.structured;
          }
    // frozen from the oracle count above
    CHECK(structured == 225);
  }

  TEST_CASE("normal Z is binormal and a binormal commutative C gives (S, C, C)") {
    for (const auto& s : test::small_structured()) {
      const auto& g = s.sg();
      if (is_normal(g, s.Z())) CHECK(is_binormal(g, s.Z()));
      for (std::uint64_t c = 1; c < (std::uint64_t{1} << g.order()); ++c) {
        const ElementSet cs(c);
        if (!g.is_subsemigroup(cs) || !is_binormal(g, cs) || centre_of(g, cs) != cs) continue;
        CHECK(analyze_structure(g, cs, cs).structured);
      }
    }
  }
}
