#include "doctest.h"
#include "support.hpp"
#include "ssg/coset_bundle.hpp"
#include "ssg/filters.hpp"
#include "ssg/morphism.hpp"

using namespace ssg;

namespace {

std::shared_ptr<const CosetGroupoid> groupoid(const std::string& name) {
  return std::make_shared<const CosetGroupoid>(build_coset_groupoid(test::dom(name)));
}

std::vector<ElementSet> directed_members(const DirectedCosets& dc) {
  std::vector<ElementSet> out;
  for (int id : dc.ids) out.push_back(dc.cg->coset(id).members);
  return out;
}

}  // namespace

TEST_SUITE("filters") {
  TEST_CASE("directed subsets") {
    auto null = test::dom("EX-NULL");
    CHECK(is_directed(*null, ElementSet{0, 1}));
    CHECK(is_directed(*null, ElementSet{}));
    auto z3 = test::dom("EX-Z3");
    for (std::uint64_t m = 1; m < 8; ++m) CHECK(is_directed(*z3, ElementSet(m)) == (ElementSet(m).size() == 1));
  }

  TEST_CASE("directed cosets") {
    const auto z3 = directed_cosets(groupoid("EX-Z3"));
    CHECK(test::bits(directed_members(z3)) == test::bits({ElementSet{0}, ElementSet{1}, ElementSet{2}}));
    CHECK(directed_members(directed_cosets(groupoid("EX-NULL"))) == std::vector<ElementSet>{ElementSet{0, 1}});
    CHECK(directed_cosets(groupoid("EX-CHAIN3")).size() == 3);
    for (const auto& name : semigroup_fixture_names()) {
      CAPTURE(name);
      const auto dc = directed_cosets(groupoid(name));
      const auto o = test::to_oracle(dc.cg->dom().ctx());
      for (int i = 0; i < dc.cg->size(); ++i)
        CHECK((dc.index_of[i] >= 0) == o.is_directed(dc.cg->coset(i).members.bits()));
      CHECK(is_ideal(dc.cg->g(), [&] {
        PointSet s(static_cast<std::size_t>(dc.cg->size()));
        for (int id : dc.ids) s.set(static_cast<std::size_t>(id));
        return s;
      }()));
    }
  }

  TEST_CASE("ultrafilters") {
    auto chain = test::dom("EX-CHAIN3");
    CHECK(ultrafilters(*chain) == std::vector<ElementSet>{test::set(chain->sg(), {"e", "f"})});
    CHECK(ultrafilters(*test::dom("EX-NULL")).empty());
    auto e = test::error_of([] { ultrafilters(*test::dom("EX-Z3")); });
    REQUIRE(e);
    CHECK(e->kind() == ErrorKind::NoZero);
    const auto cg = groupoid("EX-CHAIN3");
    CHECK(test::failure(check_ultrafilters(*cg, ultrafilters(*chain))) == "");
  }

  TEST_CASE("ultrafilters match the oracle wherever Z has a zero") {
    int with_zero = 0;
    for (const auto& s : test::small_structured()) {
      if (!s.flags().zero) continue;
      ++with_zero;
      const DominationRelation d(s);
      CHECK(test::bits(ultrafilters(d)) == [&] {
        auto u = test::to_oracle(s).ultrafilters();
        std::sort(u.begin(), u.end());
        return u;
      }());
    }
    CHECK(with_zero > 0);
  }

  TEST_CASE("maximal directed subsets") {
    auto z3 = test::dom("EX-Z3");
    CHECK(test::bits(maximal_directed_subsets(*z3, z3->sg().all())) ==
          test::bits({ElementSet{0}, ElementSet{1}, ElementSet{2}}));
    for (int g = 0; g < 3; ++g)
      CHECK(maximal_directed_subsets(*z3, ElementSet::single(g)) == std::vector<ElementSet>{ElementSet::single(g)});
    auto null = test::dom("EX-NULL");
    CHECK(maximal_directed_subsets(*null, ElementSet{0, 1}) == std::vector<ElementSet>{ElementSet{0, 1}});
    auto chain = test::dom("EX-CHAIN3");
    for (ElementSet c : all_cosets(*chain)) CHECK(maximal_directed_subsets(*chain, c) == std::vector<ElementSet>{c});
  }

  TEST_CASE("triangle relation on the cyclic group") {
    const auto dc = directed_cosets(groupoid("EX-Z3"));
    const auto tri = triangle_relation(dc);
    const auto z = is_zakrzewski(tri);
    CHECK(test::failure(z.report) == "");
    CHECK(z.zakrzewski);
    CHECK_FALSE(tri.is_function());
    const auto& cg = *dc.cg;
    const int cs = cg.id_of(cg.dom().sg().all());
    CHECK(tri.over(cs).size() == 3);
    // preimage of D_g is C_g
    const Element g = test::el(cg.dom().sg(), "g");
    PointSet dg(static_cast<std::size_t>(dc.size()));
    for (int i = 0; i < dc.size(); ++i)
      if (cg.coset(dc.ids[i]).members.contains(g)) dg.set(static_cast<std::size_t>(i));
    CHECK(tri.preimage(dg) == cg.slice_of(g));
  }

  TEST_CASE("triangle relation is Zakrzewski on every fixture") {
    for (const auto& name : semigroup_fixture_names()) {
      CAPTURE(name);
      const auto tri = triangle_relation(directed_cosets(groupoid(name)));
      CHECK(is_zakrzewski(tri).zakrzewski);
    }
    const auto null = triangle_relation(directed_cosets(groupoid("EX-NULL")));
    CHECK(null.pairs() == std::vector<std::pair<int, int>>{{0, 0}});
    const auto chain = triangle_relation(directed_cosets(groupoid("EX-CHAIN3")));
    CHECK(chain.is_function());
    CHECK(chain.pairs().size() == 3);
  }

  TEST_CASE("iota on the cyclic group bijects six pullback points onto the bundle") {
    const auto cg = groupoid("EX-Z3");
    const auto cb = build_coset_bundle(cg);
    const auto dc = directed_cosets(cg);
    const auto db = directed_bundle(cb, dc);
    const auto m = iota_morphism(cb, dc, db);
    CHECK(test::failure(is_pierce(m)) == "");
    CHECK(m.pullback.points.size() == 6);
    CHECK(cb.size() == 6);
    auto tau = m.tau;
    std::sort(tau.begin(), tau.end());
    CHECK(tau == std::vector<int>{0, 1, 2, 3, 4, 5});
  }
}
