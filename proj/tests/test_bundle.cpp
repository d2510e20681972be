#include "doctest.h"
#include "support.hpp"
#include "ssg/coset_bundle.hpp"

using namespace ssg;

namespace {

std::shared_ptr<const CosetGroupoid> groupoid(const StructuredSemigroup& s) {
  return std::make_shared<const CosetGroupoid>(build_coset_groupoid(make_domination(s)));
}

void classes_match_oracle(const DominationRelation& d, ElementSet atlas) {
  const auto o = test::to_oracle(d.ctx());
  const ElementSet up = d.up_closure(atlas);
  for (int a = 0; a < d.order(); ++a)
    for (int b = 0; b < d.order(); ++b)
      if (up.contains(a) && up.contains(b)) REQUIRE(equivalent(d, a, b, atlas) == o.equiv(a, b, atlas.bits()));
  ElementSet covered;
  for (ElementSet c : equivalence_classes(d, atlas)) {
    REQUIRE_FALSE(c.intersects(covered));
    covered |= c;
    const Element r = c.first();
    c.for_each([&](Element x) { REQUIRE(o.equiv(r, x, atlas.bits())); });
  }
  REQUIRE(covered == up);
}

}  // namespace

TEST_SUITE("bundle") {
  TEST_CASE("germ equivalence examples") {
    auto null = test::dom("EX-NULL");
    CHECK(equivalent(*null, 0, 1, ElementSet{0, 1}));
    auto z3 = test::dom("EX-Z3");
    const auto& s = z3->sg();
    CHECK_FALSE(equivalent(*z3, test::el(s, "g"), test::el(s, "g2"), s.all()));
    for (const auto& name : semigroup_fixture_names()) {
      auto d = test::dom(name);
      for (ElementSet c : all_cosets(*d)) c.for_each([&](Element a) { CHECK(equivalent(*d, a, a, c)); });
    }
  }

  TEST_CASE("equivalence classes match the oracle on every atlas") {
    for (const auto& name : semigroup_fixture_names()) {
      CAPTURE(name);
      auto d = test::dom(name);
      if (d->order() > 10) continue;
      for (ElementSet a : all_atlases(*d))
        if (!a.empty()) classes_match_oracle(*d, a);
    }
    for (const auto& s : test::small_structured()) {
      const DominationRelation d(s);
      for (ElementSet a : all_atlases(d))
        if (!a.empty()) classes_match_oracle(d, a);
    }
  }

  TEST_CASE("bundle points") {
    const auto null = build_coset_bundle(groupoid(semigroup_fixture("EX-NULL")));
    CHECK(null.size() == 1);
    CHECK(null.point_of(0, 0) == null.point_of(0, 1));

    const auto z3 = build_coset_bundle(groupoid(semigroup_fixture("EX-Z3")));
    CHECK(z3.size() == 6);
    const auto& base = z3.base();
    const int cs = base.id_of(base.dom().sg().all());
    for (int i = 0; i < base.size(); ++i) {
      int pts = 0;
      for (const auto& p : z3.points()) pts += p.coset == i;
      CHECK(pts == (i == cs ? 3 : 1));
    }
  }

  TEST_CASE("bundles are etale and their fibres partition cosets") {
    for (const auto& name : semigroup_fixture_names()) {
      CAPTURE(name);
      const auto cb = build_coset_bundle(groupoid(semigroup_fixture(name)));
      CHECK(test::failure(check_etale_bundle(*cb.bundle())) == "");
      const auto& base = cb.base();
      for (int i = 0; i < base.size(); ++i) {
        ElementSet covered;
        for (const auto& p : cb.points())
          if (p.coset == i) {
            CHECK_FALSE(p.cls.intersects(covered));
            covered |= p.cls;
          }
        CHECK(covered == base.coset(i).members);
      }
    }
  }

  TEST_CASE("tilde representation") {
    const auto null = build_coset_bundle(groupoid(semigroup_fixture("EX-NULL")));
    const auto tn = tilde_representation(null);
    CHECK(tn.assign[0] == tn.assign[1]);

    const auto z3 = build_coset_bundle(groupoid(semigroup_fixture("EX-Z3")));
    const auto tz = tilde_representation(z3);
    const auto& s = z3.base().dom().sg();
    const auto& g = tz.assign[test::el(s, "g")];
    CHECK(g.size() == 2);
    CHECK(g.count(z3.base().id_of(ElementSet{test::el(s, "g")})) == 1);
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b) CHECK(tz.assign[a] != tz.assign[b]);
  }

  TEST_CASE("faithfulness") {
    auto null = check_faithful(build_coset_bundle(groupoid(semigroup_fixture("EX-NULL"))));
    CHECK_FALSE(null.faithful);
    REQUIRE(null.witness);
    CHECK(*null.witness == std::pair<Element, Element>{0, 1});
    CHECK(check_faithful(build_coset_bundle(groupoid(semigroup_fixture("EX-Z3")))).faithful);
    CHECK(check_faithful(build_coset_bundle(groupoid(semigroup_fixture("EX-I2")))).faithful);
  }

  TEST_CASE("faithfulness agrees with the coset separation oracle and with injectivity of tilde") {
    auto agree = [](const StructuredSemigroup& s) {
      const auto cb = build_coset_bundle(groupoid(s));
      const auto f = check_faithful(cb);
      if (s.order() <= 10) {
        const auto o = test::to_oracle(s).unseparated();
        REQUIRE(f.faithful == !o.has_value());
        if (o) REQUIRE(*f.witness == *o);
      }
      const auto t = tilde_representation(cb);
      bool injective = true;
      for (int a = 0; a < s.order(); ++a)
        for (int b = a + 1; b < s.order(); ++b) injective = injective && t.assign[a] != t.assign[b];
      REQUIRE(injective == f.faithful);
    };
    for (const auto& name : semigroup_fixture_names()) agree(semigroup_fixture(name));
    for (const auto& s : test::small_structured()) agree(s);
  }
}
