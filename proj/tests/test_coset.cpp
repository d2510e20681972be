#include "doctest.h"
#include "support.hpp"
#include "ssg/coset.hpp"

using namespace ssg;

namespace {

std::vector<oracle::Mask> cosets_of(const DominationRelation& d, CosetMethod m) {
  return test::bits(all_cosets(d, {m, 24}));
}

}  // namespace

TEST_SUITE("coset") {
  TEST_CASE("atlases") {
    auto null = test::dom("EX-NULL");
    CHECK(is_atlas(*null, ElementSet{0}));
    CHECK(is_atlas(*null, ElementSet{}));
    auto i2 = test::dom("EX-I2");
    for (int a = 0; a < i2->order(); ++a) CHECK(is_atlas(*i2, ElementSet::single(a)));
  }

  TEST_CASE("cosets of the null semigroup") {
    auto d = test::dom("EX-NULL");
    CHECK(is_coset(*d, ElementSet{0, 1}));
    CHECK_FALSE(is_coset(*d, ElementSet{0}));
    CHECK_FALSE(is_coset(*d, ElementSet{1}));
    CHECK(coset_closure(*d, ElementSet{0}) == ElementSet{0, 1});
    CHECK(all_cosets(*d) == std::vector<ElementSet>{ElementSet{0, 1}});
  }

  TEST_CASE("cosets of the cyclic group are the cosets of its subgroups") {
    auto d = test::dom("EX-Z3");
    const auto& s = d->sg();
    const Element e = test::el(s, "e"), g = test::el(s, "g"), g2 = test::el(s, "g2");
    CHECK(is_coset(*d, ElementSet{g}));
    CHECK(is_coset(*d, s.all()));
    CHECK_FALSE(is_coset(*d, ElementSet{e, g}));
    CHECK(coset_closure(*d, ElementSet{g}) == ElementSet{g});
    auto got = cosets_of(*d, CosetMethod::Exhaustive);
    CHECK(got == test::bits({ElementSet{e}, ElementSet{g}, ElementSet{g2}, s.all()}));
    CHECK(cosets_of(*d, CosetMethod::Generator) == got);
  }

  TEST_CASE("cosets of the chain are its nonempty filters") {
    auto d = test::dom("EX-CHAIN3");
    const auto& s = d->sg();
    CHECK(cosets_of(*d, CosetMethod::Exhaustive) ==
          test::bits({test::set(s, {"f"}), test::set(s, {"e", "f"}), test::set(s, {"0", "e", "f"})}));
  }

  TEST_CASE("principal up-sets in I_2 are the closures of singletons") {
    auto d = test::dom("EX-I2");
    for (int a = 0; a < d->order(); ++a) {
      const ElementSet up = d->up_closure(ElementSet::single(a));
      CHECK(coset_closure(*d, ElementSet::single(a)) == up);
      CHECK(is_coset(*d, up));
    }
  }

  TEST_CASE("enumerators agree with each other and with the oracle") {
    for (const auto& name : semigroup_fixture_names()) {
      CAPTURE(name);
      auto d = test::dom(name);
      const auto ex = cosets_of(*d, CosetMethod::Exhaustive);
      CHECK(cosets_of(*d, CosetMethod::Generator) == ex);
      if (d->order() <= 10) CHECK(ex == test::to_oracle(d->ctx()).cosets());
    }
    for (const auto& s : test::small_structured()) {
      const DominationRelation d(s);
      const auto ex = cosets_of(d, CosetMethod::Exhaustive);
      CHECK(ex == test::to_oracle(s).cosets());
      CHECK(cosets_of(d, CosetMethod::Generator) == ex);
    }
  }

  TEST_CASE("exhaustive enumeration refuses large orders") {
    auto d = test::dom("EX-I2");
    auto e = test::error_of([&] { all_cosets(*d, {CosetMethod::Exhaustive, 6}); });
    REQUIRE(e);
    CHECK(e->kind() == ErrorKind::OrderTooLarge);
    CHECK(is_guard(e->kind()));
  }

  TEST_CASE("right actions") {
    auto z3 = test::dom("EX-Z3");
    for (int h = 0; h < 3; ++h) CHECK(acts_right(*z3, ElementSet{1}, h));
    auto null = test::dom("EX-NULL");
    CHECK(acts_right(*null, ElementSet{0, 1}, 1));
    CHECK_FALSE(acts_right(*null, ElementSet{}, 1));
    CHECK_FALSE(acts_left(*null, 1, ElementSet{}));
  }

  TEST_CASE("products and inverses") {
    auto z3 = test::dom("EX-Z3");
    const auto& s = z3->sg();
    const ElementSet g{test::el(s, "g")}, g2{test::el(s, "g2")};
    CHECK(coset_product(*z3, g, g) == g2);
    CHECK(coset_inverse(*z3, g) == g2);
    auto e = test::error_of([&] { coset_product(*z3, g, s.all()); });
    REQUIRE(e);
    CHECK(e->kind() == ErrorKind::NotComposable);

    auto chain = test::dom("EX-CHAIN3");
    const ElementSet ef = test::set(chain->sg(), {"e", "f"});
    CHECK(coset_product(*chain, ef, ef) == ef);

    for (const auto& name : semigroup_fixture_names()) {
      auto d = test::dom(name);
      for (ElementSet c : all_cosets(*d)) {
        const auto rec = make_coset_record(*d, c);
        if (rec.is_unit) CHECK(coset_inverse(*d, c) == c);
        CHECK(coset_inverse(*d, coset_inverse(*d, c)) == c);
        CHECK(coset_product(*d, rec.range, c) == c);
        CHECK(coset_product(*d, c, rec.source) == c);
      }
    }
  }

  TEST_CASE("inverse semigroup: the inverse coset is the up-closure of pointwise inverses") {
    auto d = test::dom("EX-I2");
    const auto inv = *d->sg().inverses();
    for (ElementSet c : all_cosets(*d)) {
      ElementSet ci;
      c.for_each([&](Element a) { ci.insert(inv[a]); });
      CHECK(coset_inverse(*d, c) == d->up_closure(ci));
    }
  }

  TEST_CASE("coset records against the oracle") {
    for (const auto& name : semigroup_fixture_names()) {
      CAPTURE(name);
      auto d = test::dom(name);
      const auto o = test::to_oracle(d->ctx());
      for (ElementSet c : all_cosets(*d)) {
        const auto rec = make_coset_record(*d, c);
        const auto m = c.bits(), cs = o.dual(m);
        CHECK(rec.members == c);
        CHECK(rec.source.bits() == o.up(o.prod(cs, m)));
        CHECK(rec.source.bits() == o.dual(o.prod(cs, m)));
        CHECK(rec.range.bits() == o.up(o.prod(m, cs)));
        CHECK(rec.is_unit == ((m & o.N) != 0));
        CHECK(rec.is_unit == ((m & o.Z) != 0));
        CHECK(rec.is_directed == o.is_directed(m));
        oracle::Mask zr = 0, zl = 0;
        for (int z = 0; z < o.n; ++z)
          for (int a = 0; a < o.n; ++a) {
            if (!oracle::has(o.Z, z) || !oracle::has(m, a)) continue;
            if (o.mul(a, z) == a) zr |= oracle::bit(z);
            if (o.mul(z, a) == a) zl |= oracle::bit(z);
          }
        CHECK(rec.z_right.bits() == zr);
        CHECK(rec.z_left.bits() == zl);
      }
    }
  }
}
