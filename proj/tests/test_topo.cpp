#include "doctest.h"
#include "support.hpp"
#include "ssg/topgroupoid.hpp"

using namespace ssg;

namespace {

// two units and nothing else
FiniteGroupoid two_units() { return FiniteGroupoid({0, 1}, {{0, -1}, {-1, 1}}); }

}  // namespace

TEST_SUITE("topo") {
  TEST_CASE("pair groupoid and groups pass the groupoid axioms") {
    const auto p = pair_groupoid(2);
    CHECK(p.size() == 4);
    CHECK(test::failure(check_groupoid(p)) == "");
    CHECK(members(p.units()) == std::vector<int>{0, 3});
    for (int g = 0; g < 4; ++g) {
      CHECK(p.src(g) == p.prod(p.inv(g), g));
      CHECK(p.rng(g) == p.prod(g, p.inv(g)));
    }
    CHECK(test::failure(check_groupoid(group_groupoid(cyclic_group(3)))) == "");
  }

  TEST_CASE("corrupted inverse is caught with a witness") {
    const auto p = pair_groupoid(2);
    auto inv = p.inverse_table();
    std::swap(inv[1], inv[2]);  // (0,1) and (1,0) now claim to be self-inverse
    const FiniteGroupoid bad(inv, p.product_table(), p.labels());
    const Report r = check_groupoid(bad);
    CHECK_FALSE(r.ok());
    REQUIRE(r.first_failure());
    CHECK_FALSE(r.first_failure()->witness.empty());
  }

  TEST_CASE("generated topologies") {
    auto t1 = generate_topology(1, {make_points(1)});
    CHECK(t1.opens().size() == 2);
    std::vector<PointSet> singletons;
    for (int i = 0; i < 3; ++i) singletons.push_back(make_points(3, {i}));
    CHECK(generate_topology(3, singletons).opens().size() == 8);
    auto t3 = generate_topology(3, {make_points(3, {0, 1}), make_points(3, {1, 2})});
    CHECK(t3.is_open(make_points(3, {1})));
    CHECK_FALSE(t3.is_open(make_points(3, {0})));
    CHECK(t3.is_open(make_points(3, {0, 1, 2})));
    CHECK(t3.is_open(make_points(3)));
  }

  TEST_CASE("slices") {
    const auto p = pair_groupoid(2);
    for (int g = 0; g < 4; ++g) CHECK(is_slice(p, make_points(4, {g})));
    CHECK_FALSE(is_slice(p, p.all()));
    CHECK(is_slice(p, make_points(4)));
    CHECK(is_slice(p, make_points(4, {1, 2})));
    CHECK_FALSE(is_slice(p, make_points(4, {0, 1})));
    // pair groupoid on two units: 1 + 4 + 2 slices
    CHECK(all_slices(p).size() == 7);
  }

  TEST_CASE("etale checks") {
    CHECK(test::failure(check_etale(*discrete_groupoid(pair_groupoid(2)))) == "");
    const auto cg = build_coset_groupoid(test::dom("EX-Z3"));
    CHECK(test::failure(check_etale(*cg.groupoid())) == "");
    auto indiscrete = make_top_groupoid(pair_groupoid(2), FiniteTopology::indiscrete(4));
    CHECK_FALSE(check_etale(*indiscrete).ok());
  }

  TEST_CASE("bundles") {
    const auto triv = bundle_fixture("EX-TRIV");
    CHECK(test::failure(check_etale_bundle(*triv)) == "");
    const auto id = identity_bundle(discrete_groupoid(pair_groupoid(2)));
    CHECK(test::failure(check_etale_bundle(id)) == "");

    const GroupoidBundle collapse{discrete_groupoid(two_units()),
                                  discrete_groupoid(FiniteGroupoid({0}, {{0}})), {0, 0}};
    const Report r = check_bundle(collapse);
    CHECK_FALSE(r.passed("injective on units"));
  }

  TEST_CASE("trivial cocycle gives the product bundle") {
    const auto base = discrete_groupoid(pair_groupoid(2));
    const auto t = cyclic_group(2);
    const auto tw = twisted_bundle(base, t, std::vector<int>(16, 0));
    const auto pr = trivial_bundle(base, t);
    CHECK(tw.total->g.product_table() == pr.total->g.product_table());
    CHECK(tw.total->g.inverse_table() == pr.total->g.inverse_table());
    CHECK(tw.proj == pr.proj);
  }

  TEST_CASE("twisted Z2 by Z2 is cyclic of order four") {
    const auto tw = bundle_fixture("EX-TWIST");
    const auto& g = tw->total->g;
    CHECK(g.size() == 4);
    CHECK(test::failure(check_groupoid(g)) == "");
    // points are (x, t) at index 2x + t with t = 0 the identity and t = 1 the sign
    const int one_one = 2, zero_minus = 1;
    CHECK(g.prod(one_one, one_one) == zero_minus);
    CHECK(g.label(zero_minus) == "(0,-1)");
    CHECK(g.prod(zero_minus, zero_minus) == 0);
    CHECK(test::failure(check_etale_bundle(*tw)) == "");
  }

  TEST_CASE("broken cocycles are rejected") {
    const auto t = cyclic_group(2);
    // not normalised on the unit
    auto e = test::error_of([&] { twisted_bundle(twist_data().base, t, {0, 1, 0, 0}); });
    REQUIRE(e);
    CHECK(e->kind() == ErrorKind::InvalidCocycle);
    // over Z3 a single sign at (g,g) breaks the identity at (g,g,g2)
    std::vector<int> sigma(9, 0);
    sigma[1 * 3 + 1] = 1;
    const auto base = discrete_groupoid(group_groupoid(cyclic_group(3)));
    CHECK_FALSE(validate_cocycle(base->g, t, sigma).passed("cocycle identity"));
    e = test::error_of([&] { twisted_bundle(base, t, sigma); });
    REQUIRE(e);
    CHECK(e->kind() == ErrorKind::InvalidCocycle);
  }

  TEST_CASE("restriction and DOT export") {
    const auto p = discrete_groupoid(pair_groupoid(2));
    std::vector<int> index;
    const auto r = restrict_groupoid(*p, make_points(4, {0, 3}), &index);
    CHECK(r->size() == 2);
    CHECK(index[3] == 1);
    CHECK(test::error_of([&] { restrict_groupoid(*p, make_points(4, {1}), nullptr); })->kind() ==
          ErrorKind::InvalidGroupoid);
    const std::string dot = to_dot(p->g);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot == to_dot(p->g));
  }
}
