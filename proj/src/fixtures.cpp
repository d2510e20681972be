#include "ssg/fixtures.hpp"

#include <algorithm>

#include "ssg/error.hpp"

namespace ssg {

FiniteSemigroup cyclic_group(int k) {
  std::vector<std::vector<int>> t(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(k)));
  std::vector<std::string> labels;
  for (int a = 0; a < k; ++a) {
    labels.push_back(a == 0 ? "e" : a == 1 ? "g" : "g" + std::to_string(a));
    for (int b = 0; b < k; ++b) t[a][b] = (a + b) % k;
  }
  return FiniteSemigroup::from_table(t, labels);
}

FiniteSemigroup symmetric_inverse_monoid(int k) {
  std::vector<std::vector<int>> maps;
  std::vector<int> cur(static_cast<std::size_t>(k), -1);
  std::vector<char> used(static_cast<std::size_t>(k));
  auto rec = [&](auto&& self, int i) -> void {
    if (i == k) {
      maps.push_back(cur);
      return;
    }
    cur[i] = -1;
    self(self, i + 1);
    for (int y = 0; y < k; ++y) {
      if (used[y]) continue;
      used[y] = 1;
      cur[i] = y;
      self(self, i + 1);
      used[y] = 0;
    }
    cur[i] = -1;
  };
  rec(rec, 0);
  auto rank = [](const std::vector<int>& m) { return std::count_if(m.begin(), m.end(), [](int v) { return v >= 0; }); };
  std::sort(maps.begin(), maps.end(), [&](const auto& a, const auto& b) {
    return std::pair(rank(a), a) < std::pair(rank(b), b);
  });
  const int n = static_cast<int>(maps.size());
  std::vector<std::string> labels;
  for (const auto& m : maps) {
    std::string s;
    for (int v : m) s += v < 0 ? '-' : static_cast<char>('0' + v);
    labels.push_back(s);
  }
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> c(static_cast<std::size_t>(k), -1);
      for (int x = 0; x < k; ++x) {
        int y = maps[a][x];
        c[x] = y < 0 ? -1 : maps[b][y];
      }
      t[a][b] = static_cast<int>(std::find(maps.begin(), maps.end(), c) - maps.begin());
    }
  return FiniteSemigroup::from_table(t, labels);
}

namespace {

StructuredSemigroup all_in_n_and_z(const FiniteSemigroup& s) { return validate_structured(s, s.all(), s.all()); }

StructuredSemigroup idempotent_structure(const FiniteSemigroup& s) {
  return validate_structured(s, s.idempotents(), s.idempotents());
}

FiniteSemigroup z2_group() {
  return FiniteSemigroup::from_table({{0, 1}, {1, 0}}, {"1", "-1"});
}

BundlePtr ex_triv() {
  return std::make_shared<const GroupoidBundle>(trivial_bundle(discrete_groupoid(pair_groupoid(2)), z2_group()));
}

BundlePtr ex_twist() {
  TwistData t = twist_data();
  return std::make_shared<const GroupoidBundle>(twisted_bundle(t.base, t.t, t.sigma));
}

}  // namespace

TwistData twist_data() {
  auto base = discrete_groupoid(group_groupoid(FiniteSemigroup::from_table({{0, 1}, {1, 0}}, {"0", "1"})));
  // sigma(1,1) = -1, all other values 1
  return {base, z2_group(), {0, 0, 0, 1}};
}

std::vector<std::string> semigroup_fixture_names(bool include_slow) {
  std::vector<std::string> out{"EX-NULL", "EX-CHAIN3", "EX-PS2", "EX-Z3", "EX-I2", "EX-TRIV-SECTIONS", "EX-TWIST-SECTIONS"};
  if (include_slow) out.emplace_back("EX-I3");
  return out;
}

std::vector<std::string> bundle_fixture_names() { return {"EX-TRIV", "EX-TWIST"}; }

BundlePtr bundle_fixture(const std::string& name) {
  if (name == "EX-TRIV") return ex_triv();
  if (name == "EX-TWIST") return ex_twist();
  throw Error(ErrorKind::UnknownFixture, "no bundle fixture named " + name);
}

StructuredSemigroup semigroup_fixture(const std::string& name) {
  if (name == "EX-NULL") return all_in_n_and_z(FiniteSemigroup::from_table({{0, 0}, {0, 0}}, {"0", "a"}));
  if (name == "EX-CHAIN3")
    return all_in_n_and_z(FiniteSemigroup::from_table({{0, 0, 0}, {0, 1, 1}, {0, 1, 2}}, {"0", "e", "f"}));
  if (name == "EX-PS2") {
    // subsets of {x,y} as bit masks under intersection
    std::vector<std::vector<int>> t(4, std::vector<int>(4));
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) t[a][b] = a & b;
    return all_in_n_and_z(FiniteSemigroup::from_table(t, {"0", "x", "y", "xy"}));
  }
  if (name == "EX-Z3") {
    FiniteSemigroup g = cyclic_group(3);
    return validate_structured(g, ElementSet{0}, ElementSet{0});
  }
  if (name == "EX-I2") return idempotent_structure(symmetric_inverse_monoid(2));
  if (name == "EX-I3") return idempotent_structure(symmetric_inverse_monoid(3));
  if (name == "EX-TRIV-SECTIONS") return slice_sections(ex_triv()).structured();
  if (name == "EX-TWIST-SECTIONS") return slice_sections(ex_twist()).structured();
  throw Error(ErrorKind::UnknownFixture, "no semigroup fixture named " + name);
}

Fixture gen_fixture(const std::string& name) {
  Fixture f;
  f.name = name;
  if (name == "EX-TRIV" || name == "EX-TWIST") {
    f.bundle = bundle_fixture(name);
  } else {
    f.semigroup = semigroup_fixture(name);
  }
  return f;
}

}  // namespace ssg
