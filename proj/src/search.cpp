#include "ssg/search.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ssg/error.hpp"
#include "ssg/theorems.hpp"

namespace ssg {

namespace {

using Table = std::vector<int>;  // row-major, -1 for unset

bool consistent(int k, const Table& t) {
  auto at = [&](int a, int b) { return t[static_cast<std::size_t>(a * k + b)]; };
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y) {
      const int xy = at(x, y);
      if (xy < 0) continue;
      for (int z = 0; z < k; ++z) {
        const int yz = at(y, z);
        if (yz < 0) continue;
        const int l = at(xy, z), r = at(x, yz);
        if (l >= 0 && r >= 0 && l != r) return false;
      }
    }
  return true;
}

Table relabel(int k, const Table& t, const std::vector<int>& p) {
  Table out(t.size());
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      out[static_cast<std::size_t>(p[a] * k + p[b])] = p[static_cast<std::size_t>(t[static_cast<std::size_t>(a * k + b)])];
  return out;
}

std::vector<std::vector<int>> permutations(int k) {
  std::vector<int> p(static_cast<std::size_t>(k));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

void fill(int k, Table& t, int cell, const std::vector<std::vector<int>>& perms, std::vector<Table>& out) {
  if (cell == k * k) {
    for (const auto& p : perms)
      if (relabel(k, t, p) < t) return;
    out.push_back(t);
    return;
  }
  for (int v = 0; v < k; ++v) {
    t[static_cast<std::size_t>(cell)] = v;
    if (consistent(k, t)) fill(k, t, cell + 1, perms, out);
  }
  t[static_cast<std::size_t>(cell)] = -1;
}

ElementSet map_set(ElementSet s, const std::vector<int>& p) {
  ElementSet out;
  s.for_each([&](Element x) { out.insert(p[static_cast<std::size_t>(x)]); });
  return out;
}

PropertyOutcome coset_rep_homomorphism(const StructuredSemigroup& s) {
  const auto d = make_domination(s);
  const auto cg = build_coset_groupoid(d);
  for (int a = 0; a < s.order(); ++a)
    for (int b = 0; b < s.order(); ++b)
      if (cg.slice_of(s.mul(a, b)) != cg.g().set_product(cg.slice_of(a), cg.slice_of(b)))
        return {true, false, "C_ab != C_a C_b at (" + s.sg().label(a) + "," + s.sg().label(b) + ")"};
  return {};
}

}  // namespace

std::vector<FiniteSemigroup> enumerate_semigroups(int order) {
  if (order < 1) return {};
  if (order > 5) throw Error(ErrorKind::OrderTooLarge, "semigroup enumeration supports order <= 5");
  Table t(static_cast<std::size_t>(order * order), -1);
  std::vector<Table> tables;
  fill(order, t, 0, permutations(order), tables);
  std::vector<FiniteSemigroup> out;
  for (const auto& tab : tables) {
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(order));
    for (int a = 0; a < order; ++a)
      rows[static_cast<std::size_t>(a)].assign(tab.begin() + a * order, tab.begin() + (a + 1) * order);
    out.push_back(FiniteSemigroup::from_table(rows));
  }
  return out;
}

std::vector<StructuredSemigroup> enumerate_structured(int max_order, std::size_t limit) {
  std::vector<StructuredSemigroup> out;
  for (int k = 1; k <= max_order; ++k) {
    const auto perms = permutations(k);
    for (const auto& s : enumerate_semigroups(k)) {
      Table t;
      for (const auto& row : s.table()) t.insert(t.end(), row.begin(), row.end());
      std::vector<std::vector<int>> autos;
      for (const auto& p : perms)
        if (relabel(k, t, p) == t) autos.push_back(p);
      std::vector<ElementSet> subs;
      for (std::uint64_t m = 1; m < (std::uint64_t{1} << k); ++m)
        if (s.is_subsemigroup(ElementSet(m))) subs.emplace_back(m);
      for (ElementSet n : subs)
        for (ElementSet z : subs) {
          if (!z.subset_of(n)) continue;
          bool least = true;
          for (const auto& p : autos) {
            const auto key = std::make_pair(map_set(n, p).bits(), map_set(z, p).bits());
            least = least && !(key < std::make_pair(n.bits(), z.bits()));
          }
          if (!least) continue;
          auto ss = make_structured_unchecked(s, n, z);
          if (!ss.flags().structured) continue;
          if (out.size() >= limit)
            throw Error(ErrorKind::TooManyRelations, "more than " + std::to_string(limit) + " structured semigroups");
          out.push_back(std::move(ss));
        }
    }
  }
  return out;
}

std::vector<std::string> property_names() {
  return {"theorems", "faithful", "coset-rep-homomorphism", "coset-rep-homomorphism-without-symmetry",
          "z-symmetric", "n-diagonal"};
}

std::optional<Property> find_property(const std::string& name) {
  if (name == "theorems")
    return Property([](const StructuredSemigroup& s) {
      const Report r = run_theorems(s);
      const Check* c = r.first_failure();
      return c ? PropertyOutcome{true, false, c->name + ": " + c->witness} : PropertyOutcome{};
    });
  if (name == "faithful")
    return Property([](const StructuredSemigroup& s) {
      const auto cb = build_coset_bundle(std::make_shared<const CosetGroupoid>(build_coset_groupoid(make_domination(s))));
      const auto f = check_faithful(cb);
      if (f.faithful) return PropertyOutcome{};
      return PropertyOutcome{true, false,
                             "(" + s.sg().label(f.witness->first) + "," + s.sg().label(f.witness->second) + ")"};
    });
  if (name == "coset-rep-homomorphism") return Property(coset_rep_homomorphism);
  if (name == "coset-rep-homomorphism-without-symmetry")
    return Property([](const StructuredSemigroup& s) {
      if (s.flags().z_symmetric) return PropertyOutcome{false, true, {}};
      return coset_rep_homomorphism(s);
    });
  if (name == "z-symmetric")
    return Property([](const StructuredSemigroup& s) { return PropertyOutcome{true, s.flags().z_symmetric, {}}; });
  if (name == "n-diagonal")
    return Property([](const StructuredSemigroup& s) { return PropertyOutcome{true, s.flags().n_diagonal, {}}; });
  return std::nullopt;
}

}  // namespace ssg
