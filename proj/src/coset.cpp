#include "ssg/coset.hpp"

#include <algorithm>

#include "ssg/error.hpp"

namespace ssg {

bool is_round(const DominationRelation& d, ElementSet a) { return a.subset_of(d.up_closure(a)); }

bool is_atlas(const DominationRelation& d, ElementSet a) {
  return d.mul(d.mul(a, d.dual(a)), a).subset_of(a) && is_round(d, a);
}

bool is_coset(const DominationRelation& d, ElementSet c) {
  return !c.empty() && d.up_closure(c) == c && d.mul(d.mul(c, d.dual(c)), c).subset_of(c);
}

bool is_directed(const DominationRelation& d, ElementSet a) {
  bool ok = true;
  a.for_each([&](Element x) {
    a.for_each([&](Element y) {
      if (ok && !(d.below(x) & d.below(y) & a).empty()) return;
      ok = false;
    });
  });
  return ok;
}

ElementSet coset_closure(const DominationRelation& d, ElementSet a) {
  for (;;) {
    ElementSet next = a | d.up_closure(a) | d.mul(d.mul(a, d.dual(a)), a);
    if (next == a) return a;
    a = next;
  }
}

ElementSet source(const DominationRelation& d, ElementSet a) { return d.up_closure(d.mul(d.dual(a), a)); }
ElementSet range(const DominationRelation& d, ElementSet a) { return d.up_closure(d.mul(a, d.dual(a))); }

ElementSet z_right(const DominationRelation& d, ElementSet a) {
  ElementSet out;
  d.ctx().Z().for_each([&](Element z) {
    a.for_each([&](Element x) {
      if (d.mul(x, z) == x) out.insert(z);
    });
  });
  return out;
}

ElementSet z_left(const DominationRelation& d, ElementSet a) {
  ElementSet out;
  d.ctx().Z().for_each([&](Element z) {
    a.for_each([&](Element x) {
      if (d.mul(z, x) == x) out.insert(z);
    });
  });
  return out;
}

bool acts_right(const DominationRelation& d, ElementSet a, Element b) {
  const ElementSet zz = d.ctx().Z();
  for (int bp = 0; bp < d.order(); ++bp) {
    if (!zz.contains(d.mul(b, bp)) || !zz.contains(d.mul(bp, b))) continue;
    const Element bbp = d.mul(b, bp);
    bool hit = false;
    a.for_each([&](Element x) { hit = hit || d.mul(x, bbp) == x; });
    if (hit) return true;
  }
  return false;
}

bool acts_left(const DominationRelation& d, Element b, ElementSet a) {
  const ElementSet zz = d.ctx().Z();
  for (int bp = 0; bp < d.order(); ++bp) {
    if (!zz.contains(d.mul(b, bp)) || !zz.contains(d.mul(bp, b))) continue;
    const Element bpb = d.mul(bp, b);
    bool hit = false;
    a.for_each([&](Element x) { hit = hit || d.mul(bpb, x) == x; });
    if (hit) return true;
  }
  return false;
}

void sort_canonical(std::vector<ElementSet>& sets) {
  std::sort(sets.begin(), sets.end(), [](ElementSet a, ElementSet b) { return canonical_less(a, b); });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

namespace {

void guard(const DominationRelation& d, int max_order, const char* what) {
  if (d.order() > max_order)
    throw Error(ErrorKind::OrderTooLarge, std::string(what) + " over all subsets needs order <= " +
                                              std::to_string(max_order) + ", got " + std::to_string(d.order()));
}

std::vector<ElementSet> exhaustive_cosets(const DominationRelation& d, int max_order) {
  guard(d, max_order, "exhaustive coset enumeration");
  std::vector<ElementSet> out;
  const std::uint64_t limit = std::uint64_t{1} << d.order();
  for (std::uint64_t m = 1; m < limit; ++m)
    if (is_coset(d, ElementSet(m))) out.push_back(ElementSet(m));
  return out;
}

// Seeds every (a, U) with U a unit coset and collects the cosets (aU)^<.
// Unit cosets come from the closed sets of coset_closure.
std::vector<ElementSet> generated_cosets(const DominationRelation& d) {
  std::vector<ElementSet> units;
  for (ElementSet c : closed_sets(d))
    if (!c.empty() && is_round(d, c) && c.intersects(d.ctx().N())) units.push_back(c);
  std::vector<ElementSet> out;
  for (ElementSet u : units)
    for (int a = 0; a < d.order(); ++a) {
      ElementSet c = d.up_closure(d.mul(ElementSet::single(a), u));
      if (is_coset(d, c)) out.push_back(c);
    }
  return out;
}

}  // namespace

std::vector<ElementSet> closed_sets(const DominationRelation& d) {
  // Lectic enumeration of the closure system (next-closure).
  const int n = d.order();
  std::vector<ElementSet> out;
  ElementSet a = coset_closure(d, ElementSet{});
  for (;;) {
    out.push_back(a);
    bool advanced = false;
    for (int i = n - 1; i >= 0 && !advanced; --i) {
      if (a.contains(i)) continue;
      const ElementSet prefix = a & ElementSet::full(i);
      ElementSet b = prefix;
      b.insert(i);
      b = coset_closure(d, b);
      if ((b & ElementSet::full(i)) == prefix) {
        a = b;
        advanced = true;
      }
    }
    if (!advanced) return out;
  }
}

std::vector<ElementSet> all_cosets(const DominationRelation& d, const CosetOptions& opts) {
  std::vector<ElementSet> out =
      opts.method == CosetMethod::Exhaustive ? exhaustive_cosets(d, opts.max_exhaustive_order) : generated_cosets(d);
  sort_canonical(out);
  return out;
}

std::vector<ElementSet> all_atlases(const DominationRelation& d, int max_order) {
  guard(d, max_order, "atlas enumeration");
  std::vector<ElementSet> out;
  const std::uint64_t limit = std::uint64_t{1} << d.order();
  for (std::uint64_t m = 0; m < limit; ++m)
    if (is_atlas(d, ElementSet(m))) out.push_back(ElementSet(m));
  return out;
}

CosetRecord make_coset_record(const DominationRelation& d, ElementSet c) {
  CosetRecord r;
  r.members = c;
  r.source = source(d, c);
  r.range = range(d, c);
  r.z_right = z_right(d, c);
  r.z_left = z_left(d, c);
  r.is_unit = c.intersects(d.ctx().N());
  r.is_directed = is_directed(d, c);
  return r;
}

ElementSet coset_product(const DominationRelation& d, ElementSet b, ElementSet c) {
  if (source(d, b) != range(d, c))
    throw Error(ErrorKind::NotComposable, "s(B) != r(C) for B=" + d.sg().format(b) + " C=" + d.sg().format(c));
  return d.up_closure(d.mul(b, c));
}

ElementSet coset_inverse(const DominationRelation& d, ElementSet c) { return d.dual(c); }

}  // namespace ssg
