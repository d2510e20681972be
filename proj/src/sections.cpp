#include "ssg/sections.hpp"

#include <algorithm>

#include "ssg/error.hpp"

namespace ssg {

PointSet section_domain(const SliceSection& a, int base_size) {
  PointSet s(static_cast<std::size_t>(base_size));
  for (auto [g, f] : a) s.set(static_cast<std::size_t>(g));
  return s;
}

PointSet section_range(const SliceSection& a, int total_size) {
  PointSet s(static_cast<std::size_t>(total_size));
  for (auto [g, f] : a) s.set(static_cast<std::size_t>(f));
  return s;
}

bool is_slice_section(const GroupoidBundle& b, const SliceSection& a) {
  const PointSet dom = section_domain(a, b.base->size());
  if (!is_slice(b.base->g, dom) || !b.base->t.is_open(dom)) return false;
  for (auto [g, f] : a) {
    if (f < 0 || f >= b.total->size() || b.proj[static_cast<std::size_t>(f)] != g) return false;
    const PointSet& target = b.total->t.nbhd(f);
    bool ok = true;
    for_each_point(b.base->t.nbhd(g) & dom, [&](int h) { ok = ok && target.test(static_cast<std::size_t>(a.at(h))); });
    if (!ok) return false;
  }
  return true;
}

SliceSection section_product(const GroupoidBundle& b, const SliceSection& a, const SliceSection& c) {
  SliceSection out;
  for (auto [g, f] : a)
    for (auto [h, k] : c) {
      int gh = b.base->g.prod(g, h);
      if (gh < 0) continue;
      int fk = b.total->g.prod(f, k);
      if (fk < 0) throw Error(ErrorKind::InvalidGroupoid, "bundle is not an isofibration");
      out[gh] = fk;
    }
  return out;
}

SliceSection section_inverse(const GroupoidBundle& b, const SliceSection& a) {
  SliceSection out;
  for (auto [g, f] : a) out[b.base->g.inv(g)] = b.total->g.inv(f);
  return out;
}

std::string format_section(const GroupoidBundle& b, const SliceSection& a) {
  std::string out = "{";
  bool first = true;
  for (auto [g, f] : a) {
    if (!first) out += ",";
    out += b.base->g.label(g) + "->" + b.total->g.label(f);
    first = false;
  }
  return out + "}";
}

int SectionSemigroup::index_of(const SliceSection& a) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), a);
  if (it == elements.end() || *it != a) return -1;
  return static_cast<int>(it - elements.begin());
}

ElementSet SectionSemigroup::at(int g) const {
  ElementSet out;
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i].count(g)) out.insert(static_cast<Element>(i));
  return out;
}

ElementSet SectionSemigroup::through(int f) const {
  ElementSet out;
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (auto [g, v] : elements[i])
      if (v == f) out.insert(static_cast<Element>(i));
  return out;
}

StructuredSemigroup SectionSemigroup::structured() const { return validate_structured(sg, n_pi, e); }

SectionSemigroup slice_sections(BundlePtr bp, std::size_t max_sections) {
  const GroupoidBundle& b = *bp;
  const int nb = b.base->size();
  std::vector<std::vector<int>> fibre(static_cast<std::size_t>(nb));
  for (int f = 0; f < b.total->size(); ++f) fibre[static_cast<std::size_t>(b.proj[static_cast<std::size_t>(f)])].push_back(f);

  SectionSemigroup ss;
  ss.bundle = bp;
  for (const PointSet& dom : all_slices(b.base->g)) {
    if (!b.base->t.is_open(dom)) continue;
    const std::vector<int> pts = members(dom);
    std::vector<std::size_t> choice(pts.size(), 0);
    bool empty_fibre = false;
    for (int g : pts) empty_fibre = empty_fibre || fibre[static_cast<std::size_t>(g)].empty();
    if (empty_fibre) continue;
    for (;;) {
      SliceSection a;
      for (std::size_t i = 0; i < pts.size(); ++i) a[pts[i]] = fibre[static_cast<std::size_t>(pts[i])][choice[i]];
      if (is_slice_section(b, a)) {
        if (ss.elements.size() >= max_sections)
          throw Error(ErrorKind::TooManySections, "more than " + std::to_string(max_sections) + " slice-sections");
        ss.elements.push_back(std::move(a));
      }
      std::size_t i = 0;
      for (; i < pts.size(); ++i) {
        if (++choice[i] < fibre[static_cast<std::size_t>(pts[i])].size()) break;
        choice[i] = 0;
      }
      if (i == pts.size()) break;
    }
  }
  if (ss.elements.size() > static_cast<std::size_t>(kMaxOrder))
    throw Error(ErrorKind::TooManySections, "section semigroup exceeds the maximum order");
  std::sort(ss.elements.begin(), ss.elements.end());

  const int n = static_cast<int>(ss.elements.size());
  std::vector<std::vector<int>> table(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) {
    labels.push_back(format_section(b, ss.elements[static_cast<std::size_t>(i)]));
    for (int j = 0; j < n; ++j) {
      int k = ss.index_of(section_product(b, ss.elements[static_cast<std::size_t>(i)], ss.elements[static_cast<std::size_t>(j)]));
      if (k < 0) throw Error(ErrorKind::InvalidGroupoid, "product of slice-sections is not a slice-section");
      table[i][j] = k;
    }
  }
  ss.sg = FiniteSemigroup::from_table(table, std::move(labels));
  for (int i = 0; i < n; ++i) {
    const auto& a = ss.elements[static_cast<std::size_t>(i)];
    bool in_units = true, to_units = true;
    for (auto [g, f] : a) {
      in_units = in_units && b.base->g.is_unit(g);
      to_units = to_units && b.total->g.is_unit(f);
    }
    if (in_units) ss.n_pi.insert(i);
    if (to_units) ss.e.insert(i);
  }
  return ss;
}

bool is_local_inverse(const SectionSemigroup& ss, ElementSet subset) {
  const auto& b = *ss.bundle;
  const auto& g = b.base->g;
  for (int x = 0; x < g.size(); ++x) {
    const ElementSet sx = ss.at(x) & subset;
    const ElementSet sxi = ss.at(g.inv(x)) & subset;
    bool ok = true;
    sx.for_each([&](Element a) {
      if (!ok) return;
      const auto& av = ss.elements[static_cast<std::size_t>(a)];
      bool found = false;
      sxi.for_each([&](Element ap) {
        const auto& apv = ss.elements[static_cast<std::size_t>(ap)];
        sx.for_each([&](Element bb) {
          if (found) return;
          bool good = true;
          for (auto [h, v] : ss.elements[static_cast<std::size_t>(bb)]) {
            auto ia = av.find(h);
            auto iap = apv.find(g.inv(h));
            good = good && ia != av.end() && iap != apv.end() && iap->second == b.total->g.inv(ia->second);
          }
          found = good;
        });
      });
      ok = found;
    });
    if (!ok) return false;
  }
  return true;
}

Report domination_matches_domains(const SectionSemigroup& ss, ElementSet subset, ElementSet n, ElementSet z) {
  Report r;
  const auto& b = *ss.bundle;
  const auto& s = ss.sg;
  auto val = [&](Element a) -> const SliceSection& { return ss.elements[static_cast<std::size_t>(a)]; };
  bool ok = true;
  std::string w;
  subset.for_each([&](Element a) {
    subset.for_each([&](Element sv) {
      subset.for_each([&](Element bv) {
        if (!ok) return;
        const bool lhs = s.mul(a, sv, bv) == a && ss.n_pi.contains(s.mul(a, sv));
        bool rhs = true;
        for (auto [g, f] : val(a)) {
          auto is = val(sv).find(b.base->g.inv(g));
          auto ib = val(bv).find(g);
          rhs = rhs && is != val(sv).end() && ib != val(bv).end() && is->second == b.total->g.inv(ib->second);
        }
        if (lhs != rhs) ok = false, w = s.label(a) + "," + s.label(sv) + "," + s.label(bv);
      });
    });
  });
  r.add("asb = a with as in N(pi) iff s inverts b on dom(a)", ok, w);

  const auto sub = make_structured_unchecked(s, n, z);
  if (sub.flags().structured && n.subset_of(ss.n_pi)) {
    DominationRelation d(sub);
    ok = true;
    subset.for_each([&](Element a) {
      subset.for_each([&](Element bv) {
        if (ok && d.less(a, bv) &&
            !section_domain(val(a), b.base->size()).is_subset_of(section_domain(val(bv), b.base->size())))
          ok = false, w = s.label(a) + "," + s.label(bv);
      });
    });
    r.add("a < b implies dom(a) within dom(b)", ok, w);
    if (subset == s.all() && ss.n_pi.subset_of(n) && ss.e.subset_of(z)) {
      ok = true;
      for (int a = 0; a < s.order(); ++a)
        for (int bv = 0; bv < s.order(); ++bv)
          if (ok && !d.less(a, bv) &&
              section_domain(val(a), b.base->size()).is_subset_of(section_domain(val(bv), b.base->size())))
            ok = false, w = s.label(a) + "," + s.label(bv);
      r.add("dom(a) within dom(b) implies a < b", ok, w);
    }
  }
  return r;
}

bool diagonal_is_diagonal(const SectionSemigroup& ss) { return is_diagonal(ss.sg, ss.n_pi); }

Report is_bundle_representation(const DominationRelation& d, const BundleRepresentation& rep) {
  Report r;
  const auto& b = *rep.bundle;
  const auto& sg = d.sg();
  const int n = d.order();
  if (static_cast<int>(rep.assign.size()) != n) {
    r.add("one section per element", false, "size mismatch");
    return r;
  }
  bool ok = true;
  std::string w;
  for (int a = 0; a < n && ok; ++a)
    if (!is_slice_section(b, rep.assign[static_cast<std::size_t>(a)])) ok = false, w = sg.label(a);
  r.add("images are slice-sections", ok, w);
  ok = true;
  for (int a = 0; a < n && ok; ++a)
    for (int c = 0; c < n && ok; ++c)
      if (rep.assign[static_cast<std::size_t>(d.mul(a, c))] !=
          section_product(b, rep.assign[static_cast<std::size_t>(a)], rep.assign[static_cast<std::size_t>(c)]))
        ok = false, w = sg.label(a) + "," + sg.label(c);
  r.add("homomorphism", ok, w);
  r.merge(is_etale_representation(d, domain_representation(rep)), "domains: ");
  return r;
}

EtaleRepresentation domain_representation(const BundleRepresentation& rep) {
  EtaleRepresentation out{rep.bundle->base, {}, rep.notes};
  for (const auto& a : rep.assign) out.assign.push_back(section_domain(a, rep.bundle->base->size()));
  return out;
}

BundleRepresentation identity_embedding(const SectionSemigroup& ss) { return {ss.bundle, ss.elements, {}}; }

}  // namespace ssg
