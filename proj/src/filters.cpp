#include "ssg/filters.hpp"

#include <algorithm>

#include "ssg/error.hpp"

namespace ssg {

DirectedCosets directed_cosets(std::shared_ptr<const CosetGroupoid> cg) {
  DirectedCosets dc;
  dc.cg = cg;
  dc.index_of.assign(static_cast<std::size_t>(cg->size()), -1);
  PointSet keep(static_cast<std::size_t>(cg->size()));
  for (int c = 0; c < cg->size(); ++c)
    if (cg->coset(c).is_directed) {
      dc.index_of[static_cast<std::size_t>(c)] = dc.size();
      dc.ids.push_back(c);
      keep.set(static_cast<std::size_t>(c));
    }
  dc.groupoid = restrict_groupoid(*cg->groupoid(), keep);
  return dc;
}

bool is_ideal(const FiniteGroupoid& g, const PointSet& s) {
  for (int x = 0; x < g.size(); ++x)
    for (int y = 0; y < g.size(); ++y) {
      const int xy = g.prod(x, y);
      if (xy >= 0 && (s.test(static_cast<std::size_t>(x)) || s.test(static_cast<std::size_t>(y))) &&
          !s.test(static_cast<std::size_t>(xy)))
        return false;
    }
  return true;
}

std::vector<ElementSet> ultrafilters(const DominationRelation& d, int max_order) {
  const auto zero = d.ctx().flags().zero;
  if (!zero) throw Error(ErrorKind::NoZero, "ultrafilters need a zero in Z");
  if (d.order() > max_order) throw Error(ErrorKind::OrderTooLarge, "ultrafilter scan over all subsets");
  std::vector<ElementSet> proper;
  const std::uint64_t limit = std::uint64_t{1} << d.order();
  for (std::uint64_t m = 1; m < limit; ++m) {
    const ElementSet f(m);
    if (!f.contains(*zero) && d.up_closure(f) == f && is_directed(d, f)) proper.push_back(f);
  }
  std::vector<ElementSet> out;
  for (ElementSet f : proper) {
    bool maximal = true;
    for (ElementSet g : proper) maximal = maximal && (f == g || !f.subset_of(g));
    if (maximal) out.push_back(f);
  }
  sort_canonical(out);
  return out;
}

Report check_ultrafilters(const CosetGroupoid& cg, const std::vector<ElementSet>& ufs) {
  Report r;
  PointSet s(static_cast<std::size_t>(cg.size()));
  bool ok = true;
  std::string w;
  for (ElementSet u : ufs) {
    const int id = cg.id_of(u);
    if (id < 0) ok = false, w = cg.dom().sg().format(u);
    else s.set(static_cast<std::size_t>(id));
  }
  r.add("ultrafilters are cosets", ok, w);
  if (!ok) return r;
  r.add("ultrafilters form an ideal", is_ideal(cg.g(), s));
  // a finite unit space is Hausdorff iff it is discrete
  ok = true;
  const PointSet units = s & cg.g().units();
  for_each_point(units, [&](int u) {
    if ((cg.groupoid()->t.nbhd(u) & units).count() != 1) ok = false, w = cg.g().label(u);
  });
  r.add("unit ultrafilters are Hausdorff", ok, w);
  return r;
}

std::vector<ElementSet> maximal_directed_subsets(const DominationRelation& d, ElementSet c, int max_size) {
  if (c.size() > max_size) throw Error(ErrorKind::OrderTooLarge, "maximal directed subset scan");
  std::vector<ElementSet> directed;
  const std::uint64_t cb = c.bits();
  for (std::uint64_t sub = cb; sub; sub = (sub - 1) & cb)
    if (is_directed(d, ElementSet(sub))) directed.push_back(ElementSet(sub));
  std::stable_sort(directed.begin(), directed.end(), [](ElementSet a, ElementSet b) { return a.size() > b.size(); });
  std::vector<ElementSet> out;
  for (ElementSet a : directed) {
    bool covered = false;
    for (ElementSet m : out) covered = covered || a.subset_of(m);
    if (!covered) out.push_back(a);
  }
  sort_canonical(out);
  return out;
}

ElementSet triangle_through(const DominationRelation& d, ElementSet c, Element x) {
  const ElementSet u = d.up_closure(range(d, c) & d.ctx().N());
  return d.up_closure(d.mul(u, ElementSet::single(x)));
}

std::vector<int> triangle_up(const DirectedCosets& dc, int coset) {
  const auto& d = dc.cg->dom();
  const ElementSet c = dc.cg->coset(coset).members;
  std::vector<int> out;
  for (ElementSet m : maximal_directed_subsets(d, c)) {
    const int id = dc.cg->id_of(m);
    if (id < 0 || dc.index_of[static_cast<std::size_t>(id)] < 0)
      throw Error(ErrorKind::NotCoset, "maximal directed subset " + d.sg().format(m) + " is not a directed coset");
    out.push_back(dc.index_of[static_cast<std::size_t>(id)]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

GroupoidRelation triangle_relation(const DirectedCosets& dc) {
  std::vector<std::pair<int, int>> pairs;
  for (int c = 0; c < dc.cg->size(); ++c)
    for (int di : triangle_up(dc, c)) pairs.emplace_back(di, c);
  return GroupoidRelation(dc.groupoid, dc.cg->groupoid(), std::move(pairs));
}

DirectedBundle directed_bundle(const CosetBundle& cb, const DirectedCosets& dc) {
  DirectedBundle db;
  const auto& full = *cb.bundle();
  PointSet keep(static_cast<std::size_t>(cb.size()));
  for (int p = 0; p < cb.size(); ++p)
    if (dc.index_of[static_cast<std::size_t>(cb.points()[static_cast<std::size_t>(p)].coset)] >= 0)
      keep.set(static_cast<std::size_t>(p));
  auto total = restrict_groupoid(*full.total, keep, &db.from_coset);
  db.to_coset = members(keep);
  std::vector<int> proj;
  for (int p : db.to_coset)
    proj.push_back(dc.index_of[static_cast<std::size_t>(cb.points()[static_cast<std::size_t>(p)].coset)]);
  db.bundle = std::make_shared<const GroupoidBundle>(GroupoidBundle{std::move(total), dc.groupoid, std::move(proj)});
  return db;
}

BundleRepresentation directed_tilde(const CosetBundle& cb, const DirectedCosets& dc, const DirectedBundle& db) {
  BundleRepresentation rep{db.bundle, {}, {}};
  const auto& d = cb.base().dom();
  for (int a = 0; a < d.order(); ++a) {
    SliceSection s;
    for (int i = 0; i < dc.size(); ++i) {
      const int p = cb.point_of(dc.ids[static_cast<std::size_t>(i)], a);
      if (p >= 0) s[i] = db.from_coset[static_cast<std::size_t>(p)];
    }
    rep.assign.push_back(std::move(s));
  }
  if (!d.ctx().flags().z_symmetric) rep.notes.emplace_back("SymmetryRequired");
  return rep;
}

PierceMorphism iota_morphism(const CosetBundle& cb, const DirectedCosets& dc, const DirectedBundle& db) {
  PierceMorphism m;
  m.source = db.bundle;
  m.target = cb.bundle();
  m.phi = triangle_relation(dc);
  m.pullback = pullback_bundle(*db.bundle, m.phi);
  for (auto [p, c] : m.pullback.points) {
    const auto& pt = cb.points()[static_cast<std::size_t>(db.to_coset[static_cast<std::size_t>(p)])];
    m.tau.push_back(cb.point_of(c, pt.cls.first()));
  }
  return m;
}

}  // namespace ssg
