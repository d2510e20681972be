#include "ssg/coset_bundle.hpp"

#include "ssg/error.hpp"

namespace ssg {

namespace {

bool related(const DominationRelation& d, Element a, Element b, ElementSet dual) {
  bool hit = false;
  dual.for_each([&](Element s) {
    if (hit) return;
    const Element sa = d.mul(s, a), sb = d.mul(s, b);
    dual.for_each([&](Element t) { hit = hit || d.mul(sa, t) == d.mul(sb, t); });
  });
  return hit;
}

}  // namespace

bool equivalent(const DominationRelation& d, Element a, Element b, ElementSet atlas) {
  if (!is_atlas(d, atlas)) throw Error(ErrorKind::NotAtlas, d.sg().format(atlas) + " is not an atlas");
  const ElementSet up = d.up_closure(atlas);
  if (!up.contains(a) || !up.contains(b))
    throw Error(ErrorKind::NotInUpClosure, "arguments must lie in " + d.sg().format(up), {a, b});
  return related(d, a, b, d.dual(atlas));
}

std::vector<ElementSet> equivalence_classes(const DominationRelation& d, ElementSet atlas) {
  if (!is_atlas(d, atlas)) throw Error(ErrorKind::NotAtlas, d.sg().format(atlas) + " is not an atlas");
  const ElementSet dual = d.dual(atlas);
  ElementSet rest = d.up_closure(atlas);
  std::vector<ElementSet> out;
  while (!rest.empty()) {
    const Element a = rest.first();
    ElementSet cls;
    rest.for_each([&](Element b) {
      if (related(d, a, b, dual)) cls.insert(b);
    });
    out.push_back(cls);
    rest = rest - cls;
  }
  return out;
}

CosetBundle build_coset_bundle(std::shared_ptr<const CosetGroupoid> base) {
  const CosetGroupoid& cg = *base;
  const DominationRelation& d = cg.dom();
  CosetBundle cb;
  cb.base_ = base;
  cb.n_ = d.order();
  cb.point_of_.assign(static_cast<std::size_t>(cg.size() * cb.n_), -1);
  std::vector<std::string> labels;
  for (int c = 0; c < cg.size(); ++c)
    for (ElementSet cls : equivalence_classes(d, cg.coset(c).members)) {
      const int p = static_cast<int>(cb.points_.size());
      cb.points_.push_back({c, cls});
      cls.for_each([&](Element a) { cb.point_of_[static_cast<std::size_t>(c * cb.n_ + a)] = p; });
      labels.push_back("[" + d.sg().label(cls.first()) + "," + cg.g().label(c) + "]");
    }

  const int m = cb.size();
  std::vector<int> inv(static_cast<std::size_t>(m)), proj(static_cast<std::size_t>(m));
  std::vector<std::vector<int>> prod(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m), -1));
  for (int p = 0; p < m; ++p) {
    const auto& pt = cb.points_[static_cast<std::size_t>(p)];
    const ElementSet members = cg.coset(pt.coset).members;
    const Element c = pt.cls.first();
    proj[p] = pt.coset;
    // choose c' from the first d in C with d <_{c'} c
    const ElementSet below = d.below(c) & members;
    if (below.empty()) throw Error(ErrorKind::NotCoset, "coset is not round");
    const Element cp = d.witnesses(below.first(), c).first();
    inv[p] = cb.point_of(cg.g().inv(pt.coset), cp);
    if (inv[p] < 0) throw Error(ErrorKind::NotCoset, "inverse representative escapes the dual coset");
    for (int q = 0; q < m; ++q) {
      const auto& qt = cb.points_[static_cast<std::size_t>(q)];
      const int ab = cg.g().prod(pt.coset, qt.coset);
      if (ab < 0) continue;
      prod[p][q] = cb.point_of(ab, d.mul(c, qt.cls.first()));
      if (prod[p][q] < 0) throw Error(ErrorKind::NotCoset, "product representative escapes the product coset");
    }
  }

  // minimal neighbourhood of [a,A]: points [b,B] with A within B and class([a,A]) within class([b,B])
  std::vector<PointSet> nb;
  for (int p = 0; p < m; ++p) {
    PointSet u(static_cast<std::size_t>(m));
    const auto& pt = cb.points_[static_cast<std::size_t>(p)];
    const ElementSet a = cg.coset(pt.coset).members;
    for (int q = 0; q < m; ++q) {
      const auto& qt = cb.points_[static_cast<std::size_t>(q)];
      if (a.subset_of(cg.coset(qt.coset).members) && pt.cls.subset_of(qt.cls)) u.set(static_cast<std::size_t>(q));
    }
    nb.push_back(std::move(u));
  }
  auto total = make_top_groupoid(FiniteGroupoid(std::move(inv), std::move(prod), std::move(labels)),
                                 FiniteTopology::from_neighbourhoods(std::move(nb)));
  cb.bundle_ = std::make_shared<const GroupoidBundle>(GroupoidBundle{std::move(total), cg.groupoid(), std::move(proj)});
  return cb;
}

BundleRepresentation tilde_representation(const CosetBundle& cb) {
  const auto& cg = cb.base();
  BundleRepresentation rep{cb.bundle(), {}, {}};
  for (int a = 0; a < cg.dom().order(); ++a) {
    SliceSection s;
    for_each_point(cg.slice_of(a), [&](int c) { s[c] = cb.point_of(c, a); });
    rep.assign.push_back(std::move(s));
  }
  if (!cg.dom().ctx().flags().z_symmetric) rep.notes.emplace_back("SymmetryRequired");
  return rep;
}

FaithfulResult check_faithful(const CosetBundle& cb) {
  const auto& cg = cb.base();
  const int n = cg.dom().order();
  FaithfulResult res;
  for (int a = 0; a < n && res.faithful; ++a)
    for (int b = a + 1; b < n && res.faithful; ++b) {
      bool separated = false;
      for (int c = 0; c < cg.size() && !separated; ++c) {
        const int pa = cb.point_of(c, a), pb = cb.point_of(c, b);
        separated = (pa >= 0 || pb >= 0) && pa != pb;
      }
      if (!separated) {
        res.faithful = false;
        res.witness = {a, b};
      }
    }
  return res;
}

}  // namespace ssg
