#include "ssg/coset_groupoid.hpp"

#include "ssg/error.hpp"

namespace ssg {

DomPtr make_domination(StructuredSemigroup s) { return std::make_shared<const DominationRelation>(std::move(s)); }

int CosetGroupoid::id_of(ElementSet c) const {
  auto it = index_.find(c.bits());
  return it == index_.end() ? -1 : it->second;
}

CosetGroupoid build_coset_groupoid(DomPtr dp, const CosetOptions& opts) {
  const DominationRelation& d = *dp;
  CosetGroupoid cg;
  cg.dom_ = dp;
  const auto sets = all_cosets(d, opts);
  const int m = static_cast<int>(sets.size());
  std::vector<std::string> labels;
  for (int i = 0; i < m; ++i) {
    cg.cosets_.push_back(make_coset_record(d, sets[static_cast<std::size_t>(i)]));
    cg.index_[sets[static_cast<std::size_t>(i)].bits()] = i;
    labels.push_back(d.sg().format(sets[static_cast<std::size_t>(i)]));
  }
  std::vector<int> inv(static_cast<std::size_t>(m));
  std::vector<std::vector<int>> prod(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m), -1));
  for (int i = 0; i < m; ++i) {
    const auto& b = cg.cosets_[static_cast<std::size_t>(i)];
    inv[i] = cg.id_of(d.dual(b.members));
    if (inv[i] < 0) throw Error(ErrorKind::NotCoset, "inverse of " + labels[i] + " is not a coset");
    for (int j = 0; j < m; ++j) {
      const auto& c = cg.cosets_[static_cast<std::size_t>(j)];
      if (b.source != c.range) continue;
      prod[i][j] = cg.id_of(d.up_closure(d.mul(b.members, c.members)));
      if (prod[i][j] < 0) throw Error(ErrorKind::NotCoset, "product " + labels[i] + labels[j] + " is not a coset");
    }
  }
  for (int a = 0; a < d.order(); ++a) {
    PointSet s(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
      if (sets[static_cast<std::size_t>(i)].contains(a)) s.set(static_cast<std::size_t>(i));
    cg.slices_.push_back(std::move(s));
  }
  cg.top_ = make_top_groupoid(FiniteGroupoid(std::move(inv), std::move(prod), std::move(labels)),
                              FiniteTopology::generate(m, cg.slices_));
  return cg;
}

EtaleRepresentation coset_representation(const CosetGroupoid& cg) {
  EtaleRepresentation rep{cg.groupoid(), {}, {}};
  for (int a = 0; a < cg.dom().order(); ++a) rep.assign.push_back(cg.slice_of(a));
  if (!cg.dom().ctx().flags().z_symmetric) rep.notes.emplace_back("SymmetryRequired");
  return rep;
}

Report is_etale_representation(const DominationRelation& d, const EtaleRepresentation& rep) {
  Report r;
  const auto& g = rep.target->g;
  const auto& t = rep.target->t;
  const int n = d.order();
  const auto& sg = d.sg();
  if (static_cast<int>(rep.assign.size()) != n) {
    r.add("one slice per element", false, "size mismatch");
    return r;
  }
  auto th = [&](int a) -> const PointSet& { return rep.assign[static_cast<std::size_t>(a)]; };

  bool ok = true;
  std::string w;
  for (int a = 0; a < n && ok; ++a)
    if (!is_slice(g, th(a)) || !t.is_open(th(a))) ok = false, w = sg.label(a);
  r.add("images are open slices", ok, w);
  const bool slices = ok;

  ok = true;
  for (int a = 0; a < n && ok; ++a)
    for (int b = 0; b < n && ok; ++b)
      if (th(d.mul(a, b)) != g.set_product(th(a), th(b))) ok = false, w = sg.label(a) + "," + sg.label(b);
  r.add("homomorphism", ok, w);
  const bool hom = ok;

  PointSet cover(static_cast<std::size_t>(g.size()));
  for (int a = 0; a < n; ++a) cover |= th(a);
  r.add("images cover", cover.all(), g.format(~cover));
  const bool covers = cover.all();

  ok = true;
  d.ctx().N().for_each([&](Element m) {
    if (ok && !th(m).is_subset_of(g.units())) ok = false, w = sg.label(m);
  });
  r.add("N maps into the units", ok, w);
  const bool n_units = ok;

  ok = true;
  for (int a = 0; a < n && ok; ++a)
    for_each_point(th(a), [&](int x) {
      if (!ok) return;
      bool found = false;
      d.below(a).for_each([&](Element b) { found = found || th(b).test(static_cast<std::size_t>(x)); });
      if (!found) ok = false, w = sg.label(a) + " at " + g.label(x);
    });
  r.add("locally round", ok, w);
  const bool round = ok;

  const ElementSet e = sg.idempotents();
  if (sg.inverses() && d.ctx().N() == e && d.ctx().Z() == e)
    r.add("inverse semigroup: homomorphism alone forces the other axioms",
          !(slices && hom && covers) || (n_units && round));
  return r;
}

}  // namespace ssg
