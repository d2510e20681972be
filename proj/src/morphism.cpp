#include "ssg/morphism.hpp"

#include <algorithm>

#include "ssg/error.hpp"

namespace ssg {

GroupoidRelation::GroupoidRelation(TopGroupoidPtr left, TopGroupoidPtr right, std::vector<std::pair<int, int>> pairs)
    : left_(std::move(left)), right_(std::move(right)), pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
  over_.assign(static_cast<std::size_t>(right_->size()), {});
  under_.assign(static_cast<std::size_t>(left_->size()), {});
  for (auto [g, h] : pairs_) {
    if (g < 0 || g >= left_->size() || h < 0 || h >= right_->size())
      throw Error(ErrorKind::InvalidInput, "relation pair out of range");
    over_[static_cast<std::size_t>(h)].push_back(g);
    under_[static_cast<std::size_t>(g)].push_back(h);
  }
}

GroupoidRelation GroupoidRelation::from_function(TopGroupoidPtr left, TopGroupoidPtr right, const std::vector<int>& f) {
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t h = 0; h < f.size(); ++h)
    if (f[h] >= 0) pairs.emplace_back(f[h], static_cast<int>(h));
  return GroupoidRelation(std::move(left), std::move(right), std::move(pairs));
}

bool GroupoidRelation::related(int g, int h) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), std::pair{g, h});
}

PointSet GroupoidRelation::preimage(const PointSet& gs) const {
  PointSet out(static_cast<std::size_t>(right_->size()));
  for (auto [g, h] : pairs_)
    if (gs.test(static_cast<std::size_t>(g))) out.set(static_cast<std::size_t>(h));
  return out;
}

PointSet GroupoidRelation::image(const PointSet& hs) const {
  PointSet out(static_cast<std::size_t>(left_->size()));
  for (auto [g, h] : pairs_)
    if (hs.test(static_cast<std::size_t>(h))) out.set(static_cast<std::size_t>(g));
  return out;
}

PointSet GroupoidRelation::domain() const { return preimage(left_->g.all()); }

bool GroupoidRelation::is_function() const {
  for (const auto& gs : over_)
    if (gs.size() > 1) return false;
  return true;
}

GroupoidRelation compose(const GroupoidRelation& phi, const GroupoidRelation& psi) {
  if (phi.right_ptr() != psi.left_ptr() && phi.right().size() != psi.left().size())
    throw Error(ErrorKind::InvalidInput, "relations do not compose");
  std::vector<std::pair<int, int>> pairs;
  for (auto [h, i] : psi.pairs())
    for (int g : phi.over(h)) pairs.emplace_back(g, i);
  return GroupoidRelation(phi.left_ptr(), psi.right_ptr(), std::move(pairs));
}

GroupoidRelation bundle_inverse(const GroupoidBundle& b) {
  std::vector<std::pair<int, int>> pairs;
  for (int f = 0; f < b.total->size(); ++f) pairs.emplace_back(f, b.proj[static_cast<std::size_t>(f)]);
  return GroupoidRelation(b.total, b.base, std::move(pairs));
}

Report check_functorial(const GroupoidRelation& phi) {
  Report r;
  const auto& g = phi.left().g;
  const auto& h = phi.right().g;
  bool ok = true;
  std::string w;
  for (auto [x, y] : phi.pairs())
    if (ok && !phi.related(g.inv(x), h.inv(y))) ok = false, w = g.label(x) + "~" + h.label(y);
  r.add("preserves inverses", ok, w);
  ok = true;
  for (auto [x, y] : phi.pairs()) {
    for (auto [x2, y2] : phi.pairs()) {
      if (!ok) break;
      const int yy = h.prod(y, y2);
      if (yy < 0) continue;
      const int xx = g.prod(x, x2);
      if (xx < 0 || !phi.related(xx, yy))
        ok = false, w = g.label(x) + "~" + h.label(y) + ", " + g.label(x2) + "~" + h.label(y2);
    }
  }
  r.add("preserves products", ok, w);
  return r;
}

namespace {

// |phi^-1{g} cap r^-1{u}| for every g and unit u with r(g) phi u
template <class Pred>
bool star_count(const GroupoidRelation& phi, Pred pred) {
  const auto& g = phi.left().g;
  const auto& h = phi.right().g;
  for (int x = 0; x < g.size(); ++x)
    for (int u : phi.under(g.rng(x))) {
      if (!h.is_unit(u)) continue;
      int count = 0;
      for (int i : phi.under(x))
        if (h.rng(i) == u) ++count;
      if (!pred(count)) return false;
    }
  return true;
}

}  // namespace

StarCheck star_injectivity(const GroupoidRelation& phi) {
  StarCheck c;
  c.three_way = true;
  const auto& g = phi.left().g;
  const auto& h = phi.right().g;
  c.definitional = star_count(phi, [](int k) { return k <= 1; });
  c.alternative = phi.preimage(g.units()).is_subset_of(h.units());
  c.slices = true;
  for (int x = 0; x < g.size() && c.slices; ++x) c.slices = is_slice(h, phi.preimage(make_points(g.size(), {x})));
  if (c.slices && g.size() <= 12)
    for (const auto& b : all_slices(g))
      if (!is_slice(h, phi.preimage(b))) {
        c.slices = false;
        break;
      }
  return c;
}

StarCheck star_surjectivity(const GroupoidRelation& phi) {
  StarCheck c;
  const auto& g = phi.left().g;
  const auto& h = phi.right().g;
  c.definitional = star_count(phi, [](int k) { return k >= 1; });
  c.alternative = true;
  for (int x = 0; x < g.size() && c.alternative; ++x)
    for (int y = 0; y < g.size() && c.alternative; ++y) {
      const int xy = g.prod(x, y);
      PointSet lhs = xy < 0 ? PointSet(static_cast<std::size_t>(h.size())) : phi.preimage(make_points(g.size(), {xy}));
      PointSet rhs = h.set_product(phi.preimage(make_points(g.size(), {x})), phi.preimage(make_points(g.size(), {y})));
      c.alternative = lhs == rhs;
    }
  return c;
}

// Preimages commute with unions, so basic opens of G suffice.
bool is_continuous(const GroupoidRelation& phi) {
  for (int x = 0; x < phi.left().size(); ++x)
    if (!phi.right().t.is_open(phi.preimage(phi.left().t.nbhd(x)))) return false;
  return true;
}

ZakrzewskiResult is_zakrzewski(const GroupoidRelation& phi) {
  ZakrzewskiResult z;
  const auto& g = phi.left().g;
  z.report.merge(check_functorial(phi), "functorial: ");
  const bool functorial = z.report.ok();
  const StarCheck inj = star_injectivity(phi);
  const StarCheck sur = star_surjectivity(phi);
  z.report.add("star-injective", inj.definitional);
  z.report.add("star-surjective", sur.definitional);
  z.report.add("continuous", is_continuous(phi));
  if (functorial) {
    z.report.add("star-injectivity characterisations agree", inj.agree());
    z.report.add("star-surjectivity characterisations agree", sur.agree());
    bool ok = true;
    std::string w;
    for (int y = 0; y < phi.right().size() && ok; ++y)
      for (int a : phi.over(y))
        for (int b : phi.over(y))
          if (ok && g.src(a) != g.src(b)) ok = false, w = g.label(a) + "," + g.label(b);
    z.report.add("restrictions to slices are functions", ok, w);
  }
  z.zakrzewski = z.report.ok();
  z.function = phi.is_function();
  z.etale_morphism = z.zakrzewski && z.function;
  return z;
}

int Pullback::index_of(int f, int h) const {
  auto it = std::lower_bound(points.begin(), points.end(), std::pair{f, h});
  if (it == points.end() || *it != std::pair{f, h}) return -1;
  return static_cast<int>(it - points.begin());
}

Pullback pullback_bundle(const GroupoidBundle& pi, const GroupoidRelation& phi) {
  const auto& f = pi.total->g;
  const auto& h = phi.right().g;
  Pullback pb;
  for (int x = 0; x < f.size(); ++x)
    for (int y : phi.under(pi.proj[static_cast<std::size_t>(x)])) pb.points.emplace_back(x, y);
  std::sort(pb.points.begin(), pb.points.end());
  const int m = static_cast<int>(pb.points.size());
  std::vector<int> inv(static_cast<std::size_t>(m)), proj(static_cast<std::size_t>(m));
  std::vector<std::vector<int>> prod(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m), -1));
  std::vector<std::string> labels;
  std::vector<PointSet> nb;
  for (int p = 0; p < m; ++p) {
    auto [x, y] = pb.points[static_cast<std::size_t>(p)];
    proj[p] = y;
    labels.push_back("(" + f.label(x) + "," + h.label(y) + ")");
    inv[p] = pb.index_of(f.inv(x), h.inv(y));
    if (inv[p] < 0) throw Error(ErrorKind::InvalidGroupoid, "pullback not closed under inverses");
    PointSet u(static_cast<std::size_t>(m));
    for (int q = 0; q < m; ++q) {
      auto [x2, y2] = pb.points[static_cast<std::size_t>(q)];
      if (pi.total->t.nbhd(x).test(static_cast<std::size_t>(x2)) && phi.right().t.nbhd(y).test(static_cast<std::size_t>(y2)))
        u.set(static_cast<std::size_t>(q));
      const int yy = h.prod(y, y2);
      if (yy < 0) continue;
      const int xx = f.prod(x, x2);
      prod[p][q] = xx < 0 ? -1 : pb.index_of(xx, yy);
      if (prod[p][q] < 0) throw Error(ErrorKind::InvalidGroupoid, "pullback not closed under products");
    }
    nb.push_back(std::move(u));
  }
  auto total = make_top_groupoid(FiniteGroupoid(std::move(inv), std::move(prod), std::move(labels)),
                                 FiniteTopology::from_neighbourhoods(std::move(nb)));
  pb.bundle = std::make_shared<const GroupoidBundle>(GroupoidBundle{std::move(total), phi.right_ptr(), std::move(proj)});
  return pb;
}

Report is_pierce(const PierceMorphism& m) {
  Report r;
  r.merge(is_zakrzewski(m.phi).report, "phi: ");
  const auto& pt = *m.pullback.bundle->total;
  const auto& f2 = m.target->total->g;
  if (static_cast<int>(m.tau.size()) != pt.size()) {
    r.add("tau defined on the pullback", false, "size mismatch");
    return r;
  }
  bool ok = true;
  std::string w;
  for (int p = 0; p < pt.size() && ok; ++p) {
    const int tp = m.tau[static_cast<std::size_t>(p)];
    if (tp < 0 || tp >= f2.size()) {
      ok = false, w = pt.g.label(p);
      break;
    }
    if (m.target->proj[static_cast<std::size_t>(tp)] != m.pullback.bundle->proj[static_cast<std::size_t>(p)])
      ok = false, w = pt.g.label(p);
  }
  r.add("target projection after tau is the pullback projection", ok, w);
  if (!ok) return r;
  ok = true;
  for (int p = 0; p < pt.size() && ok; ++p) {
    if (m.tau[static_cast<std::size_t>(pt.g.inv(p))] != f2.inv(m.tau[static_cast<std::size_t>(p)])) ok = false, w = pt.g.label(p);
    for (int q = 0; q < pt.size() && ok; ++q) {
      const int pq = pt.g.prod(p, q);
      if (pq >= 0 && m.tau[static_cast<std::size_t>(pq)] !=
                         f2.prod(m.tau[static_cast<std::size_t>(p)], m.tau[static_cast<std::size_t>(q)]))
        ok = false, w = pt.g.label(p) + "," + pt.g.label(q);
    }
  }
  r.add("tau is a functor", ok, w);
  r.add("tau continuous", ssg::is_continuous(pt.t, m.target->total->t, m.tau));
  return r;
}

SliceSection induced_hom(const PierceMorphism& m, const SliceSection& a) {
  SliceSection out;
  for (auto [g, f] : a)
    for (int g2 : m.phi.under(g)) {
      const int p = m.pullback.index_of(f, g2);
      if (p < 0) throw Error(ErrorKind::InvalidInput, "section value missing from the pullback");
      out[g2] = m.tau[static_cast<std::size_t>(p)];
    }
  return out;
}

}  // namespace ssg
