#include "ssg/factor.hpp"

#include "ssg/error.hpp"

namespace ssg {

namespace {

// g |-> {a : g in theta(a)}
std::vector<ElementSet> pointwise_preimages(const DominationRelation& d, const EtaleRepresentation& theta) {
  std::vector<ElementSet> out(static_cast<std::size_t>(theta.target->size()));
  for (int a = 0; a < d.order(); ++a)
    for_each_point(theta.assign[static_cast<std::size_t>(a)], [&](int g) { out[static_cast<std::size_t>(g)].insert(a); });
  return out;
}

// preimage of each basic set {cosets containing a} equals theta(a)
bool recovers(const GroupoidRelation& rel, const std::vector<PointSet>& basic, const EtaleRepresentation& theta,
              std::string* w) {
  for (std::size_t a = 0; a < basic.size(); ++a)
    if (rel.preimage(basic[a]) != theta.assign[a]) {
      if (w) *w = std::to_string(a);
      return false;
    }
  return true;
}

// Counts relations within L x G that recover theta and pass the predicate,
// scanning every subset of L x G.  basic[a] lists the L-points containing a.
template <class Accept>
int exhaustive_count(const TopGroupoidPtr& left, const TopGroupoidPtr& g, const std::vector<PointSet>& basic,
                     const EtaleRepresentation& theta, Accept accept) {
  const int nl = left->size(), ng = g->size();
  const int bits = nl * ng;
  std::vector<std::uint64_t> basic_mask;
  for (const auto& b : basic) {
    std::uint64_t m = 0;
    for_each_point(b, [&](int c) { m |= std::uint64_t{1} << c; });
    basic_mask.push_back(m);
  }
  int count = 0;
  for (std::uint64_t rel = 0; rel < (std::uint64_t{1} << bits); ++rel) {
    bool ok = true;
    for (std::size_t a = 0; a < basic.size() && ok; ++a)
      for (int x = 0; x < ng && ok; ++x) {
        const bool hit = ((rel >> (x * nl)) & basic_mask[a]) != 0;
        ok = hit == theta.assign[a].test(static_cast<std::size_t>(x));
      }
    if (!ok) continue;
    std::vector<std::pair<int, int>> pairs;
    for (int x = 0; x < ng; ++x)
      for (int c = 0; c < nl; ++c)
        if ((rel >> (x * nl + c)) & 1U) pairs.emplace_back(c, x);
    if (accept(GroupoidRelation(left, g, std::move(pairs)))) ++count;
  }
  return count;
}

}  // namespace

EtaleRepresentation directed_restriction(const DirectedCosets& dc) {
  EtaleRepresentation out{dc.groupoid, {}, {}};
  for (int a = 0; a < dc.cg->dom().order(); ++a) {
    PointSet p(static_cast<std::size_t>(dc.size()));
    for (int i = 0; i < dc.size(); ++i)
      if (dc.cg->coset(dc.ids[static_cast<std::size_t>(i)]).members.contains(a)) p.set(static_cast<std::size_t>(i));
    out.assign.push_back(std::move(p));
  }
  if (!dc.cg->dom().ctx().flags().z_symmetric) out.notes.emplace_back("SymmetryRequired");
  return out;
}

CosetFactorization factor_through_cosets(const CosetGroupoid& cg, const EtaleRepresentation& theta) {
  const auto& d = cg.dom();
  CosetFactorization out;
  Report& r = out.report;
  r.merge(is_etale_representation(d, theta), "representation: ");
  const auto pre = pointwise_preimages(d, theta);
  std::vector<int> f(pre.size(), -1);
  bool ok = true;
  std::string w;
  for (std::size_t g = 0; g < pre.size(); ++g) {
    f[g] = cg.id_of(pre[g]);
    if (f[g] < 0 && ok) ok = false, w = theta.target->g.label(static_cast<int>(g)) + " -> " + d.sg().format(pre[g]);
  }
  r.add("each point yields a coset", ok, w);
  if (!ok) return out;
  out.phi = GroupoidRelation::from_function(cg.groupoid(), theta.target, f);
  const auto z = is_zakrzewski(out.phi);
  r.merge(z.report, "phi: ");
  r.add("phi is an etale morphism", z.etale_morphism);
  std::vector<PointSet> basic;
  for (int a = 0; a < d.order(); ++a) basic.push_back(cg.slice_of(a));
  r.add("theta recovered from the coset representation", recovers(out.phi, basic, theta, &w), w);

  // Any function psi with the same preimages must send g to {a : g in theta(a)}.
  ok = true;
  for (int c = 0; c < cg.size() && ok; ++c)
    for (std::size_t g = 0; g < pre.size() && ok; ++g) {
      bool same = true;
      for (int a = 0; a < d.order(); ++a)
        same = same && (cg.coset(c).members.contains(a) == theta.assign[static_cast<std::size_t>(a)].test(g));
      if (same != (c == f[g])) ok = false;
    }
  r.add("phi forced pointwise", ok);

  if (cg.size() * theta.target->size() <= kExhaustiveRelationBits) {
    int match = 0;
    const int count = exhaustive_count(cg.groupoid(), theta.target, basic, theta, [&](const GroupoidRelation& psi) {
      const bool good = is_zakrzewski(psi).etale_morphism;
      if (good && psi.pairs() == out.phi.pairs()) ++match;
      return good;
    });
    r.add("unique etale morphism (exhaustive)", count == 1 && match == 1, std::to_string(count) + " candidates");
  }
  return out;
}

DirectedFactorization factor_through_directed(const DirectedCosets& dc, const EtaleRepresentation& theta) {
  const auto& d = dc.cg->dom();
  DirectedFactorization out;
  Report& r = out.report;
  auto cf = factor_through_cosets(*dc.cg, theta);
  r.merge(cf.report, "cosets: ");
  if (!r.passed("cosets: each point yields a coset")) return out;
  out.psi = compose(triangle_relation(dc), cf.phi);
  r.merge(is_zakrzewski(out.psi).report, "psi: ");
  std::vector<PointSet> basic;
  for (int a = 0; a < d.order(); ++a) {
    PointSet b(static_cast<std::size_t>(dc.size()));
    for (int i = 0; i < dc.size(); ++i)
      if (dc.cg->coset(dc.ids[static_cast<std::size_t>(i)]).members.contains(a)) b.set(static_cast<std::size_t>(i));
    basic.push_back(std::move(b));
  }
  std::string w;
  r.add("theta recovered from the directed representation", recovers(out.psi, basic, theta, &w), w);

  // Forced values: the directed cosets related to g cover phi(g) with a
  // common source, and that family is phi(g)^>.
  bool ok = true;
  for (int g = 0; g < theta.target->size() && ok; ++g) {
    ElementSet cover;
    std::vector<int> src;
    for (int i : out.psi.over(g)) {
      cover |= dc.cg->coset(dc.ids[static_cast<std::size_t>(i)]).members;
      src.push_back(dc.groupoid->g.src(i));
    }
    const int c = cf.phi.over(g).empty() ? -1 : cf.phi.over(g)[0];
    ok = c >= 0 && cover == dc.cg->coset(c).members && out.psi.over(g) == triangle_up(dc, c) &&
         std::all_of(src.begin(), src.end(), [&](int s) { return s == src[0]; });
    if (!ok) w = theta.target->g.label(g);
  }
  r.add("psi forced pointwise", ok, w);

  if (dc.size() * theta.target->size() <= kExhaustiveRelationBits) {
    int match = 0;
    const int count = exhaustive_count(dc.groupoid, theta.target, basic, theta, [&](const GroupoidRelation& psi) {
      const bool good = is_zakrzewski(psi).zakrzewski;
      if (good && psi.pairs() == out.psi.pairs()) ++match;
      return good;
    });
    r.add("unique Zakrzewski morphism (exhaustive)", count == 1 && match == 1, std::to_string(count) + " candidates");
  }
  return out;
}

namespace {

// tau(p) = theta(a)(g) for any a in the class of the first coordinate of p
std::vector<int> forced_tau(const CosetBundle& cb, const std::vector<int>& coset_point, const Pullback& pb,
                            const BundleRepresentation& theta, Report& r) {
  std::vector<int> tau;
  bool ok = true;
  std::string w;
  for (auto [p, g] : pb.points) {
    const ElementSet cls = cb.points()[static_cast<std::size_t>(coset_point[static_cast<std::size_t>(p)])].cls;
    int value = -1;
    cls.for_each([&](Element a) {
      const auto& sec = theta.assign[static_cast<std::size_t>(a)];
      auto it = sec.find(g);
      const int v = it == sec.end() ? -2 : it->second;
      if (value == -1) value = v;
      else if (value != v && ok) ok = false, w = cb.base().dom().sg().label(a);
    });
    if (value < 0 && ok) ok = false, w = "point outside every section domain";
    tau.push_back(value);
  }
  r.add("tau independent of class representatives", ok, w);
  return tau;
}

void check_recovery(const PierceMorphism& m, const BundleRepresentation& source_rep, const BundleRepresentation& theta,
                    const DominationRelation& d, Report& r) {
  bool ok = true;
  std::string w;
  for (int a = 0; a < d.order() && ok; ++a)
    if (induced_hom(m, source_rep.assign[static_cast<std::size_t>(a)]) != theta.assign[static_cast<std::size_t>(a)])
      ok = false, w = d.sg().label(a);
  r.add("theta recovered through the induced homomorphism", ok, w);
  // every pullback point is hit by some tilde section, so tau is forced
  std::vector<char> hit(m.pullback.points.size());
  for (int a = 0; a < d.order(); ++a)
    for (auto [g, f] : source_rep.assign[static_cast<std::size_t>(a)])
      for (int g2 : m.phi.under(g))
        if (int p = m.pullback.index_of(f, g2); p >= 0) hit[static_cast<std::size_t>(p)] = 1;
  r.add("tau forced on every pullback point", std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; }));
}

}  // namespace

BundleFactorization factor_bundle(const CosetBundle& cb, const BundleRepresentation& theta) {
  const auto& d = cb.base().dom();
  BundleFactorization out;
  Report& r = out.report;
  r.merge(is_bundle_representation(d, theta), "representation: ");
  auto cf = factor_through_cosets(cb.base(), domain_representation(theta));
  r.merge(cf.report, "phi: ");
  if (!r.passed("phi: each point yields a coset")) return out;
  PierceMorphism& m = out.morphism;
  m.source = cb.bundle();
  m.target = theta.bundle;
  m.phi = cf.phi;
  m.pullback = pullback_bundle(*m.source, m.phi);
  std::vector<int> ident(static_cast<std::size_t>(cb.size()));
  for (int p = 0; p < cb.size(); ++p) ident[static_cast<std::size_t>(p)] = p;
  m.tau = forced_tau(cb, ident, m.pullback, theta, r);
  if (!r.passed("tau independent of class representatives")) return out;
  r.merge(is_pierce(m), "pierce: ");
  check_recovery(m, tilde_representation(cb), theta, d, r);
  return out;
}

BundleFactorization factor_bundle_directed(const CosetBundle& cb, const DirectedCosets& dc, const DirectedBundle& db,
                                           const BundleRepresentation& theta) {
  const auto& d = cb.base().dom();
  BundleFactorization out;
  Report& r = out.report;
  auto df = factor_through_directed(dc, domain_representation(theta));
  r.merge(df.report, "psi: ");
  if (!r.passed("psi: cosets: each point yields a coset")) return out;
  PierceMorphism& m = out.morphism;
  m.source = db.bundle;
  m.target = theta.bundle;
  m.phi = df.psi;
  m.pullback = pullback_bundle(*m.source, m.phi);
  m.tau = forced_tau(cb, db.to_coset, m.pullback, theta, r);
  if (!r.passed("tau independent of class representatives")) return out;
  r.merge(is_pierce(m), "pierce: ");
  check_recovery(m, directed_tilde(cb, dc, db), theta, d, r);
  return out;
}

}  // namespace ssg
