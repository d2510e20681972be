#include "ssg/topgroupoid.hpp"

#include "ssg/error.hpp"

namespace ssg {

TopGroupoidPtr make_top_groupoid(FiniteGroupoid g, FiniteTopology t) {
  if (g.size() != t.points()) throw Error(ErrorKind::InvalidInput, "topology and groupoid sizes differ");
  return std::make_shared<const TopGroupoid>(TopGroupoid{std::move(g), std::move(t)});
}

TopGroupoidPtr discrete_groupoid(FiniteGroupoid g) {
  auto t = FiniteTopology::discrete(g.size());
  return make_top_groupoid(std::move(g), std::move(t));
}

TopGroupoidPtr restrict_groupoid(const TopGroupoid& g, const PointSet& keep, std::vector<int>* index_of) {
  std::vector<int> pts = members(keep);
  std::vector<int> idx(static_cast<std::size_t>(g.size()), -1);
  for (std::size_t i = 0; i < pts.size(); ++i) idx[static_cast<std::size_t>(pts[i])] = static_cast<int>(i);
  const auto m = pts.size();
  std::vector<int> inv(m);
  std::vector<std::vector<int>> prod(m, std::vector<int>(m, -1));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i) {
    int x = pts[i];
    inv[i] = idx[static_cast<std::size_t>(g.g.inv(x))];
    if (inv[i] < 0) throw Error(ErrorKind::InvalidGroupoid, "restriction not closed under inverse");
    labels.push_back(g.g.label(x));
    for (std::size_t j = 0; j < m; ++j) {
      int p = g.g.prod(x, pts[j]);
      if (p < 0) continue;
      prod[i][j] = idx[static_cast<std::size_t>(p)];
      if (prod[i][j] < 0) throw Error(ErrorKind::InvalidGroupoid, "restriction not closed under products");
    }
  }
  if (index_of) *index_of = idx;
  return make_top_groupoid(FiniteGroupoid(std::move(inv), std::move(prod), std::move(labels)), g.t.subspace(pts));
}

FiniteGroupoid pair_groupoid(int units) {
  // (i,j) has index i*units+j, range (i,i) and source (j,j).
  const int n = units * units;
  std::vector<int> inv(static_cast<std::size_t>(n));
  std::vector<std::vector<int>> prod(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
  std::vector<std::string> labels;
  for (int i = 0; i < units; ++i)
    for (int j = 0; j < units; ++j) {
      inv[i * units + j] = j * units + i;
      labels.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
      for (int k = 0; k < units; ++k) prod[i * units + j][j * units + k] = i * units + k;
    }
  return FiniteGroupoid(std::move(inv), std::move(prod), std::move(labels));
}

int group_identity(const FiniteSemigroup& t) {
  for (int e = 0; e < t.order(); ++e) {
    bool ok = true;
    for (int x = 0; x < t.order() && ok; ++x) ok = t.mul(e, x) == x && t.mul(x, e) == x;
    if (ok) return e;
  }
  throw Error(ErrorKind::InvalidInput, "structure group has no identity");
}

int group_inverse(const FiniteSemigroup& t, int x) {
  const int e = group_identity(t);
  for (int y = 0; y < t.order(); ++y)
    if (t.mul(x, y) == e && t.mul(y, x) == e) return y;
  throw Error(ErrorKind::InvalidInput, "structure group element has no inverse", {x});
}

FiniteGroupoid group_groupoid(const FiniteSemigroup& group) {
  const int n = group.order();
  std::vector<int> inv(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) inv[x] = group_inverse(group, x);
  return FiniteGroupoid(std::move(inv), group.table(), group.labels());
}

Report check_topological_groupoid(const TopGroupoid& tg) {
  const auto& g = tg.g;
  const auto& t = tg.t;
  Report r;
  r.merge(check_groupoid(g), "groupoid: ");
  std::vector<int> inv(g.inverse_table());
  r.add("inverse continuous", is_continuous(t, t, inv));

  bool ok = true;
  std::string w;
  for (int x = 0; x < g.size() && ok; ++x)
    for (int y = 0; y < g.size() && ok; ++y) {
      int xy = g.prod(x, y);
      if (xy < 0) continue;
      // product of the basic neighbourhoods, restricted to composable pairs
      PointSet img = g.set_product(t.nbhd(x), t.nbhd(y));
      if (!img.is_subset_of(t.nbhd(xy))) ok = false, w = g.label(x) + "," + g.label(y);
    }
  r.add("product continuous on composable pairs", ok, w);
  return r;
}

Report check_etale(const TopGroupoid& tg) {
  const auto& g = tg.g;
  const auto& t = tg.t;
  Report r = check_topological_groupoid(tg);
  std::vector<int> src(static_cast<std::size_t>(g.size()));
  for (int x = 0; x < g.size(); ++x) src[x] = g.src(x);
  bool ok = true;
  std::string w;
  for (int x = 0; x < g.size() && ok; ++x)
    if (!t.is_open(g.image_src(t.nbhd(x)))) ok = false, w = g.label(x);
  r.add("source map open", ok, w);

  // Cross-check: basic opens must be slices (open slices form a basis) and
  // basic open slices are closed under products and inverses.
  ok = true;
  for (int x = 0; x < g.size() && ok; ++x)
    if (!is_slice(g, t.nbhd(x))) ok = false, w = g.label(x);
  r.add("open slices form a basis", ok, w);
  ok = true;
  for (int x = 0; x < g.size() && ok; ++x) {
    if (!t.is_open(g.set_inverse(t.nbhd(x)))) ok = false, w = g.label(x);
    for (int y = 0; y < g.size() && ok; ++y)
      if (!t.is_open(g.set_product(t.nbhd(x), t.nbhd(y)))) ok = false, w = g.label(x) + "," + g.label(y);
  }
  r.add("open slices closed under product and inverse", ok, w);
  return r;
}

namespace {

void check_proj_functor(const GroupoidBundle& b, Report& r) {
  const auto& f = b.total->g;
  const auto& g = b.base->g;
  const auto& p = b.proj;
  bool ok = true;
  std::string w;
  for (int x = 0; x < f.size() && ok; ++x) {
    if (p[x] < 0 || p[x] >= g.size()) {
      ok = false, w = f.label(x);
      break;
    }
    if (p[f.inv(x)] != g.inv(p[x])) ok = false, w = f.label(x);
    for (int y = 0; y < f.size() && ok; ++y)
      if (int xy = f.prod(x, y); xy >= 0 && g.prod(p[x], p[y]) != p[xy]) ok = false, w = f.label(x) + "," + f.label(y);
  }
  r.add("projection is a functor", ok, w);
}

}  // namespace

Report check_bundle(const GroupoidBundle& b) {
  Report r;
  const auto& f = b.total->g;
  const auto& g = b.base->g;
  if (static_cast<int>(b.proj.size()) != f.size()) {
    r.add("projection defined on every point", false, "size mismatch");
    return r;
  }
  r.merge(check_etale(*b.base), "base: ");
  r.merge(check_topological_groupoid(*b.total), "total: ");
  check_proj_functor(b, r);
  if (!r.passed("projection is a functor")) return r;
  r.add("projection continuous", is_continuous(b.total->t, b.base->t, b.proj));
  r.add("projection open", is_open_map(b.total->t, b.base->t, b.proj));

  bool ok = true;
  std::string w;
  std::vector<int> seen(static_cast<std::size_t>(g.size()), -1);
  for_each_point(f.units(), [&](int u) {
    int pu = b.proj[static_cast<std::size_t>(u)];
    if (!ok) return;
    if (seen[static_cast<std::size_t>(pu)] >= 0) ok = false, w = f.label(seen[pu]) + "," + f.label(u);
    seen[static_cast<std::size_t>(pu)] = u;
  });
  r.add("injective on units", ok, w);

  ok = true;
  for (int x = 0; x < f.size() && ok; ++x)
    for (int y = 0; y < f.size() && ok; ++y)
      if (g.composable(b.proj[x], b.proj[y]) && !f.composable(x, y)) ok = false, w = f.label(x) + "," + f.label(y);
  r.add("composable whenever the images are", ok, w);
  return r;
}

Report check_etale_bundle(const GroupoidBundle& b) {
  Report r = check_bundle(b);
  if (!r.passed("projection is a functor")) return r;
  const auto& f = b.total->g;
  bool ok = true;
  std::string w;
  for (int x = 0; x < f.size() && ok; ++x) {
    std::vector<char> hit(static_cast<std::size_t>(b.base->size()));
    for_each_point(b.total->t.nbhd(x), [&](int y) {
      auto& h = hit[static_cast<std::size_t>(b.proj[static_cast<std::size_t>(y)])];
      if (h) ok = false, w = f.label(x);
      h = 1;
    });
  }
  r.add("locally injective", ok, w);
  r.merge(check_etale(*b.total), "total etale: ");
  return r;
}

GroupoidBundle identity_bundle(TopGroupoidPtr g) {
  std::vector<int> p(static_cast<std::size_t>(g->size()));
  for (int x = 0; x < g->size(); ++x) p[x] = x;
  return GroupoidBundle{g, g, std::move(p)};
}

Report validate_cocycle(const FiniteGroupoid& g, const FiniteSemigroup& t, const std::vector<int>& sigma) {
  Report r;
  const int n = g.size();
  const int e = group_identity(t);
  if (static_cast<int>(sigma.size()) != n * n) {
    r.add("cocycle table size", false, "expected |G|^2 entries");
    return r;
  }
  auto sg = [&](int x, int y) { return sigma[static_cast<std::size_t>(x * n + y)]; };
  bool ok = true;
  std::string w;
  for (int x = 0; x < n && ok; ++x) {
    int s = sg(g.rng(x), x), s2 = sg(x, g.src(x));
    if (s < 0 || s >= t.order() || s2 < 0 || s2 >= t.order() || s != e || s2 != e) ok = false, w = g.label(x);
  }
  r.add("normalised on units", ok, w);
  ok = true;
  for (int x = 0; x < n && ok; ++x)
    for (int y = 0; y < n && ok; ++y) {
      int xy = g.prod(x, y);
      if (xy < 0) continue;
      for (int z = 0; z < n && ok; ++z) {
        int yz = g.prod(y, z);
        if (yz < 0) continue;
        for (int u = 0; u < t.order() && ok; ++u) {
          int lhs = t.mul(t.mul(sg(x, y), u), sg(xy, z));
          int rhs = t.mul(t.mul(sg(x, yz), u), sg(y, z));
          if (lhs != rhs) ok = false, w = g.label(x) + "," + g.label(y) + "," + g.label(z) + " t=" + t.label(u);
        }
      }
    }
  r.add("cocycle identity", ok, w);
  return r;
}

GroupoidBundle twisted_bundle(TopGroupoidPtr base, const FiniteSemigroup& t, const std::vector<int>& sigma) {
  const auto& g = base->g;
  Report rep = validate_cocycle(g, t, sigma);
  if (!rep.ok()) {
    const Check* c = rep.first_failure();
    throw Error(ErrorKind::InvalidCocycle, c->name + " fails at " + c->witness);
  }
  const int n = g.size(), k = t.order();
  auto sg = [&](int x, int y) { return sigma[static_cast<std::size_t>(x * n + y)]; };
  const int m = n * k;
  std::vector<int> inv(static_cast<std::size_t>(m)), proj(static_cast<std::size_t>(m));
  std::vector<std::vector<int>> prod(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m), -1));
  std::vector<std::string> labels;
  std::vector<PointSet> nb;
  for (int x = 0; x < n; ++x)
    for (int a = 0; a < k; ++a) {
      const int p = x * k + a;
      proj[p] = x;
      labels.push_back("(" + g.label(x) + "," + t.label(a) + ")");
      int xi = g.inv(x);
      inv[p] = xi * k + t.mul(group_inverse(t, sg(x, xi)), group_inverse(t, a));
      PointSet u(static_cast<std::size_t>(m));
      for_each_point(base->t.nbhd(x), [&](int y) { u.set(static_cast<std::size_t>(y * k + a)); });
      nb.push_back(std::move(u));
      for (int y = 0; y < n; ++y) {
        int xy = g.prod(x, y);
        if (xy < 0) continue;
        for (int b = 0; b < k; ++b) prod[p][y * k + b] = xy * k + t.mul(t.mul(a, sg(x, y)), b);
      }
    }
  auto total = make_top_groupoid(FiniteGroupoid(std::move(inv), std::move(prod), std::move(labels)),
                                 FiniteTopology::from_neighbourhoods(std::move(nb)));
  return GroupoidBundle{std::move(total), std::move(base), std::move(proj)};
}

GroupoidBundle trivial_bundle(TopGroupoidPtr g, const FiniteSemigroup& t) {
  const int e = group_identity(t);
  std::vector<int> sigma(static_cast<std::size_t>(g->size() * g->size()), e);
  return twisted_bundle(std::move(g), t, sigma);
}

std::string to_dot(const FiniteGroupoid& g, const std::string& name) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  std::string out = "digraph " + quote(name) + " {\n";
  for (int x = 0; x < g.size(); ++x)
    if (g.is_unit(x)) out += "  u" + std::to_string(x) + " [shape=box, label=" + quote(g.label(x)) + "];\n";
  for (int x = 0; x < g.size(); ++x)
    if (!g.is_unit(x))
      out += "  u" + std::to_string(g.src(x)) + " -> u" + std::to_string(g.rng(x)) + " [label=" + quote(g.label(x)) +
             "];\n";
  return out + "}\n";
}

}  // namespace ssg
