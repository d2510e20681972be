#include "ssg/groupoid.hpp"

#include "ssg/error.hpp"

namespace ssg {

PointSet make_points(int n, const std::vector<int>& members) {
  PointSet s(static_cast<std::size_t>(n));
  for (int m : members) s.set(static_cast<std::size_t>(m));
  return s;
}

std::vector<int> members(const PointSet& s) {
  std::vector<int> out;
  for_each_point(s, [&](int x) { out.push_back(x); });
  return out;
}

FiniteGroupoid::FiniteGroupoid(std::vector<int> inv, std::vector<std::vector<int>> table,
                               std::vector<std::string> labels)
    : n_(static_cast<int>(inv.size())), inv_(std::move(inv)) {
  if (static_cast<int>(table.size()) != n_) throw Error(ErrorKind::InvalidGroupoid, "product table has wrong size");
  prod_.reserve(static_cast<std::size_t>(n_ * n_));
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n_) throw Error(ErrorKind::InvalidGroupoid, "product row has wrong size");
    for (int v : row) {
      if (v < -1 || v >= n_) throw Error(ErrorKind::InvalidGroupoid, "product entry out of range");
      prod_.push_back(v);
    }
  }
  for (int v : inv_)
    if (v < 0 || v >= n_) throw Error(ErrorKind::InvalidGroupoid, "inverse entry out of range");
  units_ = PointSet(static_cast<std::size_t>(n_));
  src_.resize(static_cast<std::size_t>(n_));
  rng_.resize(static_cast<std::size_t>(n_));
  for (int g = 0; g < n_; ++g) {
    if (prod(g, g) == g) units_.set(static_cast<std::size_t>(g));
    src_[g] = prod(inv_[g], g);
    rng_[g] = prod(g, inv_[g]);
  }
  if (labels.empty())
    for (int g = 0; g < n_; ++g) labels.push_back(std::to_string(g));
  if (static_cast<int>(labels.size()) != n_) throw Error(ErrorKind::InvalidGroupoid, "label count mismatch");
  labels_ = std::move(labels);
}

std::vector<std::vector<int>> FiniteGroupoid::product_table() const {
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n_), std::vector<int>(static_cast<std::size_t>(n_)));
  for (int g = 0; g < n_; ++g)
    for (int h = 0; h < n_; ++h) t[g][h] = prod(g, h);
  return t;
}

PointSet FiniteGroupoid::set_product(const PointSet& a, const PointSet& b) const {
  PointSet out(static_cast<std::size_t>(n_));
  for_each_point(a, [&](int g) {
    for_each_point(b, [&](int h) {
      if (int p = prod(g, h); p >= 0) out.set(static_cast<std::size_t>(p));
    });
  });
  return out;
}

PointSet FiniteGroupoid::set_inverse(const PointSet& a) const {
  PointSet out(static_cast<std::size_t>(n_));
  for_each_point(a, [&](int g) { out.set(static_cast<std::size_t>(inv(g))); });
  return out;
}

PointSet FiniteGroupoid::image_src(const PointSet& a) const {
  PointSet out(static_cast<std::size_t>(n_));
  for_each_point(a, [&](int g) { out.set(static_cast<std::size_t>(src(g))); });
  return out;
}

PointSet FiniteGroupoid::image_rng(const PointSet& a) const {
  PointSet out(static_cast<std::size_t>(n_));
  for_each_point(a, [&](int g) { out.set(static_cast<std::size_t>(rng(g))); });
  return out;
}

std::string FiniteGroupoid::format(const PointSet& s) const {
  std::string out = "{";
  bool first = true;
  for_each_point(s, [&](int g) {
    if (!first) out += ",";
    out += label(g);
    first = false;
  });
  return out + "}";
}

Report check_groupoid(const FiniteGroupoid& g) {
  Report r;
  const int n = g.size();
  auto name = [&](int x) { return g.label(x); };

  std::string w;
  bool ok = true;
  for (int x = 0; x < n && ok; ++x)
    if (g.inv(g.inv(x)) != x) ok = false, w = name(x);
  r.add("inverse is an involution", ok, w);

  ok = true;
  for (int x = 0; x < n && ok; ++x)
    if (g.src(x) < 0 || g.rng(x) < 0 || !g.is_unit(g.src(x)) || !g.is_unit(g.rng(x))) ok = false, w = name(x);
  r.add("g^-1 g and g g^-1 are units", ok, w);

  ok = true;
  for (int x = 0; x < n && ok; ++x)
    if (g.is_unit(x) && (g.inv(x) != x || g.src(x) != x)) ok = false, w = name(x);
  r.add("units are self-inverse", ok, w);

  ok = true;
  for (int x = 0; x < n && ok; ++x)
    for (int y = 0; y < n && ok; ++y)
      if (g.composable(x, y) != (g.src(x) == g.rng(y))) ok = false, w = name(x) + "," + name(y);
  r.add("composable iff s(g) = r(h)", ok, w);

  ok = true;
  for (int x = 0; x < n && ok; ++x)
    if (g.src(x) >= 0 && g.rng(x) >= 0 && (g.prod(g.rng(x), x) != x || g.prod(x, g.src(x)) != x))
      ok = false, w = name(x);
  r.add("unit laws", ok, w);

  ok = true;
  for (int x = 0; x < n && ok; ++x)
    for (int y = 0; y < n && ok; ++y) {
      int xy = g.prod(x, y);
      if (xy < 0) continue;
      if (g.src(xy) != g.src(y) || g.rng(xy) != g.rng(x)) ok = false, w = name(x) + "," + name(y);
      for (int z = 0; z < n && ok; ++z) {
        int yz = g.prod(y, z);
        if (yz < 0) continue;
        int l = g.prod(xy, z), rr = g.prod(x, yz);
        if (l < 0 || l != rr) ok = false, w = name(x) + "," + name(y) + "," + name(z);
      }
    }
  r.add("associativity on composable triples", ok, w);
  return r;
}

bool is_slice(const FiniteGroupoid& g, const PointSet& s) {
  std::vector<char> seen_s(static_cast<std::size_t>(g.size())), seen_r(static_cast<std::size_t>(g.size()));
  bool ok = true;
  for_each_point(s, [&](int x) {
    auto& a = seen_s[static_cast<std::size_t>(g.src(x))];
    auto& b = seen_r[static_cast<std::size_t>(g.rng(x))];
    if (a || b) ok = false;
    a = b = 1;
  });
  return ok;
}

std::vector<PointSet> all_slices(const FiniteGroupoid& g, std::size_t limit) {
  const int n = g.size();
  std::vector<PointSet> out;
  PointSet cur(static_cast<std::size_t>(n));
  std::vector<char> used_s(static_cast<std::size_t>(n)), used_r(static_cast<std::size_t>(n));
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      if (out.size() >= limit) throw Error(ErrorKind::TooManyOpens, "slice enumeration limit exceeded");
      out.push_back(cur);
      return;
    }
    self(self, i + 1);
    auto s = static_cast<std::size_t>(g.src(i)), r = static_cast<std::size_t>(g.rng(i));
    if (used_s[s] || used_r[r]) return;
    used_s[s] = used_r[r] = 1;
    cur.set(static_cast<std::size_t>(i));
    self(self, i + 1);
    cur.reset(static_cast<std::size_t>(i));
    used_s[s] = used_r[r] = 0;
  };
  rec(rec, 0);
  return out;
}

}  // namespace ssg
