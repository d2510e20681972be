#include "ssg/topology.hpp"

#include <set>

#include "ssg/error.hpp"

namespace ssg {

FiniteTopology FiniteTopology::generate(int points, const std::vector<PointSet>& subbasis) {
  std::vector<PointSet> nb(static_cast<std::size_t>(points), PointSet(static_cast<std::size_t>(points)).set());
  for (const auto& s : subbasis) {
    if (static_cast<int>(s.size()) != points) throw Error(ErrorKind::InvalidInput, "subbasis set has wrong width");
    for_each_point(s, [&](int x) { nb[static_cast<std::size_t>(x)] &= s; });
  }
  return from_neighbourhoods(std::move(nb));
}

FiniteTopology FiniteTopology::discrete(int points) {
  std::vector<PointSet> nb;
  for (int x = 0; x < points; ++x) nb.push_back(make_points(points, {x}));
  return from_neighbourhoods(std::move(nb));
}

FiniteTopology FiniteTopology::indiscrete(int points) {
  return from_neighbourhoods(
      std::vector<PointSet>(static_cast<std::size_t>(points), PointSet(static_cast<std::size_t>(points)).set()));
}

FiniteTopology FiniteTopology::from_neighbourhoods(std::vector<PointSet> nbhd) {
  const int n = static_cast<int>(nbhd.size());
  for (int x = 0; x < n; ++x) {
    const auto& u = nbhd[static_cast<std::size_t>(x)];
    if (static_cast<int>(u.size()) != n || !u.test(static_cast<std::size_t>(x)))
      throw Error(ErrorKind::InvalidInput, "neighbourhood of a point must contain it");
    for_each_point(u, [&](int y) {
      if (!nbhd[static_cast<std::size_t>(y)].is_subset_of(u))
        throw Error(ErrorKind::InvalidInput, "neighbourhoods are not minimal opens");
    });
  }
  FiniteTopology t;
  t.nbhd_ = std::move(nbhd);
  return t;
}

bool FiniteTopology::is_open(const PointSet& s) const {
  bool ok = true;
  for_each_point(s, [&](int x) { ok = ok && nbhd(x).is_subset_of(s); });
  return ok;
}

std::vector<PointSet> FiniteTopology::opens(std::size_t limit) const {
  const auto n = static_cast<std::size_t>(points());
  std::set<PointSet> seen{PointSet(n)};
  std::vector<PointSet> frontier{PointSet(n)};
  while (!frontier.empty()) {
    std::vector<PointSet> next;
    for (const auto& o : frontier)
      for (const auto& u : nbhd_) {
        PointSet w = o | u;
        if (seen.insert(w).second) {
          if (seen.size() > limit) throw Error(ErrorKind::TooManyOpens, "open family exceeds limit");
          next.push_back(std::move(w));
        }
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

FiniteTopology FiniteTopology::subspace(const std::vector<int>& pts) const {
  std::vector<int> index(static_cast<std::size_t>(points()), -1);
  for (std::size_t i = 0; i < pts.size(); ++i) index[static_cast<std::size_t>(pts[i])] = static_cast<int>(i);
  std::vector<PointSet> nb;
  for (int p : pts) {
    PointSet u(pts.size());
    for_each_point(nbhd(p), [&](int y) {
      if (index[static_cast<std::size_t>(y)] >= 0) u.set(static_cast<std::size_t>(index[static_cast<std::size_t>(y)]));
    });
    nb.push_back(std::move(u));
  }
  return from_neighbourhoods(std::move(nb));
}

FiniteTopology generate_topology(int points, const std::vector<PointSet>& subbasis) {
  return FiniteTopology::generate(points, subbasis);
}

PointSet image(const std::vector<int>& f, const PointSet& s, int codomain_size) {
  PointSet out(static_cast<std::size_t>(codomain_size));
  for_each_point(s, [&](int x) { out.set(static_cast<std::size_t>(f[static_cast<std::size_t>(x)])); });
  return out;
}

PointSet preimage(const std::vector<int>& f, const PointSet& s) {
  PointSet out(f.size());
  for (std::size_t x = 0; x < f.size(); ++x)
    if (s.test(static_cast<std::size_t>(f[x]))) out.set(x);
  return out;
}

// f is continuous iff it maps each minimal neighbourhood into the minimal
// neighbourhood of the image point.
bool is_continuous(const FiniteTopology& from, const FiniteTopology& to, const std::vector<int>& f) {
  for (int x = 0; x < from.points(); ++x)
    if (!image(f, from.nbhd(x), to.points()).is_subset_of(to.nbhd(f[static_cast<std::size_t>(x)]))) return false;
  return true;
}

// Images commute with unions, so basic opens suffice.
bool is_open_map(const FiniteTopology& from, const FiniteTopology& to, const std::vector<int>& f) {
  for (int x = 0; x < from.points(); ++x)
    if (!to.is_open(image(f, from.nbhd(x), to.points()))) return false;
  return true;
}

}  // namespace ssg
