#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ssg/groupoid.hpp"
#include "ssg/semigroup.hpp"
#include "ssg/topology.hpp"

namespace ssg {

struct TopGroupoid {
  FiniteGroupoid g;
  FiniteTopology t;
  int size() const { return g.size(); }
};
using TopGroupoidPtr = std::shared_ptr<const TopGroupoid>;

TopGroupoidPtr make_top_groupoid(FiniteGroupoid g, FiniteTopology t);
TopGroupoidPtr discrete_groupoid(FiniteGroupoid g);
// Restriction to a subset closed under products and inverses, with the
// subspace topology.  index_of maps old points to new ones (-1 outside).
TopGroupoidPtr restrict_groupoid(const TopGroupoid& g, const PointSet& keep, std::vector<int>* index_of = nullptr);

FiniteGroupoid pair_groupoid(int units);
// A group viewed as a one-unit groupoid.
FiniteGroupoid group_groupoid(const FiniteSemigroup& group);

// Inverse and product continuous, product taken on composable pairs with
// the subspace of the product topology.
Report check_topological_groupoid(const TopGroupoid& g);
// Topological groupoid with an open source map; cross-checked against the
// open slices forming a basis closed under products and inverses.
Report check_etale(const TopGroupoid& g);

// Open continuous isofibration onto an etale base.
struct GroupoidBundle {
  TopGroupoidPtr total;
  TopGroupoidPtr base;
  std::vector<int> proj;
};
using BundlePtr = std::shared_ptr<const GroupoidBundle>;

Report check_bundle(const GroupoidBundle& b);
Report check_etale_bundle(const GroupoidBundle& b);
GroupoidBundle identity_bundle(TopGroupoidPtr g);

int group_identity(const FiniteSemigroup& t);
int group_inverse(const FiniteSemigroup& t, int x);

// sigma is indexed by g * |G| + h and read only on composable pairs.
Report validate_cocycle(const FiniteGroupoid& g, const FiniteSemigroup& t, const std::vector<int>& sigma);
// (g,t)(h,u) = (gh, t sigma(g,h) u) on G x T with T discrete; point (g,t) has index g*|T|+t.
GroupoidBundle twisted_bundle(TopGroupoidPtr g, const FiniteSemigroup& t, const std::vector<int>& sigma);
GroupoidBundle trivial_bundle(TopGroupoidPtr g, const FiniteSemigroup& t);

// Units become box nodes; each non-unit g an edge src(g) -> rng(g) labelled g.
std::string to_dot(const FiniteGroupoid& g, const std::string& name = "G");

}  // namespace ssg
