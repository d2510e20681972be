#pragma once

#include <memory>
#include <vector>

#include "ssg/coset_bundle.hpp"
#include "ssg/morphism.hpp"

namespace ssg {

// D(S): directed cosets as a subgroupoid of C(S) with the subspace topology.
struct DirectedCosets {
  std::shared_ptr<const CosetGroupoid> cg;
  std::vector<int> ids;       // directed index -> coset id
  std::vector<int> index_of;  // coset id -> directed index, -1 if not directed
  TopGroupoidPtr groupoid;
  int size() const { return static_cast<int>(ids.size()); }
};

DirectedCosets directed_cosets(std::shared_ptr<const CosetGroupoid> cg);

// (g, h) composable and g or h in the set implies gh in the set.
bool is_ideal(const FiniteGroupoid& g, const PointSet& s);

// Maximal proper filters; throws NoZero unless Z contains a zero.
std::vector<ElementSet> ultrafilters(const DominationRelation& d, int max_order = 24);
Report check_ultrafilters(const CosetGroupoid& cg, const std::vector<ElementSet>& ufs);

// Maximal directed subsets of c, found by scanning every subset of c.
std::vector<ElementSet> maximal_directed_subsets(const DominationRelation& d, ElementSet c, int max_size = 20);
// The member of C^> containing x: ((r(C) cap N)^< x)^<
ElementSet triangle_through(const DominationRelation& d, ElementSet c, Element x);
// C^> as directed indices
std::vector<int> triangle_up(const DirectedCosets& dc, int coset);

// D < C as a relation within D(S) x C(S)
GroupoidRelation triangle_relation(const DirectedCosets& dc);

struct DirectedBundle {
  BundlePtr bundle;              // rho_D over D(S)
  std::vector<int> from_coset;   // coset-bundle point -> directed-bundle point, -1 outside
  std::vector<int> to_coset;     // directed-bundle point -> coset-bundle point
};
DirectedBundle directed_bundle(const CosetBundle& cb, const DirectedCosets& dc);
BundleRepresentation directed_tilde(const CosetBundle& cb, const DirectedCosets& dc, const DirectedBundle& db);

// (triangle, iota) with iota([d,D], C) = [d, C] on the pullback of rho_D.
PierceMorphism iota_morphism(const CosetBundle& cb, const DirectedCosets& dc, const DirectedBundle& db);

}  // namespace ssg
