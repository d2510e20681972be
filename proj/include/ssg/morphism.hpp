#pragma once

#include <utility>
#include <vector>

#include "ssg/sections.hpp"
#include "ssg/topgroupoid.hpp"

namespace ssg {

// phi within G x H, read as a relation from H to G: (g, h) means g phi h.
class GroupoidRelation {
 public:
  GroupoidRelation() = default;
  GroupoidRelation(TopGroupoidPtr left, TopGroupoidPtr right, std::vector<std::pair<int, int>> pairs);
  // pairs (f(h), h) for h in H with f(h) >= 0
  static GroupoidRelation from_function(TopGroupoidPtr left, TopGroupoidPtr right, const std::vector<int>& f);

  const TopGroupoid& left() const { return *left_; }
  const TopGroupoid& right() const { return *right_; }
  const TopGroupoidPtr& left_ptr() const { return left_; }
  const TopGroupoidPtr& right_ptr() const { return right_; }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  bool related(int g, int h) const;
  const std::vector<int>& over(int h) const { return over_[static_cast<std::size_t>(h)]; }   // {g : g phi h}
  const std::vector<int>& under(int g) const { return under_[static_cast<std::size_t>(g)]; }  // {h : g phi h}
  PointSet preimage(const PointSet& gs) const;  // subset of H
  PointSet image(const PointSet& hs) const;     // subset of G
  PointSet domain() const;
  bool is_function() const;

 private:
  TopGroupoidPtr left_, right_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<std::vector<int>> over_, under_;
};

GroupoidRelation compose(const GroupoidRelation& phi, const GroupoidRelation& psi);
// pi^-1 within F x G: pairs (f, pi(f))
GroupoidRelation bundle_inverse(const GroupoidBundle& b);

Report check_functorial(const GroupoidRelation& phi);

struct StarCheck {
  bool definitional = false;
  bool alternative = false;  // unit-preimage form for injectivity, product form for surjectivity
  bool slices = false;       // slice-preimage form, injectivity only
  bool three_way = false;
  bool agree() const { return definitional == alternative && (!three_way || slices == definitional); }
};
StarCheck star_injectivity(const GroupoidRelation& phi);
StarCheck star_surjectivity(const GroupoidRelation& phi);
bool is_continuous(const GroupoidRelation& phi);

struct ZakrzewskiResult {
  Report report;
  bool zakrzewski = false;
  bool function = false;
  bool etale_morphism = false;
};
ZakrzewskiResult is_zakrzewski(const GroupoidRelation& phi);

// phi^pi F = {(f, h) : pi(f) phi h} with the subspace topology of F x H.
struct Pullback {
  BundlePtr bundle;                          // projection onto H
  std::vector<std::pair<int, int>> points;   // (f, h), indexed like bundle->total
  int index_of(int f, int h) const;
};
Pullback pullback_bundle(const GroupoidBundle& pi, const GroupoidRelation& phi);

// (phi, tau) from pi : F -> G to pi2 : F2 -> G2, tau defined on the pullback.
struct PierceMorphism {
  BundlePtr source;
  BundlePtr target;
  GroupoidRelation phi;  // within G x G2
  Pullback pullback;
  std::vector<int> tau;  // pullback point -> F2 point
};
Report is_pierce(const PierceMorphism& m);
// (tau/phi)(a)(g2) = tau(a(g), g2) for the g in dom(a) with g phi g2
SliceSection induced_hom(const PierceMorphism& m, const SliceSection& a);

}  // namespace ssg
