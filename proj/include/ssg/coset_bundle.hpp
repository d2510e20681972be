#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "ssg/coset_groupoid.hpp"
#include "ssg/sections.hpp"

namespace ssg {

// a ~_A b iff sat = sbt for some s, t in A*.  A must be an atlas and a, b in A^<.
bool equivalent(const DominationRelation& d, Element a, Element b, ElementSet atlas);
// The ~_A classes partitioning A^<, in canonical order.
std::vector<ElementSet> equivalence_classes(const DominationRelation& d, ElementSet atlas);

struct BundlePoint {
  int coset = -1;
  ElementSet cls;
  friend bool operator==(const BundlePoint&, const BundlePoint&) = default;
};

// Points [a, C] over the coset groupoid with [a,A][b,B] = [ab, AB] and
// [c,C]^-1 = [c', C*] for any c' with C containing some d <_{c'} c.
class CosetBundle {
 public:
  const CosetGroupoid& base() const { return *base_; }
  const std::shared_ptr<const CosetGroupoid>& base_ptr() const { return base_; }
  const std::vector<BundlePoint>& points() const { return points_; }
  int size() const { return static_cast<int>(points_.size()); }
  // -1 when a is not in the coset
  int point_of(int coset, Element a) const { return point_of_[static_cast<std::size_t>(coset * n_ + a)]; }
  const BundlePtr& bundle() const { return bundle_; }

  friend CosetBundle build_coset_bundle(std::shared_ptr<const CosetGroupoid> base);

 private:
  std::shared_ptr<const CosetGroupoid> base_;
  int n_ = 0;
  std::vector<BundlePoint> points_;
  std::vector<int> point_of_;
  BundlePtr bundle_;
};

CosetBundle build_coset_bundle(std::shared_ptr<const CosetGroupoid> base);

// a |-> (C |-> [a, C]) on C_a
BundleRepresentation tilde_representation(const CosetBundle& cb);

struct FaithfulResult {
  bool faithful = true;
  std::optional<std::pair<Element, Element>> witness;  // first pair no coset separates
};
// Some coset meets {a, b} while a and b are not equivalent in it, for all a != b.
FaithfulResult check_faithful(const CosetBundle& cb);

}  // namespace ssg
