#pragma once

#include <utility>
#include <vector>

#include "ssg/semigroup.hpp"

namespace ssg {

// a <_s b  iff  asb = a = bsa, as and sa in N, bs and sb in Z.
// The full witness cube is computed once; everything else reads masks.
class DominationRelation {
 public:
  explicit DominationRelation(StructuredSemigroup ctx);

  const StructuredSemigroup& ctx() const { return ctx_; }
  const FiniteSemigroup& sg() const { return ctx_.sg(); }
  int order() const { return n_; }
  Element mul(Element a, Element b) const { return ctx_.mul(a, b); }
  ElementSet mul(ElementSet a, ElementSet b) const { return ctx_.mul(a, b); }

  ElementSet witnesses(Element a, Element b) const { return witness_[idx(a, b)]; }
  bool dominates(Element a, Element s, Element b) const { return witnesses(a, b).contains(s); }
  bool less(Element a, Element b) const { return !witnesses(a, b).empty(); }

  ElementSet above(Element a) const { return up_[static_cast<std::size_t>(a)]; }
  ElementSet below(Element b) const { return down_[static_cast<std::size_t>(b)]; }
  ElementSet dual_of(Element a) const { return dual_[static_cast<std::size_t>(a)]; }

  ElementSet up_closure(ElementSet a) const;  // A^<
  ElementSet dual(ElementSet a) const;        // A*
  std::vector<std::pair<Element, Element>> pairs() const;

 private:
  std::size_t idx(Element a, Element b) const { return static_cast<std::size_t>(a * n_ + b); }

  StructuredSemigroup ctx_;
  int n_ = 0;
  std::vector<ElementSet> witness_;
  std::vector<ElementSet> up_, down_, dual_;
};

}  // namespace ssg
