#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ssg/coset.hpp"
#include "ssg/topgroupoid.hpp"

namespace ssg {

using DomPtr = std::shared_ptr<const DominationRelation>;

DomPtr make_domination(StructuredSemigroup s);

// Cosets under (B,C) |-> (BC)^< and C |-> C*, topologised by the sets
// C_a = {C : a in C}.  Point ids follow the canonical coset order.
class CosetGroupoid {
 public:
  const DominationRelation& dom() const { return *dom_; }
  const DomPtr& dom_ptr() const { return dom_; }
  const std::vector<CosetRecord>& cosets() const { return cosets_; }
  const CosetRecord& coset(int id) const { return cosets_[static_cast<std::size_t>(id)]; }
  int size() const { return static_cast<int>(cosets_.size()); }
  int id_of(ElementSet c) const;  // -1 when c is not a coset
  PointSet slice_of(Element a) const { return slices_[static_cast<std::size_t>(a)]; }  // C_a
  const TopGroupoidPtr& groupoid() const { return top_; }
  const FiniteGroupoid& g() const { return top_->g; }

  friend CosetGroupoid build_coset_groupoid(DomPtr d, const CosetOptions& opts);

 private:
  DomPtr dom_;
  std::vector<CosetRecord> cosets_;
  std::map<std::uint64_t, int> index_;
  std::vector<PointSet> slices_;
  TopGroupoidPtr top_;
};

CosetGroupoid build_coset_groupoid(DomPtr d, const CosetOptions& opts = {});

// a |-> slice of the target groupoid
struct EtaleRepresentation {
  TopGroupoidPtr target;
  std::vector<PointSet> assign;
  std::vector<std::string> notes;  // soft flags such as SymmetryRequired
};

EtaleRepresentation coset_representation(const CosetGroupoid& cg);
Report is_etale_representation(const DominationRelation& d, const EtaleRepresentation& rep);

}  // namespace ssg
