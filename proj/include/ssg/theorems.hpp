#pragma once

#include <memory>
#include <vector>

#include "ssg/factor.hpp"
#include "ssg/sections.hpp"

namespace ssg {

// Every derived object of one structured semigroup, built once.
struct Workbench {
  DomPtr d;
  std::shared_ptr<const CosetGroupoid> cg;
  std::shared_ptr<const CosetBundle> cb;
  DirectedCosets dc;
  DirectedBundle db;
  std::vector<ElementSet> atlases;  // nonempty ones
};

Workbench build_workbench(const StructuredSemigroup& s, const CosetOptions& opts = {});

// Subset scans in the set-level laws run over all subsets up to this order
// and over singletons, atlases and cosets beyond it.
inline constexpr int kSubsetScanOrder = 18;
// Pairs of arbitrary subsets are scanned up to this order.
inline constexpr int kPairScanOrder = 7;
// Coinitial subfamilies of A* are enumerated when |A*| is at most this.
inline constexpr int kCoinitialScanSize = 12;

Report core_laws(const StructuredSemigroup& s);
Report domination_laws(const DominationRelation& d);
Report set_laws(const Workbench& w);
Report atlas_laws(const Workbench& w);
Report equivalence_laws(const Workbench& w);
Report enumerator_laws(const Workbench& w);
Report groupoid_laws(const Workbench& w);
Report bundle_laws(const Workbench& w);
// Needs Z symmetric; returns an empty report otherwise.
Report representation_laws(const Workbench& w);
Report filter_laws(const Workbench& w);
Report factor_laws(const Workbench& w);
Report morphism_laws(const Workbench& w);
// Inverse-semigroup and semilattice specialisations where they apply.
Report special_laws(const Workbench& w);

Report run_theorems(const Workbench& w);
Report run_theorems(const StructuredSemigroup& s);

// Laws of a bundle fixture through its slice-section semigroup.
Report run_bundle_theorems(const BundlePtr& b, std::size_t max_sections = 64);

}  // namespace ssg
