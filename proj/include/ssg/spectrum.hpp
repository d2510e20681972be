#pragma once

#include <memory>
#include <vector>

#include "ssg/filters.hpp"

namespace ssg {

// Nonempty filters of a finite semilattice with the basis F_a = {F : a in F}.
struct FilterSpectrum {
  FiniteSemigroup semilattice;
  std::vector<ElementSet> filters;  // canonical order
  std::vector<PointSet> basic;      // F_a
  FiniteTopology topology;
  Report report;
};

bool is_semilattice(const FiniteSemigroup& s);
// a <= b iff a = ab
bool semilattice_leq(const FiniteSemigroup& s, Element a, Element b);
// Throws NotSemilattice unless s is commutative and idempotent.
FiniteSemigroup require_semilattice(const FiniteSemigroup& s);
FilterSpectrum filter_spectrum(const FiniteSemigroup& l, int max_order = 24);

// a |-> open subset of a finite space
struct SpatialRepresentation {
  FiniteTopology space;
  std::vector<PointSet> assign;
};
Report is_spatial_representation(const FiniteSemigroup& l, const SpatialRepresentation& theta);
SpatialRepresentation spectrum_representation(const FilterSpectrum& fs);
// The subrepresentation on principal filters a^<= only.
SpatialRepresentation principal_representation(const FilterSpectrum& fs);

struct FilterFactor {
  std::vector<int> phi;  // point -> filter index
  Report report;
};
// x |-> {a : x in theta(a)}; throws NotRepresentation when theta is not spatial.
FilterFactor filter_universal_factor(const FilterSpectrum& fs, const SpatialRepresentation& theta);

// Natural order a <= b iff a = aa^-1 b of an inverse semigroup.
bool natural_leq(const FiniteSemigroup& s, const std::vector<Element>& inv, Element a, Element b);
// Inverse semigroup with N = Z = E(S): the classical coset condition
// c in C iff ab^-1c in C against the general one on every subset, products,
// inverses, the order and duals, and the filter groupoid on directed cosets.
// Throws NotInverse otherwise.
Report inverse_semigroup_cosets_crosscheck(const std::shared_ptr<const CosetGroupoid>& cg, int max_order = 24);

}  // namespace ssg
