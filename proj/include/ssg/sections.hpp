#pragma once

#include <map>
#include <memory>
#include <vector>

#include "ssg/coset_groupoid.hpp"
#include "ssg/semigroup.hpp"
#include "ssg/topgroupoid.hpp"

namespace ssg {

// Partial section: base point -> total point.
using SliceSection = std::map<int, int>;

PointSet section_domain(const SliceSection& a, int base_size);
PointSet section_range(const SliceSection& a, int total_size);
// Open slice domain, pi(a(g)) = g, continuous on its domain.
bool is_slice_section(const GroupoidBundle& b, const SliceSection& a);
// ab(gh) = a(g)b(h) for composable g in dom(a), h in dom(b).
SliceSection section_product(const GroupoidBundle& b, const SliceSection& a, const SliceSection& c);
// a^-1(g) = a(g^-1)^-1
SliceSection section_inverse(const GroupoidBundle& b, const SliceSection& a);
std::string format_section(const GroupoidBundle& b, const SliceSection& a);

// The inverse semigroup of all slice-sections with its canonical diagonal
// N(pi) (domains inside the units) and E (ranges inside the units).
struct SectionSemigroup {
  BundlePtr bundle;
  std::vector<SliceSection> elements;
  FiniteSemigroup sg;
  ElementSet n_pi;
  ElementSet e;

  int index_of(const SliceSection& a) const;
  ElementSet at(int g) const;          // S_g
  ElementSet through(int f) const;     // S^f: sections taking the value f
  StructuredSemigroup structured() const;
};

SectionSemigroup slice_sections(BundlePtr b, std::size_t max_sections = 64);

bool is_local_inverse(const SectionSemigroup& ss, ElementSet subset);
// a = asb with as in N(pi) iff s(g^-1) = b(g)^-1 on dom(a), over all triples
// of the subset, plus the induced comparison of < with domain inclusion.
Report domination_matches_domains(const SectionSemigroup& ss, ElementSet subset, ElementSet n, ElementSet z);
bool diagonal_is_diagonal(const SectionSemigroup& ss);

struct BundleRepresentation {
  BundlePtr bundle;
  std::vector<SliceSection> assign;
  std::vector<std::string> notes;
};

// Sections, homomorphism, and the domain map passing as an etale representation.
Report is_bundle_representation(const DominationRelation& d, const BundleRepresentation& rep);
EtaleRepresentation domain_representation(const BundleRepresentation& rep);
// Each slice-section represented by itself.
BundleRepresentation identity_embedding(const SectionSemigroup& ss);

}  // namespace ssg
