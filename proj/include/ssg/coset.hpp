#pragma once

#include <vector>

#include "ssg/domination.hpp"

namespace ssg {

struct CosetRecord {
  ElementSet members;
  ElementSet source;   // (C*C)^<
  ElementSet range;    // (CC*)^<
  ElementSet z_right;  // {z in Z : az = a for some a in C}
  ElementSet z_left;   // {z in Z : za = a for some a in C}
  bool is_unit = false;
  bool is_directed = false;
};

bool is_atlas(const DominationRelation& d, ElementSet a);
bool is_coset(const DominationRelation& d, ElementSet c);
bool is_round(const DominationRelation& d, ElementSet a);
bool is_directed(const DominationRelation& d, ElementSet a);

// Least superset closed under up-closure and A |-> AA*A.  It is a coset
// whenever it is nonempty and round, in particular for every nonempty atlas.
ElementSet coset_closure(const DominationRelation& d, ElementSet a);

ElementSet source(const DominationRelation& d, ElementSet a);
ElementSet range(const DominationRelation& d, ElementSet a);
ElementSet z_right(const DominationRelation& d, ElementSet a);
ElementSet z_left(const DominationRelation& d, ElementSet a);

// A|b: some b' has bb', b'b in Z and a = abb' for some a in A.
bool acts_right(const DominationRelation& d, ElementSet a, Element b);
// b|A: some b' has bb', b'b in Z and a = b'ba for some a in A.
bool acts_left(const DominationRelation& d, Element b, ElementSet a);

enum class CosetMethod { Exhaustive, Generator };

struct CosetOptions {
  CosetMethod method = CosetMethod::Exhaustive;
  int max_exhaustive_order = 24;
};

// All cosets in canonical order (lexicographic on sorted member lists).
std::vector<ElementSet> all_cosets(const DominationRelation& d, const CosetOptions& opts = {});
// All closed sets of coset_closure, in lectic order.
std::vector<ElementSet> closed_sets(const DominationRelation& d);
std::vector<ElementSet> all_atlases(const DominationRelation& d, int max_order = 24);

CosetRecord make_coset_record(const DominationRelation& d, ElementSet c);
// (BC)^<, defined when s(B) = r(C); throws NotComposable otherwise.
ElementSet coset_product(const DominationRelation& d, ElementSet b, ElementSet c);
ElementSet coset_inverse(const DominationRelation& d, ElementSet c);

void sort_canonical(std::vector<ElementSet>& sets);

}  // namespace ssg
