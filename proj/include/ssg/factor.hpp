#pragma once

#include "ssg/filters.hpp"

namespace ssg {

struct CosetFactorization {
  GroupoidRelation phi;  // within C(S) x G, g |-> {a : g in theta(a)}
  Report report;
};
struct DirectedFactorization {
  GroupoidRelation psi;  // within D(S) x G, the triangle relation after phi
  Report report;
};
struct BundleFactorization {
  PierceMorphism morphism;
  Report report;
};

// Exhaustive uniqueness scans run when |C(S)|*|G| (or |D(S)|*|G|) is at most this.
inline constexpr int kExhaustiveRelationBits = 20;

// a |-> D_a, the coset representation cut down to D(S)
EtaleRepresentation directed_restriction(const DirectedCosets& dc);

CosetFactorization factor_through_cosets(const CosetGroupoid& cg, const EtaleRepresentation& theta);
DirectedFactorization factor_through_directed(const DirectedCosets& dc, const EtaleRepresentation& theta);
BundleFactorization factor_bundle(const CosetBundle& cb, const BundleRepresentation& theta);
BundleFactorization factor_bundle_directed(const CosetBundle& cb, const DirectedCosets& dc,
                                           const DirectedBundle& db, const BundleRepresentation& theta);

}  // namespace ssg
