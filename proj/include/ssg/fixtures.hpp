#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ssg/sections.hpp"
#include "ssg/semigroup.hpp"
#include "ssg/topgroupoid.hpp"

namespace ssg {

struct Fixture {
  std::string name;
  std::optional<StructuredSemigroup> semigroup;
  BundlePtr bundle;  // set for bundle fixtures
};

// Names of structured-semigroup fixtures; slow ones only when asked.
std::vector<std::string> semigroup_fixture_names(bool include_slow = false);
std::vector<std::string> bundle_fixture_names();

Fixture gen_fixture(const std::string& name);
StructuredSemigroup semigroup_fixture(const std::string& name);
BundlePtr bundle_fixture(const std::string& name);

// Data behind EX-TWIST: Z/2 acting on itself with the cocycle sigma(1,1) = -1.
struct TwistData {
  TopGroupoidPtr base;
  FiniteSemigroup t;
  std::vector<int> sigma;  // indexed by g * |G| + h
};
TwistData twist_data();

FiniteSemigroup cyclic_group(int k);
// Partial injections of {0..k-1}, composed left to right.
FiniteSemigroup symmetric_inverse_monoid(int k);

}  // namespace ssg
