#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ssg/semigroup.hpp"

namespace ssg {

// One multiplication table per isomorphism class, in lexicographic order of
// the canonical (least relabelled) table.
std::vector<FiniteSemigroup> enumerate_semigroups(int order);

// Every (S, N, Z) with S from enumerate_semigroups, nonempty Z within N and
// the triple structured, one per isomorphism class.  Throws OrderTooLarge
// past max_order 5 and TooManyRelations once more than limit triples appear.
std::vector<StructuredSemigroup> enumerate_structured(int max_order, std::size_t limit = 1u << 20);

struct PropertyOutcome {
  bool applicable = true;
  bool holds = true;
  std::string witness;
};
using Property = std::function<PropertyOutcome(const StructuredSemigroup&)>;

std::vector<std::string> property_names();
// nullopt for unknown names
std::optional<Property> find_property(const std::string& name);

}  // namespace ssg
