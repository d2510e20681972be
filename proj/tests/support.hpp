#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "ssg/coset_groupoid.hpp"
#include "ssg/error.hpp"
#include "ssg/fixtures.hpp"
#include "ssg/search.hpp"
#include "ssg/theorems.hpp"

namespace test {

inline oracle::Sg to_oracle(const ssg::StructuredSemigroup& s) {
  return {s.order(), s.sg().table(), s.N().bits(), s.Z().bits()};
}

inline ssg::DomPtr dom(const std::string& fixture) { return ssg::make_domination(ssg::semigroup_fixture(fixture)); }

// label -> element, so examples can name elements by label
inline ssg::Element el(const ssg::FiniteSemigroup& s, const std::string& label) {
  for (int i = 0; i < s.order(); ++i)
    if (s.label(i) == label) return i;
  return -1;
}

inline ssg::ElementSet set(const ssg::FiniteSemigroup& s, const std::vector<std::string>& labels) {
  ssg::ElementSet out;
  for (const auto& l : labels) out.insert(el(s, l));
  return out;
}

inline std::vector<oracle::Mask> bits(const std::vector<ssg::ElementSet>& sets) {
  std::vector<oracle::Mask> out;
  for (auto s : sets) out.push_back(s.bits());
  std::sort(out.begin(), out.end());
  return out;
}

// "" when every check passed, else the first failure with its witness
inline std::string failure(const ssg::Report& r) {
  const ssg::Check* c = r.first_failure();
  return c ? c->name + ": " + c->witness : std::string{};
}

// Runs f and returns the kind and witness of the ssg::Error it throws.
template <class F>
std::optional<ssg::Error> error_of(F&& f) {
  try {
    f();
  } catch (const ssg::Error& e) {
    return e;
  }
  return std::nullopt;
}

// structured semigroups of order <= 3, shared by the property suites
inline const std::vector<ssg::StructuredSemigroup>& small_structured() {
  static const auto all = ssg::enumerate_structured(3);
  return all;
}

}  // namespace test
