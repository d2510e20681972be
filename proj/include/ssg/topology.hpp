#pragma once

#include <vector>

#include "ssg/groupoid.hpp"

namespace ssg {

// Finite topology stored by its minimal open neighbourhoods, which form the
// smallest basis.  Explicit open families are materialised on request.
class FiniteTopology {
 public:
  FiniteTopology() = default;
  static FiniteTopology generate(int points, const std::vector<PointSet>& subbasis);
  static FiniteTopology discrete(int points);
  static FiniteTopology indiscrete(int points);
  static FiniteTopology from_neighbourhoods(std::vector<PointSet> nbhd);

  int points() const { return static_cast<int>(nbhd_.size()); }
  const PointSet& nbhd(int x) const { return nbhd_[static_cast<std::size_t>(x)]; }
  const std::vector<PointSet>& neighbourhoods() const { return nbhd_; }
  bool is_open(const PointSet& s) const;
  // Every open set; throws TooManyOpens when the family exceeds the limit.
  std::vector<PointSet> opens(std::size_t limit = 1u << 16) const;
  // Subspace topology on the given points, re-indexed in increasing order.
  FiniteTopology subspace(const std::vector<int>& pts) const;

 private:
  std::vector<PointSet> nbhd_;
};

FiniteTopology generate_topology(int points, const std::vector<PointSet>& subbasis);

// Maps are given as index vectors from domain points to codomain points.
bool is_continuous(const FiniteTopology& from, const FiniteTopology& to, const std::vector<int>& f);
bool is_open_map(const FiniteTopology& from, const FiniteTopology& to, const std::vector<int>& f);
PointSet image(const std::vector<int>& f, const PointSet& s, int codomain_size);
PointSet preimage(const std::vector<int>& f, const PointSet& s);

}  // namespace ssg
