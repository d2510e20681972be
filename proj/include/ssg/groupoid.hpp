#pragma once

#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "ssg/report.hpp"

namespace ssg {

using PointSet = boost::dynamic_bitset<>;

PointSet make_points(int n, const std::vector<int>& members = {});
std::vector<int> members(const PointSet& s);
template <class F>
void for_each_point(const PointSet& s, F&& f) {
  for (auto i = s.find_first(); i != PointSet::npos; i = s.find_next(i)) f(static_cast<int>(i));
}

// Finite groupoid given by an inverse table and a partial product table
// (-1 where the product is undefined).  Units are the idempotents.
class FiniteGroupoid {
 public:
  FiniteGroupoid() = default;
  FiniteGroupoid(std::vector<int> inv, std::vector<std::vector<int>> prod, std::vector<std::string> labels = {});

  int size() const { return n_; }
  int inv(int g) const { return inv_[static_cast<std::size_t>(g)]; }
  int prod(int g, int h) const { return prod_[static_cast<std::size_t>(g * n_ + h)]; }
  bool composable(int g, int h) const { return prod(g, h) >= 0; }
  int src(int g) const { return src_[static_cast<std::size_t>(g)]; }
  int rng(int g) const { return rng_[static_cast<std::size_t>(g)]; }
  bool is_unit(int g) const { return units_.test(static_cast<std::size_t>(g)); }
  const PointSet& units() const { return units_; }
  const std::string& label(int g) const { return labels_[static_cast<std::size_t>(g)]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::vector<std::vector<int>> product_table() const;
  const std::vector<int>& inverse_table() const { return inv_; }

  PointSet set_product(const PointSet& a, const PointSet& b) const;
  PointSet set_inverse(const PointSet& a) const;
  PointSet image_src(const PointSet& a) const;
  PointSet image_rng(const PointSet& a) const;
  PointSet all() const { return PointSet(static_cast<std::size_t>(n_)).set(); }
  std::string format(const PointSet& s) const;

 private:
  int n_ = 0;
  std::vector<int> inv_, prod_, src_, rng_;
  PointSet units_;
  std::vector<std::string> labels_;
};

Report check_groupoid(const FiniteGroupoid& g);

// src and rng are injective on the set.
bool is_slice(const FiniteGroupoid& g, const PointSet& s);
// Every slice, found by backtracking; throws TooManyOpens past the limit.
std::vector<PointSet> all_slices(const FiniteGroupoid& g, std::size_t limit = 1u << 20);

}  // namespace ssg
