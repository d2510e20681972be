#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ssg/element_set.hpp"

namespace ssg {

inline constexpr int kMaxOrder = 64;

class FiniteSemigroup {
 public:
  FiniteSemigroup() = default;

  // Checks shape, entry range and associativity; throws Error on failure.
  static FiniteSemigroup from_table(const std::vector<std::vector<int>>& mul,
                                    std::vector<std::string> labels = {});

  int order() const { return n_; }
  Element mul(Element a, Element b) const { return table_[static_cast<std::size_t>(a * n_ + b)]; }
  ElementSet mul(ElementSet a, ElementSet b) const;
  ElementSet mul(Element a, ElementSet b) const { return mul(ElementSet::single(a), b); }
  ElementSet mul(ElementSet a, Element b) const { return mul(a, ElementSet::single(b)); }
  Element mul(Element a, Element b, Element c) const { return mul(mul(a, b), c); }

  ElementSet all() const { return ElementSet::full(n_); }
  const std::string& label(Element a) const { return labels_[static_cast<std::size_t>(a)]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string format(ElementSet s) const;
  std::vector<std::vector<int>> table() const;

  bool is_subsemigroup(ElementSet s) const;
  ElementSet idempotents() const;
  std::optional<Element> zero() const;
  // Unique inverses when the semigroup is an inverse semigroup.
  std::optional<std::vector<Element>> inverses() const;
  bool is_commutative() const;

 private:
  int n_ = 0;
  std::vector<Element> table_;
  std::vector<std::string> labels_;
};

// {z in c : z commutes with every element of c}
ElementSet centre_of(const FiniteSemigroup& s, ElementSet c);

struct StructureFlags {
  bool n_subsemigroup = false;
  bool z_subsemigroup = false;
  bool z_central_in_n = false;
  bool z_binormal = false;
  bool n_trinormal = false;
  bool structured = false;

  bool n_normal = false;
  bool z_normal = false;
  bool n_binormal = false;
  bool z_symmetric = false;
  bool n_diagonal = false;
  bool z_diagonal = false;
  std::optional<Element> zero;  // a two-sided zero lying in Z

  std::string violation;  // first failed structural axiom, empty when structured
  std::vector<Element> witness;
};

bool is_normal(const FiniteSemigroup& s, ElementSet y);
bool is_symmetric(const FiniteSemigroup& s, ElementSet y);
bool is_diagonal(const FiniteSemigroup& s, ElementSet y);
bool is_binormal(const FiniteSemigroup& s, ElementSet y);

StructureFlags analyze_structure(const FiniteSemigroup& s, ElementSet n, ElementSet z);

class StructuredSemigroup {
 public:
  StructuredSemigroup() = default;

  const FiniteSemigroup& sg() const { return s_; }
  int order() const { return s_.order(); }
  Element mul(Element a, Element b) const { return s_.mul(a, b); }
  ElementSet mul(ElementSet a, ElementSet b) const { return s_.mul(a, b); }
  ElementSet N() const { return n_; }
  ElementSet Z() const { return z_; }
  const StructureFlags& flags() const { return flags_; }

  friend StructuredSemigroup validate_structured(FiniteSemigroup s, ElementSet n, ElementSet z);
  friend StructuredSemigroup make_structured_unchecked(FiniteSemigroup s, ElementSet n, ElementSet z);

 private:
  FiniteSemigroup s_;
  ElementSet n_, z_;
  StructureFlags flags_;
};

// Throws Error naming the first violated axiom when (s, n, z) is not structured.
StructuredSemigroup validate_structured(FiniteSemigroup s, ElementSet n, ElementSet z);
// Keeps the flags but does not reject; used by exploratory search.
StructuredSemigroup make_structured_unchecked(FiniteSemigroup s, ElementSet n, ElementSet z);

}  // namespace ssg
