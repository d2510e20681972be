#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace ssg {

using Element = int;

// Subset of a semigroup of order at most 64, stored as a bit mask.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}
  ElementSet(std::initializer_list<Element> xs) {
    for (Element x : xs) insert(x);
  }

  static ElementSet from(const std::vector<Element>& xs) {
    ElementSet s;
    for (Element x : xs) s.insert(x);
    return s;
  }
  static constexpr ElementSet full(int n) {
    return ElementSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }
  static constexpr ElementSet single(Element x) { return ElementSet(std::uint64_t{1} << x); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(Element x) const { return (bits_ >> x) & 1U; }
  constexpr void insert(Element x) { bits_ |= std::uint64_t{1} << x; }
  constexpr void erase(Element x) { bits_ &= ~(std::uint64_t{1} << x); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool subset_of(ElementSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(ElementSet o) const { return (bits_ & o.bits_) != 0; }
  constexpr Element first() const { return std::countr_zero(bits_); }

  std::vector<Element> to_vector() const {
    std::vector<Element> out;
    for (auto b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  template <class F>
  void for_each(F&& f) const {
    for (auto b = bits_; b; b &= b - 1) f(static_cast<Element>(std::countr_zero(b)));
  }

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) { return ElementSet(a.bits_ | b.bits_); }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & b.bits_); }
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & ~b.bits_); }
  ElementSet& operator|=(ElementSet o) { bits_ |= o.bits_; return *this; }
  ElementSet& operator&=(ElementSet o) { bits_ &= o.bits_; return *this; }
  friend constexpr bool operator==(ElementSet, ElementSet) = default;

  // Orders sets by their sorted member lists.
  friend bool canonical_less(ElementSet a, ElementSet b) { return a.to_vector() < b.to_vector(); }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace ssg
