#include "ssg/domination.hpp"

#include "ssg/error.hpp"

namespace ssg {

DominationRelation::DominationRelation(StructuredSemigroup ctx) : ctx_(std::move(ctx)), n_(ctx_.order()) {
  if (!ctx_.flags().structured)
    throw Error(ErrorKind::NotStructured, "domination requires a structured semigroup: " + ctx_.flags().violation,
                ctx_.flags().witness);
  const auto& s = ctx_.sg();
  const ElementSet nn = ctx_.N(), zz = ctx_.Z();
  const auto n = static_cast<std::size_t>(n_);
  witness_.assign(n * n, ElementSet{});
  up_.assign(n, ElementSet{});
  down_.assign(n, ElementSet{});
  dual_.assign(n, ElementSet{});
  for (int a = 0; a < n_; ++a)
    for (int sv = 0; sv < n_; ++sv) {
      if (!nn.contains(s.mul(a, sv)) || !nn.contains(s.mul(sv, a))) continue;
      for (int b = 0; b < n_; ++b) {
        if (!zz.contains(s.mul(b, sv)) || !zz.contains(s.mul(sv, b))) continue;
        if (s.mul(a, sv, b) == a && s.mul(b, sv, a) == a) {
          witness_[idx(a, b)].insert(sv);
          up_[a].insert(b);
          down_[b].insert(a);
          dual_[a].insert(sv);
        }
      }
    }
}

ElementSet DominationRelation::up_closure(ElementSet a) const {
  ElementSet out;
  a.for_each([&](Element x) { out |= up_[static_cast<std::size_t>(x)]; });
  return out;
}

ElementSet DominationRelation::dual(ElementSet a) const {
  ElementSet out;
  a.for_each([&](Element x) { out |= dual_[static_cast<std::size_t>(x)]; });
  return out;
}

std::vector<std::pair<Element, Element>> DominationRelation::pairs() const {
  std::vector<std::pair<Element, Element>> out;
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (less(a, b)) out.emplace_back(a, b);
  return out;
}

}  // namespace ssg
