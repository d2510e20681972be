#include "ssg/semigroup.hpp"

#include "ssg/error.hpp"

namespace ssg {

FiniteSemigroup FiniteSemigroup::from_table(const std::vector<std::vector<int>>& mul,
                                            std::vector<std::string> labels) {
  const int n = static_cast<int>(mul.size());
  if (n == 0) throw Error(ErrorKind::InvalidTable, "empty table");
  if (n > kMaxOrder)
    throw Error(ErrorKind::OrderTooLarge, "order " + std::to_string(n) + " exceeds " + std::to_string(kMaxOrder));
  FiniteSemigroup s;
  s.n_ = n;
  s.table_.reserve(static_cast<std::size_t>(n * n));
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(mul[a].size()) != n)
      throw Error(ErrorKind::InvalidTable, "row " + std::to_string(a) + " has wrong length", {a});
    for (int b = 0; b < n; ++b) {
      int v = mul[a][b];
      if (v < 0 || v >= n)
        throw Error(ErrorKind::OutOfRange, "entry out of range at (" + std::to_string(a) + "," + std::to_string(b) + ")",
                    {a, b});
      s.table_.push_back(v);
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (s.mul(s.mul(a, b), c) != s.mul(a, s.mul(b, c)))
          throw Error(ErrorKind::NotAssociative,
                      "(ab)c != a(bc) for " + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c),
                      {a, b, c});
  if (labels.empty()) {
    for (int a = 0; a < n; ++a) labels.push_back(std::to_string(a));
  } else if (static_cast<int>(labels.size()) != n) {
    throw Error(ErrorKind::InvalidTable, "label count does not match order");
  }
  s.labels_ = std::move(labels);
  return s;
}

ElementSet FiniteSemigroup::mul(ElementSet a, ElementSet b) const {
  ElementSet out;
  a.for_each([&](Element x) { b.for_each([&](Element y) { out.insert(mul(x, y)); }); });
  return out;
}

std::string FiniteSemigroup::format(ElementSet s) const {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Element x) {
    if (!first) out += ",";
    out += label(x);
    first = false;
  });
  return out + "}";
}

std::vector<std::vector<int>> FiniteSemigroup::table() const {
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n_), std::vector<int>(static_cast<std::size_t>(n_)));
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) t[a][b] = mul(a, b);
  return t;
}

bool FiniteSemigroup::is_subsemigroup(ElementSet s) const { return mul(s, s).subset_of(s); }

ElementSet FiniteSemigroup::idempotents() const {
  ElementSet e;
  for (int a = 0; a < n_; ++a)
    if (mul(a, a) == a) e.insert(a);
  return e;
}

std::optional<Element> FiniteSemigroup::zero() const {
  for (int z = 0; z < n_; ++z) {
    bool ok = true;
    for (int s = 0; s < n_ && ok; ++s) ok = mul(z, s) == z && mul(s, z) == z;
    if (ok) return z;
  }
  return std::nullopt;
}

std::optional<std::vector<Element>> FiniteSemigroup::inverses() const {
  std::vector<Element> inv(static_cast<std::size_t>(n_));
  for (int a = 0; a < n_; ++a) {
    int count = 0;
    for (int b = 0; b < n_; ++b)
      if (mul(a, b, a) == a && mul(b, a, b) == b) {
        inv[a] = b;
        ++count;
      }
    if (count != 1) return std::nullopt;
  }
  return inv;
}

bool FiniteSemigroup::is_commutative() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

ElementSet centre_of(const FiniteSemigroup& s, ElementSet c) {
  ElementSet out;
  c.for_each([&](Element z) {
    bool central = true;
    c.for_each([&](Element x) { central = central && s.mul(x, z) == s.mul(z, x); });
    if (central) out.insert(z);
  });
  return out;
}

bool is_normal(const FiniteSemigroup& s, ElementSet y) {
  for (int a = 0; a < s.order(); ++a)
    if (s.mul(a, y) != s.mul(y, a)) return false;
  return true;
}

bool is_symmetric(const FiniteSemigroup& s, ElementSet y) {
  for (int a = 0; a < s.order(); ++a)
    for (int b = 0; b < s.order(); ++b)
      if (y.contains(s.mul(a, b))) {
        Element ba = s.mul(b, a);
        if (!y.contains(s.mul(ba, ba))) return false;
      }
  return true;
}

bool is_diagonal(const FiniteSemigroup& s, ElementSet y) {
  const int n = s.order();
  bool ok = true;
  y.for_each([&](Element d) {
    for (int a = 0; a < n && ok; ++a) {
      if (!y.contains(s.mul(a, d))) continue;
      for (int b = 0; b < n && ok; ++b)
        if (y.contains(s.mul(d, b)) && !y.contains(s.mul(a, d, b))) ok = false;
    }
  });
  return ok;
}

namespace {

// ab, ba in z implies aYb and bYa inside y
bool binormal_wrt(const FiniteSemigroup& s, ElementSet y, ElementSet z, std::vector<Element>* witness) {
  const int n = s.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!z.contains(s.mul(a, b)) || !z.contains(s.mul(b, a))) continue;
      bool bad = false;
      y.for_each([&](Element m) {
        if (bad) return;
        if (!y.contains(s.mul(a, m, b)) || !y.contains(s.mul(b, m, a))) {
          bad = true;
          if (witness) *witness = {a, b, m};
        }
      });
      if (bad) return false;
    }
  return true;
}

bool trinormal(const FiniteSemigroup& s, ElementSet n_set, ElementSet z, std::vector<Element>* witness) {
  const int n = s.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Element ab = s.mul(a, b);
      if (!z.contains(ab) || !z.contains(s.mul(b, a))) continue;
      bool bad = false;
      n_set.for_each([&](Element m) {
        if (bad) return;
        if (s.mul(ab, m) == m && s.mul(m, ab) == m && !n_set.contains(s.mul(b, m, a))) {
          bad = true;
          if (witness) *witness = {a, b, m};
        }
      });
      if (bad) return false;
    }
  return true;
}

}  // namespace

bool is_binormal(const FiniteSemigroup& s, ElementSet y) { return binormal_wrt(s, y, y, nullptr); }

StructureFlags analyze_structure(const FiniteSemigroup& s, ElementSet n, ElementSet z) {
  StructureFlags f;
  auto fail = [&](const char* what, std::vector<Element> w) {
    if (f.violation.empty()) {
      f.violation = what;
      f.witness = std::move(w);
    }
  };
  const ElementSet all = s.all();
  if (!n.subset_of(all) || !z.subset_of(all)) throw Error(ErrorKind::OutOfRange, "N or Z outside the semigroup");

  f.n_subsemigroup = s.is_subsemigroup(n);
  if (!f.n_subsemigroup) fail("NotSubsemigroup(N)", {});
  f.z_subsemigroup = s.is_subsemigroup(z);
  if (!f.z_subsemigroup) fail("NotSubsemigroup(Z)", {});

  f.z_central_in_n = z.subset_of(n);
  if (!f.z_central_in_n) fail("ZNotCentralInN", (z - n).to_vector());
  if (f.z_central_in_n) {
    z.for_each([&](Element x) {
      n.for_each([&](Element m) {
        if (f.z_central_in_n && s.mul(x, m) != s.mul(m, x)) {
          f.z_central_in_n = false;
          fail("ZNotCentralInN", {x, m});
        }
      });
    });
  }

  std::vector<Element> w;
  f.z_binormal = binormal_wrt(s, z, z, &w);
  if (!f.z_binormal) fail("BinormalityFails", w);
  f.n_trinormal = trinormal(s, n, z, &w);
  if (!f.n_trinormal) fail("TrinormalityFails", w);

  f.structured = f.n_subsemigroup && f.z_subsemigroup && f.z_central_in_n && f.z_binormal && f.n_trinormal;

  f.n_normal = is_normal(s, n);
  f.z_normal = is_normal(s, z);
  f.n_binormal = binormal_wrt(s, n, n, nullptr);
  f.z_symmetric = is_symmetric(s, z);
  f.n_diagonal = is_diagonal(s, n);
  f.z_diagonal = is_diagonal(s, z);
  if (auto zero = s.zero(); zero && z.contains(*zero)) f.zero = zero;
  return f;
}

StructuredSemigroup make_structured_unchecked(FiniteSemigroup s, ElementSet n, ElementSet z) {
  StructuredSemigroup out;
  out.flags_ = analyze_structure(s, n, z);
  out.s_ = std::move(s);
  out.n_ = n;
  out.z_ = z;
  return out;
}

StructuredSemigroup validate_structured(FiniteSemigroup s, ElementSet n, ElementSet z) {
  StructuredSemigroup out = make_structured_unchecked(std::move(s), n, z);
  const auto& f = out.flags_;
  if (!f.structured) {
    ErrorKind k = ErrorKind::NotStructured;
    if (f.violation.rfind("NotSubsemigroup", 0) == 0) k = ErrorKind::NotSubsemigroup;
    else if (f.violation == "ZNotCentralInN") k = ErrorKind::ZNotCentralInN;
    else if (f.violation == "BinormalityFails") k = ErrorKind::BinormalityFails;
    else if (f.violation == "TrinormalityFails") k = ErrorKind::TrinormalityFails;
    throw Error(k, f.violation, f.witness);
  }
  return out;
}

}  // namespace ssg
