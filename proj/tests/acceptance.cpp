// Acceptance run: one PASS/FAIL line per criterion with its wall-clock budget.
// Exit status is nonzero when any criterion fails or the total budget is blown.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "ssg/coset_bundle.hpp"
#include "ssg/factor.hpp"
#include "ssg/filters.hpp"
#include "ssg/morphism.hpp"
#include "ssg/sections.hpp"
#include "support.hpp"

using namespace ssg;

namespace {

// Wall-clock budgets in seconds.
constexpr double kQuickBudget = 1.0;
constexpr double kGroupoidBudget = 60.0;
constexpr double kDefaultBudget = 60.0;
constexpr double kTotalBudget = 300.0;

// Largest order on which the two coset enumerators are compared.
constexpr int kEnumeratorOrder = 16;

using Outcome = std::string;  // empty on success

struct Criterion {
  int id;
  std::string what;
  double budget;
  std::function<Outcome()> run;
};

Outcome first_failure(const Report& r, const std::string& where) {
  const Check* c = r.first_failure();
  return c ? where + ": " + c->name + ": " + c->witness : Outcome{};
}

// Some check whose name ends with `name` ran and passed.
bool ran_and_passed(const Report& r, const std::string& name) {
  for (const auto& c : r.checks())
    if (c.name.size() >= name.size() && c.name.compare(c.name.size() - name.size(), name.size(), name) == 0)
      return c.passed;
  return false;
}

Outcome require(const Report& r, const std::string& where, const std::vector<std::string>& names) {
  if (auto f = first_failure(r, where); !f.empty()) return f;
  for (const auto& n : names)
    if (!ran_and_passed(r, n)) return where + ": check did not run: " + n;
  return {};
}

std::vector<std::string> fixtures() { return semigroup_fixture_names(); }

Outcome null_example() {
  const auto d = test::dom("EX-NULL");
  const auto cosets = all_cosets(*d);
  if (cosets.size() != 1 || cosets[0] != d->sg().all()) return "cosets are not exactly {S}";
  const auto cg = std::make_shared<const CosetGroupoid>(build_coset_groupoid(d));
  const auto cb = build_coset_bundle(cg);
  const auto f = check_faithful(cb);
  if (f.faithful || !f.witness) return "reported faithful";
  const auto& s = d->sg();
  if (s.label(f.witness->first) != "0" || s.label(f.witness->second) != "a")
    return "witness (" + s.label(f.witness->first) + ", " + s.label(f.witness->second) + ")";
  return {};
}

Outcome groupoid_soundness() {
  for (const auto& name : fixtures()) {
    const auto cg = build_coset_groupoid(test::dom(name));
    if (auto f = first_failure(check_groupoid(cg.g()), name + " groupoid"); !f.empty()) return f;
    if (auto f = first_failure(check_etale(*cg.groupoid()), name + " etale"); !f.empty()) return f;
  }
  return {};
}

Outcome bundle_soundness() {
  for (const auto& name : fixtures()) {
    const auto w = build_workbench(semigroup_fixture(name));
    if (auto f = first_failure(check_etale_bundle(*w.cb->bundle()), name + " etale bundle"); !f.empty()) return f;
    if (auto f = require(bundle_laws(w), name,
                         {"fibres partition each coset into classes", "inverse independent of c and c'"});
        !f.empty())
      return f;
  }
  return {};
}

Outcome equivalence_agreement() {
  std::size_t atlases = 0;
  for (const auto& name : fixtures()) {
    const auto w = build_workbench(semigroup_fixture(name));
    atlases += w.atlases.size();
    if (auto f = require(equivalence_laws(w), name,
                         {"germ definition agrees with the Z-sandwich, one-s and coinitial forms"});
        !f.empty())
      return f;
    // the definition itself against the brute-force oracle
    const auto o = test::to_oracle(w.d->ctx());
    for (ElementSet a : w.atlases) {
      const ElementSet u = w.d->up_closure(a);
      for (int x = 0; x < o.n; ++x)
        for (int y = 0; y < o.n; ++y)
          if (u.contains(x) && u.contains(y) && equivalent(*w.d, x, y, a) != o.equiv(x, y, a.bits()))
            return name + ": oracle disagrees on " + w.d->sg().format(a);
    }
  }
  return atlases == 0 ? "no atlases" : Outcome{};
}

Outcome law_battery() {
  for (const auto& name : fixtures()) {
    const auto w = build_workbench(semigroup_fixture(name));
    if (auto f = first_failure(core_laws(w.d->ctx()), name + " core"); !f.empty()) return f;
    if (auto f = first_failure(domination_laws(*w.d), name + " order"); !f.empty()) return f;
    if (auto f = first_failure(set_laws(w), name + " sets"); !f.empty()) return f;
    if (auto f = first_failure(atlas_laws(w), name + " atlas"); !f.empty()) return f;
    if (auto f = first_failure(groupoid_laws(w), name + " groupoid"); !f.empty()) return f;
    if (auto f = first_failure(equivalence_laws(w), name + " equivalence"); !f.empty()) return f;
  }
  return {};
}

Outcome enumerators_agree() {
  int compared = 0;
  for (const auto& name : fixtures()) {
    const auto d = test::dom(name);
    if (d->order() > kEnumeratorOrder) continue;
    const auto ex = all_cosets(*d, {CosetMethod::Exhaustive, kEnumeratorOrder});
    const auto gen = all_cosets(*d, {CosetMethod::Generator, kEnumeratorOrder});
    if (ex != gen) return name + ": exhaustive and generated cosets differ";
    auto o = test::to_oracle(d->ctx()).cosets();
    std::sort(o.begin(), o.end());
    if (test::bits(ex) != o) return name + ": cosets differ from the oracle";
    ++compared;
  }
  return compared == 0 ? "no fixture compared" : Outcome{};
}

// Natural-order cosets of an inverse semigroup: nonempty, up-closed, CC^-1C within C.
Outcome inverse_specialisation() {
  const auto s = semigroup_fixture("EX-I2");
  const auto w = build_workbench(s);
  if (auto f = require(special_laws(w), "EX-I2",
                       {"inverse: a < b iff a in E(S)b", "inverse: A* = (A^-1)^<",
                        "classical coset condition matches C = C^<= = CC^-1C"});
      !f.empty())
    return f;
  const auto& sg = s.sg();
  const auto inv = *sg.inverses();
  const auto o = test::to_oracle(s);
  const int n = sg.order();
  auto below = [&](int a, int b) {
    for (int e = 0; e < n; ++e)
      if (sg.mul(e, e) == e && sg.mul(e, b) == a) return true;
    return false;
  };
  for (oracle::Mask c = 0; c < oracle::bit(n); ++c) {
    bool classical = c != 0;
    for (int a = 0; a < n && classical; ++a)
      for (int b = 0; b < n && classical; ++b)
        if (oracle::has(c, a) && below(a, b) && !oracle::has(c, b)) classical = false;
    for (int a = 0; a < n && classical; ++a)
      for (int b = 0; b < n && classical; ++b)
        for (int x = 0; x < n && classical; ++x)
          if (oracle::has(c, a) && oracle::has(c, b) && oracle::has(c, x) &&
              !oracle::has(c, sg.mul(sg.mul(a, inv[b]), x)))
            classical = false;
    if (classical != o.is_coset(c)) return "subset " + std::to_string(c) + " classical=" + std::to_string(classical);
  }
  return {};
}

Outcome representation_homomorphism() {
  int symmetric = 0;
  for (const auto& name : fixtures()) {
    const auto s = semigroup_fixture(name);
    if (!s.flags().z_symmetric) continue;
    ++symmetric;
    const auto w = build_workbench(s);
    if (auto f = require(representation_laws(w), name,
                         {"C_ab = C_a C_b", "(ab)~ = a~ b~ with dom(a~) = C_a",
                          "faithfulness conditions agree over cosets"});
        !f.empty())
      return f;
    if (s.order() <= 10 && test::to_oracle(s).slice_product_failure()) return name + ": oracle finds C_ab != C_a C_b";
  }
  return symmetric == 0 ? "no Z-symmetric fixture" : Outcome{};
}

Outcome filter_layer() {
  for (const auto& name : fixtures()) {
    const auto w = build_workbench(semigroup_fixture(name));
    if (auto f = require(filter_laws(w), name,
                         {"directed cosets form an ideal",
                          "each element of a coset lies in exactly one maximal directed subset",
                          "triangle preimage of D_a is C_a", "iota is a groupoid isomorphism"});
        !f.empty())
      return f;
    if (!is_zakrzewski(triangle_relation(w.dc)).zakrzewski) return name + ": triangle is not Zakrzewski";
    if (auto f = first_failure(is_pierce(iota_morphism(*w.cb, w.dc, w.db)), name + " iota"); !f.empty()) return f;
    if (w.d->ctx().flags().z_symmetric && !ran_and_passed(filter_laws(w), "tilde factors through iota section-wise"))
      return name + ": tilde does not factor through iota";
  }
  const auto d = test::dom("EX-CHAIN3");
  const auto ufs = ultrafilters(*d);
  if (ufs.size() != 1 || ufs[0] != test::set(d->sg(), {"e", "f"})) return "EX-CHAIN3 ultrafilters are not {{e, f}}";
  const auto cg = build_coset_groupoid(d);
  return require(check_ultrafilters(cg, ufs), "EX-CHAIN3 ultrafilters", {"unit ultrafilters are Hausdorff"});
}

Outcome factorisation() {
  int exhaustive = 0;
  auto count = [&](const Report& r) {
    for (const auto& c : r.checks())
      if (c.name.find("(exhaustive)") != std::string::npos) ++exhaustive;
  };
  for (const auto& name : fixtures()) {
    const auto w = build_workbench(semigroup_fixture(name));
    const Report r = factor_laws(w);
    if (auto f = first_failure(r, name); !f.empty()) return f;
    if (r.checks().empty()) return name + ": no factorisation ran";
    count(r);
  }
  for (const auto& name : bundle_fixture_names()) {
    const Report r = run_bundle_theorems(bundle_fixture(name));
    if (auto f = require(r, name, {"identity embedding factor: theta recovered through the induced homomorphism"});
        !f.empty())
      return f;
    count(r);
  }
  return exhaustive == 0 ? "exhaustive uniqueness scan never ran" : Outcome{};
}

Outcome morphism_calculus() {
  for (const auto& name : fixtures()) {
    const auto w = build_workbench(semigroup_fixture(name));
    if (auto f = require(morphism_laws(w), name,
                         {"star-injectivity forms agree", "star-surjectivity forms agree",
                          "composites of Zakrzewski morphisms are Zakrzewski"});
        !f.empty())
      return f;
  }
  const auto tw = twist_data();
  if (auto f = require(validate_cocycle(tw.base->g, tw.t, tw.sigma), "EX-TWIST cocycle",
                       {"normalised on units", "cocycle identity"});
      !f.empty())
    return f;
  const auto b = bundle_fixture("EX-TWIST");
  if (auto f = first_failure(check_bundle(*b), "EX-TWIST bundle"); !f.empty()) return f;

  // (g, t)^-1 = (g^-1, sigma(g, g^-1)^-1 t^-1) on raw tables
  const auto& g = tw.base->g;
  const int k = tw.t.order();
  auto group_inverse = [&](int t) {
    int one = 0;
    while (one < k && tw.t.mul(one, 0) != 0) ++one;
    for (int u = 0; u < k; ++u)
      if (tw.t.mul(u, t) == one) return u;
    return -1;
  };
  for (int x = 0; x < g.size(); ++x)
    for (int t = 0; t < k; ++t) {
      const int gi = g.inv(x);
      const int sig = tw.sigma[static_cast<std::size_t>(x * g.size() + gi)];
      const int expect = gi * k + tw.t.mul(group_inverse(sig), group_inverse(t));
      if (b->total->g.inv(x * k + t) != expect) return "EX-TWIST inverse of " + b->total->g.label(x * k + t);
    }
  return {};
}

Outcome sections_layer() {
  const auto b = bundle_fixture("EX-TRIV");
  const auto ss = slice_sections(b);
  // sum over slices B of the base of |T|^|B|, by direct subset scan
  const auto& base = b->base->g;
  if (b->base->t.neighbourhoods() != FiniteTopology::discrete(base.size()).neighbourhoods()) return "base not discrete";
  const int fibre = static_cast<int>(std::count(b->proj.begin(), b->proj.end(), 0));
  long long closed = 0;
  for (oracle::Mask m = 0; m < oracle::bit(base.size()); ++m) {
    bool slice = true;
    long long term = 1;
    for (int x = 0; x < base.size(); ++x) {
      if (!oracle::has(m, x)) continue;
      term *= fibre;
      for (int y = 0; y < x; ++y)
        if (oracle::has(m, y) && (base.src(x) == base.src(y) || base.rng(x) == base.rng(y))) slice = false;
    }
    if (slice) closed += term;
  }
  if (ss.elements.size() != 17 || closed != 17)
    return std::to_string(ss.elements.size()) + " sections, closed form " + std::to_string(closed);
  for (const auto& name : bundle_fixture_names()) {
    const auto sec = slice_sections(bundle_fixture(name));
    const auto flags = analyze_structure(sec.sg, sec.n_pi, sec.e);
    if (!flags.structured) return name + ": sections not structured: " + flags.violation;
    if (auto f = first_failure(domination_matches_domains(sec, sec.sg.all(), sec.n_pi, sec.e), name + " domains");
        !f.empty())
      return f;
    if (!diagonal_is_diagonal(sec)) return name + ": N(pi) not diagonal";
  }
  return {};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "null semigroup has the single coset S and is unfaithful at (0, a)", kQuickBudget, null_example},
      {2, "coset groupoids are etale groupoids on every fixture", kGroupoidBudget, groupoid_soundness},
      {3, "coset bundles are etale bundles with well-defined inverses", kDefaultBudget, bundle_soundness},
      {4, "four characterisations of the germ relation agree", kDefaultBudget, equivalence_agreement},
      {5, "domination, set and atlas laws", kDefaultBudget, law_battery},
      {6, "exhaustive and generated coset enumeration agree", kDefaultBudget, enumerators_agree},
      {7, "inverse-semigroup specialisation on I_2", kDefaultBudget, inverse_specialisation},
      {8, "coset representation is multiplicative under symmetric Z", kDefaultBudget, representation_homomorphism},
      {9, "directed cosets, triangle morphism, iota and ultrafilters", kDefaultBudget, filter_layer},
      {10, "factorisation through the coset and directed groupoids", kDefaultBudget, factorisation},
      {11, "Zakrzewski calculus and the twisted bundle", kDefaultBudget, morphism_calculus},
      {12, "slice-section semigroups", kDefaultBudget, sections_layer},
  };
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = std::string("threw ") + e.what();
    }
    const double secs = std::chrono::duration<double>(clock::now() - t0).count();
    if (out.empty() && secs > c.budget) out = "over budget";
    failed += !out.empty();
    std::printf("%s criterion %d: %s (%.3f s, budget %.0f s)%s%s\n", out.empty() ? "PASS" : "FAIL", c.id,
                c.what.c_str(), secs, c.budget, out.empty() ? "" : ": ", out.c_str());
  }
  const double total = std::chrono::duration<double>(clock::now() - start).count();
  std::printf("total %.3f s (budget %.0f s), %d failed\n", total, kTotalBudget, failed);
  return failed == 0 && total <= kTotalBudget ? 0 : 1;
}
