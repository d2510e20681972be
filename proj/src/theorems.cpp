#include "ssg/theorems.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "ssg/error.hpp"
#include "ssg/spectrum.hpp"

namespace ssg {

namespace {

// Runs body with a fail(witness) callback and records one check; the first
// witness wins.
template <class F>
void law(Report& r, std::string name, F&& body) {
  bool ok = true;
  std::string w;
  std::function<void(const std::string&)> fail = [&](const std::string& why) {
    if (ok) {
      ok = false;
      w = why;
    }
  };
  body(fail);
  r.add(std::move(name), ok, std::move(w));
}

std::string tuple(const FiniteSemigroup& s, std::initializer_list<Element> xs) {
  std::string out = "(";
  for (Element x : xs) out += (out.size() > 1 ? "," : "") + s.label(x);
  return out + ")";
}

struct Triple {
  Element a, s, b;  // a <_s b
};

std::vector<Triple> triples(const DominationRelation& d) {
  std::vector<Triple> out;
  for (int a = 0; a < d.order(); ++a)
    for (int b = 0; b < d.order(); ++b) d.witnesses(a, b).for_each([&](Element s) { out.push_back({a, s, b}); });
  return out;
}

std::vector<ElementSet> all_subsets(int n) {
  std::vector<ElementSet> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) out.emplace_back(m);
  return out;
}

// Subsets fed to the set-level laws.  Products, duals and up-closures all
// preserve unions, so singletons already decide the laws; the rest is extra.
std::vector<ElementSet> scan_sets(const Workbench& w, int max_exhaustive = kSubsetScanOrder) {
  const auto& d = *w.d;
  if (d.order() <= max_exhaustive) return all_subsets(d.order());
  std::vector<ElementSet> out{ElementSet{}};
  for (int a = 0; a < d.order(); ++a) out.push_back(ElementSet::single(a));
  out.insert(out.end(), w.atlases.begin(), w.atlases.end());
  for (const auto& c : w.cg->cosets()) out.push_back(c.members);
  sort_canonical(out);
  return out;
}

// Nonempty directed subsets fed to the filter laws.
std::vector<ElementSet> directed_sets(const Workbench& w) {
  const auto& d = *w.d;
  std::vector<ElementSet> out;
  if (d.order() <= kSubsetScanOrder) {
    for (ElementSet a : all_subsets(d.order()))
      if (!a.empty() && is_directed(d, a)) out.push_back(a);
    return out;
  }
  for (int i : w.dc.ids) out.push_back(w.cg->coset(i).members);
  for (const auto& c : w.cg->cosets())
    for (ElementSet m : maximal_directed_subsets(d, c.members)) out.push_back(m);
  sort_canonical(out);
  return out;
}

bool injective(const std::vector<SliceSection>& xs) {
  std::set<SliceSection> seen(xs.begin(), xs.end());
  return seen.size() == xs.size();
}

// Some C in the family meets {a, b} with a and b in different classes.
bool separated(const DominationRelation& d, ElementSet c, Element a, Element b) {
  const bool ia = c.contains(a), ib = c.contains(b);
  if (ia != ib) return true;
  return ia && !equivalent(d, a, b, c);
}

std::vector<PointSet> slices_or_basis(const TopGroupoid& g) {
  try {
    return all_slices(g.g, 1u << 16);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::TooManyOpens) throw;
  }
  std::vector<PointSet> out;
  for (const auto& u : g.t.neighbourhoods())
    if (is_slice(g.g, u)) out.push_back(u);
  return out;
}

}  // namespace

Workbench build_workbench(const StructuredSemigroup& s, const CosetOptions& opts) {
  Workbench w;
  w.d = make_domination(s);
  w.cg = std::make_shared<const CosetGroupoid>(build_coset_groupoid(w.d, opts));
  w.cb = std::make_shared<const CosetBundle>(build_coset_bundle(w.cg));
  w.dc = directed_cosets(w.cg);
  w.db = directed_bundle(*w.cb, w.dc);
  for (ElementSet a : all_atlases(*w.d, opts.max_exhaustive_order))
    if (!a.empty()) w.atlases.push_back(a);
  return w;
}

Report core_laws(const StructuredSemigroup& ctx) {
  Report r;
  const auto& s = ctx.sg();
  const int n = s.order();
  law(r, "associativity", [&](auto& fail) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (s.mul(s.mul(a, b), c) != s.mul(a, s.mul(b, c))) fail(tuple(s, {a, b, c}));
  });

  // Candidate subsemigroups: all of them on small orders, the given ones otherwise.
  std::vector<ElementSet> cands{ctx.N(), ctx.Z(), s.idempotents()};
  if (n <= 10)
    for (ElementSet y : all_subsets(n))
      if (!y.empty() && s.is_subsemigroup(y)) cands.push_back(y);
  sort_canonical(cands);

  law(r, "normal subsemigroups are binormal", [&](auto& fail) {
    for (ElementSet y : cands)
      if (s.is_subsemigroup(y) && is_normal(s, y) && !is_binormal(s, y)) fail(s.format(y));
  });
  law(r, "binormal N is Z-trinormal for Z within N", [&](auto& fail) {
    for (ElementSet y : cands) {
      if (!s.is_subsemigroup(y) || !is_binormal(s, y)) continue;
      std::vector<ElementSet> zs{y};
      if (ctx.Z().subset_of(y)) zs.push_back(ctx.Z());
      if (n <= 7)
        for (ElementSet z : all_subsets(n))
          if (z.subset_of(y)) zs.push_back(z);
      for (ElementSet z : zs)
        if (!analyze_structure(s, y, z).n_trinormal) fail(s.format(y) + " with Z=" + s.format(z));
    }
  });
  law(r, "commutative binormal C gives a structured (S, C, C)", [&](auto& fail) {
    for (ElementSet y : cands) {
      if (!s.is_subsemigroup(y) || !is_binormal(s, y)) continue;
      bool comm = true;
      y.for_each([&](Element a) { y.for_each([&](Element b) { comm = comm && s.mul(a, b) == s.mul(b, a); }); });
      if (comm && !analyze_structure(s, y, y).structured) fail(s.format(y));
    }
  });
  return r;
}

Report domination_laws(const DominationRelation& d) {
  Report r;
  const auto& s = d.sg();
  const int n = d.order();
  const ElementSet nn = d.ctx().N(), zz = d.ctx().Z();
  const auto& f = d.ctx().flags();
  const auto ts = triples(d);
  std::vector<std::vector<Triple>> from(static_cast<std::size_t>(n));
  for (const auto& t : ts) from[static_cast<std::size_t>(t.a)].push_back(t);
  auto mul3 = [&](Element a, Element b, Element c) { return d.mul(d.mul(a, b), c); };

  law(r, "one-sided characterisations of domination", [&](auto& fail) {
    for (int a = 0; a < n; ++a)
      for (int sv = 0; sv < n; ++sv)
        for (int b = 0; b < n; ++b) {
          const bool def = d.dominates(a, sv, b);
          const bool z = zz.contains(d.mul(b, sv)) && zz.contains(d.mul(sv, b));
          const bool right = mul3(a, sv, b) == a && nn.contains(d.mul(a, sv)) && z;
          const bool left = mul3(b, sv, a) == a && nn.contains(d.mul(sv, a)) && z;
          if (def != right || def != left) fail(tuple(s, {a, sv, b}));
        }
  });
  law(r, "transitivity", [&](auto& fail) {
    for (const auto& t1 : ts)
      for (const auto& t2 : from[static_cast<std::size_t>(t1.b)])
        if (!d.dominates(t1.a, t2.s, t2.b)) fail(tuple(s, {t1.a, t1.s, t1.b, t2.s, t2.b}));
  });
  law(r, "switch", [&](auto& fail) {
    for (int a = 0; a < n; ++a)
      for (const auto& t : ts)
        if (nn.contains(d.mul(a, t.a)) && !d.dominates(mul3(a, t.a, t.s), t.b, t.s))
          fail(tuple(s, {a, t.a, t.s, t.b}));
  });
  law(r, "multiplicativity", [&](auto& fail) {
    for (const auto& t1 : ts)
      for (const auto& t2 : ts)
        if (!d.dominates(d.mul(t1.a, t2.a), d.mul(t2.s, t1.s), d.mul(t1.b, t2.b)))
          fail(tuple(s, {t1.a, t1.s, t1.b, t2.a, t2.s, t2.b}));
  });
  law(r, "N-invariance", [&](auto& fail) {
    for (const auto& t : ts)
      nn.for_each([&](Element m) {
        if (!d.dominates(d.mul(t.a, m), t.s, t.b) || !d.dominates(d.mul(m, t.a), t.s, t.b))
          fail(tuple(s, {t.a, t.s, t.b, m}));
      });
  });
  law(r, "Z-invariance", [&](auto& fail) {
    for (const auto& t : ts)
      zz.for_each([&](Element z) {
        if (d.mul(t.a, z) == t.a && (!d.dominates(t.a, t.s, d.mul(t.b, z)) || !d.dominates(t.a, d.mul(z, t.s), t.b)))
          fail(tuple(s, {t.a, t.s, t.b, z}));
      });
  });
  law(r, "Z-splitting", [&](auto& fail) {
    for (const auto& t : ts)
      for (int c = 0; c < n; ++c)
        for (int cp = 0; cp < n; ++cp)
          if (zz.contains(d.mul(c, cp)) && zz.contains(d.mul(cp, c)) && mul3(t.a, c, cp) == t.a &&
              !d.dominates(d.mul(t.a, c), d.mul(cp, t.s), d.mul(t.b, c)))
            fail(tuple(s, {t.a, t.s, t.b, c, cp}));
  });

  if (f.n_diagonal) {
    law(r, "exchange (N diagonal)", [&](auto& fail) {
      for (const auto& t : ts)
        for (int a = 0; a < n; ++a)
          for (int c = 0; c < n; ++c)
            if (nn.contains(d.mul(a, t.a)) && nn.contains(d.mul(t.a, c)) && !d.dominates(mul3(a, t.a, c), t.b, t.s))
              fail(tuple(s, {a, t.a, c, t.s, t.b}));
    });
    law(r, "*-transitivity (N diagonal)", [&](auto& fail) {
      for (const auto& t1 : ts)
        for (const auto& t2 : from[static_cast<std::size_t>(t1.s)])
          if (!d.dominates(t1.a, t2.b, t2.s)) fail(tuple(s, {t1.a, t1.s, t1.b, t2.s, t2.b}));
    });
  }

  if (f.z_symmetric) {
    law(r, "one-sided upgrades (Z symmetric)", [&](auto& fail) {
      for (int a = 0; a < n; ++a)
        for (int sv = 0; sv < n; ++sv)
          for (int b = 0; b < n; ++b) {
            if (!zz.contains(d.mul(b, sv)) && !zz.contains(d.mul(sv, b))) continue;
            const bool right = mul3(a, sv, b) == a && nn.contains(d.mul(a, sv));
            const bool left = mul3(b, sv, a) == a && nn.contains(d.mul(sv, a));
            if ((right || left) && (!d.dominates(a, sv, mul3(b, sv, b)) || !d.dominates(a, mul3(sv, b, sv), b)))
              fail(tuple(s, {a, sv, b}));
          }
    });
    law(r, "a <_{b'} nb implies a <_{b'nbb'n} b (Z symmetric)", [&](auto& fail) {
      for (const auto& t : ts)
        nn.for_each([&](Element m) {
          for (int b = 0; b < n; ++b)
            if (d.mul(m, b) == t.b && !d.dominates(t.a, d.mul(mul3(t.s, m, b), d.mul(t.s, m)), b))
              fail(tuple(s, {t.a, t.s, m, b}));
        });
    });
    if (f.n_diagonal)
      law(r, "a <_{b'n} b implies a <_{b'nbb'n} b (Z symmetric, N diagonal)", [&](auto& fail) {
        for (const auto& t : ts)
          for (int bp = 0; bp < n; ++bp)
            nn.for_each([&](Element m) {
              if (d.mul(bp, m) == t.s && !d.dominates(t.a, d.mul(mul3(bp, m, t.b), d.mul(bp, m)), t.b))
                fail(tuple(s, {t.a, bp, m, t.b}));
            });
      });
  }
  return r;
}

Report set_laws(const Workbench& w) {
  Report r;
  const auto& d = *w.d;
  const auto& s = d.sg();
  const auto sets = scan_sets(w);
  auto up = [&](ElementSet a) { return d.up_closure(a); };
  auto st = [&](ElementSet a) { return d.dual(a); };

  law(r, "antimorphism A*B* within (BA)*", [&](auto& fail) {
    const auto xs = scan_sets(w, kPairScanOrder);
    for (ElementSet a : xs)
      for (ElementSet b : xs)
        if (!d.mul(st(a), st(b)).subset_of(st(d.mul(b, a)))) fail(s.format(a) + " " + s.format(b));
  });
  law(r, "A^<* within A^*< and A^<< within A^**", [&](auto& fail) {
    for (ElementSet a : sets)
      if (!st(up(a)).subset_of(up(st(a))) || !up(up(a)).subset_of(st(st(a)))) fail(s.format(a));
  });
  law(r, "A nonempty within A^< has nonempty A*", [&](auto& fail) {
    for (ElementSet a : sets)
      if (!a.empty() && a.subset_of(up(a)) && st(a).empty()) fail(s.format(a));
  });
  law(r, "AA*A within A gives A^<* = A^*< within A* and A^<< = A^**", [&](auto& fail) {
    for (ElementSet a : sets) {
      if (!d.mul(d.mul(a, st(a)), a).subset_of(a)) continue;
      if (st(up(a)) != up(st(a)) || !up(st(a)).subset_of(st(a)) || up(up(a)) != st(st(a))) fail(s.format(a));
    }
  });
  if (d.ctx().flags().n_diagonal)
    law(r, "C^*< within C*, C** = C^<<, C*** within C* (N diagonal)", [&](auto& fail) {
      for (ElementSet c : sets)
        if (!up(st(c)).subset_of(st(c)) || st(st(c)) != up(up(c)) || !st(st(st(c))).subset_of(st(c)))
          fail(s.format(c));
    });
  return r;
}

Report atlas_laws(const Workbench& w) {
  Report r;
  const auto& d = *w.d;
  const auto& s = d.sg();
  const int n = d.order();
  const ElementSet nn = d.ctx().N(), zz = d.ctx().Z();
  auto up = [&](ElementSet a) { return d.up_closure(a); };
  auto st = [&](ElementSet a) { return d.dual(a); };
  auto single = [](Element x) { return ElementSet::single(x); };

  law(r, "atlases give cosets A* and A^< = A** containing A", [&](auto& fail) {
    for (ElementSet a : w.atlases)
      if (!is_coset(d, st(a)) || !is_coset(d, up(a)) || up(a) != st(st(a)) || !a.subset_of(up(a)))
        fail(s.format(a));
  });
  law(r, "A within B with A* = B* gives (Ac)* = (Bc)*", [&](auto& fail) {
    for (ElementSet a : w.atlases)
      for (ElementSet b : w.atlases) {
        if (!a.subset_of(b) || st(a) != st(b)) continue;
        for (int c = 0; c < n; ++c)
          if (st(d.mul(a, single(c))) != st(d.mul(b, single(c)))) fail(s.format(a) + " " + s.format(b) + " " + s.label(c));
      }
  });
  law(r, "A*A within (BB*)^< makes AB an atlas with a|B and (aB)* = (AB)*", [&](auto& fail) {
    for (ElementSet a : w.atlases)
      for (ElementSet b : w.atlases) {
        if (!d.mul(st(a), a).subset_of(up(d.mul(b, st(b))))) continue;
        const ElementSet ab = d.mul(a, b);
        if (!is_atlas(d, ab) || !is_coset(d, st(ab))) fail(s.format(a) + " " + s.format(b));
        a.for_each([&](Element x) {
          if (!acts_left(d, x, b) || st(d.mul(single(x), b)) != st(ab)) fail(s.format(a) + " " + s.format(b) + " " + s.label(x));
        });
      }
  });
  law(r, "A|b makes Ab an atlas with r(Ab) = r(A)", [&](auto& fail) {
    for (ElementSet a : w.atlases)
      for (int b = 0; b < n; ++b) {
        if (!acts_right(d, a, b)) continue;
        const ElementSet ab = d.mul(a, single(b));
        if (!is_atlas(d, ab) || range(d, ab) != range(d, a)) fail(s.format(a) + " " + s.label(b));
      }
  });
  law(r, "A|n iff n in s(A), and then (An)^< = A^<", [&](auto& fail) {
    for (ElementSet a : w.atlases)
      nn.for_each([&](Element m) {
        const bool acts = acts_right(d, a, m);
        if (acts != source(d, a).contains(m) || (acts && up(d.mul(a, single(m))) != up(a)))
          fail(s.format(a) + " " + s.label(m));
      });
  });
  law(r, "source and range are (A*A)^< and (AA*)^<", [&](auto& fail) {
    for (ElementSet a : w.atlases)
      if (source(d, a) != up(d.mul(st(a), a)) || range(d, a) != up(d.mul(a, st(a)))) fail(s.format(a));
  });
  law(r, "atlases close to their up-closure", [&](auto& fail) {
    for (ElementSet a : w.atlases)
      if (coset_closure(d, a) != up(a)) fail(s.format(a));
  });
  if (d.ctx().flags().z_symmetric)
    law(r, "abb' = a in A with bb' in Z gives A|b (Z symmetric)", [&](auto& fail) {
      for (ElementSet a : w.atlases)
        for (int b = 0; b < n; ++b)
          for (int bp = 0; bp < n; ++bp) {
            if (!zz.contains(d.mul(b, bp))) continue;
            bool hit = false;
            a.for_each([&](Element x) { hit = hit || d.mul(x, d.mul(b, bp)) == x; });
            if (hit && !acts_right(d, a, b)) fail(s.format(a) + " " + tuple(s, {b, bp}));
          }
    });

  law(r, "A^Z is a subsemigroup of Z", [&](auto& fail) {
    for (ElementSet a : w.atlases) {
      const ElementSet az = z_right(d, a);
      if (!az.subset_of(zz) || !d.mul(az, az).subset_of(az)) fail(s.format(a));
    }
  });
  law(r, "A^Z = A^<Z = Z(A*) = (A^Z)^Z = s(A)^Z within s(A)", [&](auto& fail) {
    for (ElementSet a : w.atlases) {
      const ElementSet az = z_right(d, a);
      if (az != z_right(d, up(a)) || az != z_left(d, st(a)) || az != z_right(d, az) ||
          az != z_right(d, source(d, a)) || !az.subset_of(source(d, a)))
        fail(s.format(a));
    }
  });
  law(r, "A containing a'' <_{a'} a gives a' ZA a within A^Z", [&](auto& fail) {
    for (ElementSet a : w.atlases) {
      const ElementSet za = z_left(d, a), az = z_right(d, a);
      a.for_each([&](Element low) {
        d.above(low).for_each([&](Element x) {
          d.witnesses(low, x).for_each([&](Element ap) {
            if (!d.mul(d.mul(single(ap), za), single(x)).subset_of(az)) fail(s.format(a) + " " + tuple(s, {low, ap, x}));
          });
        });
      });
    }
  });
  law(r, "a in A below something gives ZA a = a A^Z", [&](auto& fail) {
    for (ElementSet a : w.atlases)
      a.for_each([&](Element x) {
        if (d.above(x).empty()) return;
        if (d.mul(z_left(d, a), single(x)) != d.mul(single(x), z_right(d, a))) fail(s.format(a) + " " + s.label(x));
      });
  });
  return r;
}

Report equivalence_laws(const Workbench& w) {
  Report r;
  const auto& d = *w.d;
  const auto& s = d.sg();
  auto up = [&](ElementSet a) { return d.up_closure(a); };

  law(r, "germ definition agrees with the Z-sandwich, one-s and coinitial forms", [&](auto& fail) {
    for (ElementSet atlas : w.atlases) {
      const ElementSet u = up(atlas), du = d.dual(atlas);
      const ElementSet za = z_left(d, atlas), az = z_right(d, atlas);
      std::vector<ElementSet> coinitial;
      if (du.size() <= kCoinitialScanSize) {
        const auto mem = du.to_vector();
        for (std::uint64_t m = 1; m < (std::uint64_t{1} << mem.size()); ++m) {
          ElementSet sub;
          for (std::size_t i = 0; i < mem.size(); ++i)
            if ((m >> i) & 1U) sub.insert(mem[i]);
          if (up(sub) == du) coinitial.push_back(sub);
        }
      }
      u.for_each([&](Element a) {
        u.for_each([&](Element b) {
          const bool def = equivalent(d, a, b, atlas);
          const bool sandwich = d.mul(d.mul(za, ElementSet::single(a)), az).intersects(
              d.mul(d.mul(za, ElementSet::single(b)), az));
          bool one_s = false;
          ElementSet agree;
          du.for_each([&](Element x) {
            const Element xa = d.mul(x, a), ax = d.mul(a, x);
            if (xa == d.mul(x, b) && az.contains(xa) && ax == d.mul(b, x) && za.contains(ax)) one_s = true;
            if (ax == d.mul(b, x)) agree.insert(x);
          });
          bool coin = true;
          if (du.size() <= kCoinitialScanSize) {
            for (ElementSet sub : coinitial) coin = coin && (sub.intersects(agree) == def);
          } else {
            // A* is up-closed, so some coinitial subfamily avoids agree iff A* - agree
            // is coinitial, and some meets agree iff A* does.
            coin = def ? up(du - agree) != du : agree.empty();
          }
          if (def != sandwich || def != one_s || !coin)
            fail(s.format(atlas) + " " + tuple(s, {a, b}) + " def=" + std::to_string(def) + " sandwich=" +
                 std::to_string(sandwich) + " one-s=" + std::to_string(one_s) + " coinitial=" + std::to_string(coin));
        });
      });
    }
  });

  law(r, "equivalence relation on A^<", [&](auto& fail) {
    for (ElementSet atlas : w.atlases) {
      const auto u = up(atlas).to_vector();
      for (Element a : u)
        for (Element b : u) {
          const bool ab = equivalent(d, a, b, atlas);
          if (a == b && !ab) fail(s.format(atlas) + " reflexive " + s.label(a));
          if (ab != equivalent(d, b, a, atlas)) fail(s.format(atlas) + " symmetric " + tuple(s, {a, b}));
          if (!ab) continue;
          for (Element c : u)
            if (equivalent(d, b, c, atlas) && !equivalent(d, a, c, atlas))
              fail(s.format(atlas) + " transitive " + tuple(s, {a, b, c}));
        }
    }
  });
  law(r, "ya ~ a ~ az for y in ZA and z in A^Z", [&](auto& fail) {
    for (ElementSet atlas : w.atlases) {
      const ElementSet u = up(atlas);
      u.for_each([&](Element a) {
        z_left(d, atlas).for_each([&](Element y) {
          const Element ya = d.mul(y, a);
          if (!u.contains(ya) || !equivalent(d, ya, a, atlas)) fail(s.format(atlas) + " " + tuple(s, {y, a}));
        });
        z_right(d, atlas).for_each([&](Element z) {
          const Element az = d.mul(a, z);
          if (!u.contains(az) || !equivalent(d, a, az, atlas)) fail(s.format(atlas) + " " + tuple(s, {a, z}));
        });
      });
    }
  });
  law(r, "classes multiply into classes when s(A) = r(B)", [&](auto& fail) {
    for (ElementSet a : w.atlases)
      for (ElementSet b : w.atlases) {
        if (source(d, a) != range(d, b)) continue;
        const ElementSet ab = d.mul(a, b);
        if (!is_atlas(d, ab)) {
          fail(s.format(a) + " " + s.format(b) + " product not an atlas");
          continue;
        }
        for (ElementSet k : equivalence_classes(d, a))
          for (ElementSet l : equivalence_classes(d, b)) {
            const ElementSet kl = d.mul(k, l);
            const Element first = kl.first();
            kl.for_each([&](Element x) {
              if (!equivalent(d, first, x, ab)) fail(s.format(a) + " " + s.format(b) + " " + s.format(kl));
            });
          }
      }
  });
  return r;
}

Report enumerator_laws(const Workbench& w) {
  Report r;
  const auto& d = *w.d;
  auto ex = all_cosets(d, {CosetMethod::Exhaustive, 24});
  auto gen = all_cosets(d, {CosetMethod::Generator, 24});
  r.add("exhaustive and generated cosets agree", ex == gen,
        std::to_string(ex.size()) + " exhaustive vs " + std::to_string(gen.size()) + " generated");
  law(r, "closed sets of the closure operator that are nonempty and round are the cosets", [&](auto& fail) {
    std::vector<ElementSet> closed;
    for (ElementSet c : closed_sets(d))
      if (!c.empty() && is_round(d, c)) closed.push_back(c);
    sort_canonical(closed);
    if (closed != ex) fail(std::to_string(closed.size()) + " round closed sets");
  });
  return r;
}

Report groupoid_laws(const Workbench& w) {
  Report r;
  const auto& cg = *w.cg;
  const auto& d = *w.d;
  const auto& s = d.sg();
  const auto& g = cg.g();
  r.merge(check_groupoid(g), "groupoid: ");
  r.merge(check_etale(*cg.groupoid()), "etale: ");

  law(r, "unit iff meets N iff meets Z", [&](auto& fail) {
    for (int c = 0; c < cg.size(); ++c) {
      const auto& rec = cg.coset(c);
      const bool unit = g.is_unit(c), mn = rec.members.intersects(d.ctx().N()), mz = rec.members.intersects(d.ctx().Z());
      if (unit != mn || unit != mz || unit != rec.is_unit) fail(s.format(rec.members));
    }
  });
  law(r, "source and range records match the groupoid", [&](auto& fail) {
    for (int c = 0; c < cg.size(); ++c) {
      const auto& rec = cg.coset(c);
      if (cg.coset(g.src(c)).members != rec.source || cg.coset(g.rng(c)).members != rec.range)
        fail(s.format(rec.members));
    }
  });
  law(r, "every C_a is an open slice", [&](auto& fail) {
    for (int a = 0; a < d.order(); ++a)
      if (!is_slice(g, cg.slice_of(a)) || !cg.groupoid()->t.is_open(cg.slice_of(a))) fail(s.label(a));
  });
  if (d.ctx().flags().z_symmetric) {
    law(r, "C_an within C_a (Z symmetric)", [&](auto& fail) {
      for (int a = 0; a < d.order(); ++a)
        d.ctx().N().for_each([&](Element m) {
          if (!cg.slice_of(d.mul(a, m)).is_subset_of(cg.slice_of(a))) fail(tuple(s, {a, m}));
        });
    });
  }
  law(r, "open slices are closed under products and inverses", [&](auto& fail) {
    std::vector<PointSet> open;
    for (const auto& o : slices_or_basis(*cg.groupoid()))
      if (cg.groupoid()->t.is_open(o)) open.push_back(o);
    for (const auto& o : open) {
      const PointSet inv = g.set_inverse(o);
      if (!is_slice(g, inv) || !cg.groupoid()->t.is_open(inv)) fail(g.format(o));
      for (const auto& p : open) {
        const PointSet op = g.set_product(o, p);
        if (!is_slice(g, op) || !cg.groupoid()->t.is_open(op)) fail(g.format(o) + " " + g.format(p));
      }
    }
  });
  return r;
}

Report bundle_laws(const Workbench& w) {
  Report r;
  const auto& cb = *w.cb;
  const auto& cg = *w.cg;
  const auto& d = *w.d;
  const auto& s = d.sg();
  const auto& tot = cb.bundle()->total->g;
  r.merge(check_etale_bundle(*cb.bundle()), "bundle: ");

  law(r, "fibres partition each coset into classes", [&](auto& fail) {
    for (int c = 0; c < cg.size(); ++c) {
      ElementSet seen;
      for (const auto& p : cb.points())
        if (p.coset == c) {
          if (seen.intersects(p.cls)) fail(s.format(cg.coset(c).members));
          seen |= p.cls;
        }
      if (seen != cg.coset(c).members) fail(s.format(cg.coset(c).members));
    }
  });
  law(r, "inverse independent of c and c'", [&](auto& fail) {
    for (int p = 0; p < cb.size(); ++p) {
      const auto& pt = cb.points()[static_cast<std::size_t>(p)];
      const ElementSet members = cg.coset(pt.coset).members;
      const int dual = cg.g().inv(pt.coset);
      pt.cls.for_each([&](Element c) {
        (d.below(c) & members).for_each([&](Element low) {
          d.witnesses(low, c).for_each([&](Element cp) {
            if (cb.point_of(dual, cp) != tot.inv(p)) fail(tot.label(p) + " via " + tuple(s, {low, cp, c}));
          });
        });
      });
    }
  });
  law(r, "product independent of representatives", [&](auto& fail) {
    for (int p = 0; p < cb.size(); ++p)
      for (int q = 0; q < cb.size(); ++q) {
        const int pq = tot.prod(p, q);
        if (pq < 0) continue;
        const auto& a = cb.points()[static_cast<std::size_t>(p)];
        const auto& b = cb.points()[static_cast<std::size_t>(q)];
        const int ab = cg.g().prod(a.coset, b.coset);
        a.cls.for_each([&](Element x) {
          b.cls.for_each([&](Element y) {
            if (cb.point_of(ab, d.mul(x, y)) != pq) fail(tot.label(p) + " " + tot.label(q) + " " + tuple(s, {x, y}));
          });
        });
      }
  });
  return r;
}

Report representation_laws(const Workbench& w) {
  Report r;
  const auto& d = *w.d;
  if (!d.ctx().flags().z_symmetric) return r;
  const auto& cg = *w.cg;
  const auto& cb = *w.cb;
  const auto& s = d.sg();
  const int n = d.order();

  r.merge(is_etale_representation(d, coset_representation(cg)), "coset representation: ");
  law(r, "C_ab = C_a C_b", [&](auto& fail) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (cg.slice_of(d.mul(a, b)) != cg.g().set_product(cg.slice_of(a), cg.slice_of(b))) fail(tuple(s, {a, b}));
  });
  const auto tilde = tilde_representation(cb);
  r.merge(is_bundle_representation(d, tilde), "tilde: ");
  law(r, "(ab)~ = a~ b~ with dom(a~) = C_a", [&](auto& fail) {
    for (int a = 0; a < n; ++a) {
      const auto& ta = tilde.assign[static_cast<std::size_t>(a)];
      if (section_domain(ta, cg.size()) != cg.slice_of(a)) fail(s.label(a));
      for (int b = 0; b < n; ++b)
        if (tilde.assign[static_cast<std::size_t>(d.mul(a, b))] !=
            section_product(*cb.bundle(), ta, tilde.assign[static_cast<std::size_t>(b)]))
          fail(tuple(s, {a, b}));
    }
  });

  auto separating = [&](const std::vector<ElementSet>& family) {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        bool sep = false;
        for (ElementSet c : family) sep = sep || separated(d, c, a, b);
        if (!sep) return false;
      }
    return true;
  };
  std::vector<ElementSet> cosets, directed;
  for (const auto& c : cg.cosets()) cosets.push_back(c.members);
  for (int i : w.dc.ids) directed.push_back(cg.coset(i).members);

  const bool tilde_inj = injective(tilde.assign);
  const bool cond3 = separating(cosets);
  const bool faithful = check_faithful(cb).faithful;
  r.add("faithfulness conditions agree over cosets", tilde_inj == cond3 && cond3 == faithful,
        "injective=" + std::to_string(tilde_inj) + " separating=" + std::to_string(cond3) +
            " check_faithful=" + std::to_string(faithful));
  const auto dt = directed_tilde(cb, w.dc, w.db);
  const bool dt_inj = injective(dt.assign);
  const bool dcond3 = separating(directed);
  r.add("faithfulness conditions agree over directed cosets", dt_inj == dcond3 && dt_inj == tilde_inj,
        "injective=" + std::to_string(dt_inj) + " separating=" + std::to_string(dcond3) +
            " coset injective=" + std::to_string(tilde_inj));
  return r;
}

Report filter_laws(const Workbench& w) {
  Report r;
  const auto& d = *w.d;
  const auto& cg = *w.cg;
  const auto& cb = *w.cb;
  const auto& dc = w.dc;
  const auto& s = d.sg();
  const int n = d.order();
  const ElementSet nn = d.ctx().N();
  const bool ndiag = d.ctx().flags().n_diagonal;
  auto up = [&](ElementSet a) { return d.up_closure(a); };
  auto st = [&](ElementSet a) { return d.dual(a); };
  const auto dsets = directed_sets(w);

  PointSet dmask(static_cast<std::size_t>(cg.size()));
  for (int i : dc.ids) dmask.set(static_cast<std::size_t>(i));
  r.add("directed cosets form an ideal", is_ideal(cg.g(), dmask), cg.g().format(dmask));
  r.merge(check_etale(*dc.groupoid), "directed etale: ");
  r.merge(check_etale_bundle(*w.db.bundle), "directed bundle: ");

  law(r, "c|D and D directed give cD directed", [&](auto& fail) {
    for (ElementSet dd : dsets)
      for (int c = 0; c < n; ++c)
        if (acts_left(d, c, dd) && !is_directed(d, d.mul(ElementSet::single(c), dd)))
          fail(s.label(c) + " " + s.format(dd));
  });
  law(r, "D directed gives D* directed with D*DD* within D^*<", [&](auto& fail) {
    for (ElementSet dd : dsets)
      if (!is_directed(d, st(dd)) || !d.mul(d.mul(st(dd), dd), st(dd)).subset_of(up(st(dd)))) fail(s.format(dd));
  });
  law(r, "directed D = D** is an up-set and a coset", [&](auto& fail) {
    for (ElementSet dd : dsets)
      if (dd == st(st(dd)) && (up(dd) != dd || !is_coset(d, dd))) fail(s.format(dd));
  });
  if (ndiag) {
    law(r, "filters are cosets (N diagonal)", [&](auto& fail) {
      for (ElementSet dd : dsets)
        if (up(dd) == dd && !is_coset(d, dd)) fail(s.format(dd));
    });
    law(r, "directed cosets are the up-closures of their classes (N diagonal)", [&](auto& fail) {
      for (int i : dc.ids) {
        const ElementSet dd = cg.coset(i).members;
        for (ElementSet cls : equivalence_classes(d, dd))
          if (up(cls) != dd) fail(s.format(dd) + " " + s.format(cls));
      }
    });
  }
  law(r, "unit cosets U give a directed unit coset (U cap N)^<", [&](auto& fail) {
    for (const auto& u : cg.cosets()) {
      if (!u.is_unit) continue;
      const ElementSet v = up(u.members & nn);
      if (!is_coset(d, v) || !is_directed(d, v) || !v.intersects(nn)) fail(s.format(u.members));
      if (u.is_directed && v != u.members) fail(s.format(u.members) + " directed but not recovered");
      if (ndiag && v != up(z_right(d, u.members))) fail(s.format(u.members) + " differs from U^Z<");
    }
  });

  // triangle_up comes from maximal directed subsets; the other forms are
  // checked against it.
  std::vector<std::vector<int>> tri(static_cast<std::size_t>(cg.size()));
  for (int c = 0; c < cg.size(); ++c) tri[static_cast<std::size_t>(c)] = triangle_up(dc, c);
  auto dset = [&](int di) { return cg.coset(dc.ids[static_cast<std::size_t>(di)]).members; };

  law(r, "each element of a coset lies in exactly one maximal directed subset", [&](auto& fail) {
    for (int c = 0; c < cg.size(); ++c) {
      const ElementSet cm = cg.coset(c).members;
      cm.for_each([&](Element x) {
        int hits = 0, which = -1;
        for (int di : tri[static_cast<std::size_t>(c)])
          if (dset(di).contains(x)) ++hits, which = di;
        if (hits != 1 || dset(which) != triangle_through(d, cm, x)) fail(s.format(cm) + " " + s.label(x));
      });
    }
  });
  law(r, "D < C iff r(C) cap N = r(D) cap N iff s(C) cap N = s(D) cap N", [&](auto& fail) {
    for (int c = 0; c < cg.size(); ++c) {
      const auto& rc = cg.coset(c);
      for (int di = 0; di < dc.size(); ++di) {
        const auto& rd = cg.coset(dc.ids[static_cast<std::size_t>(di)]);
        if (!rd.members.subset_of(rc.members)) continue;
        const auto& t = tri[static_cast<std::size_t>(c)];
        const bool in = std::find(t.begin(), t.end(), di) != t.end();
        if (in != ((rc.range & nn) == (rd.range & nn)) || in != ((rc.source & nn) == (rd.source & nn)))
          fail(s.format(rc.members) + " " + s.format(rd.members));
      }
    }
  });
  law(r, "C^> is the only directed subfamily with union C and a common source", [&](auto& fail) {
    if (dc.size() > 20) return;
    for (int c = 0; c < cg.size(); ++c) {
      const ElementSet cm = cg.coset(c).members;
      std::vector<int> inside;
      for (int di = 0; di < dc.size(); ++di)
        if (dset(di).subset_of(cm)) inside.push_back(di);
      for (std::uint64_t m = 1; m < (std::uint64_t{1} << inside.size()); ++m) {
        std::vector<int> fam;
        ElementSet uni;
        for (std::size_t i = 0; i < inside.size(); ++i)
          if ((m >> i) & 1U) fam.push_back(inside[i]), uni |= dset(inside[i]);
        if (uni != cm) continue;
        bool common_src = true, common_rng = true;
        for (int di : fam) {
          const auto& rec = cg.coset(dc.ids[static_cast<std::size_t>(di)]);
          const auto& r0 = cg.coset(dc.ids[static_cast<std::size_t>(fam.front())]);
          common_src = common_src && rec.source == r0.source;
          common_rng = common_rng && rec.range == r0.range;
        }
        if ((common_src || common_rng) && fam != tri[static_cast<std::size_t>(c)]) fail(s.format(cm));
      }
      // C^> itself must qualify
      ElementSet uni;
      for (int di : tri[static_cast<std::size_t>(c)]) uni |= dset(di);
      if (uni != cm) fail(s.format(cm) + " union");
    }
  });
  law(r, "D < C gives C^Z = D^Z, conversely for D within C when N is diagonal", [&](auto& fail) {
    for (int c = 0; c < cg.size(); ++c) {
      const auto& rc = cg.coset(c);
      for (int di = 0; di < dc.size(); ++di) {
        const auto& rd = cg.coset(dc.ids[static_cast<std::size_t>(di)]);
        const auto& t = tri[static_cast<std::size_t>(c)];
        const bool in = std::find(t.begin(), t.end(), di) != t.end();
        if (in && rc.z_right != rd.z_right) fail(s.format(rc.members) + " " + s.format(rd.members));
        if (ndiag && !in && rd.members.subset_of(rc.members) && rc.z_right == rd.z_right)
          fail(s.format(rc.members) + " " + s.format(rd.members) + " converse");
      }
    }
  });

  const auto tri_rel = triangle_relation(dc);
  r.merge(is_zakrzewski(tri_rel).report, "triangle: ");
  law(r, "triangle preimage of D_a is C_a", [&](auto& fail) {
    for (int a = 0; a < n; ++a) {
      PointSet da(static_cast<std::size_t>(dc.size()));
      for (int di = 0; di < dc.size(); ++di)
        if (dset(di).contains(a)) da.set(static_cast<std::size_t>(di));
      if (tri_rel.preimage(da) != cg.slice_of(a)) fail(s.label(a));
    }
  });

  if (d.ctx().flags().zero) {
    const auto ufs = ultrafilters(d);
    r.merge(check_ultrafilters(cg, ufs), "ultrafilters: ");
  }

  const auto iota = iota_morphism(cb, dc, w.db);
  r.merge(is_pierce(iota), "iota: ");
  law(r, "iota is a bijection onto the coset bundle", [&](auto& fail) {
    std::vector<int> tau = iota.tau;
    std::sort(tau.begin(), tau.end());
    std::vector<int> all(static_cast<std::size_t>(cb.size()));
    for (int i = 0; i < cb.size(); ++i) all[static_cast<std::size_t>(i)] = i;
    if (tau != all) fail(std::to_string(iota.tau.size()) + " pullback points for " + std::to_string(cb.size()));
  });
  law(r, "iota is a groupoid isomorphism", [&](auto& fail) {
    const auto& pb = iota.pullback.bundle->total->g;
    const auto& tot = cb.bundle()->total->g;
    for (int p = 0; p < pb.size(); ++p) {
      if (iota.tau[static_cast<std::size_t>(pb.inv(p))] != tot.inv(iota.tau[static_cast<std::size_t>(p)])) fail(pb.label(p));
      for (int q = 0; q < pb.size(); ++q) {
        const int pq = pb.prod(p, q);
        const int tq = tot.prod(iota.tau[static_cast<std::size_t>(p)], iota.tau[static_cast<std::size_t>(q)]);
        if ((pq < 0) != (tq < 0) || (pq >= 0 && iota.tau[static_cast<std::size_t>(pq)] != tq))
          fail(pb.label(p) + " " + pb.label(q));
      }
    }
  });
  if (d.ctx().flags().z_symmetric) {
    const auto tilde = tilde_representation(cb);
    const auto dt = directed_tilde(cb, dc, w.db);
    r.merge(is_bundle_representation(d, dt), "directed tilde: ");
    law(r, "tilde factors through iota section-wise", [&](auto& fail) {
      for (int a = 0; a < n; ++a)
        if (induced_hom(iota, dt.assign[static_cast<std::size_t>(a)]) != tilde.assign[static_cast<std::size_t>(a)])
          fail(s.label(a));
    });
  }
  return r;
}

Report factor_laws(const Workbench& w) {
  Report r;
  const auto& d = *w.d;
  const auto& cg = *w.cg;
  const auto& cb = *w.cb;
  const auto crep = coset_representation(cg);
  if (is_etale_representation(d, crep).ok()) {
    r.merge(factor_through_cosets(cg, crep).report, "coset rep through cosets: ");
    r.merge(factor_through_directed(w.dc, crep).report, "coset rep through directed: ");
  }
  const auto drep = directed_restriction(w.dc);
  if (is_etale_representation(d, drep).ok()) {
    r.merge(factor_through_cosets(cg, drep).report, "directed rep through cosets: ");
    r.merge(factor_through_directed(w.dc, drep).report, "directed rep through directed: ");
  }
  if (d.ctx().flags().z_symmetric) {
    const auto tilde = tilde_representation(cb);
    const auto dt = directed_tilde(cb, w.dc, w.db);
    r.merge(factor_bundle(cb, tilde).report, "tilde through coset bundle: ");
    r.merge(factor_bundle(cb, dt).report, "directed tilde through coset bundle: ");
    r.merge(factor_bundle_directed(cb, w.dc, w.db, tilde).report, "tilde through directed bundle: ");
    r.merge(factor_bundle_directed(cb, w.dc, w.db, dt).report, "directed tilde through directed bundle: ");
  }
  return r;
}

namespace {

struct NamedRelation {
  std::string name;
  GroupoidRelation rel;
};

Report relation_calculus(const std::vector<NamedRelation>& rels) {
  Report r;
  law(r, "star-injectivity forms agree", [&](auto& fail) {
    for (const auto& x : rels)
      if (!star_injectivity(x.rel).agree()) fail(x.name);
  });
  law(r, "star-surjectivity forms agree", [&](auto& fail) {
    for (const auto& x : rels)
      if (!star_surjectivity(x.rel).agree()) fail(x.name);
  });
  law(r, "constructed relations are Zakrzewski", [&](auto& fail) {
    for (const auto& x : rels)
      if (!is_zakrzewski(x.rel).zakrzewski) fail(x.name);
  });
  law(r, "functorial relations restricted to a left slice are functions", [&](auto& fail) {
    for (const auto& x : rels) {
      if (!check_functorial(x.rel).ok()) continue;
      for (const auto& o : slices_or_basis(x.rel.left()))
        for (int h = 0; h < x.rel.right().size(); ++h) {
          int hits = 0;
          for (int g : x.rel.over(h)) hits += o.test(static_cast<std::size_t>(g)) ? 1 : 0;
          if (hits > 1) fail(x.name + " " + x.rel.left().g.format(o));
        }
    }
  });
  law(r, "composites of Zakrzewski morphisms are Zakrzewski", [&](auto& fail) {
    for (const auto& x : rels)
      for (const auto& y : rels)
        if (x.rel.right_ptr() == y.rel.left_ptr() && is_zakrzewski(x.rel).zakrzewski &&
            is_zakrzewski(y.rel).zakrzewski && !is_zakrzewski(compose(x.rel, y.rel)).zakrzewski)
          fail(x.name + " after " + y.name);
  });
  return r;
}

// pi^-1 is Zakrzewski and sends opens of the base to opens of the total space.
Report bundle_inverse_laws(const std::string& name, const GroupoidBundle& b) {
  Report r;
  const auto inv = bundle_inverse(b);
  r.add(name + " inverse is Zakrzewski", is_zakrzewski(inv).zakrzewski);
  law(r, name + " inverse is open", [&](auto& fail) {
    for (const auto& u : b.base->t.neighbourhoods())
      if (!b.total->t.is_open(inv.image(u))) fail(b.base->g.format(u));
  });
  return r;
}

Report induced_multiplicative(const std::string& name, const PierceMorphism& m, const std::vector<SliceSection>& secs) {
  Report r;
  law(r, name + " induced homomorphism is multiplicative", [&](auto& fail) {
    for (std::size_t i = 0; i < secs.size(); ++i)
      for (std::size_t j = 0; j < secs.size(); ++j) {
        const auto lhs = induced_hom(m, section_product(*m.source, secs[i], secs[j]));
        const auto rhs = section_product(*m.target, induced_hom(m, secs[i]), induced_hom(m, secs[j]));
        if (lhs != rhs) fail(std::to_string(i) + "," + std::to_string(j));
      }
  });
  return r;
}

}  // namespace

Report morphism_laws(const Workbench& w) {
  Report r;
  const auto& d = *w.d;
  const auto& cg = *w.cg;
  const auto& cb = *w.cb;
  std::vector<NamedRelation> rels;
  rels.push_back({"triangle", triangle_relation(w.dc)});
  rels.push_back({"coset bundle inverse", bundle_inverse(*cb.bundle())});
  rels.push_back({"directed bundle inverse", bundle_inverse(*w.db.bundle)});
  const auto crep = coset_representation(cg);
  if (is_etale_representation(d, crep).ok()) {
    const auto cf = factor_through_cosets(cg, crep);
    rels.push_back({"phi of the coset representation", cf.phi});
    rels.push_back({"psi of the coset representation", factor_through_directed(w.dc, crep).psi});
  }
  const auto iota = iota_morphism(cb, w.dc, w.db);
  rels.push_back({"iota pullback inverse", bundle_inverse(*iota.pullback.bundle)});
  r.merge(relation_calculus(rels));
  r.merge(bundle_inverse_laws("coset bundle", *cb.bundle()));
  r.merge(bundle_inverse_laws("directed bundle", *w.db.bundle));

  if (d.ctx().flags().z_symmetric) {
    const auto dt = directed_tilde(cb, w.dc, w.db);
    r.merge(induced_multiplicative("iota", iota, dt.assign));
    const auto tilde = tilde_representation(cb);
    r.merge(induced_multiplicative("tilde factor", factor_bundle(cb, tilde).morphism, tilde.assign));
  }
  return r;
}

Report special_laws(const Workbench& w) {
  Report r;
  const auto& d = *w.d;
  const auto& s = d.sg();
  const auto inv = s.inverses();
  const ElementSet e = s.idempotents();
  if (inv && d.ctx().N() == e && d.ctx().Z() == e) {
    r.merge(inverse_semigroup_cosets_crosscheck(w.cg), "inverse: ");
    law(r, "inverse: a < b iff a in E(S)b", [&](auto& fail) {
      for (int a = 0; a < d.order(); ++a)
        for (int b = 0; b < d.order(); ++b)
          if (d.less(a, b) != d.mul(e, ElementSet::single(b)).contains(a)) fail(tuple(s, {a, b}));
    });
    law(r, "inverse: A* = (A^-1)^<", [&](auto& fail) {
      for (ElementSet a : all_subsets(std::min(d.order(), kSubsetScanOrder))) {
        ElementSet ai;
        a.for_each([&](Element x) { ai.insert((*inv)[static_cast<std::size_t>(x)]); });
        if (d.dual(a) != d.up_closure(ai)) fail(s.format(a));
      }
    });
  }
  if (is_semilattice(s) && d.ctx().N() == s.all() && d.ctx().Z() == s.all()) {
    const auto fs = filter_spectrum(s);
    r.merge(fs.report, "spectrum: ");
    r.merge(filter_universal_factor(fs, spectrum_representation(fs)).report, "spectrum self factor: ");
    r.merge(filter_universal_factor(fs, principal_representation(fs)).report, "principal factor: ");
  }
  return r;
}

Report run_theorems(const Workbench& w) {
  Report r;
  r.merge(core_laws(w.d->ctx()), "core: ");
  r.merge(domination_laws(*w.d), "order: ");
  r.merge(set_laws(w), "sets: ");
  r.merge(atlas_laws(w), "atlas: ");
  r.merge(equivalence_laws(w), "equivalence: ");
  r.merge(enumerator_laws(w), "enumerators: ");
  r.merge(groupoid_laws(w), "groupoid: ");
  r.merge(bundle_laws(w), "bundle: ");
  r.merge(representation_laws(w), "representation: ");
  r.merge(filter_laws(w), "filters: ");
  r.merge(factor_laws(w), "factor: ");
  r.merge(morphism_laws(w), "morphism: ");
  r.merge(special_laws(w), "special: ");
  return r;
}

Report run_theorems(const StructuredSemigroup& s) { return run_theorems(build_workbench(s)); }

Report run_bundle_theorems(const BundlePtr& b, std::size_t max_sections) {
  Report r;
  r.merge(check_bundle(*b), "bundle: ");
  r.merge(check_etale_bundle(*b), "etale bundle: ");
  r.merge(bundle_inverse_laws("bundle", *b));
  r.merge(check_etale(*b->total), "total space etale: ");

  const auto ss = slice_sections(b, max_sections);
  const auto& sg = ss.sg;
  const int n = sg.order();
  const auto& base = b->base->g;
  const auto& tot = b->total->g;

  // Sum over open slices B of the product of fibre sizes, valid when the
  // total space is discrete over a discrete base.
  law(r, "section count matches the fibre product formula", [&](auto& fail) {
    if (b->total->t.neighbourhoods() != FiniteTopology::discrete(tot.size()).neighbourhoods()) return;
    std::vector<int> fibre(static_cast<std::size_t>(base.size()), 0);
    for (int f = 0; f < tot.size(); ++f) ++fibre[static_cast<std::size_t>(b->proj[static_cast<std::size_t>(f)])];
    long long count = 0;
    for (const auto& o : all_slices(base)) {
      long long prod = 1;
      for_each_point(o, [&](int g) { prod *= fibre[static_cast<std::size_t>(g)]; });
      count += prod;
    }
    if (count != n) fail(std::to_string(n) + " sections, formula " + std::to_string(count));
  });

  law(r, "sections form an inverse semigroup with section inverses", [&](auto& fail) {
    const auto inv = sg.inverses();
    if (!inv) return fail("not inverse");
    for (int a = 0; a < n; ++a)
      if (ss.elements[static_cast<std::size_t>((*inv)[static_cast<std::size_t>(a)])] !=
          section_inverse(*b, ss.elements[static_cast<std::size_t>(a)]))
        fail(sg.label(a));
  });
  law(r, "dom(ab) = dom(a)dom(b)", [&](auto& fail) {
    for (int a = 0; a < n; ++a)
      for (int c = 0; c < n; ++c) {
        const auto da = section_domain(ss.elements[static_cast<std::size_t>(a)], base.size());
        const auto dc = section_domain(ss.elements[static_cast<std::size_t>(c)], base.size());
        if (section_domain(ss.elements[static_cast<std::size_t>(sg.mul(a, c))], base.size()) != base.set_product(da, dc))
          fail(tuple(sg, {a, c}));
      }
  });
  r.add("N(pi) and E are normal", is_normal(sg, ss.n_pi) && is_normal(sg, ss.e));
  r.add("E is central in N(pi)", ss.e.subset_of(centre_of(sg, ss.n_pi)));
  r.add("(S, N(pi), E) is structured", analyze_structure(sg, ss.n_pi, ss.e).structured,
        analyze_structure(sg, ss.n_pi, ss.e).violation);
  r.add("N(pi) is diagonal", diagonal_is_diagonal(ss));
  r.add("E is symmetric", is_symmetric(sg, ss.e));
  r.add("sections are a local-inverse semigroup", is_local_inverse(ss, sg.all()));
  r.merge(domination_matches_domains(ss, sg.all(), ss.n_pi, ss.e), "domains: ");

  law(r, "S_g S_h within S_gh and coinitial in it", [&](auto& fail) {
    const auto sd = make_domination(ss.structured());
    for (int g = 0; g < base.size(); ++g)
      for (int h = 0; h < base.size(); ++h) {
        const int gh = base.prod(g, h);
        if (gh < 0) continue;
        const ElementSet p = sg.mul(ss.at(g), ss.at(h)), t = ss.at(gh);
        if (!p.subset_of(t)) fail(base.label(g) + "," + base.label(h));
        t.for_each([&](Element x) {
          if (!sd->below(x).intersects(p)) fail(base.label(g) + "," + base.label(h) + " " + sg.label(x));
        });
      }
  });

  // The germ relation on S_g read off pointwise values near g.
  const auto w = build_workbench(ss.structured());
  law(r, "S^f is a class of S_g and S^e S^f lies in S^ef", [&](auto& fail) {
    for (int f = 0; f < tot.size(); ++f) {
      const int g = b->proj[static_cast<std::size_t>(f)];
      const int id = w.cg->id_of(ss.at(g));
      if (id < 0) continue;
      const auto classes = equivalence_classes(*w.d, ss.at(g));
      if (std::find(classes.begin(), classes.end(), ss.through(f)) == classes.end()) fail(tot.label(f));
    }
    for (int e = 0; e < tot.size(); ++e)
      for (int f = 0; f < tot.size(); ++f) {
        const int ef = tot.prod(e, f);
        if (ef >= 0 && !sg.mul(ss.through(e), ss.through(f)).subset_of(ss.through(ef)))
          fail(tot.label(e) + "," + tot.label(f));
      }
  });

  law(r, "restriction to units is a conditional expectation onto N(pi)", [&](auto& fail) {
    std::vector<int> phi(static_cast<std::size_t>(n));
    ElementSet ran;
    for (int a = 0; a < n; ++a) {
      SliceSection res;
      for (auto [g, v] : ss.elements[static_cast<std::size_t>(a)])
        if (base.is_unit(g)) res[g] = v;
      phi[static_cast<std::size_t>(a)] = ss.index_of(res);
      if (phi[static_cast<std::size_t>(a)] < 0) return fail(sg.label(a) + " restriction is not a section");
      ran.insert(phi[static_cast<std::size_t>(a)]);
    }
    auto p = [&](int a) { return phi[static_cast<std::size_t>(a)]; };
    for (int a = 0; a < n; ++a) {
      if (p(p(a)) != p(a)) fail(sg.label(a) + " not idempotent");
      for (int c = 0; c < n; ++c)
        if (p(sg.mul(p(a), c)) != sg.mul(p(a), p(c)) || p(sg.mul(a, p(c))) != sg.mul(p(a), p(c)))
          fail(tuple(sg, {a, c}));
    }
    if (ran != ss.n_pi || !is_diagonal(sg, ran)) fail("range " + sg.format(ran));
  });

  const auto id = identity_embedding(ss);
  r.merge(is_bundle_representation(*w.d, id), "identity embedding: ");
  r.merge(factor_bundle(*w.cb, id).report, "identity embedding factor: ");
  r.merge(factor_bundle_directed(*w.cb, w.dc, w.db, id).report, "identity embedding directed factor: ");
  r.add("faithful identity embedding makes tilde injective", injective(tilde_representation(*w.cb).assign));
  return r;
}

}  // namespace ssg
