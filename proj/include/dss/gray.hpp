#pragma once

// Gray tensor products, lax cylinders and dimension-capped function
// complexes.

#include <functional>

#include "dss/lift.hpp"

namespace dss {

// position of the single bit of a vertex mask
inline int mask_pos(uint32_t m) { return __builtin_ctz(m); }

// Decoration of an existing product complex by the categorical rule
// (a cell is decorated iff both projections are).
struct PairDecoration {
  std::set<GenId> marked, thin, lean;
};

inline PairDecoration product_decoration(const ProductResult& pr,
                                         const DecSSet& a, const DecSSet& b) {
  PairDecoration out;
  for (GenId g : all_of_dim(*pr.ss, 1)) {
    const auto& [x, y] = pr.gen_pair[g];
    if (a.is_marked(x) && b.is_marked(y)) out.marked.insert(g);
  }
  for (GenId g : all_of_dim(*pr.ss, 2)) {
    const auto& [x, y] = pr.gen_pair[g];
    if (a.is_thin(x) && b.is_thin(y)) out.thin.insert(g);
    if (a.is_lean(x) && b.is_lean(y)) out.lean.insert(g);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Gray tensor product of marked-scaled sets
// ---------------------------------------------------------------------------

struct GrayProduct {
  DecSSet obj;         // scaled
  ProductResult prod;  // underlying product with projections
};

// A triangle is scaled iff it is scaled in both factors and its 1->2 edge is
// marked on the left or its 0->1 edge is marked on the right.
inline GrayProduct gray(const DecSSet& x, const DecSSet& y) {
  require(x.flavor == Flavor::MarkedScaled && y.flavor == Flavor::MarkedScaled,
          "gray: marked-scaled factors expected");
  ProductResult pr = product(x.ss, y.ss);
  std::set<GenId> thin;
  for (GenId g : all_of_dim(*pr.ss, 2)) {
    const auto& [a, b] = pr.gen_pair[g];
    if (!x.is_thin(a) || !y.is_thin(b)) continue;
    SimplexRef a12 = x.ss->face(a, 0);
    SimplexRef b01 = y.ss->face(b, 2);
    if (x.is_marked(a12) || y.is_marked(b01)) thin.insert(g);
  }
  DecSSet obj = make_dec(pr.ss, Flavor::Scaled, {}, std::move(thin));
  return GrayProduct{std::move(obj), std::move(pr)};
}

// Gray tensor of scaled sets: marked means degenerate only.
inline GrayProduct gray_scaled(const DecSSet& x, const DecSSet& y) {
  return gray(flavor_L_ms(x), flavor_L_ms(y));
}

// The scaled interval tensor the rigidification calculus uses: the Gray
// tensor of flat factors with every triangle on the initial slice scaled.
inline GrayProduct gray_pi(int n) {
  SubsetComplex d1 = standard_simplex_c(1);
  SubsetComplex dn = standard_simplex_c(n);
  DecSSet flat1 = make_dec(d1.ss, Flavor::Scaled);
  DecSSet flatn = make_dec(dn.ss, Flavor::Scaled);
  GrayProduct g = gray_scaled(flat1, flatn);
  GenId v0 = d1.of(1u);  // vertex 0 of the interval
  std::set<GenId> thin = g.obj.thin;
  for (GenId t : all_of_dim(*g.prod.ss, 2)) {
    const auto& [a, b] = g.prod.gen_pair[t];
    std::vector<GenId> vs = d1.ss->vertices(a);
    if (std::all_of(vs.begin(), vs.end(), [&](GenId v) { return v == v0; }))
      thin.insert(t);
  }
  g.obj.thin = std::move(thin);
  return g;
}

// ---------------------------------------------------------------------------
// Lax cylinder
// ---------------------------------------------------------------------------

struct LaxCylinder {
  DecSSet obj;         // marked-biscaled, over the (m+1)-simplex base
  ProductResult prod;  // interval x A
  DecMap incl;         // A -> obj along the 0 slice
  DecMap to_base;      // obj -> base (sharp-marked flat scaling)
  SubsetComplex base;  // the (m+1)-simplex
};

// Interval tensor of an object over the m-simplex, living over Delta^{m+1}:
// base map sends (0, i) to i and (1, i) to m+1; an edge (e1, eA) is marked
// iff eA is marked and e1 is constant at 0, or eA is degenerate; a triangle
// is lean iff lean in A and thin iff additionally its base image degenerates.
inline LaxCylinder lax_cylinder(const DecSSet& a, const SimplicialMap& p,
                                const SubsetComplex& a_base) {
  require(a.flavor == Flavor::MarkedBiscaled, "lax_cylinder: MB input");
  require(p.src == a.ss && p.dst == a_base.ss,
          "lax_cylinder: structure map mismatch");
  uint32_t top = *std::max_element(a_base.gen_subset.begin(),
                                   a_base.gen_subset.end());
  int m = 31 - __builtin_clz(top);
  SubsetComplex d1 = standard_simplex_c(1);
  SubsetComplex target = standard_simplex_c(m + 1);
  ProductResult pr = product(d1.ss, a.ss);
  GenId d1v0 = d1.of(1u);

  std::set<GenId> marked, thin, lean;
  SimplicialMap to_base{pr.ss, target.ss, {}};
  for (GenId g = 0; g < pr.ss->gen_count(); ++g) {
    const auto& [e1, ea] = pr.gen_pair[g];
    std::vector<GenId> eps = d1.ss->vertices(e1);
    SimplexRef base_img = p.apply(ea);
    std::vector<GenId> base_verts = a_base.ss->vertices(base_img);
    std::vector<int> word;
    for (size_t i = 0; i < eps.size(); ++i)
      word.push_back(eps[i] == d1v0
                         ? mask_pos(a_base.gen_subset[base_verts[i]])
                         : m + 1);
    to_base.assign.push_back(subset_simplex(target, word));
  }
  for (GenId g : all_of_dim(*pr.ss, 1)) {
    const auto& [e1, ea] = pr.gen_pair[g];
    std::vector<GenId> eps = d1.ss->vertices(e1);
    bool const_zero = eps[0] == d1v0 && eps[1] == d1v0;
    if ((a.is_marked(ea) && const_zero) || !ea.deg.empty()) marked.insert(g);
  }
  for (GenId g : all_of_dim(*pr.ss, 2)) {
    const auto& [e1, ea] = pr.gen_pair[g];
    (void)e1;
    if (!a.is_lean(ea)) continue;
    lean.insert(g);
    if (!to_base.assign[g].deg.empty()) thin.insert(g);
  }
  DecSSet obj = make_dec(pr.ss, Flavor::MarkedBiscaled, std::move(marked),
                         std::move(thin), std::move(lean));

  // inclusion of the zero slice
  SimplicialMap incl_m{a.ss, pr.ss, {}};
  for (GenId g = 0; g < a.ss->gen_count(); ++g) {
    int k = a.ss->gen_dim[g];
    SimplexRef v0{d1v0, std::vector<int>(k)};
    std::iota(v0.deg.begin(), v0.deg.end(), 0);
    incl_m.assign.push_back(SimplexRef{pr.of({v0, SimplexRef{g, {}}}), {}});
  }
  DecMap incl{a, obj, std::move(incl_m)};
  DecSSet base_dec = mb_base(make_dec(target.ss, Flavor::Scaled));
  DecMap to_base_dec{obj, base_dec, std::move(to_base)};
  return LaxCylinder{std::move(obj), std::move(pr), std::move(incl),
                     std::move(to_base_dec), std::move(target)};
}

// ---------------------------------------------------------------------------
// Symbol complexes
// ---------------------------------------------------------------------------

// Builds a simplicial set whose m-simplices are opaque symbols with an
// action of the simplicial operators, normalizing via the EZ lemma.  Used
// for function complexes, nerves of enriched categories and similar
// enumerative constructions.
template <typename Key>
struct SymbolComplex {
  SSetPtr ss;
  std::vector<std::vector<Key>> dim_symbols;  // all symbols per dimension
  std::map<Key, SimplexRef> normal;           // symbol -> EZ normal form
  std::vector<Key> gen_symbol;                // generator -> symbol
};

// theta maps for faces/degeneracies
inline std::vector<int> theta_face(int m, int t) {
  std::vector<int> out;
  for (int i = 0; i <= m; ++i)
    if (i != t) out.push_back(i);
  return out;
}
inline std::vector<int> theta_degeneracy(int m, int t) {
  std::vector<int> out;
  for (int i = 0; i <= m - 1; ++i) {
    out.push_back(i);
    if (i == t) out.push_back(i);
  }
  return out;
}

template <typename Key, typename ListFn, typename ActFn>
SymbolComplex<Key> build_symbol_complex(int cap, ListFn&& list, ActFn&& act) {
  SymbolComplex<Key> out;
  auto ss = std::make_shared<SimplicialSet>();
  out.dim_symbols.resize(cap + 1);
  for (int m = 0; m <= cap; ++m) {
    out.dim_symbols[m] = list(m);
    std::sort(out.dim_symbols[m].begin(), out.dim_symbols[m].end());
    for (const Key& sym : out.dim_symbols[m]) {
      if (out.normal.count(sym)) continue;
      bool degenerate = false;
      for (int t = 0; t < m && !degenerate; ++t) {
        Key lower = act(m, sym, theta_face(m, t));
        Key back = act(m - 1, lower, theta_degeneracy(m, t));
        if (back == sym) {
          auto it = out.normal.find(lower);
          require(it != out.normal.end(),
                  "symbol complex: face escaped the enumeration");
          out.normal.emplace(sym, ss->degenerate(it->second, t));
          degenerate = true;
        }
      }
      if (degenerate) continue;
      std::vector<SimplexRef> faces;
      if (m >= 1)
        for (int i = 0; i <= m; ++i) {
          Key f = act(m, sym, theta_face(m, i));
          auto it = out.normal.find(f);
          require(it != out.normal.end(),
                  "symbol complex: face escaped the enumeration");
          faces.push_back(it->second);
        }
      GenId id = ss->add_gen(m, std::move(faces));
      out.gen_symbol.resize(id + 1);
      out.gen_symbol[id] = sym;
      out.normal.emplace(sym, SimplexRef{id, {}});
    }
  }
  out.ss = ss;
  return out;
}

// ---------------------------------------------------------------------------
// Function complexes
// ---------------------------------------------------------------------------

// Decoration variants of the representable cells, per flavor.
struct CellVariants {
  DecSSet plain1, marked1;        // interval variants
  DecSSet plain2, thin2, lean2;   // triangle variants (lean for MB only)
};

inline DecSSet delta_min_dec(const SSetPtr& d, Flavor fl) {
  return make_dec(d, fl);
}

struct FunComplex {
  DecSSet obj;
  SymbolComplex<std::vector<SimplexRef>> sc;
  std::vector<ProductResult> prods;  // per dimension
};

// m-simplices are decorated maps (Delta^m x X) -> Y for the minimally
// decorated m-simplex; an edge is marked iff the same assignment respects
// the marked-interval variant, and triangles are thin/lean iff it respects
// the matching triangle variant.  With `over` set, only maps over the given
// square are kept (the pullback function complex).
struct OverData {
  SimplicialMap p;  // X -> S
  SimplicialMap q;  // Y -> S
};

inline FunComplex fun_complex(const DecSSet& x, const DecSSet& y, int cap,
                              const std::optional<OverData>& over = {}) {
  require(x.flavor == y.flavor, "fun_complex: flavor mismatch");
  FunComplex out;
  std::vector<SubsetComplex> deltas;
  for (int m = 0; m <= cap; ++m) {
    deltas.push_back(standard_simplex_c(m));
    out.prods.push_back(product(deltas[m].ss, x.ss));
  }
  using Key = std::vector<SimplexRef>;
  auto list = [&](int m) {
    PairDecoration pd = product_decoration(
        out.prods[m], delta_min_dec(deltas[m].ss, x.flavor), x);
    MapEnumSpec spec{DecSSet{out.prods[m].ss, x.flavor, std::move(pd.marked),
                             std::move(pd.thin), std::move(pd.lean)},
                     y};
    if (x.flavor == Flavor::Scaled) spec.src.marked.clear();
    if (over) {
      spec.q = over->q;
      SimplicialMap base{out.prods[m].ss, over->p.dst, {}};
      for (GenId g = 0; g < out.prods[m].ss->gen_count(); ++g)
        base.assign.push_back(over->p.apply(out.prods[m].gen_pair[g].second));
      spec.base = std::move(base);
    }
    std::vector<Key> keys;
    for (auto& f : enumerate_dec_maps(spec)) keys.push_back(f.assign);
    return keys;
  };
  auto act = [&](int m, const Key& sym, const std::vector<int>& theta) {
    int mp = static_cast<int>(theta.size()) - 1;
    SimplicialMap op = simplex_operator(deltas[mp], deltas[m], theta);
    Key out_key;
    out_key.reserve(out.prods[mp].ss->gen_count());
    for (GenId g = 0; g < out.prods[mp].ss->gen_count(); ++g) {
      const auto& [a, b] = out.prods[mp].gen_pair[g];
      auto [core, joint] =
          pair_normal_form(*deltas[m].ss, *x.ss, op.apply(a), b);
      SimplexRef in_m{out.prods[m].of(core), joint};
      const SimplexRef& v = sym[in_m.gen];
      out_key.push_back(
          y.ss->make(v.gen, compose(y.ss->surj(v), out.prods[m].ss->surj(in_m))));
    }
    return out_key;
  };
  out.sc = build_symbol_complex<Key>(cap, list, act);

  // decorations via the decorated cell variants
  auto respects = [&](int m, const Key& sym, const DecSSet& variant) {
    PairDecoration pd = product_decoration(out.prods[m], variant, x);
    auto img = [&](GenId g) { return sym[g]; };
    for (GenId g : pd.marked)
      if (!y.is_marked(img(g))) return false;
    for (GenId g : pd.thin)
      if (!y.is_thin(img(g))) return false;
    if (y.has_lean())
      for (GenId g : pd.lean)
        if (!y.is_lean(img(g))) return false;
    return true;
  };
  DecSSet obj{out.sc.ss, x.flavor, {}, {}, {}};
  if (cap >= 1) {
    DecSSet marked1 =
        (x.flavor == Flavor::Scaled)
            ? delta_min_dec(deltas[1].ss, x.flavor)
            : make_dec(deltas[1].ss, x.flavor, {deltas[1].of(0b11)}, {}, {});
    for (GenId g : all_of_dim(*out.sc.ss, 1))
      if (respects(1, out.sc.gen_symbol[g], marked1)) obj.marked.insert(g);
    if (x.flavor == Flavor::Scaled) obj.marked.clear();
  }
  if (cap >= 2) {
    GenId tri = deltas[2].of(0b111);
    DecSSet thin2 =
        (x.flavor == Flavor::MarkedBiscaled)
            ? make_dec(deltas[2].ss, x.flavor, {}, {tri}, {tri})
            : make_dec(deltas[2].ss, x.flavor, {}, {tri}, {});
    for (GenId g : all_of_dim(*out.sc.ss, 2))
      if (respects(2, out.sc.gen_symbol[g], thin2)) obj.thin.insert(g);
    if (x.flavor == Flavor::MarkedBiscaled) {
      DecSSet lean2 = make_dec(deltas[2].ss, x.flavor, {}, {}, {tri});
      for (GenId g : all_of_dim(*out.sc.ss, 2))
        if (respects(2, out.sc.gen_symbol[g], lean2)) obj.lean.insert(g);
    }
  }
  out.obj = std::move(obj);
  return out;
}

// Pullback function complex over a fixed structure square.
inline FunComplex map_over(const DecSSet& x, const SimplicialMap& p,
                           const DecSSet& y, const SimplicialMap& q, int cap) {
  OverData od{p, q};
  return fun_complex(x, y, cap, od);
}

}  // namespace dss
