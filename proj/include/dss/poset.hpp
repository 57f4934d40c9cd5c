#pragma once

// Finite posets, their nerves, and the subset/chain posets the rigidification
// calculus is made of.
//
// Subsets of [n] are bitmasks.  Chains in the grid [1] x [m] are pairs of
// bitmasks (zero, one) listing the second coordinates on each side; the chain
// condition is max(zero) <= min(one).

#include "dss/dec.hpp"

namespace dss {

// ---------------------------------------------------------------------------
// Bitmask helpers
// ---------------------------------------------------------------------------

inline int mask_min(uint32_t m) { return __builtin_ctz(m); }
inline int mask_max(uint32_t m) { return 31 - __builtin_clz(m); }
inline std::vector<int> mask_bits(uint32_t m) {
  std::vector<int> out;
  for (; m; m &= m - 1) out.push_back(__builtin_ctz(m));
  return out;
}
inline uint32_t bit(int i) { return 1u << i; }

// ---------------------------------------------------------------------------
// Finite posets
// ---------------------------------------------------------------------------

struct FinPoset {
  std::vector<uint64_t> elems;  // canonical encodings, unique
  std::vector<std::vector<char>> rel;

  int size() const { return static_cast<int>(elems.size()); }
  bool leq(int i, int j) const { return rel[i][j] != 0; }

  int index_of(uint64_t e) const {
    auto it = std::find(elems.begin(), elems.end(), e);
    require(it != elems.end(), "poset: unknown element");
    return static_cast<int>(it - elems.begin());
  }

  void validate() const {
    int n = size();
    for (int i = 0; i < n; ++i) require(leq(i, i), "poset: not reflexive");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j)
          require(!(leq(i, j) && leq(j, i)), "poset: not antisymmetric");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          if (leq(i, j) && leq(j, k))
            require(leq(i, k), "poset: not transitive");
  }

  // pairs (i, j) with i < j covering (no element strictly between)
  std::vector<std::pair<int, int>> coverings() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < size(); ++i)
      for (int j = 0; j < size(); ++j) {
        if (i == j || !leq(i, j)) continue;
        bool cover = true;
        for (int k = 0; k < size() && cover; ++k)
          if (k != i && k != j && leq(i, k) && leq(k, j)) cover = false;
        if (cover) out.push_back({i, j});
      }
    return out;
  }
};

template <typename Leq>
inline FinPoset make_poset(std::vector<uint64_t> elems, Leq&& cmp) {
  FinPoset p;
  p.elems = std::move(elems);
  int n = p.size();
  p.rel.assign(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      p.rel[i][j] = cmp(p.elems[i], p.elems[j]) ? 1 : 0;
  return p;
}

// ---------------------------------------------------------------------------
// Nerves
// ---------------------------------------------------------------------------

struct NerveResult {
  SSetPtr ss;
  std::vector<std::vector<int>> gen_chain;      // gen -> strictly increasing chain
  std::map<std::vector<int>, GenId> chain_gen;  // chain -> gen

  GenId of(const std::vector<int>& chain) const {
    auto it = chain_gen.find(chain);
    require(it != chain_gen.end(), "nerve: unknown chain");
    return it->second;
  }
};

// Nondegenerate k-simplices are the strict chains of length k+1, k <= cap.
inline NerveResult nerve(const FinPoset& p, int cap) {
  NerveResult out;
  auto ss = std::make_shared<SimplicialSet>();
  std::vector<std::vector<std::vector<int>>> chains(cap + 1);
  for (int i = 0; i < p.size(); ++i) chains[0].push_back({i});
  for (int k = 1; k <= cap; ++k)
    for (const auto& c : chains[k - 1])
      for (int j = 0; j < p.size(); ++j)
        if (j != c.back() && p.leq(c.back(), j)) {
          auto ext = c;
          ext.push_back(j);
          chains[k].push_back(std::move(ext));
        }
  for (int k = 0; k <= cap; ++k) {
    std::sort(chains[k].begin(), chains[k].end());
    for (const auto& c : chains[k]) {
      std::vector<SimplexRef> faces;
      if (k >= 1)
        for (int i = 0; i <= k; ++i) {
          auto f = c;
          f.erase(f.begin() + i);
          faces.push_back(SimplexRef{out.of(f), {}});
        }
      GenId id = ss->add_gen(k, std::move(faces));
      out.gen_chain.resize(id + 1);
      out.gen_chain[id] = c;
      out.chain_gen[c] = id;
    }
  }
  out.ss = ss;
  return out;
}

// ---------------------------------------------------------------------------
// Subset posets of the rigidified simplex
// ---------------------------------------------------------------------------

// Subsets of [n] with min i and max j, ordered by inclusion.
inline FinPoset o_cat(int n, int i, int j) {
  require(0 <= i && i <= j && j <= n, "o_cat: need 0 <= i <= j <= n");
  std::vector<uint64_t> elems;
  for (uint32_t m = 1; m < (1u << (n + 1)); ++m)
    if (mask_min(m) == i && mask_max(m) == j) elems.push_back(m);
  std::sort(elems.begin(), elems.end());
  return make_poset(std::move(elems), [](uint64_t a, uint64_t b) {
    return (a & ~b) == 0;
  });
}

// The minimal witness subset for S <= T.
inline uint32_t u_min(uint32_t s_mask, uint32_t t_mask) {
  int s = mask_min(s_mask), t = mask_min(t_mask);
  uint32_t u = bit(s) | bit(t);
  for (int x : mask_bits(s_mask))
    if (s < x && x < t) u |= bit(x);
  return u;
}

// Order of the straightening poset: S <= T iff min(S) <= min(T) and
// S is contained in U_{S,T} united with T.
inline bool pn_leq(uint32_t s, uint32_t t) {
  if (s == 0 || t == 0) return false;
  if (mask_min(s) > mask_min(t)) return false;
  return (s & ~(u_min(s, t) | t)) == 0;
}

// Scaling: the triangle S <= T <= W is thin iff U_{S,W} = U_{S,T} u U_{T,W}.
inline bool pn_thin(uint32_t s, uint32_t t, uint32_t w) {
  return u_min(s, w) == (u_min(s, t) | u_min(t, w));
}

// Elements: nonempty subsets of [n] containing n.
inline FinPoset p_n_poset(int n) {
  require(n >= 0, "p_n: n >= 0");
  std::vector<uint64_t> elems;
  for (uint32_t m = 1; m < (1u << (n + 1)); ++m)
    if (m & bit(n)) elems.push_back(m);
  std::sort(elems.begin(), elems.end());
  return make_poset(std::move(elems), [](uint64_t a, uint64_t b) {
    return pn_leq(static_cast<uint32_t>(a), static_cast<uint32_t>(b));
  });
}

struct DecNerve {
  NerveResult nerve;
  DecSSet dec;
};

// The scaled nerve of the straightening poset, truncated at `cap`.
inline DecNerve p_n_dec(int n, int cap = 2) {
  FinPoset p = p_n_poset(n);
  NerveResult nv = nerve(p, cap);
  std::set<GenId> thin;
  for (GenId g : all_of_dim(*nv.ss, 2)) {
    const auto& c = nv.gen_chain[g];
    if (pn_thin(static_cast<uint32_t>(p.elems[c[0]]),
                static_cast<uint32_t>(p.elems[c[1]]),
                static_cast<uint32_t>(p.elems[c[2]])))
      thin.insert(g);
  }
  DecSSet dec = make_dec(nv.ss, Flavor::Scaled, {}, std::move(thin));
  return DecNerve{std::move(nv), std::move(dec)};
}

// Covering classification of the straightening poset order.
enum class CoverKind { Extend, DropMin, Other };

inline CoverKind classify_cover(uint32_t u, uint32_t v) {
  if (mask_min(u) == mask_min(v) && __builtin_popcount(v) ==
          __builtin_popcount(u) + 1 && (u & ~v) == 0)
    return CoverKind::Extend;  // V = U u {s}
  if (v == (u & ~bit(mask_min(u))) && mask_min(v) == mask_min(u) + 1)
    return CoverKind::DropMin;
  return CoverKind::Other;
}

// ---------------------------------------------------------------------------
// The decorated subset poset over the simplex
// ---------------------------------------------------------------------------

struct OverPoset {
  FinPoset poset;   // subsets with fixed min, ordered by inclusion
  NerveResult nerve;
  DecSSet dec;      // marked-biscaled
  DecMap proj;      // to the simplex base (sharp-marked, lean-everything)
  SubsetComplex base;
};

// Subsets of [n] with min i; an edge S -> T is marked iff T = S u {max T};
// every triangle is lean, and thin iff its image in the simplex degenerates.
inline OverPoset o_upslash(int n, int i) {
  require(0 <= i && i <= n, "o_upslash: need 0 <= i <= n");
  std::vector<uint64_t> elems;
  for (uint32_t m = 1; m < (1u << (n + 1)); ++m)
    if (mask_min(m) == i) elems.push_back(m);
  std::sort(elems.begin(), elems.end());
  FinPoset p = make_poset(std::move(elems), [](uint64_t a, uint64_t b) {
    return (a & ~b) == 0;
  });
  NerveResult nv = nerve(p, std::max(0, n - i));
  std::set<GenId> marked, thin, lean;
  for (GenId g : all_of_dim(*nv.ss, 1)) {
    const auto& c = nv.gen_chain[g];
    auto s = static_cast<uint32_t>(p.elems[c[0]]);
    auto t = static_cast<uint32_t>(p.elems[c[1]]);
    if (t == (s | bit(mask_max(t)))) marked.insert(g);
  }
  for (GenId g : all_of_dim(*nv.ss, 2)) {
    const auto& c = nv.gen_chain[g];
    lean.insert(g);
    int m0 = mask_max(static_cast<uint32_t>(p.elems[c[0]]));
    int m1 = mask_max(static_cast<uint32_t>(p.elems[c[1]]));
    int m2 = mask_max(static_cast<uint32_t>(p.elems[c[2]]));
    if (m0 == m1 || m1 == m2) thin.insert(g);
  }
  DecSSet dec = make_dec(nv.ss, Flavor::MarkedBiscaled, std::move(marked),
                         std::move(thin), std::move(lean));
  SubsetComplex base = standard_simplex_c(n);
  DecSSet base_dec = mb_base(make_dec(base.ss, Flavor::Scaled));
  SimplicialMap pm{nv.ss, base.ss, {}};
  for (GenId g = 0; g < nv.ss->gen_count(); ++g) {
    std::vector<int> maxima;
    for (int e : nv.gen_chain[g])
      maxima.push_back(mask_max(static_cast<uint32_t>(p.elems[e])));
    std::vector<int> uniq = maxima;
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    uint32_t tm = 0;
    for (int v : uniq) tm |= bit(v);
    Surj s;
    for (int v : maxima)
      s.push_back(static_cast<int>(
          std::lower_bound(uniq.begin(), uniq.end(), v) - uniq.begin()));
    pm.assign.push_back(base.ss->make(base.of(tm), s));
  }
  DecMap proj{dec, base_dec, std::move(pm)};
  return OverPoset{std::move(p), std::move(nv), std::move(dec),
                   std::move(proj), std::move(base)};
}

// ---------------------------------------------------------------------------
// Chain posets of the grid Delta^1 x Delta^m
// ---------------------------------------------------------------------------

// Decoration regime of the ambient tensor, per generator shape.
enum class TensorKind {
  FlatCell,    // minimally decorated m-simplex
  LeanCell,    // the lean-scaled triangle: fully scaled mapping posets
  ThinCell,    // the thin triangle: as LeanCell plus extra marked edges
  MarkedEdge,  // the marked interval: product scaling, fully scaled
};

struct GridPoint {
  int eps, val;
  auto operator<=>(const GridPoint&) const = default;
};

struct GridChain {
  uint32_t zero = 0, one = 0;
  auto operator<=>(const GridChain&) const = default;

  std::vector<GridPoint> points() const {
    std::vector<GridPoint> out;
    for (int v : mask_bits(zero)) out.push_back({0, v});
    for (int v : mask_bits(one)) out.push_back({1, v});
    return out;
  }
  bool refines(const GridChain& o) const {  // this <= o: o refines this?
    return (zero & ~o.zero) == 0 && (one & ~o.one) == 0;
  }
};

// Thinness of the triangle p0 <= p1 <= p2 of the decorated grid.
inline bool grid_triangle_thin(TensorKind kind, GridPoint p0, GridPoint p1,
                               GridPoint p2) {
  if (p0 == p1 || p1 == p2) return true;
  bool y_deg = (p0.val == p1.val) || (p1.val == p2.val);
  switch (kind) {
    case TensorKind::MarkedEdge:
      return y_deg;
    case TensorKind::FlatCell:
    case TensorKind::LeanCell:
    case TensorKind::ThinCell:
      if (p2.eps == 0) return true;  // zero-side triangles are scaled
      return y_deg && (p1.eps == p2.eps || p0.val == p1.val);
  }
  return false;
}

// The projection to the straightening poset: {max zero} u one.
inline uint32_t grid_pi(const GridChain& c) {
  return bit(mask_max(c.zero)) | c.one;
}

// Marked edges of the chain poset: one certified insertion per gap.
inline bool chain_edge_marked(TensorKind kind, const GridChain& c,
                              const GridChain& d) {
  if (!c.refines(d)) return false;
  auto cp = c.points();
  auto dp = d.points();
  size_t j = 0;
  for (size_t i = 0; i + 1 < cp.size(); ++i) {
    while (j < dp.size() && dp[j] != cp[i]) ++j;
    if (j == dp.size()) return false;  // endpoints must agree
    ++j;
    int inserted = 0;
    GridPoint mid{};
    while (j < dp.size() && dp[j] != cp[i + 1]) {
      mid = dp[j];
      ++inserted;
      ++j;
    }
    if (inserted > 1) return false;
    if (inserted == 1 && !grid_triangle_thin(kind, cp[i], mid, cp[i + 1]))
      return false;
  }
  if (kind == TensorKind::ThinCell) return true;
  return true;
}

struct ChainPoset {
  int m = 0;   // ambient simplex dimension
  int a = 0, b = 0;  // endpoints (0,a) and (1,b)
  TensorKind kind = TensorKind::FlatCell;
  std::vector<GridChain> elems;
  std::map<GridChain, int> index;
  NerveResult nerve;
  DecSSet dec;  // marked-scaled

  const GridChain& chain(int i) const { return elems[i]; }
};

// All chains from (0,a) to (1,b) in [1] x [m], ordered by refinement, with
// the marking of the ambient tensor and (for FlatCell) the scaling pulled
// back along the projection; other kinds are fully scaled.
inline ChainPoset chain_poset(int m, int a, int b, TensorKind kind) {
  require(0 <= a && a <= b && b <= m, "chain_poset: need 0 <= a <= b <= m");
  ChainPoset out;
  out.m = m;
  out.a = a;
  out.b = b;
  out.kind = kind;
  for (uint32_t zero = 0; zero < (1u << (m + 1)); ++zero) {
    if (!(zero & bit(a)) || mask_min(zero) != a || mask_max(zero) > b)
      continue;
    for (uint32_t one = 0; one < (1u << (m + 1)); ++one) {
      if (!(one & bit(b)) || mask_max(one) != b) continue;
      if (mask_min(one) < mask_max(zero)) continue;
      out.elems.push_back(GridChain{zero, one});
    }
  }
  std::sort(out.elems.begin(), out.elems.end());
  for (size_t i = 0; i < out.elems.size(); ++i)
    out.index[out.elems[i]] = static_cast<int>(i);
  std::vector<uint64_t> keys(out.elems.size());
  std::iota(keys.begin(), keys.end(), 0);
  FinPoset p = make_poset(keys, [&](uint64_t x, uint64_t y) {
    return out.elems[x].refines(out.elems[y]);
  });
  int height = b - a + (b - a) + 2;  // coarse bound on chain lengths
  out.nerve = nerve(p, std::min(p.size() - 1, height + 2));

  std::set<GenId> marked, thin;
  for (GenId g : all_of_dim(*out.nerve.ss, 1)) {
    const auto& c = out.nerve.gen_chain[g];
    bool mk = chain_edge_marked(kind, out.elems[c[0]], out.elems[c[1]]);
    if (kind == TensorKind::ThinCell && !mk && m == 2 && a == 0 && b == 2) {
      // extra marks: everything projecting to the generating flip
      if (grid_pi(out.elems[c[0]]) == (bit(0) | bit(2)) &&
          grid_pi(out.elems[c[1]]) == (bit(0) | bit(1) | bit(2)))
        mk = true;
    }
    if (mk) marked.insert(g);
  }
  for (GenId g : all_of_dim(*out.nerve.ss, 2)) {
    const auto& c = out.nerve.gen_chain[g];
    bool th;
    if (kind == TensorKind::FlatCell)
      th = pn_thin(grid_pi(out.elems[c[0]]), grid_pi(out.elems[c[1]]),
                   grid_pi(out.elems[c[2]]));
    else
      th = true;
    if (th) thin.insert(g);
  }
  out.dec = make_dec(out.nerve.ss, Flavor::MarkedScaled, std::move(marked),
                     std::move(thin));
  return out;
}

// The monotone projection from the chain poset to the straightening poset,
// as index tables; verified monotone.
struct PiMap {
  ChainPoset chains;
  std::vector<uint32_t> image;  // per chain element, a subset of [m]
};

inline PiMap pi_map(int j, int ell, int n) {
  PiMap out;
  out.chains = chain_poset(n, j, ell, TensorKind::FlatCell);
  out.image.reserve(out.chains.elems.size());
  for (const auto& c : out.chains.elems) out.image.push_back(grid_pi(c));
  // monotonicity check
  int sz = static_cast<int>(out.chains.elems.size());
  for (int x = 0; x < sz; ++x)
    for (int y = 0; y < sz; ++y)
      if (out.chains.elems[x].refines(out.chains.elems[y]))
        require(pn_leq(out.image[x], out.image[y]),
                "pi_map: projection not monotone");
  return out;
}

}  // namespace dss
