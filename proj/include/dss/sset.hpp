#pragma once

// Finite simplicial sets with exact presentations.
//
// A complex is presented by its nondegenerate generators per dimension
// together with a face table.  Arbitrary simplices are carried in
// Eilenberg-Zilber normal form: a generator id plus a degeneracy word,
// encoded as the sorted list of doubled positions of the corresponding
// monotone surjection.  Two simplices are equal iff they are field-equal.

#include <algorithm>
#include <cassert>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace dss {

using GenId = int;

struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw error(what);
}

// ---------------------------------------------------------------------------
// Monotone surjections [m] ->> [k], stored as value vectors of length m+1.
// ---------------------------------------------------------------------------

using Surj = std::vector<int>;

// positions p with s[p] == s[p+1]
inline std::vector<int> doubled_positions(const Surj& s) {
  std::vector<int> out;
  for (int p = 0; p + 1 < static_cast<int>(s.size()); ++p)
    if (s[p] == s[p + 1]) out.push_back(p);
  return out;
}

inline Surj surj_from_doubled(int total_dim, const std::vector<int>& deg) {
  Surj s(total_dim + 1);
  s[0] = 0;
  size_t d = 0;
  for (int j = 0; j < total_dim; ++j) {
    bool dbl = d < deg.size() && deg[d] == j;
    if (dbl) ++d;
    s[j + 1] = s[j] + (dbl ? 0 : 1);
  }
  return s;
}

inline Surj compose(const Surj& outer, const Surj& inner) {
  Surj r(inner.size());
  for (size_t i = 0; i < inner.size(); ++i) r[i] = outer[inner[i]];
  return r;
}

// ---------------------------------------------------------------------------
// SimplexRef
// ---------------------------------------------------------------------------

struct SimplexRef {
  GenId gen = -1;
  std::vector<int> deg;  // sorted doubled positions; empty iff nondegenerate

  bool nondegenerate() const { return deg.empty(); }
  auto operator<=>(const SimplexRef&) const = default;
};

struct SimplicialSet;
using SSetPtr = std::shared_ptr<const SimplicialSet>;

struct SimplicialSet {
  // gens[k] lists generator ids of dimension k, in id order.
  std::vector<std::vector<GenId>> gens;
  std::vector<int> gen_dim;                       // id -> dimension
  std::vector<std::vector<SimplexRef>> face_tab;  // id -> k+1 faces (dim k-1)

  int dims() const { return static_cast<int>(gens.size()) - 1; }
  int gen_count() const { return static_cast<int>(gen_dim.size()); }
  int gen_count(int dim) const {
    if (dim < 0 || dim > dims()) return 0;
    return static_cast<int>(gens[dim].size());
  }

  GenId add_gen(int dim, std::vector<SimplexRef> faces = {}) {
    require(dim >= 0, "add_gen: negative dimension");
    if (dim >= static_cast<int>(gens.size())) gens.resize(dim + 1);
    GenId id = gen_count();
    gens[dim].push_back(id);
    gen_dim.push_back(dim);
    if (dim > 0)
      require(static_cast<int>(faces.size()) == dim + 1,
              "add_gen: face count mismatch");
    face_tab.push_back(std::move(faces));
    return id;
  }

  int dim(const SimplexRef& s) const {
    return gen_dim[s.gen] + static_cast<int>(s.deg.size());
  }

  Surj surj(const SimplexRef& s) const {
    return surj_from_doubled(dim(s), s.deg);
  }

  SimplexRef make(GenId g, const Surj& s) const {
    return SimplexRef{g, doubled_positions(s)};
  }

  // d_i on an arbitrary simplex, in normal form.
  SimplexRef face(const SimplexRef& x, int i) const {
    int m = dim(x);
    require(m >= 1 && 0 <= i && i <= m, "face: index out of range");
    Surj s = surj(x);
    int v = s[i];
    s.erase(s.begin() + i);
    if (std::find(s.begin(), s.end(), v) != s.end()) return make(x.gen, s);
    for (auto& a : s)
      if (a > v) --a;
    const SimplexRef& f = face_tab[x.gen][v];
    return make(f.gen, compose(surj_from_doubled(dim(f), f.deg), s));
  }

  // s_i on an arbitrary simplex.
  SimplexRef degenerate(const SimplexRef& x, int i) const {
    int m = dim(x);
    require(0 <= i && i <= m, "degenerate: index out of range");
    Surj s = surj(x);
    s.insert(s.begin() + i, s[i]);
    return make(x.gen, s);
  }

  // Pushforward along a simplicial operator theta: [m'] -> [m] (monotone,
  // neither injectivity nor surjectivity assumed).
  SimplexRef act(const SimplexRef& x, const std::vector<int>& theta) const {
    SimplexRef cur = x;
    std::vector<int> missing;
    {
      std::set<int> img(theta.begin(), theta.end());
      for (int v = 0; v <= dim(x); ++v)
        if (!img.count(v)) missing.push_back(v);
    }
    for (auto it = missing.rbegin(); it != missing.rend(); ++it)
      cur = face(cur, *it);
    std::map<int, int> rank;
    for (int v : theta) rank.emplace(v, 0);
    int r = 0;
    for (auto& kv : rank) kv.second = r++;
    Surj s;
    s.reserve(theta.size());
    for (int v : theta) s.push_back(rank[v]);
    return make(cur.gen, compose(surj(cur), s));
  }

  std::vector<GenId> gen_vertices(GenId g) const {
    int k = gen_dim[g];
    if (k == 0) return {g};
    std::vector<GenId> out;
    out.reserve(k + 1);
    for (int j = 0; j <= k; ++j) {
      SimplexRef v{g, {}};
      for (int i = k; i > j; --i) v = face(v, i);
      for (int i = 0; i < j; ++i) v = face(v, 0);
      out.push_back(v.gen);
    }
    return out;
  }

  std::vector<GenId> vertices(const SimplexRef& x) const {
    Surj s = surj(x);
    std::vector<GenId> gv = gen_vertices(x.gen);
    std::vector<GenId> out;
    out.reserve(s.size());
    for (int v : s) out.push_back(gv[v]);
    return out;
  }

  // All simplices of dimension m, including degenerate ones.
  std::vector<SimplexRef> all_simplices(int m) const {
    std::vector<SimplexRef> out;
    for (int k = 0; k <= std::min(m, dims()); ++k)
      for (GenId g : gens[k])
        enumerate_doubled(m, m - k, [&](const std::vector<int>& dg) {
          out.push_back(SimplexRef{g, dg});
        });
    return out;
  }

  template <typename F>
  static void enumerate_doubled(int m, int count, F&& emit) {
    std::vector<int> cur;
    enumerate_doubled_rec(m, count, 0, cur, emit);
  }

  // d_i d_j = d_{j-1} d_i for i < j, checked on every generator.
  void validate() const {
    for (GenId g = 0; g < gen_count(); ++g) {
      int k = gen_dim[g];
      for (int i = 0; i <= k && k > 0; ++i) {
        const SimplexRef& f = face_tab[g][i];
        require(f.gen >= 0 && f.gen < gen_count(), "validate: dangling face");
        require(dim(f) == k - 1, "validate: face dimension mismatch");
      }
      if (k < 2) continue;
      SimplexRef top{g, {}};
      for (int j = 1; j <= k; ++j)
        for (int i = 0; i < j; ++i)
          require(face(face(top, j), i) == face(face(top, i), j - 1),
                  "validate: simplicial identity failed at generator " +
                      std::to_string(g));
    }
  }

 private:
  template <typename F>
  static void enumerate_doubled_rec(int m, int count, int start,
                                    std::vector<int>& cur, F&& emit) {
    if (static_cast<int>(cur.size()) == count) {
      emit(cur);
      return;
    }
    for (int p = start; p < m; ++p) {
      cur.push_back(p);
      enumerate_doubled_rec(m, count, p + 1, cur, emit);
      cur.pop_back();
    }
  }
};

// ---------------------------------------------------------------------------
// Simplicial maps
// ---------------------------------------------------------------------------

struct SimplicialMap {
  SSetPtr src, dst;
  std::vector<SimplexRef> assign;  // per source generator, equal dimension

  SimplexRef apply(const SimplexRef& x) const {
    const SimplexRef& a = assign[x.gen];
    return dst->make(a.gen, compose(dst->surj(a), src->surj(x)));
  }

  void validate() const {
    require(assign.size() == static_cast<size_t>(src->gen_count()),
            "map: assignment size mismatch");
    for (GenId g = 0; g < src->gen_count(); ++g) {
      require(dst->dim(assign[g]) == src->gen_dim[g],
              "map: dimension not preserved at generator " + std::to_string(g));
      int k = src->gen_dim[g];
      SimplexRef top{g, {}};
      for (int i = 0; i <= k && k > 0; ++i)
        require(apply(src->face(top, i)) == dst->face(apply(top), i),
                "map: does not commute with d_" + std::to_string(i) +
                    " at generator " + std::to_string(g));
    }
  }
};

inline SimplicialMap identity_map(const SSetPtr& x) {
  SimplicialMap m{x, x, {}};
  m.assign.reserve(x->gen_count());
  for (GenId g = 0; g < x->gen_count(); ++g)
    m.assign.push_back(SimplexRef{g, {}});
  return m;
}

inline SimplicialMap compose_maps(const SimplicialMap& g,
                                  const SimplicialMap& f) {
  require(f.dst == g.src, "compose_maps: middle object mismatch");
  SimplicialMap r{f.src, g.dst, {}};
  r.assign.reserve(f.assign.size());
  for (const auto& a : f.assign) r.assign.push_back(g.apply(a));
  return r;
}

// ---------------------------------------------------------------------------
// Standard simplices, boundaries, horns (as subset complexes of [n])
// ---------------------------------------------------------------------------

struct SubsetComplex {
  SSetPtr ss;
  std::vector<uint32_t> gen_subset;      // id -> bitmask
  std::map<uint32_t, GenId> subset_gen;  // bitmask -> id

  GenId of(uint32_t mask) const {
    auto it = subset_gen.find(mask);
    require(it != subset_gen.end(), "SubsetComplex: unknown subset");
    return it->second;
  }
};

template <typename Pred>
inline SubsetComplex subset_complex(int n, Pred&& admissible) {
  SubsetComplex out;
  auto ss = std::make_shared<SimplicialSet>();
  std::vector<std::vector<uint32_t>> by_card(n + 2);
  for (uint32_t m = 1; m < (1u << (n + 1)); ++m)
    if (admissible(m)) by_card[__builtin_popcount(m)].push_back(m);
  for (int c = 1; c <= n + 1; ++c) {
    std::sort(by_card[c].begin(), by_card[c].end());
    for (uint32_t m : by_card[c]) {
      std::vector<SimplexRef> faces;
      if (c >= 2) {
        std::vector<int> elems;
        for (int b = 0; b <= n; ++b)
          if (m & (1u << b)) elems.push_back(b);
        for (int i = 0; i < c; ++i)
          faces.push_back(SimplexRef{out.of(m & ~(1u << elems[i])), {}});
      }
      GenId id = ss->add_gen(c - 1, std::move(faces));
      out.gen_subset.resize(id + 1);
      out.gen_subset[id] = m;
      out.subset_gen[m] = id;
    }
  }
  out.ss = ss;
  return out;
}

inline SubsetComplex standard_simplex_c(int n) {
  require(n >= 0, "standard_simplex: n must be >= 0");
  return subset_complex(n, [](uint32_t) { return true; });
}

inline SSetPtr standard_simplex(int n) { return standard_simplex_c(n).ss; }

inline SubsetComplex boundary_c(int n) {
  require(n >= 1, "boundary: n must be >= 1");
  uint32_t full = (1u << (n + 1)) - 1;
  return subset_complex(n, [full](uint32_t m) { return m != full; });
}

inline SubsetComplex horn_c(int n, int i) {
  require(n >= 1 && 0 <= i && i <= n, "horn: bad parameters");
  uint32_t full = (1u << (n + 1)) - 1;
  uint32_t facet = full & ~(1u << i);
  return subset_complex(
      n, [full, facet](uint32_t m) { return m != full && m != facet; });
}

inline SimplicialMap subset_inclusion(const SubsetComplex& a,
                                      const SubsetComplex& b) {
  SimplicialMap m{a.ss, b.ss, {}};
  for (GenId g = 0; g < a.ss->gen_count(); ++g)
    m.assign.push_back(SimplexRef{b.of(a.gen_subset[g]), {}});
  return m;
}

// The simplex of a subset complex spanned by a weakly increasing vertex word.
inline SimplexRef subset_simplex(const SubsetComplex& c,
                                 const std::vector<int>& word) {
  std::vector<int> uniq = word;
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  uint32_t mask = 0;
  for (int v : uniq) mask |= (1u << v);
  Surj s;
  s.reserve(word.size());
  for (int v : word)
    s.push_back(static_cast<int>(
        std::lower_bound(uniq.begin(), uniq.end(), v) - uniq.begin()));
  return c.ss->make(c.of(mask), s);
}

// The map of subset complexes induced by a monotone map theta: [m] -> [n].
inline SimplicialMap simplex_operator(const SubsetComplex& src,
                                      const SubsetComplex& dst,
                                      const std::vector<int>& theta) {
  SimplicialMap m{src.ss, dst.ss, {}};
  for (GenId g = 0; g < src.ss->gen_count(); ++g) {
    uint32_t mask = src.gen_subset[g];
    std::vector<int> image;
    for (int b = 0; b < 32; ++b)
      if (mask & (1u << b)) image.push_back(theta[b]);
    std::vector<int> uniq = image;
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    uint32_t tm = 0;
    for (int v : uniq) tm |= (1u << v);
    Surj s;
    for (int v : image)
      s.push_back(static_cast<int>(
          std::lower_bound(uniq.begin(), uniq.end(), v) - uniq.begin()));
    m.assign.push_back(dst.ss->make(dst.of(tm), s));
  }
  return m;
}

// ---------------------------------------------------------------------------
// Products
// ---------------------------------------------------------------------------

struct ProductResult {
  SSetPtr ss;
  std::vector<std::pair<SimplexRef, SimplexRef>> gen_pair;
  std::map<std::pair<SimplexRef, SimplexRef>, GenId> pair_gen;
  SimplicialMap proj1, proj2;

  GenId of(const std::pair<SimplexRef, SimplexRef>& p) const {
    auto it = pair_gen.find(p);
    require(it != pair_gen.end(), "product: unknown pair");
    return it->second;
  }
};

// Joint EZ normal form of a pair of formal simplices of equal dimension:
// strips the common doubled positions.
inline std::pair<std::pair<SimplexRef, SimplexRef>, std::vector<int>>
pair_normal_form(const SimplicialSet& x, const SimplicialSet& y,
                 const SimplexRef& a, const SimplexRef& b) {
  std::vector<int> common;
  std::set_intersection(a.deg.begin(), a.deg.end(), b.deg.begin(), b.deg.end(),
                        std::back_inserter(common));
  if (common.empty()) return {{a, b}, {}};
  Surj sa = x.surj(a), sb = y.surj(b);
  for (auto it = common.rbegin(); it != common.rend(); ++it) {
    sa.erase(sa.begin() + *it);
    sb.erase(sb.begin() + *it);
  }
  return {{x.make(a.gen, sa), y.make(b.gen, sb)}, common};
}

// Nondegenerate simplices of X x Y = jointly nondegenerate pairs.
inline ProductResult product(const SSetPtr& x, const SSetPtr& y) {
  ProductResult out;
  auto ss = std::make_shared<SimplicialSet>();
  int maxd = x->dims() + y->dims();
  for (int m = 0; m <= maxd; ++m) {
    std::vector<SimplexRef> xs = x->all_simplices(m);
    std::vector<SimplexRef> ys = y->all_simplices(m);
    for (const auto& a : xs) {
      for (const auto& b : ys) {
        bool disjoint = true;
        for (size_t i = 0, j = 0; i < a.deg.size() && j < b.deg.size();) {
          if (a.deg[i] == b.deg[j]) {
            disjoint = false;
            break;
          }
          (a.deg[i] < b.deg[j]) ? ++i : ++j;
        }
        if (!disjoint) continue;
        std::vector<SimplexRef> faces;
        if (m >= 1) {
          for (int i = 0; i <= m; ++i) {
            auto [core, joint] =
                pair_normal_form(*x, *y, x->face(a, i), y->face(b, i));
            faces.push_back(SimplexRef{out.of(core), joint});
          }
        }
        GenId id = ss->add_gen(m, std::move(faces));
        out.gen_pair.resize(id + 1);
        out.gen_pair[id] = {a, b};
        out.pair_gen[{a, b}] = id;
      }
    }
  }
  out.ss = ss;
  out.proj1 = SimplicialMap{out.ss, x, {}};
  out.proj2 = SimplicialMap{out.ss, y, {}};
  for (GenId g = 0; g < ss->gen_count(); ++g) {
    out.proj1.assign.push_back(out.gen_pair[g].first);
    out.proj2.assign.push_back(out.gen_pair[g].second);
  }
  return out;
}

}  // namespace dss
