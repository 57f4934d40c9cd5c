#pragma once

// Finite colimits of simplicial sets.
//
// Computed dimension by dimension: union-find on all formal simplices of the
// input objects, followed by EZ renormalization of the classes.  No new
// nondegenerate cell can appear above the maximum input dimension (a class
// whose members are all degenerate is degenerate), so enumeration up to that
// bound is exhaustive.

#include <numeric>

#include "dss/sset.hpp"

namespace dss {

struct ColimitInput {
  std::vector<SSetPtr> objects;
  struct Arrow {
    int src, dst;
    SimplicialMap map;
  };
  std::vector<Arrow> arrows;

  int add_object(const SSetPtr& s) {
    objects.push_back(s);
    return static_cast<int>(objects.size()) - 1;
  }
  void add_arrow(int src, int dst, SimplicialMap m) {
    require(m.src == objects[src] && m.dst == objects[dst],
            "colimit: arrow endpoints do not match diagram objects");
    arrows.push_back({src, dst, std::move(m)});
  }
};

struct ColimitResult {
  SSetPtr ss;
  std::vector<SimplicialMap> cocone;  // objects[i] -> ss
  // representative instance of each new generator
  std::vector<std::pair<int, SimplexRef>> gen_origin;

  SimplexRef resolve(int obj, const SimplexRef& x) const {
    return cocone[obj].apply(x);
  }
};

namespace detail {
struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);  // keep smallest index as root (determinism)
    p[b] = a;
  }
};
}  // namespace detail

inline ColimitResult colimit(const ColimitInput& in) {
  int nobj = static_cast<int>(in.objects.size());
  int maxd = 0;
  for (const auto& o : in.objects) maxd = std::max(maxd, o->dims());

  // per dimension: instance tables and class structure
  using Key = std::pair<int, SimplexRef>;
  std::vector<std::map<Key, int>> index(maxd + 1);
  std::vector<std::vector<Key>> insts(maxd + 1);
  std::vector<std::vector<int>> root(maxd + 1);  // instance -> class root

  for (int k = 0; k <= maxd; ++k) {
    for (int o = 0; o < nobj; ++o)
      for (const auto& s : in.objects[o]->all_simplices(k)) {
        Key key{o, s};
        index[k].emplace(key, static_cast<int>(insts[k].size()));
        insts[k].push_back(key);
      }
    detail::Dsu dsu(static_cast<int>(insts[k].size()));
    for (const auto& ar : in.arrows)
      for (const auto& s : in.objects[ar.src]->all_simplices(k))
        dsu.unite(index[k].at({ar.src, s}),
                  index[k].at({ar.dst, ar.map.apply(s)}));
    root[k].resize(insts[k].size());
    for (size_t i = 0; i < insts[k].size(); ++i)
      root[k][i] = dsu.find(static_cast<int>(i));
  }

  auto ss = std::make_shared<SimplicialSet>();
  std::vector<std::pair<int, SimplexRef>> out_origin;
  // class root -> resolved simplex in the new complex, per dimension
  std::vector<std::map<int, SimplexRef>> resolved(maxd + 1);

  // resolve a class to its EZ normal form in the output complex
  auto resolve_class = [&](auto&& self, int k, int r) -> SimplexRef {
    auto it = resolved[k].find(r);
    if (it != resolved[k].end()) return it->second;
    // find the degenerate member with the smallest instance index
    int deg_inst = -1;
    for (size_t i = 0; i < insts[k].size(); ++i) {
      if (root[k][i] != r) continue;
      if (!insts[k][i].second.deg.empty()) {
        deg_inst = static_cast<int>(i);
        break;
      }
    }
    require(deg_inst >= 0, "colimit: unresolved nondegenerate class");
    const auto& [obj, ref] = insts[k][deg_inst];
    int p = ref.deg.front();
    Surj s = in.objects[obj]->surj(ref);
    s.erase(s.begin() + p);
    SimplexRef lower = in.objects[obj]->make(ref.gen, s);
    int lr = root[k - 1][index[k - 1].at({obj, lower})];
    SimplexRef res = ss->degenerate(self(self, k - 1, lr), p);
    resolved[k].emplace(r, res);
    return res;
  };

  for (int k = 0; k <= maxd; ++k) {
    // create generators for nondegenerate classes, in root order
    std::vector<int> roots;
    for (size_t i = 0; i < insts[k].size(); ++i)
      if (root[k][i] == static_cast<int>(i)) roots.push_back(root[k][i]);
    for (int r : roots) {
      bool degenerate = false;
      for (size_t i = r; i < insts[k].size(); ++i)
        if (root[k][i] == r && !insts[k][i].second.deg.empty()) {
          degenerate = true;
          break;
        }
      if (degenerate) continue;
      const auto& [obj, ref] = insts[k][r];
      std::vector<SimplexRef> faces;
      if (k >= 1)
        for (int i = 0; i <= k; ++i) {
          SimplexRef f = in.objects[obj]->face(ref, i);
          int fr = root[k - 1][index[k - 1].at({obj, f})];
          faces.push_back(resolve_class(resolve_class, k - 1, fr));
        }
      GenId id = ss->add_gen(k, std::move(faces));
      out_origin.push_back({obj, ref});
      resolved[k].emplace(r, SimplexRef{id, {}});
    }
    // force resolution of the remaining (degenerate) classes
    for (int r : roots)
      if (!resolved[k].count(r)) resolve_class(resolve_class, k, r);
  }

  ColimitResult out;
  out.ss = ss;
  out.gen_origin = std::move(out_origin);
  out.cocone.reserve(nobj);
  for (int o = 0; o < nobj; ++o) {
    SimplicialMap m{in.objects[o], ss, {}};
    for (GenId g = 0; g < in.objects[o]->gen_count(); ++g) {
      int k = in.objects[o]->gen_dim[g];
      int r = root[k][index[k].at({o, SimplexRef{g, {}}})];
      m.assign.push_back(resolved[k].at(r));
    }
    out.cocone.push_back(std::move(m));
  }
  return out;
}

// Map between two colimits induced by componentwise maps.  obj_map[o] names
// the object of `b` under object o of `a`; comps[o] is the component map.
inline SimplicialMap induced_map(const ColimitResult& a,
                                 const ColimitResult& b,
                                 const std::vector<int>& obj_map,
                                 const std::vector<SimplicialMap>& comps) {
  SimplicialMap m{a.ss, b.ss, {}};
  m.assign.reserve(a.ss->gen_count());
  for (GenId g = 0; g < a.ss->gen_count(); ++g) {
    const auto& [obj, ref] = a.gen_origin[g];
    m.assign.push_back(b.cocone[obj_map[obj]].apply(comps[obj].apply(ref)));
  }
  return m;
}

// ---------------------------------------------------------------------------
// Subcomplexes
// ---------------------------------------------------------------------------

struct SubComplexResult {
  SSetPtr ss;
  SimplicialMap incl;              // sub -> parent
  std::vector<GenId> to_parent;    // sub gen -> parent gen
  std::map<GenId, GenId> from_parent;
};

// Subcomplex spanned by a face-closed set of nondegenerate generators.
inline SubComplexResult sub_complex(const SSetPtr& x,
                                    const std::set<GenId>& keep) {
  SubComplexResult out;
  auto ss = std::make_shared<SimplicialSet>();
  for (int k = 0; k <= x->dims(); ++k) {
    for (GenId g : x->gens[k]) {
      if (!keep.count(g)) continue;
      std::vector<SimplexRef> faces;
      if (k >= 1)
        for (const auto& f : x->face_tab[g]) {
          require(keep.count(f.gen) > 0,
                  "sub_complex: generator set not closed under faces");
          faces.push_back(SimplexRef{out.from_parent.at(f.gen), f.deg});
        }
      GenId id = ss->add_gen(k, std::move(faces));
      out.to_parent.resize(id + 1);
      out.to_parent[id] = g;
      out.from_parent[g] = id;
    }
  }
  out.ss = ss;
  out.incl = SimplicialMap{out.ss, x, {}};
  for (GenId g = 0; g < ss->gen_count(); ++g)
    out.incl.assign.push_back(SimplexRef{out.to_parent[g], {}});
  return out;
}

inline SSetPtr point() {
  auto ss = std::make_shared<SimplicialSet>();
  ss->add_gen(0);
  return ss;
}

inline SSetPtr empty_sset() { return std::make_shared<SimplicialSet>(); }

// Collapse a subcomplex to a point: X / A with projection.  For empty A this
// yields X together with a disjoint basepoint (the pushout along 0 -> point).
struct QuotientResult {
  SSetPtr ss;
  SimplicialMap proj;   // X -> X/A
  SimplexRef basepoint;  // image of A
};

inline QuotientResult quotient(const SSetPtr& x, const std::set<GenId>& a) {
  SubComplexResult sub = sub_complex(x, a);
  SSetPtr pt = point();
  ColimitInput in;
  int ox = in.add_object(x);
  int oa = in.add_object(sub.ss);
  int op = in.add_object(pt);
  in.add_arrow(oa, ox, sub.incl);
  SimplicialMap collapse{sub.ss, pt, {}};
  for (GenId g = 0; g < sub.ss->gen_count(); ++g) {
    std::vector<int> deg(sub.ss->gen_dim[g]);
    std::iota(deg.begin(), deg.end(), 0);
    collapse.assign.push_back(SimplexRef{0, deg});
  }
  in.add_arrow(oa, op, collapse);
  ColimitResult col = colimit(in);
  return QuotientResult{col.ss, col.cocone[ox],
                        col.resolve(op, SimplexRef{0, {}})};
}

}  // namespace dss
