#pragma once

// Decoration flavors on finite simplicial sets.
//
// Scaled          = thin triangles
// MarkedScaled    = marked edges + thin triangles
// MarkedBiscaled  = marked edges + thin triangles inside lean triangles
//
// Decorations are stored only on nondegenerate cells; every degenerate edge
// and triangle is implicitly decorated.

#include "dss/colimit.hpp"
#include "dss/sset.hpp"

namespace dss {

enum class Flavor { Scaled, MarkedScaled, MarkedBiscaled };

inline const char* flavor_name(Flavor f) {
  switch (f) {
    case Flavor::Scaled: return "scaled";
    case Flavor::MarkedScaled: return "marked-scaled";
    case Flavor::MarkedBiscaled: return "marked-biscaled";
  }
  return "?";
}

struct DecSSet {
  SSetPtr ss;
  Flavor flavor = Flavor::Scaled;
  std::set<GenId> marked;  // nondegenerate edges; empty for Scaled
  std::set<GenId> thin;    // nondegenerate triangles
  std::set<GenId> lean;    // nondegenerate triangles; MarkedBiscaled only

  bool has_marking() const { return flavor != Flavor::Scaled; }
  bool has_lean() const { return flavor == Flavor::MarkedBiscaled; }

  bool is_marked(const SimplexRef& e) const {
    if (!e.deg.empty()) return true;
    if (!has_marking()) return false;
    return marked.count(e.gen) > 0;
  }
  bool is_thin(const SimplexRef& t) const {
    return !t.deg.empty() || thin.count(t.gen) > 0;
  }
  bool is_lean(const SimplexRef& t) const {
    if (!has_lean()) return is_thin(t);
    return !t.deg.empty() || lean.count(t.gen) > 0;
  }

  void validate() const {
    auto check_dim = [&](const std::set<GenId>& s, int d, const char* what) {
      for (GenId g : s) {
        require(g >= 0 && g < ss->gen_count(),
                std::string(what) + ": unknown generator id");
        require(ss->gen_dim[g] == d,
                std::string(what) + ": wrong dimension for id " +
                    std::to_string(g));
      }
    };
    check_dim(marked, 1, "marked");
    check_dim(thin, 2, "thin");
    check_dim(lean, 2, "lean");
    if (flavor == Flavor::Scaled)
      require(marked.empty() && lean.empty(),
              "scaled decoration carries no marking/lean data");
    if (flavor == Flavor::MarkedScaled)
      require(lean.empty(), "marked-scaled decoration carries no lean data");
    if (flavor == Flavor::MarkedBiscaled)
      require(std::includes(lean.begin(), lean.end(), thin.begin(),
                            thin.end()),
              "thin triangles must be lean");
    ss->validate();
  }
};

inline DecSSet make_dec(const SSetPtr& ss, Flavor flavor,
                        std::set<GenId> marked = {}, std::set<GenId> thin = {},
                        std::set<GenId> lean = {}) {
  DecSSet d{ss, flavor, std::move(marked), std::move(thin), std::move(lean)};
  d.validate();
  return d;
}

// All nondegenerate triangles, convenient for sharp decorations.
inline std::set<GenId> all_of_dim(const SimplicialSet& ss, int d) {
  std::set<GenId> out;
  if (d <= ss.dims())
    for (GenId g : ss.gens[d]) out.insert(g);
  return out;
}

// ---------------------------------------------------------------------------
// Decorated maps
// ---------------------------------------------------------------------------

struct DecMap {
  DecSSet src, dst;
  SimplicialMap map;

  SimplexRef apply(const SimplexRef& x) const { return map.apply(x); }

  void validate() const {
    require(map.src == src.ss && map.dst == dst.ss,
            "dec map: endpoint complexes do not match");
    require(src.flavor == dst.flavor, "dec map: flavor mismatch");
    map.validate();
    for (GenId g : src.marked)
      require(dst.is_marked(map.assign[g]),
              "dec map: marked edge " + std::to_string(g) + " not preserved");
    for (GenId g : src.thin)
      require(dst.is_thin(map.assign[g]),
              "dec map: thin triangle " + std::to_string(g) + " not preserved");
    if (src.has_lean())
      for (GenId g : src.lean)
        require(dst.is_lean(map.assign[g]), "dec map: lean triangle " +
                                                std::to_string(g) +
                                                " not preserved");
  }

  bool preserves_decorations() const {
    for (GenId g : src.marked)
      if (!dst.is_marked(map.assign[g])) return false;
    for (GenId g : src.thin)
      if (!dst.is_thin(map.assign[g])) return false;
    if (src.has_lean())
      for (GenId g : src.lean)
        if (!dst.is_lean(map.assign[g])) return false;
    return true;
  }
};

inline DecMap dec_identity(const DecSSet& x) {
  return DecMap{x, x, identity_map(x.ss)};
}

inline DecMap compose_dec(const DecMap& g, const DecMap& f) {
  return DecMap{f.src, g.dst, compose_maps(g.map, f.map)};
}

// ---------------------------------------------------------------------------
// Flavor-change functors
// ---------------------------------------------------------------------------

// Scaled -> MarkedBiscaled: (Y, T) becomes (Y, flat, flat inside T).
inline DecSSet flavor_L(const DecSSet& scaled) {
  require(scaled.flavor == Flavor::Scaled, "flavor_L: expects a scaled input");
  return DecSSet{scaled.ss, Flavor::MarkedBiscaled, {}, {}, scaled.thin};
}

// Scaled -> MarkedScaled: (Y, T) becomes (Y, flat, T).
inline DecSSet flavor_L_ms(const DecSSet& scaled) {
  require(scaled.flavor == Flavor::Scaled,
          "flavor_L_ms: expects a scaled input");
  return DecSSet{scaled.ss, Flavor::MarkedScaled, {}, scaled.thin, {}};
}

// MarkedBiscaled -> MarkedScaled over the point: keep marking, thin := lean.
inline DecSSet collapse_to_ms(const DecSSet& mb) {
  require(mb.flavor == Flavor::MarkedBiscaled,
          "collapse_to_ms: expects marked-biscaled input");
  return DecSSet{mb.ss, Flavor::MarkedScaled, mb.marked, mb.lean, {}};
}

// Marked object over a scaled base: thin := triangles over thin base
// triangles, lean := everything.
inline DecSSet flavor_R_marked(const DecSSet& marked_obj,
                               const SimplicialMap& p, const DecSSet& base) {
  require(marked_obj.flavor == Flavor::MarkedScaled,
          "flavor_R_marked: marked input expected");
  require(base.flavor == Flavor::Scaled, "flavor_R_marked: scaled base");
  require(p.src == marked_obj.ss && p.dst == base.ss,
          "flavor_R_marked: structure map mismatch");
  std::set<GenId> thin;
  for (GenId g : all_of_dim(*marked_obj.ss, 2))
    if (base.is_thin(p.assign[g])) thin.insert(g);
  return DecSSet{marked_obj.ss, Flavor::MarkedBiscaled, marked_obj.marked,
                 thin, all_of_dim(*marked_obj.ss, 2)};
}

// Base structure (S, sharp, T_S inside sharp) carried by a scaled set when
// biscaled objects live over it.
inline DecSSet mb_base(const DecSSet& scaled) {
  require(scaled.flavor == Flavor::Scaled, "mb_base: expects a scaled input");
  return DecSSet{scaled.ss, Flavor::MarkedBiscaled, all_of_dim(*scaled.ss, 1),
                 scaled.thin, all_of_dim(*scaled.ss, 2)};
}

// Underlying scaled set of a biscaled object over a scaled base: a triangle
// is thin iff it is lean and its image in the base is thin.
inline DecSSet underlying_bicat(const DecSSet& mb, const SimplicialMap& p,
                                const DecSSet& base) {
  require(mb.flavor == Flavor::MarkedBiscaled, "underlying_bicat: MB input");
  require(base.flavor == Flavor::Scaled, "underlying_bicat: scaled base");
  require(p.src == mb.ss && p.dst == base.ss,
          "underlying_bicat: structure map mismatch");
  std::set<GenId> thin;
  for (GenId g : mb.lean)
    if (base.is_thin(p.assign[g])) thin.insert(g);
  return DecSSet{mb.ss, Flavor::Scaled, {}, thin, {}};
}

// ---------------------------------------------------------------------------
// Decorated products and colimits
// ---------------------------------------------------------------------------

struct DecProductResult {
  DecSSet obj;
  ProductResult prod;  // generator tables and projections
};

// Categorical product: a cell is decorated iff both projections are.
inline DecProductResult dec_product(const DecSSet& a, const DecSSet& b) {
  require(a.flavor == b.flavor, "dec_product: flavor mismatch");
  ProductResult pr = product(a.ss, b.ss);
  DecSSet obj{pr.ss, a.flavor, {}, {}, {}};
  for (GenId g : all_of_dim(*pr.ss, 1)) {
    const auto& [x, y] = pr.gen_pair[g];
    if (a.is_marked(x) && b.is_marked(y)) obj.marked.insert(g);
  }
  for (GenId g : all_of_dim(*pr.ss, 2)) {
    const auto& [x, y] = pr.gen_pair[g];
    if (a.is_thin(x) && b.is_thin(y)) obj.thin.insert(g);
    if (a.has_lean() && a.is_lean(x) && b.is_lean(y)) obj.lean.insert(g);
  }
  if (obj.flavor == Flavor::Scaled) obj.marked.clear();
  return DecProductResult{std::move(obj), std::move(pr)};
}

struct DecColimitInput {
  std::vector<DecSSet> objects;
  struct Arrow {
    int src, dst;
    SimplicialMap map;
  };
  std::vector<Arrow> arrows;

  int add_object(DecSSet d) {
    objects.push_back(std::move(d));
    return static_cast<int>(objects.size()) - 1;
  }
  void add_arrow(int s, int d, SimplicialMap m) {
    require(m.src == objects[s].ss && m.dst == objects[d].ss,
            "dec colimit: arrow endpoints mismatch");
    arrows.push_back({s, d, std::move(m)});
  }
};

struct DecColimitResult {
  DecSSet obj;
  std::vector<SimplicialMap> cocone;
  std::vector<std::pair<int, SimplexRef>> gen_origin;

  SimplexRef resolve(int o, const SimplexRef& x) const {
    return cocone[o].apply(x);
  }
};

// Colimit of underlying sets; decorations are the unions of the images.
inline DecColimitResult dec_colimit(const DecColimitInput& in) {
  require(!in.objects.empty(), "dec colimit: empty diagram");
  Flavor fl = in.objects.front().flavor;
  ColimitInput ci;
  for (const auto& o : in.objects) {
    require(o.flavor == fl, "dec colimit: flavor mismatch");
    ci.add_object(o.ss);
  }
  for (const auto& a : in.arrows) ci.add_arrow(a.src, a.dst, a.map);
  ColimitResult cr = colimit(ci);
  DecSSet obj{cr.ss, fl, {}, {}, {}};
  for (size_t o = 0; o < in.objects.size(); ++o) {
    const DecSSet& d = in.objects[o];
    auto push = [&](const std::set<GenId>& from, std::set<GenId>& to) {
      for (GenId g : from) {
        SimplexRef r = cr.resolve(static_cast<int>(o), SimplexRef{g, {}});
        if (r.deg.empty()) to.insert(r.gen);
      }
    };
    push(d.marked, obj.marked);
    push(d.thin, obj.thin);
    push(d.lean, obj.lean);
    if (!d.has_lean()) {
      // keep thin inside lean trivially for non-MB flavors
    }
  }
  if (fl == Flavor::MarkedBiscaled)
    obj.lean.insert(obj.thin.begin(), obj.thin.end());
  return DecColimitResult{std::move(obj), std::move(cr.cocone),
                          std::move(cr.gen_origin)};
}

// Decorated subcomplex: restrict decorations to surviving generators.
struct DecSubResult {
  DecSSet obj;
  DecMap incl;
  std::map<GenId, GenId> from_parent;
};

inline DecSubResult dec_sub_complex(const DecSSet& x,
                                    const std::set<GenId>& keep) {
  SubComplexResult sc = sub_complex(x.ss, keep);
  DecSSet obj{sc.ss, x.flavor, {}, {}, {}};
  for (GenId g = 0; g < sc.ss->gen_count(); ++g) {
    GenId pg = sc.to_parent[g];
    if (x.marked.count(pg)) obj.marked.insert(g);
    if (x.thin.count(pg)) obj.thin.insert(g);
    if (x.lean.count(pg)) obj.lean.insert(g);
  }
  DecMap incl{obj, x, sc.incl};
  return DecSubResult{obj, std::move(incl), std::move(sc.from_parent)};
}

}  // namespace dss
