#pragma once

// The rigidification chain posets, the cube family K_n with its filtrations,
// straightening values over the simplex and over the point, and the
// comparison maps onto the flavor-collapse functor.
//
// Straightening values are computed as finite colimits of decorated chain
// posets: one piece per cell of the input and pair of endpoints, glued along
// cell faces, the tail absorption into the base coordinates and the collapse
// of initial segments.  Every chain leaves the zero side exactly once; this
// shape constraint is what makes the collapse formula exact, and it is
// enforced when the pieces are enumerated.

#include "dss/onfun.hpp"

namespace dss {

// ---------------------------------------------------------------------------
// K_n and its subcomplexes
// ---------------------------------------------------------------------------

inline ChainPoset k_complex(int n) {
  return chain_poset(n, 0, n, TensorKind::FlatCell);
}

// vertex s of the j-th maximal path through the grid [1] x [n]
inline GridPoint path_vertex(int j, int s) {
  return s <= j ? GridPoint{0, s} : GridPoint{1, s - 1};
}

inline bool chain_in_cube(const GridChain& c, int n, int j) {
  (void)n;
  return mask_max(c.zero) <= j && mask_min(c.one) >= j;
}

inline bool chain_avoids(const GridChain& c, GridPoint p) {
  uint32_t side = p.eps == 0 ? c.zero : c.one;
  return (side & bit(p.val)) == 0;
}

inline bool chain_contains(const GridChain& c, GridPoint p) {
  return !chain_avoids(c, p);
}

// Keep-set of nerve generators whose chains all satisfy the predicate.
template <typename Pred>
inline std::set<GenId> flags_where(const ChainPoset& k, Pred&& pred) {
  std::set<GenId> keep;
  for (GenId g = 0; g < k.nerve.ss->gen_count(); ++g) {
    bool ok = true;
    for (int e : k.nerve.gen_chain[g])
      if (!pred(k.elems[e])) {
        ok = false;
        break;
      }
    if (ok) keep.insert(g);
  }
  return keep;
}

// The cube K^j_n inside K_n.
inline std::set<GenId> cube_keep(const ChainPoset& k, int j) {
  return flags_where(k, [&](const GridChain& c) {
    return chain_in_cube(c, k.m, j);
  });
}

// The face of the cube avoiding the s-th vertex of the j-th path.
inline std::set<GenId> cube_face_keep(const ChainPoset& k, int j, int s) {
  GridPoint p = path_vertex(j, s);
  return flags_where(k, [&](const GridChain& c) {
    return chain_in_cube(c, k.m, j) && chain_avoids(c, p);
  });
}

// The initial-horn subcomplex: flags admitting a split point a on the zero
// side such that the truncated supports all fit one horn facet.
inline std::set<GenId> horn_keep(const ChainPoset& k, int i) {
  int n = k.m;
  uint32_t full = (1u << (n + 1)) - 1;
  std::set<GenId> keep;
  for (GenId g = 0; g < k.nerve.ss->gen_count(); ++g) {
    const auto& flag = k.nerve.gen_chain[g];
    const GridChain& c0 = k.elems[flag.front()];
    bool ok = false;
    for (int a : mask_bits(c0.zero)) {
      uint32_t support = 0;
      for (int e : flag) {
        const GridChain& c = k.elems[e];
        support |= (c.zero & ~(bit(a) - 1)) | c.one;
      }
      if ((support | bit(i)) != full) {
        ok = true;
        break;
      }
    }
    if (ok) keep.insert(g);
  }
  return keep;
}

// Filtration of K_n from the horn: stages[s+1] adds the cubes up to index s.
struct KFiltration {
  ChainPoset k;
  std::set<GenId> horn;
  std::vector<std::set<GenId>> stages;  // stages[0] = horn, stages[n+1] = all
};

inline KFiltration filtration(int n, int i) {
  KFiltration out;
  out.k = k_complex(n);
  out.horn = horn_keep(out.k, i);
  out.stages.push_back(out.horn);
  for (int s = 0; s <= n; ++s) {
    std::set<GenId> stage = out.stages.back();
    for (int j = 0; j <= s; ++j) {
      std::set<GenId> cube = cube_keep(out.k, j);
      stage.insert(cube.begin(), cube.end());
    }
    out.stages.push_back(std::move(stage));
  }
  return out;
}

// Q and Z of the inner-horn filtration step: unions of cube facets.
inline std::set<GenId> q_inner_keep(const ChainPoset& k, int j, int i) {
  int n = k.m;
  std::set<int> phi;
  if (j < i)
    phi = {j + 1, i + 1};
  else if (j == i)
    phi = {j + 1};
  else
    phi = {j + 1, i};
  std::set<GenId> keep;
  // faces containing an interior path vertex
  for (int s = 1; s <= n; ++s) {
    GridPoint p = path_vertex(j, s);
    auto part = flags_where(k, [&](const GridChain& c) {
      return chain_in_cube(c, n, j) && chain_contains(c, p);
    });
    keep.insert(part.begin(), part.end());
  }
  // avoided faces with allowed index
  for (int s = 1; s <= n; ++s) {
    if (!phi.count(s)) {
      auto part = cube_face_keep(k, j, s);
      keep.insert(part.begin(), part.end());
    }
  }
  return keep;
}

inline std::set<GenId> z_inner_keep(const ChainPoset& k, int j, int i) {
  std::set<GenId> keep = q_inner_keep(k, j, i);
  std::set<int> phi;
  if (j < i)
    phi = {j + 1, i + 1};
  else if (j == i)
    phi = {j + 1};
  else
    phi = {j + 1, i};
  for (int beta : phi)
    if (beta != j + 1) {
      auto part = cube_face_keep(k, j, beta);
      keep.insert(part.begin(), part.end());
    }
  return keep;
}

// ---------------------------------------------------------------------------
// Key scaling: the interval splitting of a cube
// ---------------------------------------------------------------------------

struct KeyScaling {
  DecSSet left;   // decorated interval x face
  DecSSet right;  // the cube K^j_n
  std::optional<DecMap> iso;
  std::string mismatch;  // nonempty when the decorations disagree
};

// The cube splits as interval x (face missing (1, j)); the interval factor
// additionally marks the slabs over marked face edges whose source contains
// (0, j).  Exact decoration match is required.
inline KeyScaling keyscaling_iso(int n, int j) {
  require(0 < j && j < n, "keyscaling_iso: need 0 < j < n");
  KeyScaling out;
  ChainPoset k = k_complex(n);
  DecSubResult cube = dec_sub_complex(k.dec, cube_keep(k, j));
  DecSubResult dface = dec_sub_complex(
      cube.obj, [&] {
        std::set<GenId> keep;
        GridPoint p{1, j};
        for (GenId g = 0; g < cube.obj.ss->gen_count(); ++g) {
          bool ok = true;
          for (int e :
               k.nerve.gen_chain[cube.incl.map.assign[g].gen])
            if (!chain_avoids(k.elems[e], p)) {
              ok = false;
              break;
            }
          if (ok) keep.insert(g);
        }
        return keep;
      }());

  // left object: interval x dface with the slab marking
  SubsetComplex d1 = standard_simplex_c(1);
  DecSSet interval = make_dec(d1.ss, Flavor::MarkedScaled, {}, {});
  ProductResult pr = product(d1.ss, dface.obj.ss);
  PairDecoration pd = product_decoration(pr, interval, dface.obj);
  GenId d1edge = d1.of(0b11);
  for (GenId g : all_of_dim(*pr.ss, 1)) {
    const auto& [e1, ea] = pr.gen_pair[g];
    if (e1 != SimplexRef{d1edge, {}}) continue;  // vertical slabs only
    if (!dface.obj.is_marked(ea)) continue;      // degenerate edges count
    // the source chain must contain (0, j)
    GenId src_v = dface.obj.ss->vertices(ea).front();
    GenId in_k = cube.incl.map.assign[dface.incl.map.assign[src_v].gen].gen;
    int first = k.nerve.gen_chain[in_k].front();
    if (k.elems[first].zero & bit(j)) pd.marked.insert(g);
  }
  DecSSet left{pr.ss, Flavor::MarkedScaled, pd.marked, pd.thin, {}};
  out.left = left;
  out.right = cube.obj;

  // candidate isomorphism: (eps, C) -> C u (eps = 1 ? {(1,j)} : {})
  SimplicialMap cand{pr.ss, cube.obj.ss, {}};
  GenId d1v0 = d1.of(0b01);
  auto cube_flag_ref = [&](const std::vector<int>& word) {
    // word of k-elem indices -> simplex of the cube subcomplex nerve
    std::vector<int> uniq = word;
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    auto it = cube.from_parent.find(k.nerve.of(uniq));
    require(it != cube.from_parent.end(),
            "keyscaling: image flag escapes the cube");
    Surj s;
    for (int v : word)
      s.push_back(static_cast<int>(
          std::find(uniq.begin(), uniq.end(), v) - uniq.begin()));
    return cube.obj.ss->make(it->second, s);
  };
  for (GenId g = 0; g < pr.ss->gen_count(); ++g) {
    const auto& [e1, ea] = pr.gen_pair[g];
    int m = pr.ss->gen_dim[g];
    std::vector<GenId> eps = d1.ss->vertices(e1);
    std::vector<GenId> everts = dface.obj.ss->vertices(ea);
    std::vector<int> word;
    for (int t = 0; t <= m; ++t) {
      GenId kv = cube.incl.map.assign[dface.incl.map.assign[everts[t]].gen].gen;
      GridChain c = k.elems[k.nerve.gen_chain[kv].front()];
      if (eps[t] != d1v0) c.one |= bit(j);
      word.push_back(k.index.at(c));
    }
    cand.assign.push_back(cube_flag_ref(word));
  }
  DecMap iso{left, cube.obj, std::move(cand)};
  if (is_dec_iso(iso)) {
    out.iso = iso;
  } else {
    // locate a mismatching cell for the report
    out.mismatch = "decoration sets disagree under the cube splitting";
    for (GenId g = 0; g < pr.ss->gen_count(); ++g) {
      int d = pr.ss->gen_dim[g];
      if (d == 1) {
        bool l = left.marked.count(g) > 0;
        bool r = cube.obj.marked.count(iso.map.assign[g].gen) > 0;
        if (l != r) {
          out.mismatch = "marking mismatch at generator " + std::to_string(g);
          break;
        }
      }
      if (d == 2) {
        bool l = left.thin.count(g) > 0;
        bool r = cube.obj.thin.count(iso.map.assign[g].gen) > 0;
        if (l != r) {
          out.mismatch = "scaling mismatch at generator " + std::to_string(g);
          break;
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// The retraction of the top cube onto the simplex
// ---------------------------------------------------------------------------

struct KTopRetraction {
  DecSSet cube;        // K^n_n with inherited decorations
  DecSSet simplex;     // (Delta^n, flat, inner triangle)
  DecMap r;            // cube -> simplex, C -> max zero(C)
  SimplicialMap s;     // simplex -> cube, t -> initial chain D_t
  bool roundtrip = false;
  bool section_decorated = false;  // with the lifted triangle added
};

inline KTopRetraction k_top_retraction(int n, int i) {
  require(n >= 2 && 0 < i && i < n, "k_top_retraction: inner index expected");
  KTopRetraction out;
  ChainPoset k = k_complex(n);
  DecSubResult cube = dec_sub_complex(k.dec, cube_keep(k, n));
  out.cube = cube.obj;
  SubsetComplex dn = standard_simplex_c(n);
  std::set<GenId> tri = detail::pick(dn, {detail::mask_of({i - 1, i, i + 1})});
  out.simplex = make_dec(dn.ss, Flavor::MarkedScaled, {}, tri);

  SimplicialMap rm{cube.obj.ss, dn.ss, {}};
  for (GenId g = 0; g < cube.obj.ss->gen_count(); ++g) {
    GenId kg = cube.incl.map.assign[g].gen;
    std::vector<int> word;
    for (int e : k.nerve.gen_chain[kg])
      word.push_back(mask_max(k.elems[e].zero));
    rm.assign.push_back(subset_simplex(dn, word));
  }
  out.r = DecMap{cube.obj, out.simplex, std::move(rm)};
  out.r.validate();

  SimplicialMap sm{dn.ss, cube.obj.ss, {}};
  auto d_chain = [&](int t) {
    GridChain c{static_cast<uint32_t>((1u << (t + 1)) - 1), bit(n)};
    return k.index.at(c);
  };
  for (GenId g = 0; g < dn.ss->gen_count(); ++g) {
    std::vector<int> word;
    for (int b : mask_bits(dn.gen_subset[g])) word.push_back(d_chain(b));
    auto it = cube.from_parent.find(k.nerve.of(word));
    require(it != cube.from_parent.end(),
            "k_top_retraction: section escapes the cube");
    sm.assign.push_back(SimplexRef{it->second, {}});
  }
  out.s = std::move(sm);
  out.roundtrip =
      compose_maps(out.r.map, out.s).assign == identity_map(dn.ss).assign;
  // the section respects decorations once the initial-chain triangle is thin
  DecSSet cube_aug = cube.obj;
  {
    std::vector<int> w{d_chain(i - 1), d_chain(i), d_chain(i + 1)};
    cube_aug.thin.insert(cube.from_parent.at(k.nerve.of(w)));
  }
  DecMap sd{out.simplex, cube_aug, out.s};
  out.section_decorated = sd.preserves_decorations();
  return out;
}

// ---------------------------------------------------------------------------
// Straightening values
// ---------------------------------------------------------------------------

struct StCellInfo {
  int m = 0;
  TensorKind kind = TensorKind::FlatCell;
  std::vector<int> word;          // base vertex word, length m+1
  GenId top = -1;                 // owning top cell (face shapes: -1)
  std::vector<GenId> x_vertices;  // vertex generators in the input
};

struct StValue {
  DecSSet value;  // marked-scaled
  int j = 0;
  bool over_point = true;
  int base_n = 0;

  struct Piece {
    int cell = 0;  // index into cells
    int a = 0, b = 0;
    ChainPoset chains;
    std::optional<FinPoset> o;
    std::optional<NerveResult> o_nv;
    std::optional<ProductResult> prod;
    int obj = -1;  // diagram object index
  };
  std::vector<StCellInfo> cells;
  std::vector<Piece> pieces;
  std::map<std::tuple<int, int, int>, int> piece_at;
  DecColimitResult col;
  // diagram object -> owning piece, with the inclusion for subposet objects
  std::vector<int> obj_piece;
  std::vector<std::optional<SimplicialMap>> obj_incl;

  // the value simplex of a piece element pair (chain flag ref, o flag ref)
  SimplexRef from_piece(int piece_idx, const SimplexRef& u) const {
    return col.cocone[pieces[piece_idx].obj].apply(u);
  }

  // resolve a generator of the value to a reference inside its piece
  std::pair<int, SimplexRef> origin_in_piece(GenId g) const {
    auto [o, ref] = col.gen_origin[g];
    if (obj_incl[o]) {
      const SimplexRef& a = (*obj_incl[o]).assign[ref.gen];
      SimplexRef pushed{a.gen, ref.deg};
      require(a.deg.empty(), "origin_in_piece: non-generator inclusion");
      return {obj_piece[o], pushed};
    }
    return {obj_piece[o], ref};
  }
};

namespace detail_st {

inline TensorKind cell_kind(const DecSSet& x, GenId g) {
  int d = x.ss->gen_dim[g];
  if (d == 1 && x.is_marked(SimplexRef{g, {}})) return TensorKind::MarkedEdge;
  if (d == 2) {
    if (x.thin.count(g)) return TensorKind::ThinCell;
    if (x.has_lean() && x.lean.count(g)) return TensorKind::LeanCell;
  }
  return TensorKind::FlatCell;
}

inline uint32_t mask_map(uint32_t m, const std::vector<int>& q) {
  uint32_t out = 0;
  for (int v : mask_bits(m)) out |= bit(q[v]);
  return out;
}

}  // namespace detail_st

// Straightening value of a biscaled object over a simplex base (or over the
// point, when over_point is set and j is ignored).
inline StValue st_value(const DecSSet& x, const SimplicialMap& p,
                        const SubsetComplex& base, int j, bool over_point) {
  require(x.flavor == Flavor::MarkedBiscaled, "st_value: MB input expected");
  require(p.src == x.ss && p.dst == base.ss, "st_value: base map mismatch");
  StValue out;
  out.j = j;
  out.over_point = over_point;
  {
    uint32_t top_mask = *std::max_element(base.gen_subset.begin(),
                                          base.gen_subset.end());
    out.base_n = mask_max(top_mask);
  }

  auto word_of = [&](const SimplexRef& img) {
    std::vector<int> w;
    for (GenId v : base.ss->vertices(img))
      w.push_back(mask_pos(base.gen_subset[v]));
    return w;
  };

  // cells: all nondegenerate generators, then one face shape per (cell, i)
  std::vector<std::pair<int, int>> face_shape;  // (owner cell index, face i)
  for (GenId g = 0; g < x.ss->gen_count(); ++g)
    out.cells.push_back(StCellInfo{x.ss->gen_dim[g],
                                   detail_st::cell_kind(x, g),
                                   word_of(p.apply(SimplexRef{g, {}})), g,
                                   x.ss->gen_vertices(g)});
  int ncells = static_cast<int>(out.cells.size());
  for (int c = 0; c < ncells; ++c) {
    int m = out.cells[c].m;
    for (int i = 0; i <= m && m >= 1; ++i) {
      std::vector<int> w;
      std::vector<GenId> xv;
      for (int t = 0; t <= m; ++t)
        if (t != i) {
          w.push_back(out.cells[c].word[t]);
          xv.push_back(out.cells[c].x_vertices[t]);
        }
      out.cells.push_back(StCellInfo{m - 1, TensorKind::FlatCell, std::move(w),
                                     -1, std::move(xv)});
      face_shape.push_back({c, i});
    }
  }

  DecColimitInput in;
  auto piece_dec = [&](StValue::Piece& pc) -> DecSSet {
    if (over_point) return pc.chains.dec;
    int src = out.cells[pc.cell].word[pc.b];
    pc.o = o_cat(out.base_n, src, j);
    pc.o_nv = nerve(*pc.o, std::max(0, j - src));
    DecSSet o_dec = o_nerve_dec(*pc.o_nv);
    DecProductResult dp = dec_product(pc.chains.dec, o_dec);
    pc.prod = std::move(dp.prod);
    return dp.obj;
  };

  for (int c = 0; c < static_cast<int>(out.cells.size()); ++c) {
    const StCellInfo& ci = out.cells[c];
    for (int a = 0; a <= ci.m; ++a)
      for (int b = a; b <= ci.m; ++b) {
        if (!over_point && ci.word[b] > j) continue;
        StValue::Piece pc;
        pc.cell = c;
        pc.a = a;
        pc.b = b;
        pc.chains = chain_poset(ci.m, a, b, ci.kind);
        DecSSet obj = piece_dec(pc);
        pc.obj = in.add_object(std::move(obj));
        out.obj_piece.push_back(static_cast<int>(out.pieces.size()));
        out.obj_incl.push_back(std::nullopt);
        out.piece_at[{c, a, b}] = static_cast<int>(out.pieces.size());
        out.pieces.push_back(std::move(pc));
      }
  }

  // ref in a piece from an aligned pair of flags (chain indices, o elements)
  auto piece_ref = [&](const StValue::Piece& pc,
                       const std::vector<int>& chain_word,
                       const std::vector<uint32_t>& o_word) -> SimplexRef {
    std::vector<int> cu = chain_word;
    cu.erase(std::unique(cu.begin(), cu.end()), cu.end());
    Surj cs;
    for (int v : chain_word)
      cs.push_back(static_cast<int>(
          std::find(cu.begin(), cu.end(), v) - cu.begin()));
    SimplexRef cref = pc.chains.nerve.ss->make(pc.chains.nerve.of(cu), cs);
    if (over_point) return cref;
    SimplexRef oref = nerve_word_ref(*pc.o_nv, *pc.o, o_word);
    auto [core, joint] =
        pair_normal_form(*pc.chains.nerve.ss, *pc.o_nv->ss, cref, oref);
    return SimplexRef{pc.prod->of(core), joint};
  };

  // expand a piece generator into aligned words
  auto expand_gen = [&](const StValue::Piece& pc, GenId g, int m,
                        std::vector<int>& chain_word,
                        std::vector<uint32_t>& o_word) {
    if (over_point) {
      Surj s = pc.chains.nerve.ss->surj(SimplexRef{g, {}});
      (void)s;
      const auto& flag = pc.chains.nerve.gen_chain[g];
      chain_word.assign(flag.begin(), flag.end());
      (void)m;
      return;
    }
    const auto& [cr, orf] = pc.prod->gen_pair[g];
    Surj sc = pc.chains.nerve.ss->surj(cr);
    for (int t = 0; t <= m; ++t)
      chain_word.push_back(pc.chains.nerve.gen_chain[cr.gen][sc[t]]);
    o_word = expand_flag(*pc.o_nv, *pc.o, orf, m);
  };

  // transported arrows between pieces of two cells along a vertex map q
  auto add_transport = [&](int c_src, int c_dst, const std::vector<int>& q) {
    const StCellInfo& src = out.cells[c_src];
    for (int a = 0; a <= src.m; ++a)
      for (int b = a; b <= src.m; ++b) {
        auto it = out.piece_at.find({c_src, a, b});
        if (it == out.piece_at.end()) continue;
        const StValue::Piece& ps = out.pieces[it->second];
        const StValue::Piece& pd =
            out.pieces[out.piece_at.at({c_dst, q[a], q[b]})];
        SimplicialMap m{in.objects[ps.obj].ss, in.objects[pd.obj].ss, {}};
        int count = in.objects[ps.obj].ss->gen_count();
        for (GenId g = 0; g < count; ++g) {
          int dim = in.objects[ps.obj].ss->gen_dim[g];
          std::vector<int> cw;
          std::vector<uint32_t> ow;
          expand_gen(ps, g, dim, cw, ow);
          std::vector<int> cw2;
          for (int e : cw) {
            const GridChain& c = ps.chains.elems[e];
            GridChain img{detail_st::mask_map(c.zero, q),
                          detail_st::mask_map(c.one, q)};
            cw2.push_back(pd.chains.index.at(img));
          }
          m.assign.push_back(piece_ref(pd, cw2, ow));
        }
        in.add_arrow(ps.obj, pd.obj, std::move(m));
      }
  };

  // face gluing: the shape of face i of cell c maps into both c and the
  // core of its i-th face
  for (size_t fs = 0; fs < face_shape.size(); ++fs) {
    int c_shape = ncells + static_cast<int>(fs);
    auto [owner, i] = face_shape[fs];
    int m = out.cells[owner].m;
    std::vector<int> delta;
    for (int t = 0; t <= m; ++t)
      if (t != i) delta.push_back(t);
    add_transport(c_shape, owner, delta);
    SimplexRef f = x.ss->face(SimplexRef{out.cells[owner].top, {}}, i);
    Surj s = x.ss->surj(f);
    add_transport(c_shape, f.gen, s);
  }

  // absorption and collapse identifications inside each cell
  for (size_t pi = 0; pi < out.pieces.size(); ++pi) {
    const StValue::Piece& pc = out.pieces[pi];
    const StCellInfo& ci = out.cells[pc.cell];
    const DecSSet obj = in.objects[pc.obj];  // copy: add_object reallocates
    // tail absorption: chains through (1, b') shrink to endpoint b'
    for (int b2 = pc.a; b2 < pc.b; ++b2) {
      if (!over_point && ci.word[b2] > j) continue;
      std::set<GenId> keep;
      for (GenId g = 0; g < obj.ss->gen_count(); ++g) {
        int dim = obj.ss->gen_dim[g];
        std::vector<int> cw;
        std::vector<uint32_t> ow;
        expand_gen(pc, g, dim, cw, ow);
        bool all = true;
        for (int e : cw)
          if (!(pc.chains.elems[e].one & bit(b2))) {
            all = false;
            break;
          }
        if (all) keep.insert(g);
      }
      if (keep.empty()) continue;
      DecSubResult sub = dec_sub_complex(obj, keep);
      int o_sub = in.add_object(sub.obj);
      out.obj_piece.push_back(static_cast<int>(pi));
      out.obj_incl.push_back(sub.incl.map);
      in.add_arrow(o_sub, pc.obj, sub.incl.map);
      const StValue::Piece& pd = out.pieces[out.piece_at.at(
          {pc.cell, pc.a, b2})];
      SimplicialMap rho{sub.obj.ss, in.objects[pd.obj].ss, {}};
      for (GenId g = 0; g < sub.obj.ss->gen_count(); ++g) {
        GenId up = sub.incl.map.assign[g].gen;
        int dim = obj.ss->gen_dim[up];
        std::vector<int> cw;
        std::vector<uint32_t> ow;
        expand_gen(pc, up, dim, cw, ow);
        std::vector<int> cw2;
        std::vector<uint32_t> ow2;
        for (int t = 0; t < static_cast<int>(cw.size()); ++t) {
          const GridChain& c = pc.chains.elems[cw[t]];
          GridChain cut{c.zero,
                        c.one & static_cast<uint32_t>((bit(b2) << 1) - 1)};
          cw2.push_back(pd.chains.index.at(cut));
          if (!over_point) {
            uint32_t absorbed = ow[t];
            for (int v : mask_bits(c.one))
              if (v >= b2) absorbed |= bit(ci.word[v]);
            ow2.push_back(absorbed);
          }
        }
        rho.assign.push_back(piece_ref(pd, cw2, ow2));
      }
      in.add_arrow(o_sub, pd.obj, std::move(rho));
    }
    // collapse of initial zero segments: chains through (0, a2) drop below
    for (int a2 = pc.a + 1; a2 <= pc.b; ++a2) {
      std::set<GenId> keep;
      for (GenId g = 0; g < obj.ss->gen_count(); ++g) {
        int dim = obj.ss->gen_dim[g];
        std::vector<int> cw;
        std::vector<uint32_t> ow;
        expand_gen(pc, g, dim, cw, ow);
        bool all = true;
        for (int e : cw)
          if (!(pc.chains.elems[e].zero & bit(a2))) {
            all = false;
            break;
          }
        if (all) keep.insert(g);
      }
      if (keep.empty()) continue;
      auto it = out.piece_at.find({pc.cell, a2, pc.b});
      if (it == out.piece_at.end()) continue;
      DecSubResult sub = dec_sub_complex(obj, keep);
      int o_sub = in.add_object(sub.obj);
      out.obj_piece.push_back(static_cast<int>(pi));
      out.obj_incl.push_back(sub.incl.map);
      in.add_arrow(o_sub, pc.obj, sub.incl.map);
      const StValue::Piece& pd = out.pieces[it->second];
      SimplicialMap rho{sub.obj.ss, in.objects[pd.obj].ss, {}};
      for (GenId g = 0; g < sub.obj.ss->gen_count(); ++g) {
        GenId up = sub.incl.map.assign[g].gen;
        int dim = obj.ss->gen_dim[up];
        std::vector<int> cw;
        std::vector<uint32_t> ow;
        expand_gen(pc, up, dim, cw, ow);
        std::vector<int> cw2;
        for (int e : cw) {
          const GridChain& c = pc.chains.elems[e];
          GridChain cut{c.zero & ~static_cast<uint32_t>(bit(a2) - 1), c.one};
          cw2.push_back(pd.chains.index.at(cut));
        }
        rho.assign.push_back(piece_ref(pd, cw2, ow));
      }
      in.add_arrow(o_sub, pd.obj, std::move(rho));
    }
  }

  out.col = dec_colimit(in);
  out.value = out.col.obj;
  return out;
}

// Straightening over the point: both endpoint families collapse.
inline StValue st_value_point(const DecSSet& x) {
  SubsetComplex pt = standard_simplex_c(0);
  SimplicialMap collapse{x.ss, pt.ss, {}};
  for (GenId g = 0; g < x.ss->gen_count(); ++g) {
    std::vector<int> deg(x.ss->gen_dim[g]);
    std::iota(deg.begin(), deg.end(), 0);
    collapse.assign.push_back(SimplexRef{0, deg});
  }
  return st_value(x, collapse, pt, 0, true);
}

inline StValue st_value_over_simplex(const DecSSet& x, const SimplicialMap& p,
                                     const SubsetComplex& base, int j) {
  return st_value(x, p, base, j, false);
}

// ---------------------------------------------------------------------------
// Expansion helpers shared by the comparison and transport maps
// ---------------------------------------------------------------------------

namespace detail_st {

// flags of a simplex of a piece object, expanded to full length
inline void expand_piece_simplex(const StValue& v, int piece_idx,
                                 const SimplexRef& u,
                                 std::vector<int>& chain_word,
                                 std::vector<uint32_t>& o_word) {
  const StValue::Piece& pc = v.pieces[piece_idx];
  int m = v.over_point ? pc.chains.nerve.ss->dim(u)
                       : pc.prod->ss->dim(u);
  if (v.over_point) {
    Surj s = pc.chains.nerve.ss->surj(u);
    for (int t = 0; t <= m; ++t)
      chain_word.push_back(pc.chains.nerve.gen_chain[u.gen][s[t]]);
    return;
  }
  Surj s = pc.prod->ss->surj(u);
  const auto& [cr, orf] = pc.prod->gen_pair[u.gen];
  Surj sc = pc.chains.nerve.ss->surj(cr);
  Surj so = pc.o_nv->ss->surj(orf);
  for (int t = 0; t <= m; ++t) {
    chain_word.push_back(pc.chains.nerve.gen_chain[cr.gen][sc[s[t]]]);
    o_word.push_back(static_cast<uint32_t>(
        pc.o->elems[pc.o_nv->gen_chain[orf.gen][so[s[t]]]]));
  }
}

// ref inside a piece from aligned words
inline SimplexRef piece_word_ref(const StValue& v, int piece_idx,
                                 const std::vector<int>& chain_word,
                                 const std::vector<uint32_t>& o_word) {
  const StValue::Piece& pc = v.pieces[piece_idx];
  std::vector<int> cu = chain_word;
  cu.erase(std::unique(cu.begin(), cu.end()), cu.end());
  Surj cs;
  for (int w : chain_word)
    cs.push_back(static_cast<int>(
        std::find(cu.begin(), cu.end(), w) - cu.begin()));
  SimplexRef cref = pc.chains.nerve.ss->make(pc.chains.nerve.of(cu), cs);
  if (v.over_point) return cref;
  SimplexRef oref = nerve_word_ref(*pc.o_nv, *pc.o, o_word);
  auto [core, joint] =
      pair_normal_form(*pc.chains.nerve.ss, *pc.o_nv->ss, cref, oref);
  return SimplexRef{pc.prod->of(core), joint};
}

}  // namespace detail_st

// ---------------------------------------------------------------------------
// Comparison maps onto the flavor collapse
// ---------------------------------------------------------------------------

struct AlphaMap {
  StValue st;      // source value
  DecSSet target;  // the collapse value on the same simplex
  DecMap map;
};

// The comparison map on a value over the point: a chain goes to the top
// vertex of its zero part.
inline DecMap alpha_on(const StValue& st, const DecSSet& target,
                       const SubsetComplex& ambient) {
  SimplicialMap m{st.value.ss, target.ss, {}};
  for (GenId g = 0; g < st.value.ss->gen_count(); ++g) {
    auto [piece_idx, pref] = st.origin_in_piece(g);
    const StValue::Piece& pc = st.pieces[piece_idx];
    const StCellInfo& ci = st.cells[pc.cell];
    std::vector<int> cw;
    std::vector<uint32_t> ow;
    detail_st::expand_piece_simplex(st, piece_idx, pref, cw, ow);
    std::vector<int> word;
    for (int e : cw) {
      int pos = mask_max(pc.chains.elems[e].zero);
      word.push_back(
          mask_pos(ambient.gen_subset[ci.x_vertices[pos]]));
    }
    m.assign.push_back(subset_simplex(ambient, word));
  }
  DecMap out{st.value, target, std::move(m)};
  out.validate();
  return out;
}

// alpha on the minimally decorated simplex
inline AlphaMap alpha_flat(int n) {
  SubsetComplex dn = standard_simplex_c(n);
  DecSSet x = make_dec(dn.ss, Flavor::MarkedBiscaled);
  StValue st = st_value_point(x);
  DecSSet target = make_dec(dn.ss, Flavor::MarkedScaled, {}, {});
  DecMap m = alpha_on(st, target, dn);
  return AlphaMap{std::move(st), std::move(target), std::move(m)};
}

// alpha on the marked interval
inline AlphaMap alpha_sharp1() {
  SubsetComplex d1 = standard_simplex_c(1);
  DecSSet x =
      make_dec(d1.ss, Flavor::MarkedBiscaled, {d1.of(0b11)}, {}, {});
  StValue st = st_value_point(x);
  DecSSet target =
      make_dec(d1.ss, Flavor::MarkedScaled, {d1.of(0b11)}, {});
  DecMap m = alpha_on(st, target, d1);
  return AlphaMap{std::move(st), std::move(target), std::move(m)};
}

// alpha on the thin triangle
inline AlphaMap alpha_sharp2() {
  SubsetComplex d2 = standard_simplex_c(2);
  std::set<GenId> t{d2.of(0b111)};
  DecSSet x = make_dec(d2.ss, Flavor::MarkedBiscaled, {}, t, t);
  StValue st = st_value_point(x);
  DecSSet target = make_dec(d2.ss, Flavor::MarkedScaled, {}, t);
  DecMap m = alpha_on(st, target, d2);
  return AlphaMap{std::move(st), std::move(target), std::move(m)};
}

// ---------------------------------------------------------------------------
// Functoriality transports
// ---------------------------------------------------------------------------

// The map of point-values induced by the operator theta: [k] -> [n] between
// the full simplex complexes (with matching decorations).
inline SimplicialMap st_point_operator_map(const std::vector<int>& theta,
                                           const StValue& src,
                                           const SubsetComplex& src_ambient,
                                           const StValue& dst,
                                           const SubsetComplex& dst_ambient) {
  SimplicialMap m{src.value.ss, dst.value.ss, {}};
  for (GenId g = 0; g < src.value.ss->gen_count(); ++g) {
    auto [piece_idx, pref] = src.origin_in_piece(g);
    const StValue::Piece& pc = src.pieces[piece_idx];
    const StCellInfo& ci = src.cells[pc.cell];
    // target cell: image of the vertex word under theta
    std::vector<int> image;
    for (GenId v : ci.x_vertices)
      image.push_back(theta[mask_pos(src_ambient.gen_subset[v])]);
    std::vector<int> uniq = image;
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    uint32_t mask = 0;
    for (int v : uniq) mask |= bit(v);
    int c_dst = dst_ambient.of(mask);  // cells indexed by generator id
    std::vector<int> q;
    for (int v : image)
      q.push_back(static_cast<int>(
          std::find(uniq.begin(), uniq.end(), v) - uniq.begin()));
    std::vector<int> cw;
    std::vector<uint32_t> ow;
    detail_st::expand_piece_simplex(src, piece_idx, pref, cw, ow);
    int p_dst = dst.piece_at.at({c_dst, q[pc.a], q[pc.b]});
    std::vector<int> cw2;
    for (int e : cw) {
      const GridChain& c = pc.chains.elems[e];
      GridChain img{detail_st::mask_map(c.zero, q),
                    detail_st::mask_map(c.one, q)};
      cw2.push_back(dst.pieces[p_dst].chains.index.at(img));
    }
    m.assign.push_back(dst.col.cocone[dst.pieces[p_dst].obj].apply(
        detail_st::piece_word_ref(dst, p_dst, cw2, ow)));
  }
  return m;
}

// ---------------------------------------------------------------------------
// The straightening functor of an object over the simplex
// ---------------------------------------------------------------------------

struct StFunctor {
  OnFunctor fun;
  std::vector<StValue> vals;
};

inline StFunctor st_functor(const DecSSet& x, const SimplicialMap& p,
                            const SubsetComplex& base) {
  StFunctor out;
  uint32_t top = *std::max_element(base.gen_subset.begin(),
                                   base.gen_subset.end());
  int n = mask_max(top);
  out.fun.n = n;
  for (int i = 0; i <= n; ++i)
    out.vals.push_back(st_value_over_simplex(x, p, base, i));
  for (int i = 0; i <= n; ++i) out.fun.values.push_back(out.vals[i].value);
  out.fun.action.assign(n + 1, std::vector<std::optional<OnFunctor::Action>>(
                                   n + 1));
  for (int i = 0; i <= n; ++i) {
    if (out.fun.values[i].ss->gen_count() == 0) continue;
    for (int i2 = i; i2 <= n; ++i2) {
      const StValue& vi = out.vals[i];
      const StValue& vi2 = out.vals[i2];
      out.fun.action[i][i2] = build_action(
          n, i, i2, out.fun.values[i], out.fun.values[i2],
          [&vi, &vi2](const std::vector<uint32_t>& wflag,
                      const SimplexRef& xref) {
            auto [piece_idx, pref] = vi.origin_in_piece(xref.gen);
            const StValue::Piece& pc = vi.pieces[piece_idx];
            SimplexRef expanded{pref.gen, xref.deg};
            std::vector<int> cw;
            std::vector<uint32_t> ow;
            detail_st::expand_piece_simplex(vi, piece_idx, expanded, cw, ow);
            for (size_t t = 0; t < ow.size(); ++t) ow[t] |= wflag[t];
            int p2 = vi2.piece_at.at({pc.cell, pc.a, pc.b});
            return vi2.col.cocone[vi2.pieces[p2].obj].apply(
                detail_st::piece_word_ref(vi2, p2, cw, ow));
          });
    }
  }
  return out;
}

}  // namespace dss
