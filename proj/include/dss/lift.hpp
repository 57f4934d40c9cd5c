#pragma once

// Decorated lifting problems and the search engine behind every right-lifting
// predicate in the library.
//
// The solver assigns the generators of B missing from A in increasing
// (dimension, id) order.  Candidate images are the target simplices of equal
// dimension (degenerate ones first) that match the projection, the already
// assigned faces and the decorations.  Since the faces of a generator live in
// strictly lower dimensions, generators of equal dimension are independent;
// conflict-directed backjumping exploits this.  A NoFiller verdict is only
// produced by exhaustive search, and never by running out of budget.

#include <functional>
#include <optional>

#include "dss/cells.hpp"
#include "dss/dec.hpp"

namespace dss {

struct LiftingProblem {
  DecMap left;    // A -> B, mono
  DecMap right;   // X -> S
  DecMap top;     // A -> X
  DecMap bottom;  // B -> S

  void validate() const {
    left.validate();
    right.validate();
    top.validate();
    bottom.validate();
    require(left.src.flavor == right.src.flavor,
            "lifting problem: flavor mismatch");
    for (GenId g = 0; g < left.src.ss->gen_count(); ++g)
      require(right.apply(top.map.assign[g]) ==
                  bottom.apply(left.map.assign[g]),
              "lifting problem: square does not commute at generator " +
                  std::to_string(g));
  }
};

enum class LiftVerdict { Filler, NoFiller, BudgetExceeded };

inline const char* verdict_name(LiftVerdict v) {
  switch (v) {
    case LiftVerdict::Filler: return "filler";
    case LiftVerdict::NoFiller: return "no-filler";
    case LiftVerdict::BudgetExceeded: return "budget-exceeded";
  }
  return "?";
}

struct LiftOutcome {
  LiftVerdict verdict = LiftVerdict::NoFiller;
  std::optional<DecMap> filler;
  long nodes = 0;
  long backtracks = 0;
};

namespace detail {

struct LiftSearch {
  const LiftingProblem& p;
  long budget;
  long nodes = 0;
  long backtracks = 0;

  const SimplicialSet& B;
  const SimplicialSet& X;
  std::vector<SimplexRef> assigned;     // per B generator
  std::vector<char> has_value;          // per B generator
  std::vector<GenId> decisions;         // unassigned gens, (dim, id) order
  std::vector<int> decision_index;      // B gen -> decision level or -1
  std::vector<std::vector<SimplexRef>> pools;  // static candidate pools
  std::vector<std::vector<int>> deps;          // decision -> lower decisions

  enum class Status { Found, Exhausted, Budget };
  struct Result {
    Status status;
    int jump = -1;
    std::set<int> conflict;
  };

  explicit LiftSearch(const LiftingProblem& prob, long b)
      : p(prob), budget(b), B(*p.left.dst.ss), X(*p.right.src.ss) {
    assigned.resize(B.gen_count());
    has_value.assign(B.gen_count(), 0);
    decision_index.assign(B.gen_count(), -1);
    // seed the image of A
    for (GenId a = 0; a < p.left.src.ss->gen_count(); ++a) {
      const SimplexRef& im = p.left.map.assign[a];
      require(im.deg.empty(), "solve_lifting: left leg must be mono");
      require(!has_value[im.gen], "solve_lifting: left leg must be mono");
      assigned[im.gen] = p.top.map.assign[a];
      has_value[im.gen] = 1;
    }
    for (int k = 0; k <= B.dims(); ++k)
      for (GenId g : B.gens[k])
        if (!has_value[g]) {
          decision_index[g] = static_cast<int>(decisions.size());
          decisions.push_back(g);
        }
    pools.resize(decisions.size());
    deps.resize(decisions.size());
    for (size_t lvl = 0; lvl < decisions.size(); ++lvl) {
      GenId b_gen = decisions[lvl];
      int k = B.gen_dim[b_gen];
      SimplexRef target = p.bottom.map.assign[b_gen];
      for (const auto& cand : X.all_simplices(k)) {
        if (p.right.apply(cand) != target) continue;
        if (!decoration_ok(b_gen, cand)) continue;
        pools[lvl].push_back(cand);
      }
      if (k > 0) {
        std::set<int> d;
        for (const auto& f : B.face_tab[b_gen])
          if (decision_index[f.gen] >= 0) d.insert(decision_index[f.gen]);
        deps[lvl].assign(d.begin(), d.end());
      }
    }
  }

  bool decoration_ok(GenId b_gen, const SimplexRef& cand) const {
    int k = B.gen_dim[b_gen];
    const DecSSet& db = p.left.dst;
    const DecSSet& dx = p.right.src;
    if (k == 1 && db.marked.count(b_gen) && !dx.is_marked(cand)) return false;
    if (k == 2) {
      if (db.thin.count(b_gen) && !dx.is_thin(cand)) return false;
      if (db.has_lean() && db.lean.count(b_gen) && !dx.is_lean(cand))
        return false;
    }
    return true;
  }

  // value of an arbitrary B-simplex under the partial assignment
  SimplexRef value(const SimplexRef& b) const {
    const SimplexRef& a = assigned[b.gen];
    return X.make(a.gen, compose(X.surj(a), B.surj(b)));
  }

  bool faces_ok(GenId b_gen, const SimplexRef& cand) const {
    int k = B.gen_dim[b_gen];
    if (k == 0) return true;
    SimplexRef top{b_gen, {}};
    for (int i = 0; i <= k; ++i)
      if (value(B.face(top, i)) != X.face(cand, i)) return false;
    return true;
  }

  Result run(size_t level) {
    if (level == decisions.size()) return {Status::Found};
    GenId b_gen = decisions[level];
    Result out{Status::Exhausted};
    out.conflict.insert(deps[level].begin(), deps[level].end());
    for (const auto& cand : pools[level]) {
      if (++nodes > budget) return {Status::Budget};
      if (!faces_ok(b_gen, cand)) continue;
      assigned[b_gen] = cand;
      has_value[b_gen] = 1;
      Result r = run(level + 1);
      has_value[b_gen] = 0;
      if (r.status == Status::Found) {
        assigned[b_gen] = cand;
        has_value[b_gen] = 1;
        return r;
      }
      if (r.status == Status::Budget) return r;
      if (r.jump != static_cast<int>(level)) return r;  // skip siblings
      out.conflict.insert(r.conflict.begin(), r.conflict.end());
    }
    ++backtracks;
    out.conflict.erase(static_cast<int>(level));
    out.jump = -1;
    for (int c : out.conflict)
      if (c < static_cast<int>(level)) out.jump = std::max(out.jump, c);
    return out;
  }
};

}  // namespace detail

inline LiftOutcome solve_lifting(const LiftingProblem& p, long budget) {
  detail::LiftSearch search(p, budget);
  auto r = search.run(0);
  LiftOutcome out;
  out.nodes = search.nodes;
  out.backtracks = search.backtracks;
  switch (r.status) {
    case detail::LiftSearch::Status::Budget:
      out.verdict = LiftVerdict::BudgetExceeded;
      return out;
    case detail::LiftSearch::Status::Exhausted:
      out.verdict = LiftVerdict::NoFiller;
      return out;
    case detail::LiftSearch::Status::Found: break;
  }
  SimplicialMap diag{p.left.dst.ss, p.right.src.ss, {}};
  diag.assign.reserve(search.assigned.size());
  for (const auto& v : search.assigned) diag.assign.push_back(v);
  DecMap filler{p.left.dst, p.right.src, std::move(diag)};
  // soundness: re-verify the filler independently of the search path
  filler.validate();
  require(compose_maps(filler.map, p.left.map).assign == p.top.map.assign,
          "solve_lifting: filler does not restrict to the top leg");
  require(compose_maps(p.right.map, filler.map).assign == p.bottom.map.assign,
          "solve_lifting: filler does not project to the bottom leg");
  out.verdict = LiftVerdict::Filler;
  out.filler = std::move(filler);
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration of decorated maps
// ---------------------------------------------------------------------------

struct MapEnumSpec {
  DecSSet src, dst;
  // optional projection constraint  q o f = base
  std::optional<SimplicialMap> q;     // dst -> T
  std::optional<SimplicialMap> base;  // src -> T
  std::map<GenId, SimplexRef> pinned;
  size_t limit = SIZE_MAX;
};

inline std::vector<SimplicialMap> enumerate_dec_maps(const MapEnumSpec& spec) {
  const SimplicialSet& A = *spec.src.ss;
  const SimplicialSet& X = *spec.dst.ss;
  std::vector<SimplicialMap> out;
  std::vector<SimplexRef> assigned(A.gen_count());
  std::vector<GenId> order;
  for (int k = 0; k <= A.dims(); ++k)
    for (GenId g : A.gens[k]) order.push_back(g);

  auto value = [&](const SimplexRef& a) {
    const SimplexRef& v = assigned[a.gen];
    return X.make(v.gen, compose(X.surj(v), A.surj(a)));
  };

  std::function<void(size_t)> rec = [&](size_t idx) {
    if (out.size() >= spec.limit) return;
    if (idx == order.size()) {
      SimplicialMap m{spec.src.ss, spec.dst.ss, assigned};
      out.push_back(std::move(m));
      return;
    }
    GenId g = order[idx];
    int k = A.gen_dim[g];
    auto try_candidate = [&](const SimplexRef& cand) {
      if (spec.q && spec.base &&
          spec.q->apply(cand) != spec.base->assign[g])
        return;
      if (k == 1 && spec.src.marked.count(g) && !spec.dst.is_marked(cand))
        return;
      if (k == 2) {
        if (spec.src.thin.count(g) && !spec.dst.is_thin(cand)) return;
        if (spec.src.has_lean() && spec.src.lean.count(g) &&
            !spec.dst.is_lean(cand))
          return;
      }
      if (k > 0) {
        SimplexRef top{g, {}};
        for (int i = 0; i <= k; ++i)
          if (value(A.face(top, i)) != X.face(cand, i)) return;
      }
      assigned[g] = cand;
      rec(idx + 1);
    };
    auto pin = spec.pinned.find(g);
    if (pin != spec.pinned.end()) {
      try_candidate(pin->second);
      return;
    }
    for (const auto& cand : X.all_simplices(k)) try_candidate(cand);
  };
  rec(0);
  return out;
}

// ---------------------------------------------------------------------------
// Right-lifting-property batteries
// ---------------------------------------------------------------------------

struct RlpCaps {
  int n_max = 3;
  int probe_cap = 1;
  long budget = 2000000;
};

struct RlpInstance {
  GeneratorSpec spec;
  int squares = 0;
  LiftVerdict verdict = LiftVerdict::Filler;  // worst over all squares
  long nodes = 0;
  long backtracks = 0;
  std::optional<LiftingProblem> witness;  // present iff verdict != Filler
};

struct RlpReport {
  bool positive = true;
  std::vector<RlpInstance> instances;
};

// All parameter instances of a family within the caps.
inline std::vector<GeneratorSpec> family_instances(Family f,
                                                   const RlpCaps& caps) {
  std::vector<GeneratorSpec> out;
  switch (f) {
    case Family::SC_I:
    case Family::A1:
    case Family::M1:
      for (int n = 2; n <= caps.n_max; ++n)
        for (int i = 1; i < n; ++i) out.push_back({f, n, i});
      break;
    case Family::SC_III:
      for (int n = 3; n <= caps.n_max; ++n) out.push_back({f, n});
      break;
    case Family::A3:
    case Family::M3:
      for (int n = 2; n <= caps.n_max; ++n) out.push_back({f, n});
      break;
    case Family::E:
    case Family::ME:
      for (const auto& k : default_probes(caps.probe_cap))
        out.push_back({f, -1, -1, k});
      break;
    case Family::C1:
      for (int n = 0; n <= caps.n_max; ++n) out.push_back({f, n});
      break;
    default:
      out.push_back({f});
      break;
  }
  return out;
}

// Tests whether `right` lifts against every commuting square on `gen`.
inline RlpInstance check_rlp_against(const DecMap& right, const DecMap& gen,
                                     const GeneratorSpec& spec,
                                     long budget) {
  RlpInstance inst;
  inst.spec = spec;
  MapEnumSpec bottoms{gen.dst, right.dst};
  for (const auto& bottom : enumerate_dec_maps(bottoms)) {
    SimplicialMap via = compose_maps(bottom, gen.map);
    MapEnumSpec tops{gen.src, right.src};
    tops.q = right.map;
    tops.base = via;
    for (const auto& top : enumerate_dec_maps(tops)) {
      ++inst.squares;
      LiftingProblem p{gen,
                       right,
                       DecMap{gen.src, right.src, top},
                       DecMap{gen.dst, right.dst, bottom}};
      LiftOutcome o = solve_lifting(p, budget);
      inst.nodes += o.nodes;
      inst.backtracks += o.backtracks;
      if (o.verdict != LiftVerdict::Filler) {
        inst.verdict = o.verdict;
        inst.witness = p;
        return inst;
      }
    }
  }
  return inst;
}

inline RlpReport has_rlp_up_to(const DecMap& right,
                               const std::vector<Family>& families,
                               const RlpCaps& caps) {
  RlpReport rep;
  for (Family f : families) {
    for (const auto& spec : family_instances(f, caps)) {
      DecMap gen = build_generator(spec);
      require(gen.src.flavor == right.src.flavor,
              "has_rlp_up_to: family flavor does not match the map");
      RlpInstance inst = check_rlp_against(right, gen, spec, caps.budget);
      if (inst.verdict != LiftVerdict::Filler) rep.positive = false;
      rep.instances.push_back(std::move(inst));
    }
  }
  return rep;
}

inline std::vector<Family> scaled_anodyne_families() {
  return {Family::SC_I, Family::SC_II, Family::SC_III};
}
inline std::vector<Family> mb_anodyne_families() {
  return {Family::A1, Family::A2, Family::A3, Family::A4,
          Family::S1, Family::S2, Family::E};
}
inline std::vector<Family> ms_anodyne_families() {
  return {Family::M1, Family::M2, Family::M3,
          Family::M4, Family::MS1, Family::ME};
}

// ---------------------------------------------------------------------------
// Pushout-product
// ---------------------------------------------------------------------------

// Map between product complexes induced componentwise.
inline SimplicialMap product_map(const ProductResult& src,
                                 const ProductResult& dst,
                                 const SimplicialMap& f1,
                                 const SimplicialMap& f2) {
  SimplicialMap m{src.ss, dst.ss, {}};
  for (GenId g = 0; g < src.ss->gen_count(); ++g) {
    const auto& [a, b] = src.gen_pair[g];
    SimplexRef fa = f1.apply(a), fb = f2.apply(b);
    auto [core, joint] = pair_normal_form(*dst.proj1.dst, *dst.proj2.dst, fa, fb);
    m.assign.push_back(SimplexRef{dst.of(core), joint});
  }
  return m;
}

// f /\ g : X x B  u_{X x A}  Y x A  ->  Y x B  with product decorations.
inline DecMap pushout_product(const DecMap& f, const DecMap& g) {
  require(f.src.flavor == g.src.flavor, "pushout_product: flavor mismatch");
  auto xb = dec_product(f.src, g.dst);
  auto xa = dec_product(f.src, g.src);
  auto ya = dec_product(f.dst, g.src);
  auto yb = dec_product(f.dst, g.dst);

  SimplicialMap xa_xb =
      product_map(xa.prod, xb.prod, identity_map(f.src.ss), g.map);
  SimplicialMap xa_ya =
      product_map(xa.prod, ya.prod, f.map, identity_map(g.src.ss));
  SimplicialMap xb_yb =
      product_map(xb.prod, yb.prod, f.map, identity_map(g.dst.ss));
  SimplicialMap ya_yb =
      product_map(ya.prod, yb.prod, identity_map(f.dst.ss), g.map);
  SimplicialMap xa_yb = compose_maps(xb_yb, xa_xb);

  DecColimitInput in;
  int o_xb = in.add_object(xb.obj);
  int o_xa = in.add_object(xa.obj);
  int o_ya = in.add_object(ya.obj);
  in.add_arrow(o_xa, o_xb, xa_xb);
  in.add_arrow(o_xa, o_ya, xa_ya);
  DecColimitResult push = dec_colimit(in);

  ColimitResult shim;  // reuse induced_map via a view of the colimit
  shim.ss = push.obj.ss;
  shim.cocone = push.cocone;
  shim.gen_origin = push.gen_origin;
  ColimitResult target;
  target.ss = yb.obj.ss;
  target.cocone = {identity_map(yb.obj.ss)};
  SimplicialMap comp = induced_map(shim, target, {0, 0, 0},
                                   {xb_yb, xa_yb, ya_yb});
  return DecMap{push.obj, yb.obj, comp};
}

// Checks that `f` lifts against `q` on every commuting square.
inline RlpInstance lifts_against(const DecMap& f, const DecMap& q,
                                 long budget) {
  return check_rlp_against(q, f, GeneratorSpec{Family::C1, -1, -1}, budget);
}

// ---------------------------------------------------------------------------
// Isomorphism search
// ---------------------------------------------------------------------------

namespace detail {
inline std::vector<uint64_t> refine_colors(const DecSSet& d) {
  const SimplicialSet& s = *d.ss;
  std::vector<uint64_t> col(s.gen_count());
  auto h = [](uint64_t a, uint64_t b) {
    a ^= b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2);
    return a;
  };
  for (GenId g = 0; g < s.gen_count(); ++g) {
    uint64_t c = static_cast<uint64_t>(s.gen_dim[g] + 1);
    if (d.marked.count(g)) c = h(c, 2);
    if (d.thin.count(g)) c = h(c, 3);
    if (d.lean.count(g)) c = h(c, 5);
    col[g] = c;
  }
  for (int round = 0; round < 4; ++round) {
    std::vector<uint64_t> next = col;
    for (GenId g = 0; g < s.gen_count(); ++g) {
      uint64_t c = col[g];
      int i = 0;
      for (const auto& f : s.face_tab[g]) {
        c = h(c, h(static_cast<uint64_t>(i + 11), col[f.gen]));
        for (int p : f.deg) c = h(c, static_cast<uint64_t>(p + 17));
        ++i;
      }
      next[g] = c;
    }
    // fold in coface information
    std::vector<uint64_t> up(s.gen_count(), 1469598103934665603ull);
    for (GenId g = 0; g < s.gen_count(); ++g) {
      int i = 0;
      for (const auto& f : s.face_tab[g]) {
        up[f.gen] += h(col[g], static_cast<uint64_t>(i + 29));
        ++i;
      }
    }
    for (GenId g = 0; g < s.gen_count(); ++g) next[g] = h(next[g], up[g]);
    col = std::move(next);
  }
  return col;
}
}  // namespace detail

// Search for a decoration-preserving isomorphism (exact equality of
// decoration sets under the generator bijection).
inline std::optional<DecMap> find_iso(const DecSSet& a, const DecSSet& b) {
  const SimplicialSet& A = *a.ss;
  const SimplicialSet& B = *b.ss;
  if (a.flavor != b.flavor) return std::nullopt;
  int dims = std::max(A.dims(), B.dims());
  for (int k = 0; k <= dims; ++k)
    if (A.gen_count(k) != B.gen_count(k)) return std::nullopt;
  if (a.marked.size() != b.marked.size() || a.thin.size() != b.thin.size() ||
      a.lean.size() != b.lean.size())
    return std::nullopt;

  std::vector<uint64_t> ca = detail::refine_colors(a);
  std::vector<uint64_t> cb = detail::refine_colors(b);

  std::vector<GenId> order;
  for (int k = 0; k <= A.dims(); ++k)
    for (GenId g : A.gens[k]) order.push_back(g);
  std::vector<GenId> image(A.gen_count(), -1);
  std::vector<char> used(B.gen_count(), 0);

  auto dec_match = [&](GenId g, GenId hgen) {
    if (static_cast<bool>(a.marked.count(g)) !=
        static_cast<bool>(b.marked.count(hgen)))
      return false;
    if (static_cast<bool>(a.thin.count(g)) !=
        static_cast<bool>(b.thin.count(hgen)))
      return false;
    if (static_cast<bool>(a.lean.count(g)) !=
        static_cast<bool>(b.lean.count(hgen)))
      return false;
    return true;
  };

  std::function<bool(size_t)> rec = [&](size_t idx) -> bool {
    if (idx == order.size()) return true;
    GenId g = order[idx];
    int k = A.gen_dim[g];
    for (GenId hgen : B.gens[k]) {
      if (used[hgen] || ca[g] != cb[hgen] || !dec_match(g, hgen)) continue;
      bool ok = true;
      for (int i = 0; i <= k && k > 0; ++i) {
        const SimplexRef& fa = A.face_tab[g][i];
        const SimplexRef& fb = B.face_tab[hgen][i];
        if (fa.deg != fb.deg || image[fa.gen] != fb.gen) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      image[g] = hgen;
      used[hgen] = 1;
      if (rec(idx + 1)) return true;
      image[g] = -1;
      used[hgen] = 0;
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  SimplicialMap m{a.ss, b.ss, {}};
  for (GenId g = 0; g < A.gen_count(); ++g)
    m.assign.push_back(SimplexRef{image[g], {}});
  return DecMap{a, b, std::move(m)};
}

// Verify that a candidate map is a decorated isomorphism.
inline bool is_dec_iso(const DecMap& m) {
  const SimplicialSet& A = *m.src.ss;
  const SimplicialSet& B = *m.dst.ss;
  if (A.gen_count() != B.gen_count()) return false;
  std::vector<char> hit(B.gen_count(), 0);
  for (GenId g = 0; g < A.gen_count(); ++g) {
    const SimplexRef& im = m.map.assign[g];
    if (!im.deg.empty() || hit[im.gen] || A.gen_dim[g] != B.gen_dim[im.gen])
      return false;
    hit[im.gen] = 1;
  }
  // decorations must correspond exactly
  auto exact = [&](const std::set<GenId>& sa, const std::set<GenId>& sb) {
    std::set<GenId> mapped;
    for (GenId g : sa) mapped.insert(m.map.assign[g].gen);
    return mapped == sb;
  };
  if (!exact(m.src.marked, m.dst.marked)) return false;
  if (!exact(m.src.thin, m.dst.thin)) return false;
  if (!exact(m.src.lean, m.dst.lean)) return false;
  try {
    m.map.validate();
  } catch (const error&) {
    return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Local (0,1)-cartesian edges
// ---------------------------------------------------------------------------

struct LocalCartesianReport {
  bool positive = true;
  bool budget_hit = false;
  int squares = 0;
  std::optional<LiftingProblem> witness;
};

// Tests the constrained initial-horn squares for an edge e of a scaled
// fibration p: X -> S.  base_equivalences names the edges of S treated as
// equivalences; n = 2 demands a thin filler (encoded by the thin target
// triangle of the probe shape).
inline LocalCartesianReport is_local_01_cartesian(
    const DecMap& p, const SimplexRef& e,
    const std::set<GenId>& base_equivalences, int cap, long budget = 500000) {
  require(p.src.flavor == Flavor::Scaled, "is_local_01_cartesian: scaled map");
  LocalCartesianReport rep;
  const DecSSet& X = p.src;
  const DecSSet& S = p.dst;
  auto is_base_eq = [&](const SimplexRef& r) {
    return !r.deg.empty() || base_equivalences.count(r.gen) > 0;
  };
  for (int n = 2; n <= cap && rep.positive && !rep.budget_hit; ++n) {
    SubsetComplex h = horn_c(n, 0);
    SubsetComplex d = standard_simplex_c(n);
    uint32_t tri01n = detail::mask_of({0, 1, n});
    std::set<GenId> src_thin = detail::pick(h, {tri01n});
    std::set<GenId> dst_thin = detail::pick(d, {tri01n});
    if (n == 2) dst_thin = {d.of(0b111)};  // demand a thin filler
    DecSSet hd = make_dec(h.ss, Flavor::Scaled, {}, src_thin);
    DecSSet dd = make_dec(d.ss, Flavor::Scaled, {}, dst_thin);
    DecMap gen{hd, dd, subset_inclusion(h, d)};

    GenId edge01 = d.of(detail::mask_of({0, 1}));
    GenId edge1n = d.of(detail::mask_of({1, n}));
    MapEnumSpec bottoms{gen.dst, S};
    bottoms.pinned[edge01] = p.apply(e);
    for (const auto& bottom : enumerate_dec_maps(bottoms)) {
      if (!is_base_eq(bottom.assign[edge1n])) continue;
      SimplicialMap via = compose_maps(bottom, gen.map);
      MapEnumSpec tops{gen.src, X};
      tops.q = p.map;
      tops.base = via;
      tops.pinned[h.of(detail::mask_of({0, 1}))] = e;
      for (const auto& top : enumerate_dec_maps(tops)) {
        ++rep.squares;
        LiftingProblem prob{gen, p, DecMap{gen.src, X, top},
                            DecMap{gen.dst, S, bottom}};
        LiftOutcome o = solve_lifting(prob, budget);
        if (o.verdict == LiftVerdict::BudgetExceeded) {
          rep.budget_hit = true;
          rep.witness = prob;
          return rep;
        }
        if (o.verdict == LiftVerdict::NoFiller) {
          rep.positive = false;
          rep.witness = prob;
          return rep;
        }
      }
    }
  }
  return rep;
}

}  // namespace dss
