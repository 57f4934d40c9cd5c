#pragma once

// Parameterized constructors for the generating cofibrations and the
// generating anodyne families of each decoration flavor.
//
// Family names follow the external CLI grammar: sc:i|ii|iii for the scaled
// generators, A1..A4/S1/S2/E for the biscaled ones, M1..M4/MS1/ME for the
// marked-scaled ones and C1..C4 for the cofibrations.  Decoration lists are
// intersected with the cells actually present (a horn does not contain the
// top-dimensional triangles its decoration list mentions).

#include <optional>
#include <sstream>

#include "dss/dec.hpp"

namespace dss {

struct Cell {
  SubsetComplex c;
  DecSSet dec;
};

namespace detail {
inline uint32_t mask_of(std::initializer_list<int> verts) {
  uint32_t m = 0;
  for (int v : verts) m |= (1u << v);
  return m;
}

inline std::set<GenId> pick(const SubsetComplex& c,
                            const std::vector<uint32_t>& masks) {
  std::set<GenId> out;
  for (uint32_t m : masks) {
    auto it = c.subset_gen.find(m);
    if (it != c.subset_gen.end()) out.insert(it->second);
  }
  return out;
}
}  // namespace detail

inline Cell delta_cell(int n, Flavor fl, std::set<GenId> marked = {},
                       std::set<GenId> thin = {}, std::set<GenId> lean = {}) {
  SubsetComplex c = standard_simplex_c(n);
  DecSSet d = make_dec(c.ss, fl, std::move(marked), std::move(thin),
                       std::move(lean));
  return Cell{std::move(c), std::move(d)};
}

// (Delta^n, flat, flat)
inline Cell mb_flat(int n) { return delta_cell(n, Flavor::MarkedBiscaled); }

// (Delta^2, flat, flat in sharp)
inline Cell mb_lean2() {
  SubsetComplex c = standard_simplex_c(2);
  std::set<GenId> lean{c.of(0b111)};
  DecSSet d = make_dec(c.ss, Flavor::MarkedBiscaled, {}, {}, lean);
  return Cell{std::move(c), std::move(d)};
}

// (Delta^2, flat, sharp)
inline Cell mb_thin2() {
  SubsetComplex c = standard_simplex_c(2);
  std::set<GenId> t{c.of(0b111)};
  DecSSet d = make_dec(c.ss, Flavor::MarkedBiscaled, {}, t, t);
  return Cell{std::move(c), std::move(d)};
}

// (Delta^1, sharp, flat)
inline Cell mb_marked_edge() {
  SubsetComplex c = standard_simplex_c(1);
  DecSSet d = make_dec(c.ss, Flavor::MarkedBiscaled, {c.of(0b11)}, {}, {});
  return Cell{std::move(c), std::move(d)};
}

// ---------------------------------------------------------------------------
// Generator specs
// ---------------------------------------------------------------------------

enum class Family {
  SC_I,
  SC_II,
  SC_III,
  A1,
  A2,
  A3,
  A4,
  S1,
  S2,
  E,
  M1,
  M2,
  M3,
  M4,
  MS1,
  ME,
  C1,
  C2,
  C3,
  C4,
};

struct GeneratorSpec {
  Family family;
  int n = -1;
  int i = -1;
  SSetPtr probe;  // E / ME only
};

inline std::string family_name(Family f) {
  switch (f) {
    case Family::SC_I: return "sc:i";
    case Family::SC_II: return "sc:ii";
    case Family::SC_III: return "sc:iii";
    case Family::A1: return "mb:A1";
    case Family::A2: return "mb:A2";
    case Family::A3: return "mb:A3";
    case Family::A4: return "mb:A4";
    case Family::S1: return "mb:S1";
    case Family::S2: return "mb:S2";
    case Family::E: return "mb:E";
    case Family::M1: return "ms:M1";
    case Family::M2: return "ms:M2";
    case Family::M3: return "ms:M3";
    case Family::M4: return "ms:M4";
    case Family::MS1: return "ms:MS1";
    case Family::ME: return "ms:ME";
    case Family::C1: return "cof:C1";
    case Family::C2: return "cof:C2";
    case Family::C3: return "cof:C3";
    case Family::C4: return "cof:C4";
  }
  return "?";
}

inline std::string generator_name(const GeneratorSpec& s) {
  std::ostringstream os;
  os << family_name(s.family);
  bool has_n = s.n >= 0, has_i = s.i >= 0;
  if (has_n || has_i) {
    os << '(';
    if (has_n) os << "n=" << s.n;
    if (has_n && has_i) os << ',';
    if (has_i) os << "i=" << s.i;
    os << ')';
  }
  if (s.probe) os << "[probe:" << s.probe->gen_count() << " gens]";
  return os.str();
}

// ---------------------------------------------------------------------------
// Decorated horns
// ---------------------------------------------------------------------------

// Inclusion of a decorated horn into the decorated simplex; decoration masks
// are intersected with the cells present on each side.
inline DecMap decorated_horn_inclusion(int n, int i, Flavor fl,
                                       const std::vector<uint32_t>& marked,
                                       const std::vector<uint32_t>& thin,
                                       const std::vector<uint32_t>& lean) {
  SubsetComplex h = horn_c(n, i);
  SubsetComplex d = standard_simplex_c(n);
  DecSSet src = make_dec(h.ss, fl, detail::pick(h, marked),
                         detail::pick(h, thin), detail::pick(h, lean));
  DecSSet dst = make_dec(d.ss, fl, detail::pick(d, marked),
                         detail::pick(d, thin), detail::pick(d, lean));
  return DecMap{src, dst, subset_inclusion(h, d)};
}

// The triangle {i-1, i, i+1} of an inner horn (clamped into [0, n]).
inline uint32_t inner_triangle_mask(int n, int i) {
  (void)n;
  return detail::mask_of({i - 1, i, i + 1});
}

// ---------------------------------------------------------------------------
// Scaled anodyne generators
// ---------------------------------------------------------------------------

// Scaling T of the 4-simplex saturation generator.
inline std::vector<uint32_t> saturation_scaling() {
  using detail::mask_of;
  return {mask_of({0, 2, 4}), mask_of({1, 2, 3}), mask_of({0, 1, 3}),
          mask_of({1, 3, 4}), mask_of({0, 1, 2})};
}

inline DecMap scaled_anodyne(const GeneratorSpec& spec) {
  using detail::mask_of;
  switch (spec.family) {
    case Family::SC_I: {
      require(spec.n >= 2 && 0 < spec.i && spec.i < spec.n,
              "sc:i needs n >= 2, 0 < i < n");
      return decorated_horn_inclusion(spec.n, spec.i, Flavor::Scaled, {},
                                      {inner_triangle_mask(spec.n, spec.i)},
                                      {});
    }
    case Family::SC_II: {
      SubsetComplex c = standard_simplex_c(4);
      std::vector<uint32_t> t = saturation_scaling();
      std::vector<uint32_t> t2 = t;
      t2.push_back(mask_of({0, 3, 4}));
      t2.push_back(mask_of({0, 1, 4}));
      DecSSet src = make_dec(c.ss, Flavor::Scaled, {}, detail::pick(c, t));
      DecSSet dst = make_dec(c.ss, Flavor::Scaled, {}, detail::pick(c, t2));
      return DecMap{src, dst, identity_map(c.ss)};
    }
    case Family::SC_III: {
      int n = spec.n;
      require(n >= 3, "sc:iii needs n >= 3");
      SubsetComplex h = horn_c(n, 0);
      SubsetComplex d = standard_simplex_c(n);
      SubsetComplex e = standard_simplex_c(1);
      SSetPtr pt = point();
      SimplicialMap collapse{e.ss, pt, {}};
      collapse.assign = {SimplexRef{0, {}}, SimplexRef{0, {}},
                         SimplexRef{0, {0}}};
      auto build = [&](const SubsetComplex& big) {
        ColimitInput in;
        int ob = in.add_object(big.ss);
        int oe = in.add_object(e.ss);
        int op = in.add_object(pt);
        std::vector<int> edge01{0, 1};
        in.add_arrow(oe, ob, simplex_operator(e, big, edge01));
        in.add_arrow(oe, op, collapse);
        return colimit(in);
      };
      ColimitResult src_col = build(h);
      ColimitResult dst_col = build(d);
      auto thin_of = [&](const ColimitResult& col, const SubsetComplex& big) {
        std::set<GenId> t;
        auto it = big.subset_gen.find(mask_of({0, 1, n}));
        if (it != big.subset_gen.end()) {
          SimplexRef im = col.cocone[0].apply(SimplexRef{it->second, {}});
          if (im.deg.empty()) t.insert(im.gen);
        }
        return t;
      };
      DecSSet src{src_col.ss, Flavor::Scaled, {}, thin_of(src_col, h), {}};
      DecSSet dst{dst_col.ss, Flavor::Scaled, {}, thin_of(dst_col, d), {}};
      SimplicialMap m = induced_map(
          src_col, dst_col, {0, 1, 2},
          {subset_inclusion(h, d), identity_map(e.ss), identity_map(pt)});
      return DecMap{src, dst, m};
    }
    default:
      throw error("scaled_anodyne: not a scaled family");
  }
}

// ---------------------------------------------------------------------------
// Biscaled anodyne generators
// ---------------------------------------------------------------------------

inline DecMap mb_anodyne(const GeneratorSpec& spec) {
  using detail::mask_of;
  switch (spec.family) {
    case Family::A1: {
      require(spec.n >= 2 && 0 < spec.i && spec.i < spec.n,
              "A1 needs n >= 2, 0 < i < n");
      return decorated_horn_inclusion(spec.n, spec.i, Flavor::MarkedBiscaled,
                                      {}, {},
                                      {inner_triangle_mask(spec.n, spec.i)});
    }
    case Family::A2: {
      SubsetComplex c = standard_simplex_c(4);
      std::vector<uint32_t> t = saturation_scaling();
      std::vector<uint32_t> t2 = t;
      t2.push_back(mask_of({0, 3, 4}));
      t2.push_back(mask_of({0, 1, 4}));
      DecSSet src =
          make_dec(c.ss, Flavor::MarkedBiscaled, {}, {}, detail::pick(c, t));
      DecSSet dst =
          make_dec(c.ss, Flavor::MarkedBiscaled, {}, {}, detail::pick(c, t2));
      return DecMap{src, dst, identity_map(c.ss)};
    }
    case Family::A3: {
      require(spec.n >= 2, "A3 needs n >= 2");
      uint32_t tri = mask_of({0, 1, spec.n});
      return decorated_horn_inclusion(spec.n, 0, Flavor::MarkedBiscaled,
                                      {mask_of({0, 1})}, {tri}, {tri});
    }
    case Family::A4: {
      SubsetComplex d0 = standard_simplex_c(0);
      SubsetComplex d1 = standard_simplex_c(1);
      DecSSet src = make_dec(d0.ss, Flavor::MarkedBiscaled);
      DecSSet dst =
          make_dec(d1.ss, Flavor::MarkedBiscaled, {d1.of(0b11)}, {}, {});
      return DecMap{src, dst, simplex_operator(d0, d1, {0})};
    }
    case Family::S1: {
      SubsetComplex c = standard_simplex_c(2);
      std::set<GenId> sharp_t{c.of(0b111)};
      DecSSet src = make_dec(c.ss, Flavor::MarkedBiscaled,
                             {c.of(0b011), c.of(0b110)}, sharp_t, sharp_t);
      DecSSet dst = make_dec(c.ss, Flavor::MarkedBiscaled,
                             {c.of(0b011), c.of(0b101), c.of(0b110)}, sharp_t,
                             sharp_t);
      return DecMap{src, dst, identity_map(c.ss)};
    }
    case Family::S2: {
      SubsetComplex c = standard_simplex_c(2);
      std::set<GenId> sharp_t{c.of(0b111)};
      DecSSet src =
          make_dec(c.ss, Flavor::MarkedBiscaled, {}, {}, sharp_t);
      DecSSet dst =
          make_dec(c.ss, Flavor::MarkedBiscaled, {}, sharp_t, sharp_t);
      return DecMap{src, dst, identity_map(c.ss)};
    }
    case Family::E: {
      require(spec.probe != nullptr, "E needs a probe complex");
      const SSetPtr& k = spec.probe;
      std::set<GenId> tris = all_of_dim(*k, 2);
      DecSSet src = make_dec(k, Flavor::MarkedBiscaled, {}, tris, tris);
      DecSSet dst = make_dec(k, Flavor::MarkedBiscaled, all_of_dim(*k, 1),
                             tris, tris);
      return DecMap{src, dst, identity_map(k)};
    }
    default:
      throw error("mb_anodyne: not a biscaled family");
  }
}

// ---------------------------------------------------------------------------
// Marked-scaled anodyne generators
// ---------------------------------------------------------------------------

inline DecMap ms_anodyne(const GeneratorSpec& spec) {
  using detail::mask_of;
  switch (spec.family) {
    case Family::M1: {
      require(spec.n >= 2 && 0 < spec.i && spec.i < spec.n,
              "M1 needs n >= 2, 0 < i < n");
      return decorated_horn_inclusion(spec.n, spec.i, Flavor::MarkedScaled, {},
                                      {inner_triangle_mask(spec.n, spec.i)},
                                      {});
    }
    case Family::M2: {
      SubsetComplex c = standard_simplex_c(4);
      std::vector<uint32_t> t = saturation_scaling();
      std::vector<uint32_t> t2 = t;
      t2.push_back(mask_of({0, 3, 4}));
      t2.push_back(mask_of({0, 1, 4}));
      DecSSet src = make_dec(c.ss, Flavor::MarkedScaled, {},
                             detail::pick(c, t));
      DecSSet dst = make_dec(c.ss, Flavor::MarkedScaled, {},
                             detail::pick(c, t2));
      return DecMap{src, dst, identity_map(c.ss)};
    }
    case Family::M3: {
      require(spec.n >= 2, "M3 needs n >= 2");
      return decorated_horn_inclusion(spec.n, 0, Flavor::MarkedScaled,
                                      {mask_of({0, 1})},
                                      {mask_of({0, 1, spec.n})}, {});
    }
    case Family::M4: {
      SubsetComplex d0 = standard_simplex_c(0);
      SubsetComplex d1 = standard_simplex_c(1);
      DecSSet src = make_dec(d0.ss, Flavor::MarkedScaled);
      DecSSet dst =
          make_dec(d1.ss, Flavor::MarkedScaled, {d1.of(0b11)}, {});
      return DecMap{src, dst, simplex_operator(d0, d1, {0})};
    }
    case Family::MS1: {
      SubsetComplex c = standard_simplex_c(2);
      std::set<GenId> sharp_t{c.of(0b111)};
      DecSSet src = make_dec(c.ss, Flavor::MarkedScaled,
                             {c.of(0b011), c.of(0b110)}, sharp_t);
      DecSSet dst = make_dec(c.ss, Flavor::MarkedScaled,
                             {c.of(0b011), c.of(0b101), c.of(0b110)}, sharp_t);
      return DecMap{src, dst, identity_map(c.ss)};
    }
    case Family::ME: {
      require(spec.probe != nullptr, "ME needs a probe complex");
      const SSetPtr& k = spec.probe;
      std::set<GenId> tris = all_of_dim(*k, 2);
      DecSSet src = make_dec(k, Flavor::MarkedScaled, {}, tris);
      DecSSet dst = make_dec(k, Flavor::MarkedScaled, all_of_dim(*k, 1), tris);
      return DecMap{src, dst, identity_map(k)};
    }
    default:
      throw error("ms_anodyne: not a marked-scaled family");
  }
}

// ---------------------------------------------------------------------------
// Generating cofibrations
// ---------------------------------------------------------------------------

inline DecMap generating_cofibration(const GeneratorSpec& spec) {
  switch (spec.family) {
    case Family::C1: {
      require(spec.n >= 0, "C1 needs n >= 0");
      SubsetComplex d = standard_simplex_c(spec.n);
      DecSSet dst = make_dec(d.ss, Flavor::MarkedBiscaled);
      if (spec.n == 0) {
        DecSSet src = make_dec(empty_sset(), Flavor::MarkedBiscaled);
        return DecMap{src, dst, SimplicialMap{src.ss, dst.ss, {}}};
      }
      SubsetComplex b = boundary_c(spec.n);
      DecSSet src = make_dec(b.ss, Flavor::MarkedBiscaled);
      return DecMap{src, dst, subset_inclusion(b, d)};
    }
    case Family::C2: {
      SubsetComplex d = standard_simplex_c(1);
      DecSSet src = make_dec(d.ss, Flavor::MarkedBiscaled);
      DecSSet dst =
          make_dec(d.ss, Flavor::MarkedBiscaled, {d.of(0b11)}, {}, {});
      return DecMap{src, dst, identity_map(d.ss)};
    }
    case Family::C3: {
      SubsetComplex d = standard_simplex_c(2);
      DecSSet src = make_dec(d.ss, Flavor::MarkedBiscaled);
      DecSSet dst = make_dec(d.ss, Flavor::MarkedBiscaled, {}, {},
                             {d.of(0b111)});
      return DecMap{src, dst, identity_map(d.ss)};
    }
    case Family::C4: {
      SubsetComplex d = standard_simplex_c(2);
      std::set<GenId> t{d.of(0b111)};
      DecSSet src = make_dec(d.ss, Flavor::MarkedBiscaled, {}, {}, t);
      DecSSet dst = make_dec(d.ss, Flavor::MarkedBiscaled, {}, t, t);
      return DecMap{src, dst, identity_map(d.ss)};
    }
    default:
      throw error("generating_cofibration: not a cofibration family");
  }
}

inline DecMap build_generator(const GeneratorSpec& spec) {
  switch (spec.family) {
    case Family::SC_I:
    case Family::SC_II:
    case Family::SC_III:
      return scaled_anodyne(spec);
    case Family::A1:
    case Family::A2:
    case Family::A3:
    case Family::A4:
    case Family::S1:
    case Family::S2:
    case Family::E:
      return mb_anodyne(spec);
    case Family::M1:
    case Family::M2:
    case Family::M3:
    case Family::M4:
    case Family::MS1:
    case Family::ME:
      return ms_anodyne(spec);
    case Family::C1:
    case Family::C2:
    case Family::C3:
    case Family::C4:
      return generating_cofibration(spec);
  }
  throw error("build_generator: unknown family");
}

// ---------------------------------------------------------------------------
// Probe complexes for the E / ME families
// ---------------------------------------------------------------------------

// m-skeleton of the nerve of the contractible groupoid on two objects:
// two nondegenerate cells per dimension (the two alternating vertex words).
inline SSetPtr contractible_groupoid_nerve(int cap) {
  require(cap >= 0, "contractible_groupoid_nerve: cap >= 0");
  auto ss = std::make_shared<SimplicialSet>();
  // gen id of the word starting at s with dimension k: ids[k][s]
  std::vector<std::array<GenId, 2>> ids(cap + 1);
  ids[0] = {ss->add_gen(0), ss->add_gen(0)};
  for (int k = 1; k <= cap; ++k) {
    for (int s = 0; s < 2; ++s) {
      std::vector<SimplexRef> faces(k + 1);
      for (int i = 0; i <= k; ++i) {
        if (i == 0)
          faces[i] = SimplexRef{ids[k - 1][1 - s], {}};
        else if (i == k)
          faces[i] = SimplexRef{ids[k - 1][s], {}};
        else
          faces[i] = SimplexRef{ids[k - 2][s], {i - 1}};
      }
      GenId id = ss->add_gen(k, std::move(faces));
      ids[k][s] = id;
    }
  }
  ss->validate();
  return ss;
}

// The default finite probe list standing in for "every Kan complex": the
// point and skeleta of the free-living isomorphism interval.  This makes the
// E / ME checks a sound but incomplete semi-decision procedure.
inline std::vector<SSetPtr> default_probes(int cap) {
  std::vector<SSetPtr> out;
  out.push_back(point());
  for (int m = 1; m <= cap; ++m)
    out.push_back(contractible_groupoid_nerve(m));
  return out;
}

// ---------------------------------------------------------------------------
// Grammar: "mb:A1(n=3,i=1)", "sc:ii", "cof:C2", "ms:ME"
// ---------------------------------------------------------------------------

inline GeneratorSpec parse_generator(const std::string& text) {
  auto fail = [&](const std::string& why, size_t pos) -> GeneratorSpec {
    throw error("parse error at position " + std::to_string(pos) + ": " + why +
                " in '" + text + "'");
  };
  size_t paren = text.find('(');
  std::string head = text.substr(0, paren);
  static const std::vector<std::pair<std::string, Family>> names = {
      {"sc:i", Family::SC_I},   {"sc:ii", Family::SC_II},
      {"sc:iii", Family::SC_III}, {"mb:A1", Family::A1},
      {"mb:A2", Family::A2},    {"mb:A3", Family::A3},
      {"mb:A4", Family::A4},    {"mb:S1", Family::S1},
      {"mb:S2", Family::S2},    {"mb:E", Family::E},
      {"ms:M1", Family::M1},    {"ms:M2", Family::M2},
      {"ms:M3", Family::M3},    {"ms:M4", Family::M4},
      {"ms:MS1", Family::MS1},  {"ms:ME", Family::ME},
      {"cof:C1", Family::C1},   {"cof:C2", Family::C2},
      {"cof:C3", Family::C3},   {"cof:C4", Family::C4}};
  GeneratorSpec spec;
  bool found = false;
  for (const auto& [nm, fam] : names)
    if (head == nm) {
      spec.family = fam;
      found = true;
      break;
    }
  if (!found) return fail("unknown family '" + head + "'", 0);
  if (paren != std::string::npos) {
    if (text.back() != ')') return fail("expected ')'", text.size() - 1);
    std::string args = text.substr(paren + 1, text.size() - paren - 2);
    std::istringstream is(args);
    std::string kv;
    while (std::getline(is, kv, ',')) {
      size_t eq = kv.find('=');
      if (eq == std::string::npos) return fail("expected key=value", paren);
      std::string key = kv.substr(0, eq);
      int value = 0;
      try {
        value = std::stoi(kv.substr(eq + 1));
      } catch (...) {
        return fail("bad integer '" + kv.substr(eq + 1) + "'", paren);
      }
      if (key == "n")
        spec.n = value;
      else if (key == "i")
        spec.i = value;
      else if (key == "probe")
        spec.probe = default_probes(std::max(0, value)).back();
      else
        return fail("unknown key '" + key + "'", paren);
    }
  }
  if ((spec.family == Family::E || spec.family == Family::ME) && !spec.probe)
    spec.probe = point();
  return spec;
}

}  // namespace dss
