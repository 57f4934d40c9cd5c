#include <catch2/catch_amalgamated.hpp>

#include "dss/cells.hpp"

using namespace dss;

namespace {
// A map of finite simplicial sets is mono iff every generator image is
// nondegenerate and images are pairwise distinct in each dimension.
bool is_mono(const SimplicialMap& m) {
  std::set<SimplexRef> seen;
  for (GenId g = 0; g < m.src->gen_count(); ++g) {
    const SimplexRef& im = m.assign[g];
    if (!im.deg.empty()) return false;
    if (!seen.insert(im).second) return false;
  }
  return true;
}
}  // namespace

TEST_CASE("sc:i inner horn inclusion") {
  DecMap f = scaled_anodyne({Family::SC_I, 2, 1});
  f.validate();
  REQUIRE(is_mono(f.map));
  REQUIRE(f.src.thin.empty());  // the triangle is not in the horn
  REQUIRE(f.dst.thin.size() == 1);

  DecMap g = scaled_anodyne({Family::SC_I, 3, 2});
  g.validate();
  REQUIRE(g.src.thin.size() == 1);  // 123 face lives in the horn
  REQUIRE(g.dst.thin.size() == 1);
}

TEST_CASE("sc:ii adds two thin triangles to the saturation scaling") {
  DecMap f = scaled_anodyne({Family::SC_II});
  f.validate();
  REQUIRE(f.src.thin.size() == 5);
  REQUIRE(f.dst.thin.size() == 7);
  REQUIRE(is_mono(f.map));
}

TEST_CASE("sc:iii collapses the 01 edge") {
  DecMap f = scaled_anodyne({Family::SC_III, 3});
  f.validate();
  REQUIRE(is_mono(f.map));
  // target: Delta^3 with 0 and 1 glued -> 3 vertices
  REQUIRE(f.dst.ss->gen_count(0) == 3);
  // edges: 6 minus the collapsed one
  REQUIRE(f.dst.ss->gen_count(1) == 5);
  REQUIRE(f.dst.ss->gen_count(3) == 1);
  REQUIRE(f.dst.thin.size() == 1);
  REQUIRE(f.src.thin.size() == 1);
  f.src.validate();
  f.dst.validate();
}

TEST_CASE("biscaled generators match their stated decorations") {
  DecMap a3 = mb_anodyne({Family::A3, 2});
  a3.validate();
  REQUIRE(a3.src.marked.size() == 1);
  REQUIRE(a3.src.thin.empty());
  REQUIRE(a3.src.lean.empty());
  REQUIRE(a3.dst.thin.size() == 1);
  REQUIRE(a3.dst.lean.size() == 1);

  DecMap a3b = mb_anodyne({Family::A3, 3});
  REQUIRE(a3b.src.thin.size() == 1);  // 01n is a horn face for n=3

  DecMap a4 = mb_anodyne({Family::A4});
  a4.validate();
  REQUIRE(a4.dst.marked.size() == 1);
  REQUIRE(a4.map.assign[0] == SimplexRef{0, {}});  // initial vertex

  DecMap s1 = mb_anodyne({Family::S1});
  s1.validate();
  REQUIRE(s1.src.marked.size() == 2);
  REQUIRE(s1.dst.marked.size() == 3);
  REQUIRE(s1.src.thin.size() == 1);

  DecMap s2 = mb_anodyne({Family::S2});
  s2.validate();
  REQUIRE(s2.src.thin.empty());
  REQUIRE(s2.src.lean.size() == 1);
  REQUIRE(s2.dst.thin.size() == 1);

  DecMap a2 = mb_anodyne({Family::A2});
  REQUIRE(a2.src.lean.size() == 5);
  REQUIRE(a2.dst.lean.size() == 7);
  REQUIRE(a2.src.thin.empty());
}

TEST_CASE("marked-scaled generators") {
  DecMap m1 = ms_anodyne({Family::M1, 3, 2});
  m1.validate();
  REQUIRE(m1.dst.thin.size() == 1);
  REQUIRE(m1.src.flavor == Flavor::MarkedScaled);

  DecMap ms1 = ms_anodyne({Family::MS1});
  REQUIRE(ms1.src.marked.size() == 2);
  REQUIRE(ms1.dst.marked.size() == 3);

  DecMap me = ms_anodyne({Family::ME, -1, -1, point()});
  me.validate();
  // on a point the marking extension is an isomorphism
  REQUIRE(me.src.ss->gen_count() == 1);
  REQUIRE(me.src.marked == me.dst.marked);
}

TEST_CASE("generating cofibrations") {
  DecMap c1 = generating_cofibration({Family::C1, 0});
  REQUIRE(c1.src.ss->gen_count() == 0);
  REQUIRE(c1.dst.ss->gen_count() == 1);

  DecMap c1b = generating_cofibration({Family::C1, 2});
  REQUIRE(is_mono(c1b.map));
  REQUIRE(c1b.src.ss->gen_count(2) == 0);

  DecMap c2 = generating_cofibration({Family::C2});
  REQUIRE(c2.src.marked.empty());
  REQUIRE(c2.dst.marked.size() == 1);

  DecMap c4 = generating_cofibration({Family::C4});
  REQUIRE(c4.src.thin.empty());
  REQUIRE(c4.src.lean.size() == 1);
  REQUIRE(c4.dst.thin.size() == 1);
}

TEST_CASE("every generator is a monomorphism") {
  std::vector<GeneratorSpec> specs = {
      {Family::SC_I, 2, 1},  {Family::SC_I, 3, 1}, {Family::SC_II},
      {Family::SC_III, 3},   {Family::A1, 2, 1},   {Family::A1, 4, 2},
      {Family::A2},          {Family::A3, 2},      {Family::A3, 4},
      {Family::A4},          {Family::S1},         {Family::S2},
      {Family::M1, 2, 1},    {Family::M2},         {Family::M3, 3},
      {Family::M4},          {Family::MS1},        {Family::C1, 1},
      {Family::C1, 3},       {Family::C2},         {Family::C3},
      {Family::C4}};
  for (const auto& s : specs) {
    DecMap f = build_generator(s);
    INFO(generator_name(s));
    f.validate();
    REQUIRE(is_mono(f.map));
  }
}

TEST_CASE("probe list") {
  auto probes = default_probes(3);
  REQUIRE(probes.size() == 4);
  REQUIRE(probes[0]->gen_count() == 1);
  // interval skeleton: two cells per dimension
  REQUIRE(probes[2]->gen_count(0) == 2);
  REQUIRE(probes[2]->gen_count(1) == 2);
  REQUIRE(probes[2]->gen_count(2) == 2);
  DecMap e = mb_anodyne({Family::E, -1, -1, probes[1]});
  e.validate();
  REQUIRE(e.dst.marked.size() == 2);
}

TEST_CASE("generator grammar round trip") {
  GeneratorSpec s = parse_generator("mb:A1(n=3,i=1)");
  REQUIRE(s.family == Family::A1);
  REQUIRE(s.n == 3);
  REQUIRE(s.i == 1);
  REQUIRE(generator_name(s) == "mb:A1(n=3,i=1)");

  REQUIRE(parse_generator("sc:ii").family == Family::SC_II);
  REQUIRE(parse_generator("cof:C2").family == Family::C2);
  REQUIRE_THROWS_AS(parse_generator("mb:XX"), error);
  REQUIRE_THROWS_AS(parse_generator("mb:A1(n=oops)"), error);
}
