#include <catch2/catch_amalgamated.hpp>

#include "dss/lift.hpp"
#include "oracles.hpp"

using namespace dss;

namespace {
SimplicialMap collapse_map(const DecSSet& x, const DecSSet& pt) {
  SimplicialMap m{x.ss, pt.ss, {}};
  for (GenId g = 0; g < x.ss->gen_count(); ++g) {
    std::vector<int> deg(x.ss->gen_dim[g]);
    std::iota(deg.begin(), deg.end(), 0);
    m.assign.push_back(SimplexRef{0, deg});
  }
  return m;
}

DecMap to_point(const DecSSet& x, Flavor fl) {
  DecSSet p = make_dec(point(), fl);
  return DecMap{x, p, collapse_map(x, p)};
}

DecMap scaled_horn(int n, int i) { return scaled_anodyne({Family::SC_I, n, i}); }
}  // namespace

TEST_CASE("identity square has the identity filler") {
  DecMap horn = scaled_horn(2, 1);
  DecSSet X = horn.dst;
  DecMap right = to_point(X, Flavor::Scaled);
  DecMap top{horn.src, X, horn.map};
  DecMap bottom{horn.dst, right.dst, compose_maps(right.map, identity_map(X.ss))};
  LiftingProblem p{horn, right, top, bottom};
  p.validate();
  LiftOutcome o = solve_lifting(p, 10000);
  REQUIRE(o.verdict == LiftVerdict::Filler);
  REQUIRE(o.filler->map.assign[horn.dst.ss->gen_count() - 1].deg.empty());
}

TEST_CASE("no filler when the target lacks the cell") {
  DecMap horn = scaled_horn(2, 1);
  DecSSet X = horn.src;  // the horn itself has no 2-cell
  DecMap right = to_point(X, Flavor::Scaled);
  DecMap top = dec_identity(X);
  SimplicialMap bm{horn.dst.ss, right.dst.ss, {}};
  for (GenId g = 0; g < horn.dst.ss->gen_count(); ++g) {
    std::vector<int> deg(horn.dst.ss->gen_dim[g]);
    std::iota(deg.begin(), deg.end(), 0);
    bm.assign.push_back(SimplexRef{0, deg});
  }
  DecMap bottom{horn.dst, right.dst, bm};
  LiftingProblem p{horn, right, top, bottom};
  p.validate();
  LiftOutcome o = solve_lifting(p, 10000);
  REQUIRE(o.verdict == LiftVerdict::NoFiller);

  LiftOutcome o2 = solve_lifting(p, 1);
  REQUIRE(o2.verdict == LiftVerdict::BudgetExceeded);
}

TEST_CASE("verdicts agree with the naive oracle on small fixtures") {
  std::vector<LiftingProblem> fixtures;
  {
    DecMap horn = scaled_horn(2, 1);
    DecSSet X = horn.dst;
    DecMap right = to_point(X, Flavor::Scaled);
    fixtures.push_back({horn, right, DecMap{horn.src, X, horn.map},
                        DecMap{horn.dst, right.dst,
                               collapse_map(horn.dst, right.dst)}});
    DecSSet H = horn.src;
    DecMap right2 = to_point(H, Flavor::Scaled);
    fixtures.push_back({horn, right2, dec_identity(H),
                        DecMap{horn.dst, right2.dst,
                               collapse_map(horn.dst, right2.dst)}});
  }
  {
    DecMap a3 = mb_anodyne({Family::A3, 2});
    DecSSet X = a3.dst;
    DecMap right = to_point(X, Flavor::MarkedBiscaled);
    fixtures.push_back({a3, right, DecMap{a3.src, X, a3.map},
                        DecMap{a3.dst, right.dst,
                               collapse_map(a3.dst, right.dst)}});
  }
  for (const auto& p : fixtures) {
    LiftOutcome o = solve_lifting(p, 100000);
    auto oracle = dss_test::naive_lift(p);
    REQUIRE((o.verdict == LiftVerdict::Filler) == oracle.has_value());
  }
}

TEST_CASE("point over point is a fibration for every family") {
  SSetPtr pt = point();
  DecSSet p_mb = make_dec(pt, Flavor::MarkedBiscaled);
  DecMap id_mb = dec_identity(p_mb);
  RlpCaps caps;
  caps.n_max = 3;
  RlpReport rep = has_rlp_up_to(id_mb, mb_anodyne_families(), caps);
  REQUIRE(rep.positive);

  DecSSet p_sc = make_dec(pt, Flavor::Scaled);
  RlpReport rep2 =
      has_rlp_up_to(dec_identity(p_sc), scaled_anodyne_families(), caps);
  REQUIRE(rep2.positive);
}

TEST_CASE("flat interval over its marked base fails the marked-lift family") {
  // The identity of the flat interval, viewed over the interval base carrying
  // every edge marked: the base edge has no marked lift.
  SubsetComplex d1 = standard_simplex_c(1);
  DecSSet X = make_dec(d1.ss, Flavor::MarkedBiscaled);
  DecSSet base = mb_base(make_dec(d1.ss, Flavor::Scaled));
  DecMap right{X, base, identity_map(d1.ss)};
  RlpCaps caps;
  caps.n_max = 2;
  RlpReport rep = has_rlp_up_to(right, {Family::A4}, caps);
  REQUIRE_FALSE(rep.positive);
  REQUIRE(rep.instances.size() == 1);
  REQUIRE(rep.instances[0].witness.has_value());
  REQUIRE(rep.instances[0].verdict == LiftVerdict::NoFiller);

  // over the point the degenerate lift always exists
  DecMap over_pt = to_point(X, Flavor::MarkedBiscaled);
  REQUIRE(has_rlp_up_to(over_pt, {Family::A4}, caps).positive);
}

TEST_CASE("enumerate_dec_maps counts") {
  SubsetComplex d1 = standard_simplex_c(1);
  DecSSet flat = make_dec(d1.ss, Flavor::Scaled);
  MapEnumSpec spec{flat, flat};
  auto maps = enumerate_dec_maps(spec);
  REQUIRE(maps.size() == 3);

  DecSSet marked = make_dec(d1.ss, Flavor::MarkedScaled, {d1.of(0b11)}, {});
  DecSSet flat_ms = make_dec(d1.ss, Flavor::MarkedScaled, {}, {});
  MapEnumSpec spec2{marked, flat_ms};
  REQUIRE(enumerate_dec_maps(spec2).size() == 2);
}

TEST_CASE("pushout product with the point inclusion reproduces the map") {
  DecMap c1 = generating_cofibration({Family::C1, 0});
  DecMap a4 = mb_anodyne({Family::A4});
  DecMap pp = pushout_product(c1, a4);
  pp.validate();
  REQUIRE(pp.src.ss->gen_count() == 1);
  REQUIRE(pp.dst.ss->gen_count(0) == 2);
  REQUIRE(pp.dst.ss->gen_count(1) == 1);
  REQUIRE(pp.dst.marked.size() == 1);
}

TEST_CASE("pushout product of C2 with an inner horn is mono") {
  DecMap c2 = generating_cofibration({Family::C2});
  DecMap a1 = mb_anodyne({Family::A1, 2, 1});
  DecMap pp = pushout_product(c2, a1);
  pp.validate();
  std::set<SimplexRef> seen;
  bool mono = true;
  for (GenId g = 0; g < pp.src.ss->gen_count(); ++g) {
    const SimplexRef& im = pp.map.assign[g];
    if (!im.deg.empty() || !seen.insert(im).second) mono = false;
  }
  REQUIRE(mono);
  REQUIRE(pp.dst.ss->gen_count(0) == 6);
  REQUIRE(pp.dst.ss->gen_count(3) == 3);
}

TEST_CASE("cube corner: pushout product of C1(1) with A4") {
  DecMap c1 = generating_cofibration({Family::C1, 1});
  DecMap a4 = mb_anodyne({Family::A4});
  DecMap pp = pushout_product(c1, a4);
  pp.validate();
  REQUIRE(pp.dst.ss->gen_count(0) == 4);
  REQUIRE(pp.dst.ss->gen_count(2) == 2);
  REQUIRE(pp.src.ss->gen_count(2) == 0);
}

TEST_CASE("iso search finds decorated isomorphisms") {
  SubsetComplex d1 = standard_simplex_c(1);
  DecSSet marked = make_dec(d1.ss, Flavor::MarkedScaled, {d1.of(0b11)}, {});
  DecSSet flat = make_dec(d1.ss, Flavor::MarkedScaled, {}, {});
  auto ab = dec_product(marked, flat);
  auto ba = dec_product(flat, marked);
  auto iso = find_iso(ab.obj, ba.obj);
  REQUIRE(iso.has_value());
  REQUIRE(is_dec_iso(*iso));
  auto aa = dec_product(marked, marked);
  REQUIRE_FALSE(find_iso(ab.obj, aa.obj).has_value());
}

TEST_CASE("identity fibration has local cartesian edges") {
  SubsetComplex d1 = standard_simplex_c(1);
  DecSSet X = make_dec(d1.ss, Flavor::Scaled);
  DecMap id = dec_identity(X);
  std::set<GenId> eqs;
  auto rep = is_local_01_cartesian(id, SimplexRef{d1.of(0b11), {}}, eqs, 3);
  REQUIRE(rep.positive);
  REQUIRE_FALSE(rep.budget_hit);
}

TEST_CASE("missing thin filler is detected") {
  SubsetComplex d2 = standard_simplex_c(2);
  DecSSet X = make_dec(d2.ss, Flavor::Scaled, {}, {});
  DecMap right = to_point(X, Flavor::Scaled);
  SimplexRef e{d2.of(0b011), {}};
  std::set<GenId> eqs{d2.of(0b101), d2.of(0b110)};
  auto rep = is_local_01_cartesian(right, e, eqs, 2);
  REQUIRE_FALSE(rep.positive);
  REQUIRE(rep.witness.has_value());
}
