#include <catch2/catch_amalgamated.hpp>

#include "dss/gray.hpp"

using namespace dss;

namespace {
DecSSet interval_ms(bool marked) {
  SubsetComplex d1 = standard_simplex_c(1);
  std::set<GenId> m;
  if (marked) m.insert(d1.of(0b11));
  return make_dec(d1.ss, Flavor::MarkedScaled, m, {});
}
}  // namespace

TEST_CASE("gray tensor of flat intervals scales one shuffle") {
  GrayProduct g = gray(interval_ms(false), interval_ms(false));
  REQUIRE(g.obj.ss->gen_count(2) == 2);
  REQUIRE(g.obj.thin.size() == 1);
  // the scaled shuffle is the one whose left 1->2 edge is degenerate:
  // it passes through the vertex (1, 0)
  for (GenId t : g.obj.thin) {
    const auto& [a, b] = g.prod.gen_pair[t];
    SimplexRef a12 = standard_simplex(1)->face(a, 0);
    REQUIRE_FALSE(a12.deg.empty());
    (void)b;
  }
}

TEST_CASE("gray tensor with a point is the identity shape") {
  SubsetComplex d0 = standard_simplex_c(0);
  DecSSet pt = make_dec(d0.ss, Flavor::MarkedScaled);
  DecSSet x = interval_ms(true);
  GrayProduct g = gray(x, pt);
  REQUIRE(g.obj.ss->gen_count(0) == x.ss->gen_count(0));
  REQUIRE(g.obj.ss->gen_count(1) == x.ss->gen_count(1));
}

TEST_CASE("marked interval makes both shuffles thin") {
  GrayProduct g = gray(interval_ms(true), interval_ms(false));
  REQUIRE(g.obj.thin.size() == 2);
}

TEST_CASE("gray_pi adds the initial-slice scaling") {
  GrayProduct plain = gray_scaled(
      make_dec(standard_simplex(1), Flavor::Scaled),
      make_dec(standard_simplex(2), Flavor::Scaled));
  GrayProduct withpi = gray_pi(2);
  REQUIRE(withpi.obj.thin.size() == plain.obj.thin.size() + 1);
  // for n = 1 there is no nondegenerate initial-slice triangle
  GrayProduct p1 = gray_pi(1);
  GrayProduct plain1 = gray_scaled(
      make_dec(standard_simplex(1), Flavor::Scaled),
      make_dec(standard_simplex(1), Flavor::Scaled));
  REQUIRE(p1.obj.thin == plain1.obj.thin);
}

TEST_CASE("lax cylinder of a point") {
  SubsetComplex d0 = standard_simplex_c(0);
  DecSSet a = make_dec(d0.ss, Flavor::MarkedBiscaled);
  LaxCylinder cyl = lax_cylinder(a, identity_map(d0.ss), d0);
  cyl.obj.validate();
  cyl.to_base.validate();
  REQUIRE(cyl.obj.ss->gen_count(0) == 2);
  REQUIRE(cyl.obj.ss->gen_count(1) == 1);
  // the interval edge has degenerate second component: marked
  REQUIRE(cyl.obj.marked.size() == 1);
  // inclusion hits the initial vertex
  REQUIRE(cyl.to_base.map.apply(cyl.incl.map.assign[0]) ==
          SimplexRef{0, {}});
}

TEST_CASE("lax cylinder marking of the marked interval") {
  SubsetComplex d1 = standard_simplex_c(1);
  std::set<GenId> mk{d1.of(0b11)};
  DecSSet a = make_dec(d1.ss, Flavor::MarkedBiscaled, mk, {}, {});
  LaxCylinder cyl = lax_cylinder(a, identity_map(d1.ss), d1);
  cyl.obj.validate();
  cyl.incl.validate();
  cyl.to_base.validate();
  // marked: two degenerate-component edges plus (0->0, edge)
  REQUIRE(cyl.obj.marked.size() == 3);
  int const0_marked = 0;
  SubsetComplex d1i = standard_simplex_c(1);
  for (GenId g : cyl.obj.marked) {
    const auto& [e1, ea] = cyl.prod.gen_pair[g];
    if (ea.deg.empty()) {
      ++const0_marked;
      // the interval component must be constant at the initial vertex
      REQUIRE_FALSE(e1.deg.empty());
    }
  }
  REQUIRE(const0_marked == 1);
}

TEST_CASE("function complex vertex counts") {
  SubsetComplex d0 = standard_simplex_c(0);
  SubsetComplex d1 = standard_simplex_c(1);
  DecSSet pt_mb = make_dec(d0.ss, Flavor::MarkedBiscaled);
  DecSSet flat = make_dec(d1.ss, Flavor::MarkedBiscaled);
  DecSSet sharp = make_dec(d1.ss, Flavor::MarkedBiscaled, {d1.of(0b11)}, {},
                           {});

  // fun(point, Y) is Y truncated
  FunComplex f0 = fun_complex(pt_mb, sharp, 1);
  REQUIRE(f0.obj.ss->gen_count(0) == 2);
  REQUIRE(f0.obj.ss->gen_count(1) == 1);
  REQUIRE(f0.obj.marked.size() == 1);

  // vertices of fun(flat interval, sharp interval) = edges of the target
  FunComplex f1 = fun_complex(flat, sharp, 1);
  REQUIRE(f1.obj.ss->gen_count(0) == 3);
}

TEST_CASE("function complex respects markings in the source") {
  SubsetComplex d1 = standard_simplex_c(1);
  DecSSet flat = make_dec(d1.ss, Flavor::MarkedBiscaled);
  DecSSet sharp =
      make_dec(d1.ss, Flavor::MarkedBiscaled, {d1.of(0b11)}, {}, {});
  // maps out of the marked interval into the flat one: constants only
  FunComplex f = fun_complex(sharp, flat, 0);
  REQUIRE(f.obj.ss->gen_count(0) == 2);
}

TEST_CASE("map_over restricts to the fibre") {
  // X = point over vertex 0 of the interval; Y = interval over itself.
  SubsetComplex d0 = standard_simplex_c(0);
  SubsetComplex d1 = standard_simplex_c(1);
  DecSSet pt_mb = make_dec(d0.ss, Flavor::MarkedBiscaled);
  DecSSet y = make_dec(d1.ss, Flavor::MarkedBiscaled);
  SimplicialMap p = simplex_operator(d0, d1, {0});
  SimplicialMap q = identity_map(d1.ss);
  FunComplex f = map_over(pt_mb, p, y, q, 0);
  // vertices = vertices of the fibre over 0 = one point
  REQUIRE(f.obj.ss->gen_count(0) == 1);
}
