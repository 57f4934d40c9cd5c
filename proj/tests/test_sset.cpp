#include <catch2/catch_amalgamated.hpp>

#include "dss/colimit.hpp"
#include "dss/dec.hpp"
#include "dss/sset.hpp"

using namespace dss;

TEST_CASE("standard simplices have binomial generator counts") {
  auto d0 = standard_simplex(0);
  REQUIRE(d0->gen_count() == 1);

  auto d2 = standard_simplex(2);
  REQUIRE(d2->gen_count(0) == 3);
  REQUIRE(d2->gen_count(1) == 3);
  REQUIRE(d2->gen_count(2) == 1);
  d2->validate();

  auto d3 = standard_simplex(3);
  REQUIRE(d3->gen_count(0) == 4);
  REQUIRE(d3->gen_count(1) == 6);
  REQUIRE(d3->gen_count(2) == 4);
  REQUIRE(d3->gen_count(3) == 1);
  d3->validate();
}

TEST_CASE("EZ arithmetic: faces and degeneracies") {
  auto c = standard_simplex_c(2);
  SimplexRef top{c.of(0b111), {}};
  // s_0 then d_0 recovers the top cell
  SimplexRef s0 = c.ss->degenerate(top, 0);
  REQUIRE(c.ss->dim(s0) == 3);
  REQUIRE(c.ss->face(s0, 0) == top);
  REQUIRE(c.ss->face(s0, 1) == top);
  // vertices of the degenerate 3-simplex are 0,0,1,2
  auto vs = c.ss->vertices(s0);
  REQUIRE(vs == std::vector<GenId>{c.of(0b001), c.of(0b001), c.of(0b010),
                                   c.of(0b100)});
}

TEST_CASE("all_simplices counts") {
  auto d1 = standard_simplex(1);
  // dimension 1: the edge plus two degenerate vertices
  REQUIRE(d1->all_simplices(1).size() == 3);
  // dimension 2: degenerate only: 2 per vertex? one per vertex pair of
  // doubled positions (positions {0,1} collapse) -> C(2,2)=1 each, plus the
  // edge degenerated in 2 ways.
  REQUIRE(d1->all_simplices(2).size() == 2 * 1 + 2);
}

TEST_CASE("simplex_operator implements face and degeneracy maps") {
  auto d1 = standard_simplex_c(1);
  auto d2 = standard_simplex_c(2);
  SimplicialMap d1_into_d2 = simplex_operator(d1, d2, {0, 2});
  d1_into_d2.validate();
  REQUIRE(d1_into_d2.assign[d1.of(0b11)] == SimplexRef{d2.of(0b101), {}});

  SimplicialMap s = simplex_operator(d2, d1, {0, 0, 1});
  s.validate();
  // the 012 triangle maps to the 001-degeneracy of the edge
  REQUIRE(s.assign[d2.of(0b111)] == SimplexRef{d1.of(0b11), {0}});
}

TEST_CASE("act applies simplicial operators") {
  auto d2 = standard_simplex_c(2);
  SimplexRef top{d2.of(0b111), {}};
  REQUIRE(d2.ss->act(top, {0, 2}) == SimplexRef{d2.of(0b101), {}});
  REQUIRE(d2.ss->act(top, {1, 1, 2}) ==
          d2.ss->degenerate(SimplexRef{d2.of(0b110), {}}, 0));
}

TEST_CASE("product of intervals") {
  auto d1 = standard_simplex(1);
  auto pr = product(d1, d1);
  REQUIRE(pr.ss->gen_count(0) == 4);
  // edges: 4 sides + 1 diagonal
  REQUIRE(pr.ss->gen_count(1) == 5);
  // two shuffles
  REQUIRE(pr.ss->gen_count(2) == 2);
  REQUIRE(pr.ss->gen_count(3) == 0);
  pr.ss->validate();
  pr.proj1.validate();
  pr.proj2.validate();
}

TEST_CASE("product unit and Delta1 x Delta2") {
  auto d0 = standard_simplex(0);
  auto d2 = standard_simplex(2);
  auto pr = product(d0, d2);
  REQUIRE(pr.ss->gen_count(0) == 3);
  REQUIRE(pr.ss->gen_count(1) == 3);
  REQUIRE(pr.ss->gen_count(2) == 1);

  auto d1 = standard_simplex(1);
  auto pr2 = product(d1, d2);
  REQUIRE(pr2.ss->gen_count(3) == 3);  // C(3,1) shuffles
  pr2.ss->validate();
}

TEST_CASE("product generator counts match brute-force shuffle formula") {
  auto d1 = standard_simplex(1);
  auto d2 = standard_simplex(2);
  auto pr = product(d1, d2);
  for (int m = 0; m <= 3; ++m) {
    // brute force: count pairs of m-simplices with disjoint degeneracies
    int count = 0;
    for (const auto& a : d1->all_simplices(m))
      for (const auto& b : d2->all_simplices(m)) {
        std::vector<int> inter;
        std::set_intersection(a.deg.begin(), a.deg.end(), b.deg.begin(),
                              b.deg.end(), std::back_inserter(inter));
        if (inter.empty()) ++count;
      }
    REQUIRE(pr.ss->gen_count(m) == count);
  }
}

TEST_CASE("pushout glues an edge endpoint") {
  // pushout of point <- boundary(1) -> Delta^1: both endpoints of the edge
  // identified with a single vertex
  auto pt = point();
  auto bd = boundary_c(1);
  auto d1 = standard_simplex_c(1);
  ColimitInput in;
  int o_pt = in.add_object(pt);
  int o_bd = in.add_object(bd.ss);
  int o_d1 = in.add_object(d1.ss);
  in.add_arrow(o_bd, o_d1, subset_inclusion(bd, d1));
  SimplicialMap col{bd.ss, pt, {}};
  col.assign = {SimplexRef{0, {}}, SimplexRef{0, {}}};
  in.add_arrow(o_bd, o_pt, col);
  auto res = colimit(in);
  REQUIRE(res.ss->gen_count(0) == 1);
  REQUIRE(res.ss->gen_count(1) == 1);
  res.ss->validate();
}

TEST_CASE("two triangles glued along a shared edge") {
  auto d2a = standard_simplex_c(2);
  auto d2b = standard_simplex_c(2);
  auto d1 = standard_simplex_c(1);
  ColimitInput in;
  int oa = in.add_object(d2a.ss);
  int ob = in.add_object(d2b.ss);
  int oe = in.add_object(d1.ss);
  in.add_arrow(oe, oa, simplex_operator(d1, d2a, {0, 1}));
  in.add_arrow(oe, ob, simplex_operator(d1, d2b, {0, 1}));
  auto res = colimit(in);
  REQUIRE(res.ss->gen_count(0) == 4);
  REQUIRE(res.ss->gen_count(1) == 5);
  REQUIRE(res.ss->gen_count(2) == 2);
  res.ss->validate();
}

TEST_CASE("coequalizer of two identity maps is the object") {
  auto d2 = standard_simplex(2);
  ColimitInput in;
  int o = in.add_object(d2);
  in.add_arrow(o, o, identity_map(d2));
  in.add_arrow(o, o, identity_map(d2));
  auto res = colimit(in);
  REQUIRE(res.ss->gen_count(0) == 3);
  REQUIRE(res.ss->gen_count(1) == 3);
  REQUIRE(res.ss->gen_count(2) == 1);
}

TEST_CASE("quotient Delta1 / boundary is a circle") {
  auto d1 = standard_simplex_c(1);
  std::set<GenId> a{d1.of(0b01), d1.of(0b10)};
  auto q = quotient(d1.ss, a);
  REQUIRE(q.ss->gen_count(0) == 1);
  REQUIRE(q.ss->gen_count(1) == 1);
  q.ss->validate();
  // projection is surjective on the edge
  REQUIRE(q.proj.apply(SimplexRef{d1.of(0b11), {}}).deg.empty());
}

TEST_CASE("quotient of Delta2 by the 01 face") {
  auto d2 = standard_simplex_c(2);
  std::set<GenId> a{d2.of(0b001), d2.of(0b010), d2.of(0b011)};
  auto q = quotient(d2.ss, a);
  REQUIRE(q.ss->gen_count(0) == 2);
  REQUIRE(q.ss->gen_count(1) == 2);
  REQUIRE(q.ss->gen_count(2) == 1);
  q.ss->validate();
}

TEST_CASE("quotient by the empty subcomplex adds a disjoint point") {
  auto d1 = standard_simplex_c(1);
  auto q = quotient(d1.ss, {});
  REQUIRE(q.ss->gen_count(0) == 3);
  REQUIRE(q.ss->gen_count(1) == 1);
}

TEST_CASE("colimit is idempotent under renormalization") {
  auto d2 = standard_simplex_c(2);
  std::set<GenId> a{d2.of(0b001), d2.of(0b010), d2.of(0b011)};
  auto q = quotient(d2.ss, a);
  ColimitInput in;
  int o = in.add_object(q.ss);
  (void)o;
  auto res = colimit(in);
  REQUIRE(res.ss->gen_count() == q.ss->gen_count());
  for (GenId g = 0; g < res.ss->gen_count(); ++g)
    REQUIRE(res.ss->gen_dim[g] == q.ss->gen_dim[g]);
}

TEST_CASE("decorations: validation and degenerate convention") {
  auto d2 = standard_simplex_c(2);
  DecSSet sc = make_dec(d2.ss, Flavor::Scaled, {}, {d2.of(0b111)});
  REQUIRE(sc.is_thin(SimplexRef{d2.of(0b111), {}}));
  // degenerate triangles always decorated
  SimplexRef degtri = d2.ss->degenerate(SimplexRef{d2.of(0b011), {}}, 0);
  REQUIRE(sc.is_thin(degtri));

  REQUIRE_THROWS_AS(make_dec(d2.ss, Flavor::MarkedBiscaled, {},
                             {d2.of(0b111)}, {}),
                    error);
}

TEST_CASE("flavor functors") {
  auto d2 = standard_simplex_c(2);
  DecSSet sharp = make_dec(d2.ss, Flavor::Scaled, {}, {d2.of(0b111)});
  DecSSet mb = flavor_L(sharp);
  REQUIRE(mb.flavor == Flavor::MarkedBiscaled);
  REQUIRE(mb.marked.empty());
  REQUIRE(mb.thin.empty());
  REQUIRE(mb.lean == std::set<GenId>{d2.of(0b111)});

  // R on a flat-marked triangle over the flat base: no thin triangles
  DecSSet flat_marked = make_dec(d2.ss, Flavor::MarkedScaled, {}, {});
  DecSSet base_flat = make_dec(d2.ss, Flavor::Scaled, {}, {});
  DecSSet r = flavor_R_marked(flat_marked, identity_map(d2.ss), base_flat);
  REQUIRE(r.thin.empty());
  REQUIRE(r.lean.size() == 1);

  // identity over the sharp base: every triangle thin and lean
  DecSSet r2 = flavor_R_marked(flat_marked, identity_map(d2.ss), sharp);
  REQUIRE(r2.thin.size() == 1);

  // underlying scaled set: lean over non-thin base is not thin
  DecSSet x = make_dec(d2.ss, Flavor::MarkedBiscaled, {}, {},
                       {d2.of(0b111)});
  DecSSet u = underlying_bicat(x, identity_map(d2.ss), base_flat);
  REQUIRE(u.thin.empty());
  DecSSet u2 = underlying_bicat(x, identity_map(d2.ss), sharp);
  REQUIRE(u2.thin.size() == 1);
}

TEST_CASE("decorated product ands the decorations") {
  auto d1 = standard_simplex_c(1);
  DecSSet a =
      make_dec(d1.ss, Flavor::MarkedScaled, {d1.of(0b11)}, {});
  DecSSet b = make_dec(d1.ss, Flavor::MarkedScaled, {}, {});
  auto pr = dec_product(a, b);
  // the only marked edges are (edge, degenerate) pairs
  for (GenId g : pr.obj.marked) {
    const auto& [x, y] = pr.prod.gen_pair[g];
    REQUIRE(a.is_marked(x));
    REQUIRE(b.is_marked(y));
  }
  auto prc = dec_product(a, a);
  bool diag_marked = false;
  for (GenId g : prc.obj.marked) {
    const auto& [x, y] = prc.prod.gen_pair[g];
    if (x.deg.empty() && y.deg.empty()) diag_marked = true;
  }
  REQUIRE(diag_marked);
}
