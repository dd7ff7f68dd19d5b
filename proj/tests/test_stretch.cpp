#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "ppt/cpt.hpp"
#include "ppt/io.hpp"
#include "ppt/stretch.hpp"
#include "ppt/verify_geom.hpp"

#include "fixtures.hpp"

using namespace ppt;

TEST_CASE("aux digraph of the labeled quad4") {
  PlaneGraph g = fx::quad4();
  CptLabeling lab = fx::quad4_labeling(g);
  AuxDigraph d = build_aux_digraph(g, lab);

  // One diagonal splits the quad's big angle at vertex 3.
  CHECK(d.diagonals == std::vector<std::pair<int, int>>{{2, 3}});
  CHECK(d.dgraph.n == 4);
  CHECK(d.dgraph.m() == 6);
  CHECK(d.dgraph.has_edge(2, 3));
  CHECK(d.split_diagonal[3] == 2);

  CHECK(d.boundary == std::vector<char>{1, 1, 1, 0});
  CHECK(d.boundary_order == std::vector<int>{0, 2, 1});

  // Boundary vertices have no out-edges; the pointed interior vertex points
  // at its big angle's two sides and the splitting diagonal.
  CHECK(d.out[0].empty());
  CHECK(d.out[1].empty());
  CHECK(d.out[2].empty());
  CHECK(d.out[3] == std::vector<int>{1, 0, 2});
  CHECK(d.w[3] == std::vector<double>{1.0, 1.0, 1.0});

  AuxDigraph seeded = build_aux_digraph(g, lab, 42);
  REQUIRE(seeded.out[3].size() == 3);
  for (double wt : seeded.w[3]) {
    CHECK(wt >= 0.5);
    CHECK(wt < 1.5);
  }

  CHECK(check_boundary_3connectivity(d).ok);
}

TEST_CASE("non-pointed vertices point at every neighbor") {
  PlaneGraph g = fx::k4();
  CptLabeling lab = assign_cpt(g, 3);
  AuxDigraph d = build_aux_digraph(g, lab);
  CHECK(d.diagonals.empty());
  CHECK(d.split_diagonal[3] == -1);
  std::vector<int> o = d.out[3];
  std::sort(o.begin(), o.end());
  CHECK(o == std::vector<int>{0, 1, 2});
  CHECK(check_boundary_3connectivity(d).ok);
}

TEST_CASE("a starved interior vertex is reported with its cut") {
  PlaneGraph g = fx::quad4();
  CptLabeling lab = fx::quad4_labeling(g);
  AuxDigraph d = build_aux_digraph(g, lab);
  d.out[3] = {0, 1};
  d.w[3] = {1.0, 1.0};
  ConnectivityWitness wit = check_boundary_3connectivity(d);
  CHECK_FALSE(wit.ok);
  CHECK(wit.vertex == 3);
  std::set<int> cut{wit.cut.first, wit.cut.second};
  CHECK(cut == std::set<int>{0, 1});
}

TEST_CASE("unit-weight tutte pins the quad4 interior vertex exactly") {
  PlaneGraph g = fx::quad4();
  CptLabeling lab = fx::quad4_labeling(g);
  AuxDigraph d = build_aux_digraph(g, lab);
  REQUIRE(d.boundary_order == std::vector<int>{0, 2, 1});

  // Positions follow boundary_order, so 0 -> (0,0), 2 -> (2,3), 1 -> (4,0):
  // that walk is clockwise around the triangle.
  std::vector<RPoint> bpos{{Rat(0), Rat(0)}, {Rat(2), Rat(3)}, {Rat(4), Rat(0)}};

  TutteOptions opt;
  opt.exact = true;
  Embedding pts = tutte_embed(d, bpos, opt);
  REQUIRE(pts.size() == 4);
  CHECK(pts[0] == RPoint{Rat(0), Rat(0)});
  CHECK(pts[1] == RPoint{Rat(4), Rat(0)});
  CHECK(pts[2] == RPoint{Rat(2), Rat(3)});
  // Equilibrium with unit weights: p3 = (p0 + p1 + p2) / 3.
  CHECK(pts[3] == RPoint{Rat(2), Rat(1)});

  Embedding approx = tutte_embed(d, bpos);
  double dx = rat_to_double(approx[3].x) - 2.0;
  double dy = rat_to_double(approx[3].y) - 1.0;
  CHECK(dx * dx + dy * dy < 1e-16);
}

TEST_CASE("tutte rejects bad boundary data") {
  PlaneGraph g = fx::quad4();
  CptLabeling lab = fx::quad4_labeling(g);
  AuxDigraph d = build_aux_digraph(g, lab);

  CHECK(fx::code_of([&] {
          tutte_embed(d, {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}});
        }) == ErrorCode::BadSize);
  // Collinear corners are not strictly convex.
  CHECK(fx::code_of([&] {
          tutte_embed(d, {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(2), Rat(0)}});
        }) == ErrorCode::DegenerateGraph);
  // Counterclockwise walk order is the wrong orientation.
  CHECK(fx::code_of([&] {
          tutte_embed(d, {{Rat(0), Rat(0)}, {Rat(4), Rat(0)}, {Rat(2), Rat(3)}});
        }) == ErrorCode::DegenerateGraph);
}

TEST_CASE("exact solve is in equilibrium for rational weights") {
  PlaneGraph g = fx::quad4();
  CptLabeling lab = fx::quad4_labeling(g);
  AuxDigraph d = build_aux_digraph(g, lab, 77);
  std::vector<Rat> rw;
  for (double wt : d.w[3]) {
    Rat r = rat_from_double(wt);
    rw.push_back(r);
    REQUIRE(r > 0);
  }
  // Re-install the rationalized weights so the check below is exact.
  for (size_t i = 0; i < rw.size(); ++i) d.w[3][i] = rat_to_double(rw[i]);

  std::vector<RPoint> bpos{{Rat(0), Rat(0)}, {Rat(2), Rat(3)}, {Rat(4), Rat(0)}};
  TutteOptions opt;
  opt.exact = true;
  Embedding pts = tutte_embed(d, bpos, opt);

  RPoint sum{Rat(0), Rat(0)};
  Rat total(0);
  for (size_t i = 0; i < d.out[3].size(); ++i) {
    sum.x += rw[i] * pts[d.out[3][i]].x;
    sum.y += rw[i] * pts[d.out[3][i]].y;
    total += rw[i];
  }
  CHECK(pts[3].x * total == sum.x);
  CHECK(pts[3].y * total == sum.y);
}

TEST_CASE("tutte flags an interior vertex cut off from the boundary") {
  PlaneGraph g = fx::quad4();
  CptLabeling lab = fx::quad4_labeling(g);
  AuxDigraph d = build_aux_digraph(g, lab);
  d.out[3] = {0, 1};
  d.w[3] = {1.0, 1.0};
  std::vector<RPoint> bpos{{Rat(0), Rat(0)}, {Rat(2), Rat(3)}, {Rat(4), Rat(0)}};
  CHECK(fx::code_of([&] { tutte_embed(d, bpos); }) ==
        ErrorCode::NotThreeConnected);
}

TEST_CASE("stretch_cpt realizes the quad4 labeling") {
  PlaneGraph g = fx::quad4();
  CptLabeling lab = fx::quad4_labeling(g);
  Embedding pts = stretch_cpt(g, lab);
  GeometricReport rep = verify_geometry(pts, g);
  CHECK(rep.non_crossing);
  CHECK(rep.rotation_ok);
  CHECK(rep.pointed_pseudo_triangulation);
  CHECK_FALSE(rep.degenerate);
  CHECK(rep.labeling.big == lab.big);

  StretchConfig exact_cfg;
  exact_cfg.exact = true;
  Embedding epts = stretch_cpt(g, lab, exact_cfg);
  CHECK(verify_geometry(epts, g).pointed_pseudo_triangulation);
}

TEST_CASE("stretch_cpt handles a prescribed non-pointed circuit vertex") {
  PlaneGraph g = fx::k4();
  CptLabeling lab = assign_cpt(g, 3);
  Embedding pts = stretch_cpt(g, lab);
  GeometricReport rep = verify_geometry(pts, g);
  CHECK(rep.non_crossing);
  CHECK(rep.rotation_ok);
  CHECK(rep.pseudo_triangulation);
  CHECK(rep.non_pointed == std::vector<int>{3});
}

TEST_CASE("stretch_cpt rejects a labeling that breaks the axioms") {
  PlaneGraph g = fx::quad4();
  CptLabeling lab = fx::quad4_labeling(g);
  lab.big[g.dart(0, 3)] = 0;  // interior vertex loses its big angle
  CHECK(fx::code_of([&] { stretch_cpt(g, lab); }) == ErrorCode::LabelMismatch);
}

TEST_CASE("a repeated vertex on the outer walk is rejected") {
  // Path 0-1-2: the outer walk visits vertex 1 twice.
  PlaneGraph g = build_plane_graph(3, {{0, 1}, {1, 2}}, {{1}, {0, 2}, {1}},
                                   {0, 1, 2, 1});
  CptLabeling lab;
  lab.big.assign(2 * g.m(), 1);
  CHECK(fx::code_of([&] { build_aux_digraph(g, lab); }) ==
        ErrorCode::RepeatedBoundaryVertex);
}

TEST_CASE("generated graphs stretch to verified drawings") {
  PlaneGraph lg = generate_instance(30, 2024).graph;
  CptLabeling llab = assign_cpt(lg);
  Embedding lpts = stretch_cpt(lg, llab);
  GeometricReport lrep = verify_geometry(lpts, lg);
  CHECK(lrep.non_crossing);
  CHECK(lrep.rotation_ok);
  CHECK(lrep.pointed_pseudo_triangulation);
  CHECK(lrep.labeling.big == llab.big);

  PlaneGraph cg = generate_instance(20, 2025, GenKind::circuit).graph;
  CptLabeling clab = assign_cpt(cg, 3);
  Embedding cpts = stretch_cpt(cg, clab);
  GeometricReport crep = verify_geometry(cpts, cg);
  CHECK(crep.non_crossing);
  CHECK(crep.rotation_ok);
  CHECK(crep.pseudo_triangulation);
  CHECK(crep.labeling.big == clab.big);
  CHECK(crep.non_pointed == std::vector<int>{3});
}
