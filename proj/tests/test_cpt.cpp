#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "ppt/cpt.hpp"
#include "ppt/io.hpp"

using namespace ppt;

TEST_CASE("matching graph shape on quad4") {
  PlaneGraph g = fx::quad4();
  MatchingGraph h = build_matching_graph(g);
  CHECK(h.num_left() == 4);
  CHECK(h.num_right() == 4);  // 3n-3-m = 1 quad copy + 3 outer copies
  int quad_copies = 0, outer_copies = 0;
  for (const auto& rf : h.right_face) {
    if (rf.first == g.outer_face)
      ++outer_copies;
    else
      ++quad_copies;
  }
  CHECK(outer_copies == 3);
  CHECK(quad_copies == 1);
  CHECK(h.left_vertex.size() == 4);
  for (int v = 0; v < 4; ++v) CHECK(h.left_of[h.left_vertex[v]] == v);

  // vertex 3 only touches the quadrilateral face (its other face has no
  // copies), the boundary vertices also reach the outer copies
  int l3 = h.left_of[3];
  CHECK(h.adj[l3].size() == 1);
  CHECK(h.right_face[h.adj[l3][0]].first != g.outer_face);
  int l2 = h.left_of[2];
  CHECK(h.adj[l2].size() == 4);

  auto mt = max_bipartite_matching(h);
  CHECK(std::count(mt.begin(), mt.end(), -1) == 0);
}

TEST_CASE("max_bipartite_matching on tiny instances") {
  MatchingGraph h;
  h.left_vertex = {0, 1};
  h.left_of = {0, 1};
  h.right_face = {{0, 0}, {1, 0}};
  h.adj = {{0, 1}, {0}};
  auto mt = max_bipartite_matching(h);
  CHECK(mt == std::vector<int>{1, 0});

  MatchingGraph bad = h;
  bad.adj = {{0}, {0}};
  auto mb = max_bipartite_matching(bad);
  CHECK(std::count(mb.begin(), mb.end(), -1) == 1);
}

TEST_CASE("assign_cpt finds the unique quad4 labeling") {
  PlaneGraph g = fx::quad4();
  CptLabeling lab = assign_cpt(g);
  CHECK(lab.big == fx::quad4_labeling(g).big);
  CptReport rep = validate_cpt(g, lab);
  CHECK(rep.ok());
  CHECK(rep.non_pointed.empty());
  CHECK(lab.pointed(g, 3));
  CHECK(lab.big_angle_of(g, 3) == g.dart(0, 3));
  CHECK(lab.non_pointed(g).empty());

  auto fc = lab.face_corners(g);
  for (int f = 0; f < g.num_faces(); ++f)
    CHECK(fc[f].size() == (f == g.outer_face ? 0 : 3));
}

TEST_CASE("big_angle_of rejects a double big") {
  PlaneGraph g = fx::quad4();
  CptLabeling lab = fx::quad4_labeling(g);
  lab.big[g.dart(1, 3)] = 1;  // second big at vertex 3
  CHECK(fx::code_of([&] { lab.big_angle_of(g, 3); }) == ErrorCode::BadSize);
  CHECK_FALSE(validate_cpt(g, lab).at_most_one_big);
}

TEST_CASE("validate_cpt flags each axiom separately") {
  PlaneGraph g = fx::quad4();

  CptLabeling lab = fx::quad4_labeling(g);
  lab.big[g.dart(0, 3)] = 0;  // vertex 3 loses its big
  CptReport r1 = validate_cpt(g, lab);
  CHECK_FALSE(r1.small_triples);       // the quad face has 4 corners now
  CHECK_FALSE(r1.nonpointed_count_ok); // one non-pointed vertex too many
  CHECK(r1.non_pointed == std::vector<int>{3});
  CHECK_FALSE(r1.ok());

  lab = fx::quad4_labeling(g);
  lab.big[g.dart(0, 2)] = 0;  // boundary vertex 2 (degree 2) loses its big
  CptReport r2 = validate_cpt(g, lab);
  CHECK_FALSE(r2.outer_all_big);
  CHECK_FALSE(r2.degree2_one_big);
  CHECK(r2.small_triples);  // interior faces untouched

  CHECK(validate_cpt(g, fx::quad4_labeling(g)).ok());
  PlaneGraph p = fx::pendant5();
  CHECK(validate_cpt(p, fx::pendant5_labeling(p)).ok());
}

TEST_CASE("circuits need a prescribed non-pointed vertex") {
  PlaneGraph g = fx::k4();
  // without a prescription the counts cannot balance
  CHECK(fx::code_of([&] { assign_cpt(g); }) == ErrorCode::BadEdgeCount);

  CptLabeling lab = assign_cpt(g, 3);
  CptReport rep = validate_cpt(g, lab);
  CHECK(rep.ok());
  CHECK(rep.non_pointed == std::vector<int>{3});
  CHECK_FALSE(lab.pointed(g, 3));

  CHECK(fx::code_of([&] { assign_cpt(g, 0); }) ==
        ErrorCode::PrescribedVertexOnOuterFace);
  CHECK(fx::code_of([&] { assign_cpt(g, 9); }) == ErrorCode::BadSize);
  MatchingGraph h = build_matching_graph(g, 3);
  CHECK(h.num_left() == 3);
  CHECK(h.num_right() == 3);  // 3n-3-m for the K4
}

TEST_CASE("a vertex buried in triangles starves the matching") {
  PlaneGraph g = fx::tripatch5();
  // prescribing 3 leaves vertex 4 with no face able to take its big angle
  CHECK(fx::code_of([&] { assign_cpt(g, 3); }) ==
        ErrorCode::NoPerfectMatching);

  CptLabeling lab = assign_cpt(g, 4);
  CptReport rep = validate_cpt(g, lab);
  CHECK(rep.ok());
  CHECK(rep.non_pointed == std::vector<int>{4});
  CHECK(lab.big[g.dart(0, 3)] == 1);  // vertex 3 keeps its quad angle
}

TEST_CASE("assign_cpt also labels the non-Laman pendant graph") {
  PlaneGraph g = fx::pendant5();
  CptLabeling lab = assign_cpt(g);
  CHECK(lab.big == fx::pendant5_labeling(g).big);
  CHECK(validate_cpt(g, lab).ok());
}

TEST_CASE("assignment count identity on generated graphs") {
  for (std::uint64_t seed : {21ULL, 22ULL, 23ULL}) {
    PlaneGraph g = generate_instance(12, seed, GenKind::laman).graph;
    MatchingGraph h = build_matching_graph(g);
    CHECK(h.num_right() == 3 * g.n - 3 - g.m());
    CHECK(h.num_right() == h.num_left());
    CptLabeling lab = assign_cpt(g);
    CHECK(validate_cpt(g, lab).ok());
  }
  for (std::uint64_t seed : {24ULL, 25ULL}) {
    PlaneGraph g = generate_instance(9, seed, GenKind::circuit).graph;
    MatchingGraph h = build_matching_graph(g, 3);
    CHECK(h.num_right() == 3 * g.n - 3 - g.m());
    CptLabeling lab = assign_cpt(g, 3);
    CptReport rep = validate_cpt(g, lab);
    CHECK(rep.ok());
    CHECK(rep.non_pointed == std::vector<int>{3});
  }
}

TEST_CASE("corner_stats on hand-checked subsets") {
  PlaneGraph g = fx::pendant5();
  CptLabeling lab = fx::pendant5_labeling(g);

  SubgraphCornerStats s = corner_stats(g, lab, {0, 1, 3, 4});
  CHECK(s.m == 4);
  CHECK(s.k == 4);
  CHECK(s.l == 0);
  CHECK(s.b == 3);
  CHECK(s.b0 == 3);
  CHECK(s.c1 == 2);
  CHECK(s.c2 == 0);
  CHECK(s.c1_formula == 2);
  CHECK(s.c1 == s.c1_formula);

  SubgraphCornerStats w = corner_stats(g, lab, {0, 1, 2, 3, 4});
  CHECK(w.m == 7);
  CHECK(w.k == 5);
  CHECK(w.b == 3);
  CHECK(w.c1 == 3);
  CHECK(w.c1_formula == 3);

  PlaneGraph q = fx::quad4();
  CptLabeling ql = fx::quad4_labeling(q);
  SubgraphCornerStats t = corner_stats(q, ql, {0, 1, 3});
  CHECK(t.m == 3);
  CHECK(t.c1 == 3);
  CHECK(t.c1_formula == 3);
  SubgraphCornerStats o = corner_stats(q, ql, {0, 1, 2, 3});
  CHECK(o.c1 == 3);
  CHECK(fx::code_of([&] { corner_stats(q, ql, {0, 1, 2}); }) ==
        ErrorCode::NotSimplyConnected);  // outer triangle encloses vertex 3

  CHECK(fx::code_of([&] { corner_stats(g, lab, {0, 1, 3}); }) ==
        ErrorCode::NotSimplyConnected);  // hole: vertex 4 enclosed
  CHECK(fx::code_of([&] { corner_stats(g, lab, {2, 4}); }) ==
        ErrorCode::DisconnectedSubset);
  CHECK(fx::code_of([&] { corner_stats(g, lab, {}); }) ==
        ErrorCode::EmptySubset);
}

TEST_CASE("check_all_subgraph_corners") {
  PlaneGraph q = fx::quad4();
  CHECK(check_all_subgraph_corners(q, fx::quad4_labeling(q)));
  PlaneGraph p = fx::pendant5();
  CHECK_FALSE(check_all_subgraph_corners(p, fx::pendant5_labeling(p)));
  CHECK(fx::code_of([&] {
          check_all_subgraph_corners(q, fx::quad4_labeling(q), 3);
        }) == ErrorCode::TooLarge);
}

TEST_CASE("matchings and labelings enumerate the same set") {
  PlaneGraph g = fx::quad4();
  MatchingGraph h = build_matching_graph(g);
  auto maps = fx::all_matching_maps(h);
  auto labs = fx::all_valid_labelings(g, h, {});
  CHECK(maps.size() == 1);
  CHECK(maps == labs);

  PlaneGraph k = fx::k4();
  MatchingGraph hk = build_matching_graph(k, 3);
  auto mk = fx::all_matching_maps(hk);
  auto lk = fx::all_valid_labelings(k, hk, {3});
  CHECK(!mk.empty());
  CHECK(mk == lk);
}

TEST_CASE("extend_cpt_step from the triangle to quad4 is forced") {
  PlaneGraph t = fx::tri();
  CptLabeling tl;
  tl.big.assign(2 * t.m(), 0);
  tl.big[t.dart(1, 0)] = 1;
  tl.big[t.dart(0, 2)] = 1;
  tl.big[t.dart(2, 1)] = 1;
  REQUIRE(validate_cpt(t, tl).ok());

  HennebergStep st;
  st.kind = StepKind::I;
  st.v = 3;
  st.nbrs = {0, 1};
  st.pred = {1, 2};
  st.outer_witness = {1, 0};

  PlaneGraph q = fx::quad4();
  CptLabeling got = extend_cpt_step(t, tl, q, st);
  CHECK(got.big == fx::quad4_labeling(q).big);
  CHECK(validate_cpt(q, got).ok());
}

TEST_CASE("extend_cpt_step tracks generated sequences") {
  for (std::uint64_t seed : {31ULL, 32ULL}) {
    Generated gen = generate_instance(10, seed, GenKind::laman);
    SequenceRunner run(gen.sequence, false);
    PlaneGraph cur = run.current_graph();
    CptLabeling lab = assign_cpt(cur);
    while (!run.done()) {
      StepContext cx = run.apply_next();
      PlaneGraph nxt = run.current_graph();
      lab = extend_cpt_step(cur, lab, nxt, *cx.step);
      CHECK(validate_cpt(nxt, lab).ok());
      cur = nxt;
    }
    CHECK(cur.n == 10);
  }
  for (std::uint64_t seed : {33ULL}) {
    Generated gen = generate_instance(8, seed, GenKind::circuit);
    SequenceRunner run(gen.sequence, false);
    PlaneGraph cur = run.current_graph();
    CptLabeling lab = assign_cpt(cur, 3);
    while (!run.done()) {
      StepContext cx = run.apply_next();
      PlaneGraph nxt = run.current_graph();
      lab = extend_cpt_step(cur, lab, nxt, *cx.step);
      CptReport rep = validate_cpt(nxt, lab);
      CHECK(rep.ok());
      CHECK(rep.non_pointed == std::vector<int>{3});
      cur = nxt;
    }
  }
}
