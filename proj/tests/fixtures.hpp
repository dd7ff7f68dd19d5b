#pragma once

// Hand-checked fixture graphs shared by the test binaries.

#include <optional>
#include <vector>

#include "ppt/cpt.hpp"
#include "ppt/error.hpp"
#include "ppt/plane_graph.hpp"

namespace fx {

// Error code thrown by f, or nullopt if it returned normally.
template <typename F>
std::optional<ppt::ErrorCode> code_of(F&& f) {
  try {
    f();
  } catch (const ppt::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

// Plain triangle, outer face {0,1,2}.
inline ppt::PlaneGraph tri() {
  return ppt::build_plane_graph(3, {{0, 1}, {0, 2}, {1, 2}},
                                {{1, 2}, {2, 0}, {0, 1}}, {1, 2, 0});
}

// K4 with vertex 3 inside the outer triangle {0,1,2}.
inline ppt::PlaneGraph k4() {
  return ppt::build_plane_graph(
      4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}},
      {{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {0, 1, 2}}, {1, 2, 0});
}

// Triangle {0,1,2} with vertex 3 inside, joined to 0 and 1; the inner
// region splits into the triangle {0,1,3} and a quadrilateral walk
// 1,2,0,3.  Laman (n=4, m=5), one vertex short of a triangulation.
inline ppt::PlaneGraph quad4() {
  return ppt::build_plane_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}},
                                {{1, 3, 2}, {2, 3, 0}, {0, 1}, {0, 1}},
                                {1, 2, 0});
}

// The unique valid labeling of quad4: outer angles big, plus the reflex
// angle of vertex 3 inside the quadrilateral face.
inline ppt::CptLabeling quad4_labeling(const ppt::PlaneGraph& g) {
  ppt::CptLabeling lab;
  lab.big.assign(2 * g.m(), 0);
  lab.big[g.dart(1, 0)] = 1;
  lab.big[g.dart(0, 2)] = 1;
  lab.big[g.dart(2, 1)] = 1;
  lab.big[g.dart(0, 3)] = 1;
  return lab;
}

// quad4 plus vertex 4 inside the quadrilateral face, joined to 2 and 3.
// Laman, triangular outer face, and all three outer vertices have degree
// 3, so the outer triangle can serve as a peeling base.
inline ppt::PlaneGraph pt5() {
  return ppt::build_plane_graph(
      5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}, {3, 4}},
      {{1, 3, 2}, {2, 3, 0}, {0, 4, 1}, {0, 1, 4}, {2, 3}}, {1, 2, 0});
}

// quad4 with vertex 4 inside the triangle {0,1,3}, joined to all three of
// its corners.  Laman-plus-one (the circuit is the K4 on {0,1,3,4});
// vertex 4 sees only triangular faces, so no labeling can keep it pointed
// while some other vertex goes non-pointed.
inline ppt::PlaneGraph tripatch5() {
  return ppt::build_plane_graph(
      5,
      {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {3, 4}},
      {{1, 4, 3, 2}, {2, 3, 4, 0}, {0, 1}, {0, 4, 1}, {3, 0, 1}}, {1, 2, 0});
}

// K4 on {0,1,2,3} with a pendant vertex 4 attached to 3, the pendant edge
// poking into the face bounded by {0,1,3}.  m = 2n-3 but not Laman (the K4
// is overbraced while 4 dangles).
inline ppt::PlaneGraph pendant5() {
  return ppt::build_plane_graph(
      5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}},
      {{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {0, 4, 1, 2}, {3}}, {1, 2, 0});
}

// An all-pointed labeling of pendant5 satisfying the angle axioms: outer
// angles big, vertex 3 big toward the pendant slit, vertex 4's full turn
// big.
inline ppt::CptLabeling pendant5_labeling(const ppt::PlaneGraph& g) {
  ppt::CptLabeling lab;
  lab.big.assign(2 * g.m(), 0);
  lab.big[g.dart(1, 0)] = 1;
  lab.big[g.dart(0, 2)] = 1;
  lab.big[g.dart(2, 1)] = 1;
  lab.big[g.dart(4, 3)] = 1;
  lab.big[g.dart(3, 4)] = 1;
  return lab;
}

}  // namespace fx
