#pragma once

#include <vector>

#include "ppt/cpt.hpp"
#include "ppt/geometry.hpp"
#include "ppt/plane_graph.hpp"

namespace ppt {

// Vertex coordinates, indexed by vertex id.
using Embedding = std::vector<RPoint>;

// True iff some ccw-consecutive pair of edges at v spans an angle > pi
// (exactly pi does not count).  Throws IsolatedVertex for degree 0.
bool is_pointed(const Embedding& pts, const PlaneGraph& g, int v);

// Exact check that no two edges share a point other than a common endpoint.
bool is_noncrossing(const Embedding& pts, const PlaneGraph& g);

// True iff around every vertex the embedded edge directions appear in
// strictly increasing ccw order matching g.rot (no repeated directions).
bool rotation_matches(const Embedding& pts, const PlaneGraph& g);

// Labels every angle big iff it is geometrically reflex.  Requires the
// coordinates to realize g's rotation system; throws FacesMismatch.
CptLabeling derive_labeling(const Embedding& pts, const PlaneGraph& g);

struct GeometricReport {
  bool non_crossing = false;
  bool rotation_ok = false;
  std::vector<char> pointed;      // per vertex
  std::vector<int> convex_count;  // per face: angles not reflex
  CptLabeling labeling;           // derived; empty if rotation_ok is false
  bool pseudo_triangulation = false;
  bool pointed_pseudo_triangulation = false;
  std::vector<int> non_pointed;
  // exact-pi (or coincident-direction) wedge seen somewhere: predicates on
  // the boundary of their domain, classification reported but flagged
  bool degenerate = false;
  std::vector<int> degenerate_vertices;
};

GeometricReport verify_geometry(const Embedding& pts, const PlaneGraph& g);

}  // namespace ppt
