#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ppt/error.hpp"

namespace ppt {

// A connected plane graph given by counterclockwise rotation lists.
//
// Edges are stored with u < v, sorted lexicographically.  A dart is a
// directed edge: dart 2e runs lo->hi of edge e, dart 2e+1 runs hi->lo.
// Faces are the orbits of d -> next_dart(d), where next of (u->v) is
// (v->w) with w the ccw-predecessor of u in rot[v].  Every face walk has
// the face on its LEFT; interior faces come out ccw, the outer face cw.
//
// An angle (wedge at a vertex between two rotation-consecutive edges) is
// identified with its incoming dart: angle a sits at head(a) between the
// rays toward ccw_pred(head, tail) and toward tail.
struct PlaneGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> rot;

  std::vector<std::vector<int>> faces;  // dart walks; each starts at its min dart
  int outer_face = -1;
  std::vector<int> face_of;      // dart -> face id
  std::vector<int> pos_in_face;  // dart -> index in its face walk

  int m() const { return static_cast<int>(edges.size()); }
  int num_faces() const { return static_cast<int>(faces.size()); }
  int degree(int v) const { return static_cast<int>(rot[v].size()); }

  bool has_edge(int u, int v) const { return edge_id(u, v) >= 0; }
  int edge_id(int u, int v) const;  // -1 if absent
  int dart(int u, int v) const;     // throws DegenerateGraph if absent

  int dart_tail(int d) const {
    const auto& e = edges[d >> 1];
    return (d & 1) ? e.second : e.first;
  }
  int dart_head(int d) const {
    const auto& e = edges[d >> 1];
    return (d & 1) ? e.first : e.second;
  }
  static int dart_rev(int d) { return d ^ 1; }

  int rot_index(int v, int nbr) const;  // position of nbr in rot[v]
  int ccw_succ(int v, int nbr) const;
  int ccw_pred(int v, int nbr) const;

  int next_dart(int d) const;  // face-walk successor
  int prev_dart(int d) const;

  int angle_vertex(int a) const { return dart_head(a); }
  // (w, u): the wedge spans ccw from the ray toward w to the ray toward u,
  // where u = tail(a) and w = ccw_pred(head, u).  For degree-1 vertices
  // w == u and the wedge is the full turn.
  std::pair<int, int> angle_wedge(int a) const;
  // angle ids at v in rotation order: incoming dart from rot[v][i]
  std::vector<int> angles_at(int v) const;

  std::vector<int> face_vertices(int f) const;  // heads of the walk darts

 private:
  std::vector<std::unordered_map<int, int>> ridx_;  // neighbor -> rot position
  std::unordered_map<std::int64_t, int> eidx_;      // packed (u,v) -> edge id
  friend PlaneGraph build_plane_graph(int, std::vector<std::pair<int, int>>,
                                      std::vector<std::vector<int>>,
                                      const std::vector<int>&);
};

// Validates and builds: simple connected graph, rot[v] a permutation of
// v's neighbors, Euler count n - m + f == 2, and an outer face matching
// the hint (exact cyclic walk in either direction preferred, unique
// vertex-set match as fallback).
PlaneGraph build_plane_graph(int n, std::vector<std::pair<int, int>> edges,
                             std::vector<std::vector<int>> rot,
                             const std::vector<int>& outer_hint);

// Derives the edge list from the rotations.
PlaneGraph build_plane_graph(int n, std::vector<std::vector<int>> rot,
                             const std::vector<int>& outer_hint);

// Connected components of the induced subgraph on S (each sorted; ordered
// by smallest member).
std::vector<std::vector<int>> induced_components(const PlaneGraph& g,
                                                 const std::vector<int>& S);

// Adds to S every vertex lying strictly inside the contour of the induced
// subgraph (vertices of faces not reachable from the outer face without
// crossing induced edges).  S must induce a connected subgraph.
// Returns the filled set, sorted.
std::vector<int> fill_holes(const PlaneGraph& g, const std::vector<int>& S);

struct BoundaryCycle {
  std::vector<int> darts;          // contour walk (empty for an isolated vertex)
  std::vector<int> walk_vertices;  // heads of the walk darts, with repeats
  int b = 0;                       // walk length
  int b0 = 0;                      // distinct vertices on the walk
};

// Contour of each connected component of the induced subgraph on S, traced
// with the unbounded region on the left (cw, like the outer face).
std::vector<BoundaryCycle> induced_boundary_cycles(const PlaneGraph& g,
                                                   const std::vector<int>& S);

// Same embedded graph: equal vertex count and edges, cyclically equal
// rotations at every vertex, and the same outer face walk (up to cyclic
// shift).  Face numbering is allowed to differ.
bool same_plane_graph(const PlaneGraph& a, const PlaneGraph& b);

}  // namespace ppt
