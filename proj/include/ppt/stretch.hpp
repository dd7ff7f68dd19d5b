#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ppt/cpt.hpp"
#include "ppt/plane_graph.hpp"
#include "ppt/verify_geom.hpp"

namespace ppt {

// Directed auxiliary graph used to stretch a combinatorial labeling into
// actual coordinates.  `dgraph` is the input graph plus the dissection
// diagonals (every interior face a triangle); the directed part lives in
// `out`/`w`.  Interior vertices with a big angle get exactly three
// out-edges: the two edges bounding the big angle plus the diagonal that
// splits it.  Interior vertices without a big angle point at all their
// original neighbors.  Boundary vertices have no out-edges.
struct AuxDigraph {
  PlaneGraph dgraph;
  std::vector<std::pair<int, int>> diagonals;  // added edges, u < v
  std::vector<char> boundary;                  // per vertex: on the outer walk
  std::vector<int> boundary_order;             // outer walk vertices, walk order
  std::vector<std::vector<int>> out;           // per vertex: out-neighbors
  std::vector<std::vector<double>> w;          // parallel positive weights
  std::vector<int> split_diagonal;             // partner of the big-angle diagonal, -1 if none
};

// weight_seed == 0 gives unit weights; otherwise weights are drawn
// uniformly from [0.5, 1.5] with splitmix64.
AuxDigraph build_aux_digraph(const PlaneGraph& g, const CptLabeling& lab,
                             std::uint64_t weight_seed = 0);

struct ConnectivityWitness {
  bool ok = true;
  int vertex = -1;                 // interior vertex with < 3 disjoint paths
  std::pair<int, int> cut{-1, -1};  // separating vertices (second may be -1)
};

// Every interior vertex needs three vertex-disjoint directed paths to the
// boundary for the equilibrium system to be uniquely solvable.
ConnectivityWitness check_boundary_3connectivity(const AuxDigraph& d);

struct TutteOptions {
  bool exact = false;          // dense rational elimination instead of sparse double
  double residual_tol = 1e-10;  // per-equation residual bound at unit diameter
};

// boundary_positions[i] is the location of d.boundary_order[i]; the walk is
// clockwise, so the positions must be strictly convex in clockwise order.
Embedding tutte_embed(const AuxDigraph& d,
                      const std::vector<RPoint>& boundary_positions,
                      const TutteOptions& opt = {});

struct StretchConfig {
  bool exact = false;
  std::uint64_t weight_seed = 0;  // 0 => unit weights on the first attempt
  int max_retries = 3;            // reseeded-weight retries after a bad embedding
  double residual_tol = 1e-10;
};

// Full pipeline: dissect, orient, solve, then re-derive the labeling from
// the coordinates and demand it matches the input exactly.
Embedding stretch_cpt(const PlaneGraph& g, const CptLabeling& lab,
                      const StretchConfig& cfg = {});

}  // namespace ppt
