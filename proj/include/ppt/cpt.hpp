#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ppt/henneberg.hpp"
#include "ppt/plane_graph.hpp"

namespace ppt {

// Big/small labels indexed by angle id (= incoming dart id).  At most one
// big per vertex is an axiom, not a representation invariant, so malformed
// labelings are expressible and can be validated.
struct CptLabeling {
  std::vector<char> big;  // size 2m, 1 = big

  bool is_big(int angle) const { return big[angle] != 0; }
  // dart id of v's unique big angle, -1 if none; BadSize if several
  int big_angle_of(const PlaneGraph& g, int v) const;
  bool pointed(const PlaneGraph& g, int v) const {
    return big_angle_of(g, v) >= 0;
  }
  std::vector<int> non_pointed(const PlaneGraph& g) const;
  // per face, the angle ids labeled small (the face's corners)
  std::vector<std::vector<int>> face_corners(const PlaneGraph& g) const;
};

// Bipartite assignment graph: one left node per (non-prescribed) vertex,
// d_f-3 right copies per interior face, h copies for the outer face.
struct MatchingGraph {
  std::vector<int> left_vertex;                 // left index -> vertex id
  std::vector<int> left_of;                     // vertex id -> left index / -1
  std::vector<std::pair<int, int>> right_face;  // right index -> (face, copy)
  std::vector<std::vector<int>> adj;            // left index -> right indices
  int num_left() const { return static_cast<int>(left_vertex.size()); }
  int num_right() const { return static_cast<int>(right_face.size()); }
};

MatchingGraph build_matching_graph(const PlaneGraph& g,
                                   std::optional<int> prescribed_nonpointed = {});

// Hopcroft-Karp maximum matching; returns per-left matched right index or -1.
std::vector<int> max_bipartite_matching(const MatchingGraph& h);

CptLabeling assign_cpt(const PlaneGraph& g,
                       std::optional<int> prescribed_nonpointed = {});

struct CptReport {
  bool small_triples = false;       // every interior face has exactly 3 smalls
  bool outer_all_big = false;       // outer face carries only bigs
  bool at_most_one_big = false;     // per vertex
  bool degree2_one_big = false;     // degree-2 vertices have exactly one big
  bool nonpointed_count_ok = false; // |non_pointed| == m - (2n-3)
  std::vector<int> non_pointed;
  bool ok() const {
    return small_triples && outer_all_big && at_most_one_big &&
           degree2_one_big && nonpointed_count_ok;
  }
};

CptReport validate_cpt(const PlaneGraph& g, const CptLabeling& lab);

struct SubgraphCornerStats {
  int m = 0;   // induced edges
  int k = 0;   // pointed vertices (status taken from the full labeling)
  int l = 0;   // non-pointed vertices
  int b = 0;   // boundary walk length
  int b0 = 0;  // distinct boundary vertices
  int c1 = 0;  // vertices whose big angle faces the unbounded region
  int c2 = 0;  // non-pointed vertices with >= 2 consecutive angles there
  int c1_formula = 0;  // m + 3 - 2k - 3l + b
};

// S must induce a connected subgraph containing everything enclosed by its
// boundary (fill_holes(S) == S); throws NotSimplyConnected otherwise.
SubgraphCornerStats corner_stats(const PlaneGraph& g, const CptLabeling& lab,
                                 const std::vector<int>& S);

// True iff every connected induced subgraph on >= 3 vertices has, after
// hole-filling, at least 3 corners (c1 + c2).  Exponential; TooLarge above
// n_limit.
bool check_all_subgraph_corners(const PlaneGraph& g, const CptLabeling& lab,
                                int n_limit = 12);

// Extends a labeling across one insertion step.  `before` and `after` share
// vertex ids; `after` has exactly the extra vertex step.v == before.n.
// Labels away from the touched face are kept; at each attachment the old
// angle's label splits (a big goes to exactly one side), the new vertex
// receives exactly one big, and the touched faces must satisfy the axioms.
// Among valid extensions the lexicographically first is returned (slots
// ordered by vertex then face, small before big).
CptLabeling extend_cpt_step(const PlaneGraph& before, const CptLabeling& lab,
                            const PlaneGraph& after, const HennebergStep& step);

}  // namespace ppt
