#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ppt/geometry.hpp"
#include "ppt/henneberg.hpp"
#include "ppt/verify_geom.hpp"

namespace ppt {

// Admissible placements seen from one anchor vertex of a face: the
// two-dimensional part as convex ccw cells (visibility from the anchor,
// further cut to a double wedge when the anchor's angle on the face is
// reflex), plus a one-dimensional leftover on the supporting line when the
// anchor's two face edges are exactly collinear.
struct TangencyWedge {
  std::vector<std::vector<RPoint>> cells;
  std::vector<std::pair<RPoint, RPoint>> segments;
};

// face: interior (ccw) walk as (tail, head) vertex pairs.
TangencyWedge tangency_wedge(const Embedding& pts,
                             const std::vector<std::pair<int, int>>& face,
                             int anchor);

struct FeasibleRegion {
  std::vector<RPoint> face;             // walk polygon, ccw
  std::vector<int> anchors;
  std::vector<TangencyWedge> wedges;    // one per anchor
  std::vector<std::vector<RPoint>> cells;  // intersection of all wedges
  // cells minus placements that would bury the new vertex inside the hull
  // of its neighbors (equal to `cells` for two anchors)
  std::vector<std::vector<RPoint>> pointed_cells;
};

FeasibleRegion feasible_region1(const Embedding& pts,
                                const std::vector<std::pair<int, int>>& face,
                                int v1, int v2);
FeasibleRegion feasible_region2(const Embedding& pts,
                                const std::vector<std::pair<int, int>>& face,
                                std::pair<int, int> removed_edge, int vk);

// Choose and exactly verify a location for a new degree-2 / degree-3
// vertex inside the face.  Throw NoPlacement if no verified point exists.
RPoint place_henneberg1(const Embedding& pts,
                        const std::vector<std::pair<int, int>>& face, int v1,
                        int v2, std::uint64_t seed = 0);
RPoint place_henneberg2(const Embedding& pts,
                        const std::vector<std::pair<int, int>>& face,
                        std::pair<int, int> removed_edge, int vk,
                        std::uint64_t seed = 0);

// Realize a whole sequence geometrically, one interior insertion at a
// time.  base_triangle[i] is the location of the i-th base vertex in
// sorted order; the base must be a triangle and every step must insert
// into an interior face (SequenceNotInteriorOnly otherwise).  Returned
// coordinates are indexed by the sequence's original vertex ids.
Embedding embed_incremental(const HennebergSequence& seq,
                            const std::vector<RPoint>& base_triangle,
                            std::uint64_t seed = 0);

// exact polygon helpers shared with the geometric tests
// keep the closed side left of a->b
std::vector<RPoint> clip_halfplane(const std::vector<RPoint>& poly,
                                   const RPoint& a, const RPoint& b);
// walk -> ccw polygon of the walk heads; validates the pair chain
std::vector<RPoint> face_polygon(const Embedding& pts,
                                 const std::vector<std::pair<int, int>>& face,
                                 std::vector<int>* ids = nullptr);

}  // namespace ppt
