#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ppt/error.hpp"
#include "ppt/incremental.hpp"
#include "ppt/rng.hpp"

namespace ppt {

namespace {

struct FaceCtx {
  std::vector<int> ids;
  std::vector<RPoint> poly;
  std::vector<int> apos;  // walk position per anchor, anchor order
};

FaceCtx make_ctx(const Embedding& pts,
                 const std::vector<std::pair<int, int>>& face,
                 const std::vector<int>& anchors) {
  FaceCtx c;
  c.poly = face_polygon(pts, face, &c.ids);
  for (int a : anchors) {
    int pos = -1;
    for (int i = 0; i < static_cast<int>(c.ids.size()); ++i)
      if (c.ids[i] == a) {
        if (pos >= 0)
          throw Error(ErrorCode::AnchorNotOnFace,
                      "anchor appears more than once on the face walk");
        pos = i;
      }
    if (pos < 0)
      throw Error(ErrorCode::AnchorNotOnFace,
                  "anchor " + std::to_string(a) + " is not on the face");
    c.apos.push_back(pos);
  }
  return c;
}

int count_corners(const std::vector<RPoint>& q) {
  const int k = static_cast<int>(q.size());
  int c = 0;
  for (int i = 0; i < k; ++i)
    if (cross3(q[(i + k - 1) % k], q[i], q[(i + 1) % k]) > 0) ++c;
  return c;
}

// Full exact acceptance test for one placement: inside the face, sees every
// anchor, keeps every anchor pointed, stays pointed itself, avoids flat
// angles, and splits the face into pseudo-triangles.
bool placement_valid(const FaceCtx& c, const RPoint& p) {
  const int k = static_cast<int>(c.poly.size());
  if (!point_strictly_inside_simple(c.poly, p)) return false;

  std::vector<RPoint> dirs;
  for (int t = 0; t < static_cast<int>(c.apos.size()); ++t) {
    int pos = c.apos[t];
    const RPoint& A = c.poly[pos];
    RPoint eo = c.poly[(pos + 1) % k] - A;
    RPoint ei = c.poly[(pos + k - 1) % k] - A;
    RPoint d = p - A;
    dirs.push_back(d);
    Rat co = cross(eo, d);
    Rat ci = cross(d, ei);
    if (co == 0 || ci == 0) return false;  // flat sub-angle at the anchor
    Rat cls = cross(eo, ei);
    if (cls == 0 && dot(eo, ei) > 0) return false;
    if (cls < 0 && !(co < 0 || ci < 0)) return false;  // anchor would unpoint
    for (int e = 0; e < k; ++e)
      if (segments_cross_improperly(p, A, c.poly[e], c.poly[(e + 1) % k]))
        return false;
    for (int w = 0; w < k; ++w)
      if (w != pos && on_segment(p, A, c.poly[w])) return false;
  }

  if (dirs.size() == 2) {
    if (cross(dirs[0], dirs[1]) == 0) return false;
  } else {
    Rat s1 = cross(dirs[0], dirs[1]);
    Rat s2 = cross(dirs[1], dirs[2]);
    Rat s3 = cross(dirs[2], dirs[0]);
    if (s1 == 0 || s2 == 0 || s3 == 0) return false;
    if ((s1 > 0 && s2 > 0 && s3 > 0) || (s1 < 0 && s2 < 0 && s3 < 0))
      return false;  // buried inside the neighbor hull
  }

  // each boundary chain between consecutive anchors, closed through p,
  // must come out with exactly three convex vertices
  std::vector<int> order = c.apos;
  std::sort(order.begin(), order.end());
  const int na = static_cast<int>(order.size());
  for (int t = 0; t < na; ++t) {
    std::vector<RPoint> chain;
    for (int i = order[t];; i = (i + 1) % k) {
      chain.push_back(c.poly[i]);
      if (i == order[(t + 1) % na]) break;
    }
    chain.push_back(p);
    if (count_corners(chain) != 3) return false;
  }
  return true;
}

RPoint cell_centroid(const std::vector<RPoint>& cell) {
  RPoint s{0, 0};
  for (const RPoint& v : cell) s = s + v;
  Rat inv = Rat(1) / Rat(static_cast<int>(cell.size()));
  return {s.x * inv, s.y * inv};
}

RPoint place_from_region(const FeasibleRegion& r,
                         const std::optional<std::pair<RPoint, RPoint>>& axis,
                         std::uint64_t seed,
                         const std::function<bool(const RPoint&)>& good) {
  std::vector<int> order(r.pointed_cells.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return rat_to_double(polygon_double_area(r.pointed_cells[a])) >
           rat_to_double(polygon_double_area(r.pointed_cells[b]));
  });
  auto attempt = [&](const RPoint& q) -> std::optional<RPoint> {
    for (unsigned bits : {24u, 48u}) {
      RPoint sq{snap_dyadic(q.x, bits), snap_dyadic(q.y, bits)};
      if (good(sq)) return sq;
    }
    if (good(q)) return q;
    return std::nullopt;
  };
  for (int ci : order) {
    const auto& cell = r.pointed_cells[ci];
    RPoint cen = cell_centroid(cell);
    if (auto got = attempt(cen)) return *got;
    if (axis) {
      // aim just off the supporting line of the removed edge
      RPoint u = axis->first, v = axis->second;
      RPoint dir = v - u;
      RPoint a{u.x - dir.x * 4, u.y - dir.y * 4};
      RPoint b{v.x + dir.x * 4, v.y + dir.y * 4};
      const int kc = static_cast<int>(cell.size());
      bool alive = true;
      for (int e = 0; e < kc && alive; ++e) {
        Rat fa = cross3(cell[e], cell[(e + 1) % kc], a);
        Rat fb = cross3(cell[e], cell[(e + 1) % kc], b);
        if (fa < 0 && fb < 0) alive = false;
        else if (fa < 0) a = {a.x + fa / (fa - fb) * (b.x - a.x),
                              a.y + fa / (fa - fb) * (b.y - a.y)};
        else if (fb < 0) b = {b.x + fb / (fb - fa) * (a.x - b.x),
                              b.y + fb / (fb - fa) * (a.y - b.y)};
      }
      if (alive) {
        RPoint m{(a.x + b.x) / 2, (a.y + b.y) / 2};
        RPoint q{m.x + (cen.x - m.x) / 8, m.y + (cen.y - m.y) / 8};
        if (auto got = attempt(q)) return *got;
      }
    }
    std::uint64_t st = seed ^ (0x5bf03635u + 0x9e3779b9u * static_cast<std::uint64_t>(ci));
    for (int t = 0; t < 24; ++t) {
      Rat sx = 0, sy = 0, tot = 0;
      for (const RPoint& v : cell) {
        Rat lam(1 + rng_below(st, 997));
        sx += lam * v.x;
        sy += lam * v.y;
        tot += lam;
      }
      if (auto got = attempt({sx / tot, sy / tot})) return *got;
    }
  }
  throw Error(ErrorCode::NoPlacement,
              "no verified placement in the feasible region");
}

}  // namespace

RPoint place_henneberg1(const Embedding& pts,
                        const std::vector<std::pair<int, int>>& face, int v1,
                        int v2, std::uint64_t seed) {
  FeasibleRegion r = feasible_region1(pts, face, v1, v2);
  FaceCtx ctx = make_ctx(pts, face, {v1, v2});
  return place_from_region(
      r, std::nullopt, seed,
      [&](const RPoint& q) { return placement_valid(ctx, q); });
}

RPoint place_henneberg2(const Embedding& pts,
                        const std::vector<std::pair<int, int>>& face,
                        std::pair<int, int> removed_edge, int vk,
                        std::uint64_t seed) {
  FeasibleRegion r = feasible_region2(pts, face, removed_edge, vk);
  FaceCtx ctx = make_ctx(pts, face, {removed_edge.first, removed_edge.second, vk});
  auto axis = std::make_optional(
      std::make_pair(pts[removed_edge.first], pts[removed_edge.second]));
  return place_from_region(
      r, axis, seed, [&](const RPoint& q) { return placement_valid(ctx, q); });
}

Embedding embed_incremental(const HennebergSequence& seq0,
                            const std::vector<RPoint>& base_triangle,
                            std::uint64_t seed) {
  if (base_triangle.size() != 3)
    throw Error(ErrorCode::BadSize, "need exactly three base coordinates");
  std::vector<int> orig_of;
  HennebergSequence seq = normalize_sequence_ids(seq0, &orig_of);
  if (seq.base.vertices.size() != 3)
    throw Error(ErrorCode::SequenceNotInteriorOnly,
                "base graph must be a triangle");

  SequenceRunner run(seq, false);
  Embedding pts(seq.id_space);
  for (int i = 0; i < 3; ++i) pts[i] = base_triangle[i];
  {
    PlaneGraph g0 = run.current_graph();
    int inner = g0.outer_face == 0 ? 1 : 0;
    auto fv = g0.face_vertices(inner);
    if (orientation(pts[fv[0]], pts[fv[1]], pts[fv[2]]) <= 0)
      throw Error(ErrorCode::DegenerateGraph,
                  "base coordinates must wind the interior face "
                  "counterclockwise");
  }

  std::uint64_t stream = seed;
  while (!run.done()) {
    StepContext cx = run.apply_next();
    if (cx.insertion_face_is_outer)
      throw Error(ErrorCode::SequenceNotInteriorOnly,
                  "step " + std::to_string(cx.index) +
                      " inserts into the outer face");
    const HennebergStep& st = *cx.step;
    std::uint64_t sub = splitmix64(stream);
    if (st.kind == StepKind::I) {
      pts[st.v] = place_henneberg1(pts, cx.insertion_face, st.nbrs[0],
                                   st.nbrs[1], sub);
    } else {
      int vk = -1;
      for (int u : st.nbrs)
        if (u != st.split_edge.first && u != st.split_edge.second) vk = u;
      if (vk < 0)
        throw Error(ErrorCode::StepInconsistent,
                    "edge-splitting step lacks a third neighbor");
      pts[st.v] = place_henneberg2(pts, cx.insertion_face, st.split_edge, vk,
                                   sub);
    }
  }

  Embedding out(seq.id_space);
  for (int i = 0; i < seq.id_space; ++i) out[orig_of[i]] = pts[i];
  return out;
}

}  // namespace ppt
