#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ppt/error.hpp"
#include "ppt/incremental.hpp"

namespace ppt {

std::vector<RPoint> clip_halfplane(const std::vector<RPoint>& poly,
                                   const RPoint& a, const RPoint& b) {
  const int k = static_cast<int>(poly.size());
  std::vector<RPoint> out;
  for (int i = 0; i < k; ++i) {
    const RPoint& p = poly[i];
    const RPoint& q = poly[(i + 1) % k];
    Rat fp = cross3(a, b, p);
    Rat fq = cross3(a, b, q);
    if (fp >= 0) out.push_back(p);
    if ((fp >= 0) != (fq >= 0)) {
      Rat t = fp / (fp - fq);
      out.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
    }
  }
  std::vector<RPoint> ded;
  for (const RPoint& p : out)
    if (ded.empty() || !(ded.back() == p)) ded.push_back(p);
  while (ded.size() > 1 && ded.front() == ded.back()) ded.pop_back();
  if (ded.size() < 3) return {};
  return ded;
}

std::vector<RPoint> face_polygon(const Embedding& pts,
                                 const std::vector<std::pair<int, int>>& face,
                                 std::vector<int>* ids) {
  const int k = static_cast<int>(face.size());
  if (k < 3) throw Error(ErrorCode::BadSize, "face walk needs at least three darts");
  std::vector<RPoint> poly(k);
  if (ids) ids->assign(k, -1);
  for (int i = 0; i < k; ++i) {
    int v = face[i].second;
    if (face[(i + 1) % k].first != v)
      throw Error(ErrorCode::BadSize, "face walk is not a closed dart chain");
    if (v < 0 || v >= static_cast<int>(pts.size()))
      throw Error(ErrorCode::BadSize, "face walk vertex out of range");
    poly[i] = pts[v];
    if (ids) (*ids)[i] = v;
  }
  return poly;
}

namespace {

RPoint lerp(const RPoint& p, const RPoint& q, const Rat& t) {
  return {p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)};
}

// Convex cells (disjoint interiors) jointly covering the set of points of
// the polygon weakly visible from poly[apex]: an exact angular sweep.  The
// interior cone at the apex is cut at every direction toward another
// vertex; between consecutive cuts the first-hit boundary edge is constant,
// so the visible piece is the triangle spanned by the two cut rays and that
// edge's supporting line.
std::vector<std::vector<RPoint>> visibility_cells(
    const std::vector<RPoint>& poly, int apex) {
  const int k = static_cast<int>(poly.size());
  const RPoint A = poly[apex];
  const RPoint eo = poly[(apex + 1) % k] - A;
  const RPoint ei = poly[(apex + k - 1) % k] - A;
  const Rat cls = cross(eo, ei);

  auto in_cone = [&](const RPoint& d) {
    if (cls > 0) return cross(eo, d) >= 0 && cross(d, ei) >= 0;
    return !(cross(ei, d) > 0 && cross(d, eo) > 0);
  };
  // half-turn buckets from eo, so directions sort ccw starting at eo
  auto bucket = [&](const RPoint& d) {
    Rat cr = cross(eo, d);
    if (cr > 0) return 1;
    if (cr < 0) return 3;
    return dot(eo, d) > 0 ? 0 : 2;
  };
  auto angle_less = [&](const RPoint& a, const RPoint& b) {
    int ba = bucket(a), bb = bucket(b);
    if (ba != bb) return ba < bb;
    if (ba == 0 || ba == 2) return false;
    return cross(a, b) > 0;
  };

  std::vector<RPoint> dirs{eo, ei};
  for (int i = 0; i < k; ++i) {
    if (i == apex) continue;
    RPoint d = poly[i] - A;
    if ((d.x == 0 && d.y == 0) || !in_cone(d)) continue;
    dirs.push_back(d);
  }
  // quarter-turn splitters keep every sector narrower than a half turn
  for (const RPoint& d : {RPoint{-eo.y, eo.x}, RPoint{-eo.x, -eo.y},
                          RPoint{eo.y, -eo.x}})
    if (in_cone(d)) dirs.push_back(d);
  std::sort(dirs.begin(), dirs.end(), angle_less);
  dirs.erase(std::unique(dirs.begin(), dirs.end(),
                         [&](const RPoint& a, const RPoint& b) {
                           return !angle_less(a, b) && !angle_less(b, a);
                         }),
             dirs.end());

  const int e_out = apex;               // edge apex -> apex+1
  const int e_in = (apex + k - 1) % k;  // edge apex-1 -> apex
  // supporting-line hit of the ray A + t*d, t > 0
  auto line_hit = [&](int e, const RPoint& d) -> std::optional<Rat> {
    const RPoint& p = poly[e];
    const RPoint& q = poly[(e + 1) % k];
    Rat den = cross(q - p, d);
    if (den == 0) return std::nullopt;
    Rat t = cross(q - p, A - p) / -den;
    if (t <= 0) return std::nullopt;
    return t;
  };

  std::vector<std::vector<RPoint>> cells;
  for (std::size_t s = 0; s + 1 < dirs.size(); ++s) {
    const RPoint& d1 = dirs[s];
    const RPoint& d2 = dirs[s + 1];
    if (cross(d1, d2) <= 0) continue;
    RPoint dm = d1 + d2;  // strictly inside the sector
    int best = -1;
    Rat best_t;
    for (int e = 0; e < k; ++e) {
      if (e == e_out || e == e_in) continue;
      std::optional<Rat> t = line_hit(e, dm);
      if (!t || !on_segment(poly[e], poly[(e + 1) % k], lerp(A, A + dm, *t)))
        continue;
      if (best < 0 || *t < best_t) {
        best = e;
        best_t = *t;
      }
    }
    if (best < 0) continue;
    std::optional<Rat> t1 = line_hit(best, d1);
    std::optional<Rat> t2 = line_hit(best, d2);
    if (!t1 || !t2) continue;
    std::vector<RPoint> cell{A, lerp(A, A + d1, *t1), lerp(A, A + d2, *t2)};
    if (polygon_double_area(cell) > 0) cells.push_back(std::move(cell));
  }
  return cells;
}

bool inside_or_on(const std::vector<RPoint>& poly, const RPoint& q) {
  return point_on_polygon_boundary(poly, q) ||
         point_strictly_inside_simple(poly, q);
}

// maximal prefix of the ray poly[i] + t*dir (t > 0) staying in the closed
// polygon
std::optional<std::pair<RPoint, RPoint>> ray_inside(
    const std::vector<RPoint>& poly, int i, const RPoint& dir) {
  const int k = static_cast<int>(poly.size());
  const RPoint A = poly[i];
  const Rat dd = dot(dir, dir);
  if (dd == 0) return std::nullopt;
  std::vector<Rat> ts;
  for (int e = 0; e < k; ++e) {
    const RPoint& p = poly[e];
    const RPoint& q = poly[(e + 1) % k];
    Rat den = cross(q - p, dir);
    if (den != 0) {
      Rat t = cross(q - p, A - p) / -den;
      if (t > 0 && on_segment(p, q, lerp(A, A + dir, t))) ts.push_back(t);
    } else if (cross3(p, q, A) == 0) {
      Rat tp = dot(p - A, dir) / dd;
      Rat tq = dot(q - A, dir) / dd;
      if (tp > 0) ts.push_back(tp);
      if (tq > 0) ts.push_back(tq);
    }
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  Rat reach = 0;
  Rat prev = 0;
  for (const Rat& t : ts) {
    RPoint mid = lerp(A, A + dir, (prev + t) / 2);
    if (!inside_or_on(poly, mid)) break;
    reach = t;
    prev = t;
  }
  if (reach == 0) return std::nullopt;
  return std::make_pair(A, lerp(A, A + dir, reach));
}

void push_cell(std::vector<std::vector<RPoint>>& cells,
               std::vector<RPoint> c) {
  if (c.size() >= 3 && polygon_double_area(c) > 0) cells.push_back(std::move(c));
}

std::vector<std::vector<RPoint>> intersect_cells(
    const std::vector<std::vector<RPoint>>& as,
    const std::vector<std::vector<RPoint>>& bs) {
  std::vector<std::vector<RPoint>> out;
  for (const auto& a : as)
    for (const auto& b : bs) {
      std::vector<RPoint> c = a;
      const int kb = static_cast<int>(b.size());
      for (int e = 0; e < kb && !c.empty(); ++e)
        c = clip_halfplane(c, b[e], b[(e + 1) % kb]);
      push_cell(out, std::move(c));
    }
  return out;
}

std::vector<std::vector<RPoint>> subtract_triangle(
    const std::vector<std::vector<RPoint>>& cells, RPoint t0, RPoint t1,
    RPoint t2) {
  if (cross3(t0, t1, t2) == 0) return cells;  // flat: nothing 2-D to remove
  if (cross3(t0, t1, t2) < 0) std::swap(t1, t2);
  const RPoint tri[3] = {t0, t1, t2};
  std::vector<std::vector<RPoint>> out;
  for (const auto& cell : cells) {
    std::vector<RPoint> rest = cell;
    for (int e = 0; e < 3 && !rest.empty(); ++e) {
      push_cell(out, clip_halfplane(rest, tri[(e + 1) % 3], tri[e]));
      rest = clip_halfplane(rest, tri[e], tri[(e + 1) % 3]);
    }
  }
  return out;
}

struct AnchorFrame {
  int pos;       // walk index
  RPoint a, p, n;  // anchor, previous and next walk vertices
};

AnchorFrame anchor_frame(const std::vector<RPoint>& poly,
                         const std::vector<int>& ids, int anchor) {
  const int k = static_cast<int>(poly.size());
  int pos = -1;
  for (int i = 0; i < k; ++i)
    if (ids[i] == anchor) {
      if (pos >= 0)
        throw Error(ErrorCode::AnchorNotOnFace,
                    "anchor " + std::to_string(anchor) +
                        " appears more than once on the face walk");
      pos = i;
    }
  if (pos < 0)
    throw Error(ErrorCode::AnchorNotOnFace,
                "anchor " + std::to_string(anchor) + " is not on the face");
  return {pos, poly[pos], poly[(pos + k - 1) % k], poly[(pos + 1) % k]};
}

}  // namespace

TangencyWedge tangency_wedge(const Embedding& pts,
                             const std::vector<std::pair<int, int>>& face,
                             int anchor) {
  std::vector<int> ids;
  std::vector<RPoint> poly = face_polygon(pts, face, &ids);
  if (polygon_double_area(poly) <= 0)
    throw Error(ErrorCode::DegenerateGraph,
                "face polygon must be counterclockwise with positive area");
  AnchorFrame fr = anchor_frame(poly, ids, anchor);
  RPoint eo = fr.n - fr.a;  // outgoing face edge
  RPoint ei = fr.p - fr.a;  // incoming face edge
  Rat cls = cross(eo, ei);
  TangencyWedge w;
  if (cls == 0) {
    if (dot(eo, ei) > 0)
      throw Error(ErrorCode::DegenerateGraph,
                  "face has a zero-width spike at the anchor");
    // collinear edges: only the supporting line remains
    for (const RPoint& dir : {eo, ei})
      if (auto seg = ray_inside(poly, fr.pos, dir)) w.segments.push_back(*seg);
    return w;
  }
  auto vis = visibility_cells(poly, fr.pos);
  if (cls > 0) {
    for (auto& c : vis) push_cell(w.cells, std::move(c));
    return w;
  }
  // reflex: new edge must leave one sub-angle still reflex, a double wedge
  for (const auto& c : vis) {
    push_cell(w.cells, clip_halfplane(c, fr.n, fr.a));
    push_cell(w.cells, clip_halfplane(c, fr.a, fr.p));
  }
  return w;
}

namespace {

FeasibleRegion assemble_region(const Embedding& pts,
                               const std::vector<std::pair<int, int>>& face,
                               const std::vector<int>& anchors,
                               bool subtract_hull) {
  FeasibleRegion r;
  r.face = face_polygon(pts, face, nullptr);
  r.anchors = anchors;
  for (int a : anchors) r.wedges.push_back(tangency_wedge(pts, face, a));
  r.cells = r.wedges[0].cells;
  for (std::size_t i = 1; i < r.wedges.size(); ++i)
    r.cells = intersect_cells(r.cells, r.wedges[i].cells);
  if (subtract_hull && anchors.size() == 3)
    r.pointed_cells = subtract_triangle(r.cells, pts[anchors[0]],
                                        pts[anchors[1]], pts[anchors[2]]);
  else
    r.pointed_cells = r.cells;
  return r;
}

}  // namespace

FeasibleRegion feasible_region1(const Embedding& pts,
                                const std::vector<std::pair<int, int>>& face,
                                int v1, int v2) {
  if (v1 == v2) throw Error(ErrorCode::BadSize, "anchors must be distinct");
  return assemble_region(pts, face, {v1, v2}, false);
}

FeasibleRegion feasible_region2(const Embedding& pts,
                                const std::vector<std::pair<int, int>>& face,
                                std::pair<int, int> removed_edge, int vk) {
  int i = removed_edge.first, j = removed_edge.second;
  if (i == j || i == vk || j == vk)
    throw Error(ErrorCode::BadSize, "anchors must be distinct");
  return assemble_region(pts, face, {i, j, vk}, true);
}

}  // namespace ppt
