#include "ppt/verify_geom.hpp"

#include <algorithm>

namespace ppt {

namespace {

void check_sizes(const Embedding& pts, const PlaneGraph& g) {
  if (static_cast<int>(pts.size()) != g.n)
    throw Error(ErrorCode::BadSize, "coordinate count != vertex count");
}

// wedge from ray v->a ccw to ray v->b: 0 = exactly pi or zero-length,
// 1 = reflex (> pi, including the full-turn case), -1 = convex (< pi)
int wedge_class(const RPoint& pv, const RPoint& pa, const RPoint& pb) {
  RPoint u = pa - pv, w = pb - pv;
  Rat cr = cross(u, w);
  if (cr < 0) return 1;
  if (cr > 0) return -1;
  return dot(u, w) > 0 ? 1 : 0;  // same direction: full turn counts reflex
}

bool wedge_degenerate(const RPoint& pv, const RPoint& pa, const RPoint& pb) {
  RPoint u = pa - pv, w = pb - pv;
  return cross(u, w) == 0;
}

}  // namespace

bool is_pointed(const Embedding& pts, const PlaneGraph& g, int v) {
  check_sizes(pts, g);
  int deg = g.degree(v);
  if (deg == 0) throw Error(ErrorCode::IsolatedVertex, "degree-0 vertex");
  if (deg == 1) return true;
  for (int i = 0; i < deg; ++i) {
    int a = g.rot[v][i];
    int b = g.rot[v][(i + 1) % deg];
    if (wedge_class(pts[v], pts[a], pts[b]) == 1) return true;
  }
  return false;
}

bool is_noncrossing(const Embedding& pts, const PlaneGraph& g) {
  check_sizes(pts, g);
  int m = g.m();
  for (int i = 0; i < m; ++i) {
    auto [a, b] = g.edges[i];
    if (pts[a] == pts[b]) return false;  // zero-length edge
    for (int j = i + 1; j < m; ++j) {
      auto [c, d] = g.edges[j];
      if (segments_cross_improperly(pts[a], pts[b], pts[c], pts[d]))
        return false;
    }
  }
  return true;
}

bool rotation_matches(const Embedding& pts, const PlaneGraph& g) {
  check_sizes(pts, g);
  for (int v = 0; v < g.n; ++v) {
    int deg = g.degree(v);
    std::vector<RPoint> dir;
    dir.reserve(deg);
    for (int u : g.rot[v]) {
      RPoint d = pts[u] - pts[v];
      if (d.x == 0 && d.y == 0) return false;
      dir.push_back(d);
    }
    if (deg < 2) continue;
    // strictly ccw-increasing as a cyclic sequence: exactly one wrap point
    int wraps = 0;
    for (int i = 0; i < deg; ++i) {
      int cmp = compare_angles_ccw(dir[i], dir[(i + 1) % deg]);
      if (cmp == 0) return false;  // repeated direction
      if (cmp > 0) wraps += 1;
    }
    if (wraps != 1) return false;
  }
  return true;
}

CptLabeling derive_labeling(const Embedding& pts, const PlaneGraph& g) {
  if (!rotation_matches(pts, g))
    throw Error(ErrorCode::FacesMismatch,
                "coordinates realize a different rotation system");
  CptLabeling lab;
  lab.big.assign(2 * g.m(), 0);
  for (int a = 0; a < 2 * g.m(); ++a) {
    auto [w, u] = g.angle_wedge(a);
    int v = g.angle_vertex(a);
    lab.big[a] = wedge_class(pts[v], pts[w], pts[u]) == 1 ? 1 : 0;
  }
  return lab;
}

GeometricReport verify_geometry(const Embedding& pts, const PlaneGraph& g) {
  check_sizes(pts, g);
  GeometricReport rep;
  rep.non_crossing = is_noncrossing(pts, g);
  rep.pointed.assign(g.n, 0);
  for (int v = 0; v < g.n; ++v) {
    rep.pointed[v] = is_pointed(pts, g, v) ? 1 : 0;
    if (!rep.pointed[v]) rep.non_pointed.push_back(v);
    int deg = g.degree(v);
    if (deg < 2) continue;
    for (int i = 0; i < deg; ++i) {
      int a = g.rot[v][i];
      int b = g.rot[v][(i + 1) % deg];
      if (wedge_degenerate(pts[v], pts[a], pts[b])) {
        rep.degenerate = true;
        rep.degenerate_vertices.push_back(v);
        break;
      }
    }
  }
  rep.rotation_ok = rotation_matches(pts, g);
  if (!rep.rotation_ok) return rep;

  rep.labeling = derive_labeling(pts, g);
  rep.convex_count.assign(g.num_faces(), 0);
  for (int f = 0; f < g.num_faces(); ++f)
    for (int d : g.faces[f])
      rep.convex_count[f] += rep.labeling.big[d] ? 0 : 1;

  bool faces_ok = true;
  for (int f = 0; f < g.num_faces(); ++f) {
    if (f == g.outer_face) {
      // outer boundary convex <=> every angle on it is reflex
      if (rep.convex_count[f] != 0) faces_ok = false;
    } else if (rep.convex_count[f] != 3) {
      faces_ok = false;
    }
  }
  rep.pseudo_triangulation = rep.non_crossing && faces_ok;
  rep.pointed_pseudo_triangulation =
      rep.pseudo_triangulation && rep.non_pointed.empty();
  return rep;
}

}  // namespace ppt
