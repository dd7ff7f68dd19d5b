#include "ppt/plane_graph.hpp"

#include <algorithm>
#include <set>

namespace ppt {

namespace {
std::int64_t pack(int u, int v) {
  return (static_cast<std::int64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}
}  // namespace

int PlaneGraph::edge_id(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = eidx_.find(pack(u, v));
  return it == eidx_.end() ? -1 : it->second;
}

int PlaneGraph::dart(int u, int v) const {
  int lo = u < v ? u : v, hi = u < v ? v : u;
  auto it = eidx_.find(pack(lo, hi));
  if (it == eidx_.end())
    throw Error(ErrorCode::DegenerateGraph,
                "no edge " + std::to_string(u) + "-" + std::to_string(v));
  return 2 * it->second + (u < v ? 0 : 1);
}

int PlaneGraph::rot_index(int v, int nbr) const {
  auto it = ridx_[v].find(nbr);
  if (it == ridx_[v].end())
    throw Error(ErrorCode::DegenerateGraph,
                std::to_string(nbr) + " not adjacent to " + std::to_string(v));
  return it->second;
}

int PlaneGraph::ccw_succ(int v, int nbr) const {
  int i = rot_index(v, nbr);
  return rot[v][(i + 1) % rot[v].size()];
}

int PlaneGraph::ccw_pred(int v, int nbr) const {
  int i = rot_index(v, nbr);
  int d = static_cast<int>(rot[v].size());
  return rot[v][(i + d - 1) % d];
}

int PlaneGraph::next_dart(int d) const {
  int u = dart_tail(d), v = dart_head(d);
  return dart(v, ccw_pred(v, u));
}

int PlaneGraph::prev_dart(int d) const {
  // inverse of next: prev of (v->w) is (u->v) with w = ccw_pred(v, u),
  // i.e. u = ccw_succ(v, w) where w is our head... derive: we need u with
  // ccw_pred(v,u) == head; so u = ccw_succ(v, head) at vertex v = tail(d).
  int v = dart_tail(d), w = dart_head(d);
  int u = ccw_succ(v, w);
  return dart(u, v);
}

std::pair<int, int> PlaneGraph::angle_wedge(int a) const {
  int u = dart_tail(a), v = dart_head(a);
  return {ccw_pred(v, u), u};
}

std::vector<int> PlaneGraph::angles_at(int v) const {
  std::vector<int> out;
  out.reserve(rot[v].size());
  for (int nbr : rot[v]) out.push_back(dart(nbr, v));
  return out;
}

std::vector<int> PlaneGraph::face_vertices(int f) const {
  std::vector<int> out;
  out.reserve(faces[f].size());
  for (int d : faces[f]) out.push_back(dart_head(d));
  return out;
}

namespace {

// exact cyclic sequence match (forward)
bool cyclic_match(const std::vector<int>& a, const std::vector<int>& b) {
  size_t n = a.size();
  if (b.size() != n || n == 0) return false;
  for (size_t r = 0; r < n; ++r) {
    bool ok = true;
    for (size_t i = 0; i < n && ok; ++i) ok = a[(r + i) % n] == b[i];
    if (ok) return true;
  }
  return false;
}

int resolve_outer(const PlaneGraph& g, const std::vector<int>& hint) {
  if (hint.empty())
    throw Error(ErrorCode::OuterFaceNotFound, "empty outer face hint");
  for (int v : hint)
    if (v < 0 || v >= g.n)
      throw Error(ErrorCode::OuterFaceNotFound, "hint vertex out of range");
  std::vector<int> rev(hint.rbegin(), hint.rend());
  int best_rev = -1, best_fwd = -1;
  for (int f = 0; f < g.num_faces(); ++f) {
    std::vector<int> fv = g.face_vertices(f);
    if (best_rev < 0 && cyclic_match(fv, rev)) best_rev = f;
    if (best_fwd < 0 && cyclic_match(fv, hint)) best_fwd = f;
  }
  if (best_rev >= 0) return best_rev;
  if (best_fwd >= 0) return best_fwd;
  // fallback: unique face with the same vertex set
  std::set<int> want(hint.begin(), hint.end());
  int found = -1;
  for (int f = 0; f < g.num_faces(); ++f) {
    std::vector<int> fv = g.face_vertices(f);
    std::set<int> have(fv.begin(), fv.end());
    if (have == want) {
      if (found >= 0)
        throw Error(ErrorCode::OuterFaceNotFound,
                    "outer face hint is ambiguous");
      found = f;
    }
  }
  if (found < 0)
    throw Error(ErrorCode::OuterFaceNotFound, "no face matches the hint");
  return found;
}

}  // namespace

PlaneGraph build_plane_graph(int n, std::vector<std::pair<int, int>> edges,
                             std::vector<std::vector<int>> rot,
                             const std::vector<int>& outer_hint) {
  if (n < 2) throw Error(ErrorCode::DegenerateGraph, "need at least 2 vertices");
  if (static_cast<int>(rot.size()) != n)
    throw Error(ErrorCode::InconsistentRotation, "rotation list size != n");

  PlaneGraph g;
  g.n = n;

  // derive neighbor sets from rotations; validate basic sanity
  std::set<std::pair<int, int>> from_rot;
  for (int v = 0; v < n; ++v) {
    std::set<int> seen;
    for (int u : rot[v]) {
      if (u < 0 || u >= n)
        throw Error(ErrorCode::InconsistentRotation, "neighbor out of range");
      if (u == v) throw Error(ErrorCode::DegenerateGraph, "self-loop");
      if (!seen.insert(u).second)
        throw Error(ErrorCode::DegenerateGraph, "repeated neighbor (multi-edge)");
      from_rot.insert({std::min(u, v), std::max(u, v)});
    }
  }
  // symmetry: u in rot[v] must imply v in rot[u]
  for (auto [u, v] : from_rot) {
    bool uv = std::find(rot[u].begin(), rot[u].end(), v) != rot[u].end();
    bool vu = std::find(rot[v].begin(), rot[v].end(), u) != rot[v].end();
    if (!uv || !vu)
      throw Error(ErrorCode::InconsistentRotation, "asymmetric adjacency");
  }

  // canonicalize given edges and compare
  std::set<std::pair<int, int>> given;
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n || u == v)
      throw Error(ErrorCode::DegenerateGraph, "bad edge endpoint");
    if (!given.insert({std::min(u, v), std::max(u, v)}).second)
      throw Error(ErrorCode::DegenerateGraph, "duplicate edge");
  }
  if (given != from_rot)
    throw Error(ErrorCode::InconsistentRotation,
                "edge list does not match rotations");

  g.edges.assign(from_rot.begin(), from_rot.end());  // sorted by set order
  for (int e = 0; e < g.m(); ++e)
    g.eidx_[pack(g.edges[e].first, g.edges[e].second)] = e;
  g.rot = std::move(rot);
  g.ridx_.resize(n);
  for (int v = 0; v < n; ++v)
    for (int i = 0; i < g.degree(v); ++i) g.ridx_[v][g.rot[v][i]] = i;

  if (g.m() == 0) throw Error(ErrorCode::DegenerateGraph, "no edges");

  // connectivity
  {
    std::vector<char> vis(n, 0);
    std::vector<int> stack{0};
    vis[0] = 1;
    int cnt = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : g.rot[v])
        if (!vis[u]) {
          vis[u] = 1;
          ++cnt;
          stack.push_back(u);
        }
    }
    if (cnt != n) throw Error(ErrorCode::DegenerateGraph, "graph not connected");
  }

  // trace faces: orbit of next_dart, visiting darts in ascending id order
  int dm = 2 * g.m();
  g.face_of.assign(dm, -1);
  g.pos_in_face.assign(dm, -1);
  for (int d0 = 0; d0 < dm; ++d0) {
    if (g.face_of[d0] >= 0) continue;
    int f = g.num_faces();
    std::vector<int> walk;
    int d = d0;
    do {
      if (g.face_of[d] >= 0)
        throw Error(ErrorCode::InconsistentRotation, "face walk collision");
      g.face_of[d] = f;
      g.pos_in_face[d] = static_cast<int>(walk.size());
      walk.push_back(d);
      d = g.next_dart(d);
    } while (d != d0);
    g.faces.push_back(std::move(walk));
  }

  if (g.n - g.m() + g.num_faces() != 2)
    throw Error(ErrorCode::InconsistentRotation,
                "rotation system is not planar (Euler check failed)");

  g.outer_face = resolve_outer(g, outer_hint);
  return g;
}

PlaneGraph build_plane_graph(int n, std::vector<std::vector<int>> rot,
                             const std::vector<int>& outer_hint) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n && v < static_cast<int>(rot.size()); ++v)
    for (int u : rot[v])
      if (v < u) edges.push_back({v, u});
  return build_plane_graph(n, std::move(edges), std::move(rot), outer_hint);
}

namespace {

void validate_subset(const PlaneGraph& g, const std::vector<int>& S) {
  if (S.empty()) throw Error(ErrorCode::EmptySubset, "empty vertex set");
  std::set<int> seen;
  for (int v : S) {
    if (v < 0 || v >= g.n)
      throw Error(ErrorCode::BadSize, "vertex out of range");
    if (!seen.insert(v).second)
      throw Error(ErrorCode::BadSize, "repeated vertex in subset");
  }
}

// Face ids reachable from the outer face crossing only edges whose
// endpoints are not both marked.
std::vector<char> reachable_faces(const PlaneGraph& g,
                                  const std::vector<char>& in_set) {
  std::vector<char> reach(g.num_faces(), 0);
  std::vector<int> stack{g.outer_face};
  reach[g.outer_face] = 1;
  while (!stack.empty()) {
    int f = stack.back();
    stack.pop_back();
    for (int d : g.faces[f]) {
      auto [u, v] = g.edges[d >> 1];
      if (in_set[u] && in_set[v]) continue;  // blocked by an induced edge
      int f2 = g.face_of[PlaneGraph::dart_rev(d)];
      if (!reach[f2]) {
        reach[f2] = 1;
        stack.push_back(f2);
      }
    }
  }
  return reach;
}

}  // namespace

std::vector<std::vector<int>> induced_components(const PlaneGraph& g,
                                                 const std::vector<int>& S) {
  validate_subset(g, S);
  std::vector<char> in_set(g.n, 0);
  for (int v : S) in_set[v] = 1;
  std::vector<char> vis(g.n, 0);
  std::vector<std::vector<int>> comps;
  std::vector<int> order(S);
  std::sort(order.begin(), order.end());
  for (int s : order) {
    if (vis[s]) continue;
    std::vector<int> comp, stack{s};
    vis[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int u : g.rot[v])
        if (in_set[u] && !vis[u]) {
          vis[u] = 1;
          stack.push_back(u);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

std::vector<int> fill_holes(const PlaneGraph& g, const std::vector<int>& S) {
  auto comps = induced_components(g, S);
  if (comps.size() != 1)
    throw Error(ErrorCode::DisconnectedSubset,
                "induced subgraph is not connected");
  std::vector<char> in_set(g.n, 0);
  for (int v : S) in_set[v] = 1;
  for (;;) {
    std::vector<char> reach = reachable_faces(g, in_set);
    bool changed = false;
    for (int f = 0; f < g.num_faces(); ++f) {
      if (reach[f]) continue;
      for (int d : g.faces[f]) {
        int v = g.dart_head(d);
        if (!in_set[v]) {
          in_set[v] = 1;
          changed = true;
        }
      }
    }
    if (!changed) break;
  }
  std::vector<int> out;
  for (int v = 0; v < g.n; ++v)
    if (in_set[v]) out.push_back(v);
  return out;
}

std::vector<BoundaryCycle> induced_boundary_cycles(const PlaneGraph& g,
                                                   const std::vector<int>& S) {
  auto comps = induced_components(g, S);
  std::vector<BoundaryCycle> out;
  for (const auto& comp : comps) {
    std::vector<char> in_c(g.n, 0);
    for (int v : comp) in_c[v] = 1;
    if (comp.size() == 1) {
      BoundaryCycle bc;
      bc.b = 0;
      bc.b0 = 1;
      bc.walk_vertices = {comp[0]};
      out.push_back(std::move(bc));
      continue;
    }
    std::vector<char> reach = reachable_faces(g, in_c);
    // boundary darts: induced edge with the unbounded region on the left
    std::vector<char> is_boundary(2 * g.m(), 0);
    int start = -1;
    for (int d = 0; d < 2 * g.m(); ++d) {
      auto [u, v] = g.edges[d >> 1];
      if (in_c[u] && in_c[v] && reach[g.face_of[d]]) {
        is_boundary[d] = 1;
        if (start < 0) start = d;
      }
    }
    if (start < 0)
      throw Error(ErrorCode::StepInconsistent, "component without contour");
    // restricted next: (u->v) -> (v->w), w the first C-member ccw-backward
    // from u in rot[v]
    auto next_restricted = [&](int d) {
      int u = g.dart_tail(d), v = g.dart_head(d);
      int i = g.rot_index(v, u);
      int deg = g.degree(v);
      for (int step = 1; step <= deg; ++step) {
        int w = g.rot[v][((i - step) % deg + deg) % deg];
        if (in_c[w]) return g.dart(v, w);
      }
      return g.dart(v, u);  // degree-1 within C: bounce back
    };
    std::vector<char> used(2 * g.m(), 0);
    for (int d0 = 0; d0 < 2 * g.m(); ++d0) {
      if (!is_boundary[d0] || used[d0]) continue;
      BoundaryCycle bc;
      int d = d0;
      do {
        if (!is_boundary[d] || used[d])
          throw Error(ErrorCode::StepInconsistent, "contour trace broke");
        used[d] = 1;
        bc.darts.push_back(d);
        bc.walk_vertices.push_back(g.dart_head(d));
        d = next_restricted(d);
      } while (d != d0);
      bc.b = static_cast<int>(bc.darts.size());
      std::set<int> distinct(bc.walk_vertices.begin(), bc.walk_vertices.end());
      bc.b0 = static_cast<int>(distinct.size());
      out.push_back(std::move(bc));
    }
  }
  return out;
}

namespace {
bool cyclically_equal(const std::vector<int>& a, const std::vector<int>& b) {
  size_t n = a.size();
  if (b.size() != n) return false;
  if (n == 0) return true;
  for (size_t r = 0; r < n; ++r) {
    bool ok = true;
    for (size_t i = 0; i < n && ok; ++i) ok = a[(r + i) % n] == b[i];
    if (ok) return true;
  }
  return false;
}
}  // namespace

bool same_plane_graph(const PlaneGraph& a, const PlaneGraph& b) {
  if (a.n != b.n || a.edges != b.edges) return false;
  for (int v = 0; v < a.n; ++v)
    if (!cyclically_equal(a.rot[v], b.rot[v])) return false;
  return cyclically_equal(a.face_vertices(a.outer_face),
                          b.face_vertices(b.outer_face));
}

}  // namespace ppt
