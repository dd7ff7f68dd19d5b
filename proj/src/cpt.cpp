#include "ppt/cpt.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>

#include "ppt/error.hpp"

namespace ppt {

namespace {

void check_label_size(const PlaneGraph& g, const CptLabeling& lab) {
  if (static_cast<int>(lab.big.size()) != 2 * g.m())
    throw Error(ErrorCode::BadSize, "labeling does not cover all angles");
}

int count_bigs_at(const PlaneGraph& g, const CptLabeling& lab, int v) {
  int c = 0;
  for (int a : g.angles_at(v)) c += lab.big[a] ? 1 : 0;
  return c;
}

}  // namespace

int CptLabeling::big_angle_of(const PlaneGraph& g, int v) const {
  check_label_size(g, *this);
  int found = -1;
  for (int a : g.angles_at(v)) {
    if (!big[a]) continue;
    if (found >= 0)
      throw Error(ErrorCode::BadSize, "vertex has several big angles");
    found = a;
  }
  return found;
}

std::vector<int> CptLabeling::non_pointed(const PlaneGraph& g) const {
  check_label_size(g, *this);
  std::vector<int> out;
  for (int v = 0; v < g.n; ++v)
    if (count_bigs_at(g, *this, v) == 0) out.push_back(v);
  return out;
}

std::vector<std::vector<int>> CptLabeling::face_corners(
    const PlaneGraph& g) const {
  check_label_size(g, *this);
  std::vector<std::vector<int>> out(g.num_faces());
  for (int f = 0; f < g.num_faces(); ++f)
    for (int d : g.faces[f])
      if (!big[d]) out[f].push_back(d);
  return out;
}

MatchingGraph build_matching_graph(const PlaneGraph& g,
                                   std::optional<int> prescribed_nonpointed) {
  int want = prescribed_nonpointed ? 2 * g.n - 2 : 2 * g.n - 3;
  if (g.m() != want)
    throw Error(ErrorCode::BadEdgeCount,
                prescribed_nonpointed ? "need exactly 2n-2 edges"
                                      : "need exactly 2n-3 edges");
  if (prescribed_nonpointed) {
    int p = *prescribed_nonpointed;
    if (p < 0 || p >= g.n)
      throw Error(ErrorCode::BadSize, "prescribed vertex out of range");
    for (int v : g.face_vertices(g.outer_face))
      if (v == p)
        throw Error(ErrorCode::PrescribedVertexOnOuterFace,
                    "prescribed vertex lies on the outer face");
  }

  MatchingGraph h;
  std::vector<std::vector<int>> rights_of_face(g.num_faces());
  for (int f = 0; f < g.num_faces(); ++f) {
    int d = static_cast<int>(g.faces[f].size());
    int copies = f == g.outer_face ? d : d - 3;
    for (int c = 0; c < copies; ++c) {
      rights_of_face[f].push_back(h.num_right());
      h.right_face.push_back({f, c});
    }
  }
  h.left_of.assign(g.n, -1);
  for (int v = 0; v < g.n; ++v) {
    if (prescribed_nonpointed && *prescribed_nonpointed == v) continue;
    h.left_of[v] = h.num_left();
    h.left_vertex.push_back(v);
    std::set<int> inc;
    for (int a : g.angles_at(v)) inc.insert(g.face_of[a]);
    std::vector<int> row;
    for (int f : inc)
      for (int r : rights_of_face[f]) row.push_back(r);
    h.adj.push_back(std::move(row));
  }
  return h;
}

std::vector<int> max_bipartite_matching(const MatchingGraph& h) {
  int L = h.num_left(), R = h.num_right();
  const int INF = 1 << 29;
  std::vector<int> ml(L, -1), mr(R, -1), dist(L, 0);
  auto bfs = [&]() {
    std::queue<int> q;
    bool reachable_free = false;
    for (int u = 0; u < L; ++u) {
      dist[u] = ml[u] < 0 ? 0 : INF;
      if (ml[u] < 0) q.push(u);
    }
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : h.adj[u]) {
        int nu = mr[w];
        if (nu < 0)
          reachable_free = true;
        else if (dist[nu] == INF) {
          dist[nu] = dist[u] + 1;
          q.push(nu);
        }
      }
    }
    return reachable_free;
  };
  std::function<bool(int)> dfs = [&](int u) {
    for (int w : h.adj[u]) {
      int nu = mr[w];
      if (nu < 0 || (dist[nu] == dist[u] + 1 && dfs(nu))) {
        ml[u] = w;
        mr[w] = u;
        return true;
      }
    }
    dist[u] = INF;
    return false;
  };
  while (bfs())
    for (int u = 0; u < L; ++u)
      if (ml[u] < 0) dfs(u);
  return ml;
}

CptLabeling assign_cpt(const PlaneGraph& g,
                       std::optional<int> prescribed_nonpointed) {
  MatchingGraph h = build_matching_graph(g, prescribed_nonpointed);
  std::vector<int> ml = max_bipartite_matching(h);
  for (int u = 0; u < h.num_left(); ++u)
    if (ml[u] < 0)
      throw Error(ErrorCode::NoPerfectMatching,
                  "no pseudo-triangulation labeling exists");
  CptLabeling lab;
  lab.big.assign(2 * g.m(), 0);
  for (int u = 0; u < h.num_left(); ++u) {
    int v = h.left_vertex[u];
    int f = h.right_face[ml[u]].first;
    int angle = -1;
    for (int a : g.angles_at(v))
      if (g.face_of[a] == f) {
        angle = a;
        break;
      }
    if (angle < 0)
      throw Error(ErrorCode::SolverFailure, "matched face not incident");
    lab.big[angle] = 1;
  }
  return lab;
}

CptReport validate_cpt(const PlaneGraph& g, const CptLabeling& lab) {
  check_label_size(g, lab);
  CptReport r;
  r.small_triples = true;
  for (int f = 0; f < g.num_faces(); ++f) {
    if (f == g.outer_face) continue;
    int smalls = 0;
    for (int d : g.faces[f]) smalls += lab.big[d] ? 0 : 1;
    if (smalls != 3) r.small_triples = false;
  }
  r.outer_all_big = true;
  for (int d : g.faces[g.outer_face])
    if (!lab.big[d]) r.outer_all_big = false;
  r.at_most_one_big = true;
  r.degree2_one_big = true;
  for (int v = 0; v < g.n; ++v) {
    int c = count_bigs_at(g, lab, v);
    if (c > 1) r.at_most_one_big = false;
    if (g.degree(v) == 2 && c != 1) r.degree2_one_big = false;
    if (c == 0) r.non_pointed.push_back(v);
  }
  r.nonpointed_count_ok =
      static_cast<int>(r.non_pointed.size()) == g.m() - (2 * g.n - 3);
  return r;
}

namespace {

// Angle ids at v lying in the region wedge between an incoming boundary
// dart (x -> v) and the outgoing one (v -> y): the ccw sweep from y to x.
std::vector<int> wedge_angles(const PlaneGraph& g, int v, int y, int x) {
  int deg = g.degree(v);
  int j = g.rot_index(v, y);
  int t = g.rot_index(v, x);
  int steps = ((t - j) % deg + deg) % deg;
  if (steps == 0) steps = deg;
  std::vector<int> out;
  for (int s = 1; s <= steps; ++s) {
    int w = g.rot[v][(j + s) % deg];
    out.push_back(g.dart(w, v));
  }
  return out;
}

}  // namespace

SubgraphCornerStats corner_stats(const PlaneGraph& g, const CptLabeling& lab,
                                 const std::vector<int>& S) {
  check_label_size(g, lab);
  std::vector<int> filled = fill_holes(g, S);
  if (filled.size() != S.size())
    throw Error(ErrorCode::NotSimplyConnected,
                "subset does not contain everything it encloses");

  std::vector<char> in_set(g.n, 0);
  for (int v : S) in_set[v] = 1;

  SubgraphCornerStats st;
  for (auto [u, v] : g.edges)
    if (in_set[u] && in_set[v]) st.m += 1;
  std::vector<char> vertex_pointed(g.n, 0);
  for (int v : S) {
    if (count_bigs_at(g, lab, v) > 0) {
      vertex_pointed[v] = 1;
      st.k += 1;
    } else {
      st.l += 1;
    }
  }

  auto cycles = induced_boundary_cycles(g, S);
  if (cycles.size() != 1)
    throw Error(ErrorCode::NotSimplyConnected, "expected a single contour");
  const BoundaryCycle& cyc = cycles[0];
  st.b = cyc.b;
  st.b0 = cyc.b0;

  std::set<int> type1, type2;
  int len = static_cast<int>(cyc.darts.size());
  for (int i = 0; i < len; ++i) {
    int din = cyc.darts[i];
    int dout = cyc.darts[(i + 1) % len];
    int v = g.dart_head(din);
    int x = g.dart_tail(din);
    int y = g.dart_head(dout);
    std::vector<int> wedge = wedge_angles(g, v, y, x);
    bool has_big = false;
    for (int a : wedge) has_big = has_big || lab.big[a];
    if (has_big) type1.insert(v);
    if (!vertex_pointed[v] && wedge.size() >= 2) type2.insert(v);
  }
  st.c1 = static_cast<int>(type1.size());
  st.c2 = static_cast<int>(type2.size());
  st.c1_formula = st.m + 3 - 2 * st.k - 3 * st.l + st.b;
  return st;
}

bool check_all_subgraph_corners(const PlaneGraph& g, const CptLabeling& lab,
                                int n_limit) {
  if (g.n > n_limit || g.n > 30)
    throw Error(ErrorCode::TooLarge, "subgraph enumeration limit exceeded");
  check_label_size(g, lab);
  std::set<std::uint32_t> done;
  for (std::uint32_t mask = 0; mask < (1u << g.n); ++mask) {
    if (__builtin_popcount(mask) < 3) continue;
    // connectivity of the induced subgraph
    std::vector<int> verts;
    for (int v = 0; v < g.n; ++v)
      if (mask & (1u << v)) verts.push_back(v);
    std::vector<char> in_set(g.n, 0), seen(g.n, 0);
    for (int v : verts) in_set[v] = 1;
    std::vector<int> stack{verts[0]};
    seen[verts[0]] = 1;
    int reached = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : g.rot[v])
        if (in_set[u] && !seen[u]) {
          seen[u] = 1;
          reached += 1;
          stack.push_back(u);
        }
    }
    if (reached != static_cast<int>(verts.size())) continue;

    std::vector<int> filled = fill_holes(g, verts);
    std::uint32_t fmask = 0;
    for (int v : filled) fmask |= 1u << v;
    if (!done.insert(fmask).second) continue;
    SubgraphCornerStats st = corner_stats(g, lab, filled);
    if (st.c1 + st.c2 < 3) return false;
  }
  return true;
}

// ---------- label extension along one insertion step ----------

CptLabeling extend_cpt_step(const PlaneGraph& before, const CptLabeling& lab,
                            const PlaneGraph& after, const HennebergStep& step) {
  check_label_size(before, lab);
  const int v = step.v;
  if (after.n != before.n + 1 || v != before.n)
    throw Error(ErrorCode::StepInconsistent,
                "graphs must share ids, new vertex last");
  size_t want = step.kind == StepKind::I ? 2 : 3;
  if (step.nbrs.size() != want || step.pred.size() != want)
    throw Error(ErrorCode::StepInconsistent, "step attachment arity wrong");
  if (after.m() != before.m() + 2)
    throw Error(ErrorCode::StepInconsistent, "edge counts do not match step");
  for (int u : step.nbrs)
    if (u < 0 || u >= before.n || !after.has_edge(u, v))
      throw Error(ErrorCode::StepInconsistent, "bad step neighbor");

  int sa = -1, sb = -1;
  if (step.kind == StepKind::II) {
    sa = step.split_edge.first;
    sb = step.split_edge.second;
    if (!before.has_edge(sa, sb) || after.has_edge(sa, sb))
      throw Error(ErrorCode::StepInconsistent, "split edge mismatch");
    // the new vertex must occupy the removed edge's rotation slot
    if (after.ccw_pred(sa, v) != before.ccw_pred(sa, sb) ||
        after.ccw_pred(sb, v) != before.ccw_pred(sb, sa))
      throw Error(ErrorCode::StepInconsistent,
                  "insertion does not reuse the split edge's wedges");
  }

  // copy labels of angles untouched by the step
  CptLabeling out;
  out.big.assign(2 * after.m(), 0);
  std::vector<char> affected(2 * after.m(), 0);
  struct Anchor {
    int u;
    int piece_av;  // angle (v -> u): the piece on pred's side
    int piece_ax;  // angle (x -> u): the piece on succ's side
    bool oldbig;
  };
  std::vector<Anchor> anchors;
  for (int u : step.nbrs) {
    Anchor an;
    an.u = u;
    int x = after.ccw_succ(u, v);
    an.piece_av = after.dart(v, u);
    an.piece_ax = after.dart(x, u);
    bool old_split = lab.big[before.dart(x, u)] != 0;
    if (step.kind == StepKind::II && (u == sa || u == sb)) {
      int other = u == sa ? sb : sa;
      old_split = old_split || lab.big[before.dart(other, u)] != 0;
    }
    an.oldbig = old_split;
    anchors.push_back(an);
    affected[an.piece_av] = affected[an.piece_ax] = 1;
  }
  std::vector<int> vslots;
  for (int u : step.nbrs) {
    int a = after.dart(u, v);
    vslots.push_back(a);
    affected[a] = 1;
  }
  for (int d = 0; d < 2 * after.m(); ++d) {
    if (affected[d]) continue;
    int t = after.dart_tail(d), h = after.dart_head(d);
    if (t == v || h == v)
      throw Error(ErrorCode::StepInconsistent, "unexpected angle at new vertex");
    out.big[d] = lab.big[before.dart(t, h)];
  }

  // faces whose label multiset changes: exactly those at the new vertex
  std::vector<int> touched_faces;
  for (int a : vslots) touched_faces.push_back(after.face_of[a]);

  auto face_ok = [&](int f) {
    if (f == after.outer_face) {
      for (int d : after.faces[f])
        if (!out.big[d]) return false;
      return true;
    }
    int smalls = 0;
    for (int d : after.faces[f]) smalls += out.big[d] ? 0 : 1;
    return smalls == 3;
  };

  // slot order for the deterministic tie-break: (vertex, face), small first
  std::vector<int> slot_order;
  for (int d = 0; d < 2 * after.m(); ++d)
    if (affected[d]) slot_order.push_back(d);
  std::sort(slot_order.begin(), slot_order.end(), [&](int a, int b) {
    auto ka = std::pair<int, int>(after.dart_head(a), after.face_of[a]);
    auto kb = std::pair<int, int>(after.dart_head(b), after.face_of[b]);
    return ka < kb;
  });

  int num_sides = 0;
  for (const Anchor& an : anchors)
    if (an.oldbig) num_sides += 1;
  std::vector<char> best_key;
  bool found = false;
  std::vector<char> best_flags(slot_order.size());
  for (size_t vb = 0; vb < vslots.size(); ++vb) {
    for (int sides = 0; sides < (1 << num_sides); ++sides) {
      for (size_t i = 0; i < vslots.size(); ++i)
        out.big[vslots[i]] = i == vb ? 1 : 0;
      int bit = 0;
      for (const Anchor& an : anchors) {
        if (!an.oldbig) {
          out.big[an.piece_av] = out.big[an.piece_ax] = 0;
        } else {
          bool av_side = ((sides >> bit) & 1) != 0;
          out.big[an.piece_av] = av_side ? 1 : 0;
          out.big[an.piece_ax] = av_side ? 0 : 1;
          bit += 1;
        }
      }
      bool ok = true;
      for (int f : touched_faces) ok = ok && face_ok(f);
      if (!ok) continue;
      std::vector<char> key(slot_order.size());
      for (size_t i = 0; i < slot_order.size(); ++i)
        key[i] = out.big[slot_order[i]];
      if (!found || key < best_key) {
        found = true;
        best_key = key;
        for (size_t i = 0; i < slot_order.size(); ++i)
          best_flags[i] = out.big[slot_order[i]];
      }
    }
  }
  if (!found)
    throw Error(ErrorCode::NoValidExtension,
                "no labeling of the touched faces satisfies the axioms");
  for (size_t i = 0; i < slot_order.size(); ++i)
    out.big[slot_order[i]] = best_flags[i];
  return out;
}

}  // namespace ppt
