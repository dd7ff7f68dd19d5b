#include "ppt/henneberg.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "ppt/rigidity.hpp"

namespace ppt {

// ---------- RotationEditor ----------

RotationEditor::RotationEditor(int id_space)
    : rot_(id_space), alive_(id_space, 0) {}

RotationEditor RotationEditor::from_graph(const PlaneGraph& g) {
  RotationEditor ed(g.n);
  for (int v = 0; v < g.n; ++v) {
    ed.alive_[v] = 1;
    ed.rot_[v] = g.rot[v];
  }
  ed.num_vertices_ = g.n;
  ed.num_edges_ = g.m();
  return ed;
}

RotationEditor RotationEditor::from_base(int id_space, const BaseGraph& b) {
  RotationEditor ed(id_space);
  for (int v : b.vertices) {
    if (v < 0 || v >= id_space || ed.alive_[v])
      throw Error(ErrorCode::StepInconsistent, "bad base vertex id");
    if (v >= static_cast<int>(b.rot.size()))
      throw Error(ErrorCode::StepInconsistent, "base rotation missing");
    ed.alive_[v] = 1;
    ed.rot_[v] = b.rot[v];
    ed.num_vertices_ += 1;
    ed.num_edges_ += static_cast<int>(b.rot[v].size());
  }
  ed.num_edges_ /= 2;
  return ed;
}

bool RotationEditor::has_edge(int u, int v) const {
  if (!alive_[u]) return false;
  return std::find(rot_[u].begin(), rot_[u].end(), v) != rot_[u].end();
}

namespace {
int find_pos(const std::vector<int>& r, int x, const char* what) {
  auto it = std::find(r.begin(), r.end(), x);
  if (it == r.end())
    throw Error(ErrorCode::StepInconsistent,
                std::string("rotation entry missing: ") + what);
  return static_cast<int>(it - r.begin());
}
}  // namespace

int RotationEditor::ccw_pred(int v, int nbr) const {
  const auto& r = rot_[v];
  int i = find_pos(r, nbr, "ccw_pred");
  int d = static_cast<int>(r.size());
  return r[(i + d - 1) % d];
}

int RotationEditor::ccw_succ(int v, int nbr) const {
  const auto& r = rot_[v];
  int i = find_pos(r, nbr, "ccw_succ");
  return r[(i + 1) % r.size()];
}

std::vector<int> RotationEditor::alive_vertices() const {
  std::vector<int> out;
  for (int v = 0; v < id_space(); ++v)
    if (alive_[v]) out.push_back(v);
  return out;
}

std::vector<std::pair<int, int>> RotationEditor::edge_list() const {
  std::vector<std::pair<int, int>> out;
  for (int v = 0; v < id_space(); ++v)
    if (alive_[v])
      for (int u : rot_[v])
        if (v < u) out.push_back({v, u});
  std::sort(out.begin(), out.end());
  return out;
}

void RotationEditor::add_vertex(int v, const std::vector<int>& nbrs,
                                const std::vector<int>& preds) {
  if (v < 0 || v >= id_space() || alive_[v])
    throw Error(ErrorCode::StepInconsistent, "add_vertex: bad id");
  if (nbrs.size() != preds.size() || nbrs.empty())
    throw Error(ErrorCode::StepInconsistent, "add_vertex: bad attachment");
  for (size_t i = 0; i < nbrs.size(); ++i) {
    if (!alive_[nbrs[i]] || has_edge(nbrs[i], v))
      throw Error(ErrorCode::StepInconsistent, "add_vertex: bad neighbor");
  }
  alive_[v] = 1;
  rot_[v] = nbrs;
  for (size_t i = 0; i < nbrs.size(); ++i)
    insert_neighbor_after(nbrs[i], v, preds[i]);
  num_vertices_ += 1;
  num_edges_ += static_cast<int>(nbrs.size());
}

void RotationEditor::remove_vertex(int v) {
  if (v < 0 || v >= id_space() || !alive_[v])
    throw Error(ErrorCode::StepInconsistent, "remove_vertex: bad id");
  for (int u : rot_[v]) {
    auto& r = rot_[u];
    r.erase(r.begin() + find_pos(r, v, "remove_vertex"));
  }
  num_edges_ -= static_cast<int>(rot_[v].size());
  rot_[v].clear();
  alive_[v] = 0;
  num_vertices_ -= 1;
}

void RotationEditor::add_edge(int u, int pred_u, int v, int pred_v) {
  if (!alive_[u] || !alive_[v] || u == v || has_edge(u, v))
    throw Error(ErrorCode::StepInconsistent, "add_edge: invalid");
  insert_neighbor_after(u, v, pred_u);
  insert_neighbor_after(v, u, pred_v);
  num_edges_ += 1;
}

void RotationEditor::remove_edge(int u, int v) {
  if (!has_edge(u, v) || !has_edge(v, u))
    throw Error(ErrorCode::StepInconsistent, "remove_edge: no such edge");
  auto& ru = rot_[u];
  ru.erase(ru.begin() + find_pos(ru, v, "remove_edge"));
  auto& rv = rot_[v];
  rv.erase(rv.begin() + find_pos(rv, u, "remove_edge"));
  num_edges_ -= 1;
}

void RotationEditor::set_rotation(int v, std::vector<int> r) {
  if (v < 0 || v >= id_space() || alive_[v])
    throw Error(ErrorCode::StepInconsistent, "set_rotation: only fresh ids");
  alive_[v] = 1;
  rot_[v] = std::move(r);
  num_vertices_ += 1;
  // edge counter unreliable after raw edits; recomputed in to_plane_graph
}

void RotationEditor::insert_neighbor_after(int u, int nbr, int after) {
  auto& r = rot_[u];
  if (after == -1) {
    r.push_back(nbr);
    return;
  }
  int i = find_pos(r, after, "insert_neighbor_after");
  r.insert(r.begin() + i + 1, nbr);
}

std::vector<std::pair<int, int>> RotationEditor::trace_face(int u, int v) const {
  if (!has_edge(u, v))
    throw Error(ErrorCode::StepInconsistent, "trace_face: no such dart");
  std::vector<std::pair<int, int>> walk;
  int a = u, b = v;
  do {
    walk.push_back({a, b});
    int c = ccw_pred(b, a);
    a = b;
    b = c;
    if (walk.size() > 4u * rot_.size() * rot_.size() + 16u)
      throw Error(ErrorCode::StepInconsistent, "trace_face: runaway walk");
  } while (!(a == u && b == v));
  return walk;
}

int RotationEditor::count_faces() const {
  std::unordered_set<std::int64_t> seen;
  auto key = [this](int a, int b) {
    return static_cast<std::int64_t>(a) * id_space() + b;
  };
  int faces = 0;
  for (int v = 0; v < id_space(); ++v) {
    if (!alive_[v]) continue;
    for (int u : rot_[v]) {
      if (seen.count(key(v, u))) continue;
      faces += 1;
      int a = v, b = u;
      do {
        seen.insert(key(a, b));
        int c = ccw_pred(b, a);
        a = b;
        b = c;
      } while (!(a == v && b == u));
    }
  }
  return faces;
}

bool RotationEditor::euler_ok() const {
  int m = 0;
  for (int v = 0; v < id_space(); ++v)
    if (alive_[v]) m += static_cast<int>(rot_[v].size());
  m /= 2;
  return num_vertices_ - m + count_faces() == 2;
}

PlaneGraph RotationEditor::to_plane_graph(std::pair<int, int> outer_witness,
                                          std::vector<int>* orig_of,
                                          std::vector<int>* comp_of) const {
  std::vector<int> orig = alive_vertices();
  std::vector<int> comp(id_space(), -1);
  for (int i = 0; i < static_cast<int>(orig.size()); ++i) comp[orig[i]] = i;
  std::vector<std::vector<int>> rot(orig.size());
  for (size_t i = 0; i < orig.size(); ++i) {
    rot[i].reserve(rot_[orig[i]].size());
    for (int u : rot_[orig[i]]) {
      if (u < 0 || u >= id_space() || comp[u] < 0)
        throw Error(ErrorCode::StepInconsistent, "dangling neighbor");
      rot[i].push_back(comp[u]);
    }
  }
  // outer hint: the walk through the witness dart, compacted and reversed
  // (the builder expects the boundary in ccw order, opposite the cw walk)
  auto walk = trace_face(outer_witness.first, outer_witness.second);
  std::vector<int> hint;
  hint.reserve(walk.size());
  for (auto it = walk.rbegin(); it != walk.rend(); ++it)
    hint.push_back(comp[it->second]);
  PlaneGraph g =
      build_plane_graph(static_cast<int>(orig.size()), std::move(rot), hint);
  if (orig_of) *orig_of = orig;
  if (comp_of) *comp_of = comp;
  return g;
}

// ---------- SequenceRunner ----------

namespace {

bool plus_one_counts(const RotationEditor& ed) {
  std::vector<int> orig = ed.alive_vertices();
  std::vector<int> comp(ed.id_space(), -1);
  for (int i = 0; i < static_cast<int>(orig.size()); ++i) comp[orig[i]] = i;
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : ed.edge_list()) edges.push_back({comp[u], comp[v]});
  int k = static_cast<int>(orig.size());
  int m = static_cast<int>(edges.size());
  return m == 2 * k - 2 && sparsity_rank(k, edges) == 2 * k - 3;
}

bool laman_counts(const RotationEditor& ed) {
  std::vector<int> orig = ed.alive_vertices();
  std::vector<int> comp(ed.id_space(), -1);
  for (int i = 0; i < static_cast<int>(orig.size()); ++i) comp[orig[i]] = i;
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : ed.edge_list()) edges.push_back({comp[u], comp[v]});
  int k = static_cast<int>(orig.size());
  if (k == 2) return edges.size() == 1;
  return is_laman(k, edges);
}

bool walk_has_dart(const std::vector<std::pair<int, int>>& walk, int a, int b) {
  for (auto [x, y] : walk)
    if (x == a && y == b) return true;
  return false;
}

}  // namespace

SequenceRunner::SequenceRunner(const HennebergSequence& seq, bool validate_counts)
    : seq_(&seq),
      ed_(RotationEditor::from_base(seq.id_space, seq.base)),
      validate_counts_(validate_counts) {
  size_t k = seq.base.vertices.size();
  size_t m = static_cast<size_t>(ed_.num_edges());
  if (!((k == 2 && m == 1) || (k == 3 && m == 3) || (k == 4 && m == 6)))
    throw Error(ErrorCode::StepInconsistent,
                "base must be an edge, a triangle, or a K4");
  plus_one_ = (k == 4);
  outer_dart_ = seq.base.outer_witness;
  if (!ed_.has_edge(outer_dart_.first, outer_dart_.second))
    throw Error(ErrorCode::StepInconsistent, "base outer witness not an edge");
  validate_current("base");
}

void SequenceRunner::validate_current(const char* where) const {
  if (!ed_.euler_ok())
    throw Error(ErrorCode::StepInconsistent,
                std::string("rotation system not planar after ") + where);
  if (!validate_counts_) return;
  bool ok = plus_one_ ? plus_one_counts(ed_) : laman_counts(ed_);
  if (!ok)
    throw Error(ErrorCode::StepInconsistent,
                std::string("rigidity counts violated after ") + where);
}

StepContext SequenceRunner::apply_next() {
  if (done()) throw Error(ErrorCode::StepInconsistent, "sequence exhausted");
  const HennebergStep& st = seq_->steps[next_];
  StepContext ctx;
  ctx.index = next_;
  ctx.step = &st;

  int v = st.v;
  if (v < 0 || v >= ed_.id_space() || ed_.alive(v))
    throw Error(ErrorCode::StepInconsistent, "step vertex id invalid");
  size_t want = st.kind == StepKind::I ? 2 : 3;
  if (st.nbrs.size() != want || st.pred.size() != want)
    throw Error(ErrorCode::StepInconsistent, "step attachment arity wrong");

  // a dart known to border the unbounded region, robust to the split-edge
  // removal below
  std::pair<int, int> sentinel = outer_dart_;
  if (st.kind == StepKind::II) {
    auto [a, b] = st.split_edge;
    if (!ed_.has_edge(a, b))
      throw Error(ErrorCode::StepInconsistent, "split edge absent");
    if ((sentinel.first == a && sentinel.second == b) ||
        (sentinel.first == b && sentinel.second == a)) {
      auto outer_walk = ed_.trace_face(outer_dart_.first, outer_dart_.second);
      bool found = false;
      for (auto [x, y] : outer_walk) {
        if ((x == a && y == b) || (x == b && y == a)) continue;
        sentinel = {x, y};
        found = true;
        break;
      }
      if (!found)
        throw Error(ErrorCode::StepInconsistent, "outer face too small");
    }
    ed_.remove_edge(a, b);
  }

  // insertion wedges: v goes immediately ccw-after pred[i] at nbrs[i]
  std::vector<std::pair<int, int>> angle_darts;
  for (size_t i = 0; i < st.nbrs.size(); ++i) {
    int u = st.nbrs[i];
    if (!ed_.alive(u) || ed_.has_edge(u, v))
      throw Error(ErrorCode::StepInconsistent, "bad step neighbor");
    int x = ed_.ccw_succ(u, st.pred[i]);  // throws if pred missing
    angle_darts.push_back({x, u});
  }
  ctx.insertion_face = ed_.trace_face(angle_darts[0].first, angle_darts[0].second);
  for (size_t i = 1; i < angle_darts.size(); ++i)
    if (!walk_has_dart(ctx.insertion_face, angle_darts[i].first,
                       angle_darts[i].second))
      throw Error(ErrorCode::StepInconsistent,
                  "attachment wedges not on a common face");
  ctx.insertion_face_is_outer =
      walk_has_dart(ctx.insertion_face, sentinel.first, sentinel.second);

  ed_.add_vertex(v, st.nbrs, st.pred);

  if (!ed_.has_edge(st.outer_witness.first, st.outer_witness.second))
    throw Error(ErrorCode::StepInconsistent, "outer witness not an edge");
  outer_dart_ = st.outer_witness;
  next_ += 1;
  validate_current("step");
  return ctx;
}

PlaneGraph SequenceRunner::current_graph(std::vector<int>* orig_of,
                                         std::vector<int>* comp_of) const {
  return ed_.to_plane_graph(outer_dart_, orig_of, comp_of);
}

// ---------- reverse ----------

namespace {

void validate_prescription(const PlaneGraph& g, const Prescription& p) {
  auto in_range = [&](int v) { return v >= 0 && v < g.n; };
  if (p.kind == Prescription::Kind::None) {
    if (!p.vertices.empty())
      throw Error(ErrorCode::PrescriptionInvalid, "unexpected vertices");
    return;
  }
  if (p.kind == Prescription::Kind::Pair) {
    if (p.vertices.size() != 2 || !in_range(p.vertices[0]) ||
        !in_range(p.vertices[1]) || p.vertices[0] == p.vertices[1])
      throw Error(ErrorCode::PrescriptionInvalid, "need two distinct vertices");
    return;
  }
  // triangle: three distinct vertices bounding a triangular face; their
  // degrees are irrelevant since kept vertices are never removed
  if (p.vertices.size() != 3)
    throw Error(ErrorCode::PrescriptionInvalid, "need three vertices");
  std::set<int> s(p.vertices.begin(), p.vertices.end());
  if (s.size() != 3)
    throw Error(ErrorCode::PrescriptionInvalid, "vertices not distinct");
  for (int v : p.vertices)
    if (!in_range(v))
      throw Error(ErrorCode::PrescriptionInvalid, "vertex out of range");
  for (int f = 0; f < g.num_faces(); ++f) {
    if (g.faces[f].size() != 3) continue;
    auto fv = g.face_vertices(f);
    if (std::set<int>(fv.begin(), fv.end()) == s) return;
  }
  throw Error(ErrorCode::PrescriptionInvalid, "vertices do not bound a face");
}

std::pair<int, int> pick_witness_avoiding(const RotationEditor& ed,
                                          std::pair<int, int> outer_dart,
                                          int avoid) {
  auto walk = ed.trace_face(outer_dart.first, outer_dart.second);
  for (auto [x, y] : walk)
    if (x != avoid && y != avoid) return {x, y};
  throw Error(ErrorCode::StepInconsistent, "no outer dart avoids the vertex");
}

HennebergSequence reverse_core(const PlaneGraph& g, bool plus_one,
                               const Prescription& p) {
  if (plus_one) {
    int m = g.m();
    if (!(m == 2 * g.n - 2 && sparsity_rank(g.n, g.edges) == 2 * g.n - 3))
      throw Error(ErrorCode::NotLamanPlusOne, "input is not Laman-plus-one");
  } else {
    if (!is_laman(g.n, g.edges))
      throw Error(ErrorCode::NotLaman, "input is not minimally rigid");
    validate_prescription(g, p);
  }

  std::vector<char> keep(g.n, 0);
  for (int v : p.vertices) keep[v] = 1;
  int base_size = plus_one ? 4
                  : p.kind == Prescription::Kind::Triangle ? 3
                                                           : 2;

  RotationEditor ed = RotationEditor::from_graph(g);
  const auto& ow = g.faces[g.outer_face][0];
  std::pair<int, int> outer_dart = {g.dart_tail(ow), g.dart_head(ow)};

  std::vector<HennebergStep> removal_order;

  while (ed.num_vertices() > base_size) {
    bool progressed = false;
    for (int want_deg = 2; want_deg <= 3 && !progressed; ++want_deg) {
      for (int v = 0; v < ed.id_space() && !progressed; ++v) {
        if (!ed.alive(v) || keep[v] || ed.degree(v) != want_deg) continue;
        std::vector<int> nbrs = ed.rot(v);
        std::vector<int> preds;
        for (int u : nbrs) preds.push_back(ed.ccw_pred(u, v));
        std::pair<int, int> post_witness = outer_dart;
        std::pair<int, int> next_witness = pick_witness_avoiding(ed, outer_dart, v);

        if (want_deg == 2) {
          ed.remove_vertex(v);
          HennebergStep st;
          st.kind = StepKind::I;
          st.v = v;
          st.nbrs = nbrs;
          st.pred = preds;
          st.outer_witness = post_witness;
          removal_order.push_back(std::move(st));
          outer_dart = next_witness;
          progressed = true;
          break;
        }

        // degree 3: remove and try to put one edge back between neighbors
        ed.remove_vertex(v);
        std::vector<int> s = nbrs;
        std::sort(s.begin(), s.end());
        std::pair<int, int> pairs[3] = {{s[0], s[1]}, {s[0], s[2]}, {s[1], s[2]}};
        bool placed = false;
        for (auto [x, y] : pairs) {
          if (ed.has_edge(x, y)) continue;
          int px = preds[std::find(nbrs.begin(), nbrs.end(), x) - nbrs.begin()];
          int py = preds[std::find(nbrs.begin(), nbrs.end(), y) - nbrs.begin()];
          ed.add_edge(x, px, y, py);
          bool ok = plus_one ? plus_one_counts(ed) : laman_counts(ed);
          if (ok) {
            HennebergStep st;
            st.kind = StepKind::II;
            st.v = v;
            st.nbrs = nbrs;
            st.pred = preds;
            st.split_edge = {x, y};
            st.outer_witness = post_witness;
            removal_order.push_back(std::move(st));
            outer_dart = next_witness;
            placed = true;
            progressed = true;
            break;
          }
          ed.remove_edge(x, y);
        }
        if (!placed) ed.add_vertex(v, nbrs, preds);  // restore, try next vertex
      }
    }
    if (!progressed)
      throw Error(ErrorCode::StepInconsistent, "no removable vertex found");
  }

  HennebergSequence seq;
  seq.id_space = g.n;
  seq.base.vertices = ed.alive_vertices();
  seq.base.rot.resize(g.n);
  for (int v : seq.base.vertices) seq.base.rot[v] = ed.rot(v);
  seq.base.outer_witness = outer_dart;
  seq.steps.assign(removal_order.rbegin(), removal_order.rend());
  return seq;
}

}  // namespace

HennebergSequence reverse_sequence(const PlaneGraph& g, const Prescription& p) {
  return reverse_core(g, false, p);
}

HennebergSequence reverse_sequence_plus_one(const PlaneGraph& g) {
  return reverse_core(g, true, Prescription::none());
}

PlaneGraph replay(const HennebergSequence& seq) {
  SequenceRunner runner(seq, true);
  while (!runner.done()) runner.apply_next();
  return runner.current_graph();
}

HennebergSequence normalize_sequence_ids(const HennebergSequence& seq,
                                         std::vector<int>* orig_of) {
  std::vector<int> order = seq.base.vertices;  // already sorted
  for (const auto& st : seq.steps) order.push_back(st.v);
  if (static_cast<int>(order.size()) != seq.id_space)
    throw Error(ErrorCode::StepInconsistent, "sequence does not cover id space");
  std::vector<int> to_new(seq.id_space, -1);
  for (int i = 0; i < static_cast<int>(order.size()); ++i) {
    int v = order[i];
    if (v < 0 || v >= seq.id_space || to_new[v] >= 0)
      throw Error(ErrorCode::StepInconsistent, "bad vertex id in sequence");
    to_new[v] = i;
  }
  auto remap = [&](int v) { return to_new[v]; };
  auto remap_pair = [&](std::pair<int, int> p) {
    return std::pair<int, int>{to_new[p.first], to_new[p.second]};
  };

  HennebergSequence out;
  out.id_space = seq.id_space;
  out.base.vertices.resize(seq.base.vertices.size());
  out.base.rot.resize(seq.id_space);
  for (size_t i = 0; i < seq.base.vertices.size(); ++i) {
    int v = seq.base.vertices[i];
    int nv = to_new[v];
    out.base.vertices[i] = nv;  // 0..k-1 in order, stays sorted
    auto& r = out.base.rot[nv];
    for (int u : seq.base.rot[v]) r.push_back(remap(u));
  }
  out.base.outer_witness = remap_pair(seq.base.outer_witness);
  out.steps.reserve(seq.steps.size());
  for (const auto& st : seq.steps) {
    HennebergStep ns = st;
    ns.v = remap(st.v);
    for (auto& u : ns.nbrs) u = remap(u);
    for (auto& u : ns.pred) u = remap(u);
    if (st.kind == StepKind::II) {
      ns.split_edge = remap_pair(st.split_edge);
      if (ns.split_edge.first > ns.split_edge.second)
        std::swap(ns.split_edge.first, ns.split_edge.second);
    }
    ns.outer_witness = remap_pair(st.outer_witness);
    out.steps.push_back(std::move(ns));
  }
  if (orig_of) *orig_of = order;
  return out;
}

// ---------- outer-face augmentation ----------

AugmentResult augment_outer_triangle(const PlaneGraph& g) {
  const auto& walk = g.faces[g.outer_face];
  int h = static_cast<int>(walk.size());
  if (h < 3)
    throw Error(ErrorCode::OuterFaceTooSmall, "outer walk shorter than 3");
  if (h == 3) return {g, g.n};

  // three distinct attachment vertices near walk positions 0, h/3, 2h/3,
  // kept in walk order so the new triangle's rotations close up correctly
  std::vector<int> heads(h);
  for (int i = 0; i < h; ++i) heads[i] = g.dart_head(walk[i]);
  auto pick_from = [&](int start, const std::set<int>& used) {
    for (int i = start; i < h; ++i)
      if (!used.count(heads[i])) return i;
    return -1;
  };
  std::set<int> used;
  int i0 = pick_from(0, used);
  used.insert(heads[i0]);
  int i1 = pick_from(std::max(i0 + 1, h / 3), used);
  if (i1 < 0) throw Error(ErrorCode::OuterFaceTooSmall, "fewer than 3 distinct");
  used.insert(heads[i1]);
  int i2 = pick_from(std::max(i1 + 1, 2 * h / 3), used);
  if (i2 < 0) throw Error(ErrorCode::OuterFaceTooSmall, "fewer than 3 distinct");

  int n = g.n;
  int a = n, b = n + 1, c = n + 2;
  RotationEditor ed(n + 3);
  for (int v = 0; v < n; ++v) ed.set_rotation(v, g.rot[v]);
  // vertex counter: set_rotation marked originals alive; now place the new
  // triangle: each new vertex sees [cw-pred on triangle, attachment, cw-succ]
  int occ[3] = {i0, i1, i2};
  int nv[3] = {a, b, c};
  ed.set_rotation(a, {c, heads[i0], b});
  ed.set_rotation(b, {a, heads[i1], c});
  ed.set_rotation(c, {b, heads[i2], a});
  for (int t = 0; t < 3; ++t) {
    int i = occ[t];
    int o = heads[i];
    int w = g.dart_head(walk[(i + 1) % h]);  // next on outer walk
    ed.insert_neighbor_after(o, nv[t], w);
  }
  PlaneGraph out = ed.to_plane_graph({a, b});
  return {std::move(out), n};
}

}  // namespace ppt
