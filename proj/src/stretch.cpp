#include "ppt/stretch.hpp"

#include <Eigen/SparseCore>
#include <Eigen/SparseLU>
#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <string>
#include <utility>
#include <vector>

#include "ppt/error.hpp"
#include "ppt/henneberg.hpp"
#include "ppt/rng.hpp"

namespace ppt {

namespace {

struct Entry {
  int v;
  char big;
};

// Cut one face into triangles.  While a (sub)face has more than three
// sides, take the smallest-id vertex whose angle there is big and join it
// to the corner opposite its side chain; the four sub-angles created at
// the two endpoints are all small, so every subface keeps exactly three
// small angles and the recursion bottoms out at triangles.
void dissect_face(RotationEditor& ed, std::vector<Entry> face,
                  std::vector<std::pair<int, int>>& diagonals,
                  std::vector<int>& split_diagonal) {
  std::vector<std::vector<Entry>> stack;
  stack.push_back(std::move(face));
  while (!stack.empty()) {
    std::vector<Entry> f = std::move(stack.back());
    stack.pop_back();
    const int d = static_cast<int>(f.size());
    if (d <= 3) continue;
    int smalls = 0;
    for (const Entry& e : f) smalls += e.big ? 0 : 1;
    if (smalls != 3)
      throw Error(ErrorCode::LabelMismatch,
                  "face does not have exactly three small angles");
    int bi = -1;
    for (int i = 0; i < d; ++i)
      if (f[i].big && (bi < 0 || f[i].v < f[bi].v)) bi = i;
    // next / previous corner along the walk bound v's side chain
    int a = -1, b = -1;
    for (int s = 1; s < d && a < 0; ++s)
      if (!f[(bi + s) % d].big) a = (bi + s) % d;
    for (int s = 1; s < d && b < 0; ++s)
      if (!f[(bi - s + d) % d].big) b = (bi - s + d) % d;
    int c = -1;
    for (int i = 0; i < d && c < 0; ++i)
      if (!f[i].big && i != a && i != b) c = i;
    const int v = f[bi].v;
    const int opp = f[c].v;
    // v's wedge on this face runs ccw from its outgoing walk edge to its
    // incoming one; the diagonal goes right after the outgoing neighbor
    ed.add_edge(v, f[(bi + 1) % d].v, opp, f[(c + 1) % d].v);
    diagonals.emplace_back(std::min(v, opp), std::max(v, opp));
    split_diagonal[v] = opp;
    auto slice = [&](int from, int to) {
      std::vector<Entry> s;
      for (int j = from;; j = (j + 1) % d) {
        s.push_back(f[j]);
        if (j == to) break;
      }
      s.front().big = 0;
      s.back().big = 0;
      return s;
    };
    stack.push_back(slice(bi, c));
    stack.push_back(slice(c, bi));
  }
}

}  // namespace

AuxDigraph build_aux_digraph(const PlaneGraph& g, const CptLabeling& lab,
                             std::uint64_t weight_seed) {
  if (static_cast<int>(lab.big.size()) != 2 * g.m())
    throw Error(ErrorCode::BadSize, "labeling size does not match the graph");
  AuxDigraph d;
  d.boundary.assign(g.n, 0);
  for (int dd : g.faces[g.outer_face]) {
    int hv = g.dart_head(dd);
    if (d.boundary[hv])
      throw Error(ErrorCode::RepeatedBoundaryVertex,
                  "outer walk visits vertex " + std::to_string(hv) + " twice");
    d.boundary[hv] = 1;
    d.boundary_order.push_back(hv);
  }
  d.split_diagonal.assign(g.n, -1);

  RotationEditor ed = RotationEditor::from_graph(g);
  for (int f = 0; f < g.num_faces(); ++f) {
    if (f == g.outer_face) continue;
    std::vector<Entry> seq;
    seq.reserve(g.faces[f].size());
    for (int dd : g.faces[f]) seq.push_back({g.dart_head(dd), lab.big[dd]});
    dissect_face(ed, std::move(seq), d.diagonals, d.split_diagonal);
  }
  int w0 = g.faces[g.outer_face][0];
  d.dgraph = ed.to_plane_graph({g.dart_tail(w0), g.dart_head(w0)});
  for (int f = 0; f < d.dgraph.num_faces(); ++f)
    if (f != d.dgraph.outer_face && d.dgraph.faces[f].size() != 3)
      throw Error(ErrorCode::StepInconsistent,
                  "dissection left a non-triangular face");

  d.out.assign(g.n, {});
  for (int v = 0; v < g.n; ++v) {
    if (d.boundary[v]) continue;
    int a = lab.big_angle_of(g, v);
    if (a >= 0) {
      if (d.split_diagonal[v] < 0)
        throw Error(ErrorCode::StepInconsistent,
                    "big angle at vertex " + std::to_string(v) +
                        " was never dissected");
      auto wedge = g.angle_wedge(a);
      d.out[v] = {wedge.first, wedge.second, d.split_diagonal[v]};
    } else {
      d.out[v] = g.rot[v];
    }
  }

  d.w.assign(g.n, {});
  std::uint64_t s = weight_seed;
  for (int v = 0; v < g.n; ++v) {
    d.w[v].assign(d.out[v].size(), 1.0);
    if (weight_seed != 0)
      for (double& x : d.w[v]) x = 0.5 + rng_unit(s);
  }
  return d;
}

namespace {

struct FlowNet {
  struct Arc {
    int to, cap, rev;
  };
  std::vector<std::vector<Arc>> adj;
  void add(int a, int b, int cap) {
    adj[a].push_back({b, cap, static_cast<int>(adj[b].size())});
    adj[b].push_back({a, 0, static_cast<int>(adj[a].size()) - 1});
  }
};

}  // namespace

ConnectivityWitness check_boundary_3connectivity(const AuxDigraph& d) {
  const int n = static_cast<int>(d.boundary.size());
  const int sink = 2 * n;
  for (int s = 0; s < n; ++s) {
    if (d.boundary[s]) continue;
    // split every vertex into in/out with capacity 1 (3 at the source) so
    // flow value = number of vertex-disjoint directed paths to the boundary
    FlowNet net;
    net.adj.assign(2 * n + 1, {});
    for (int v = 0; v < n; ++v) net.add(2 * v, 2 * v + 1, v == s ? 3 : 1);
    for (int v = 0; v < n; ++v)
      for (int u : d.out[v]) net.add(2 * v + 1, 2 * u, 3);
    for (int b : d.boundary_order) net.add(2 * b + 1, sink, 1);

    int flow = 0;
    while (flow < 3) {
      std::vector<int> pv(2 * n + 1, -1), pe(2 * n + 1, -1);
      std::deque<int> q;
      q.push_back(2 * s);
      pv[2 * s] = 2 * s;
      while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (int i = 0; i < static_cast<int>(net.adj[x].size()); ++i) {
          const auto& arc = net.adj[x][i];
          if (arc.cap > 0 && pv[arc.to] < 0) {
            pv[arc.to] = x;
            pe[arc.to] = i;
            q.push_back(arc.to);
          }
        }
      }
      if (pv[sink] < 0) break;
      for (int x = sink; x != 2 * s; x = pv[x]) {
        auto& arc = net.adj[pv[x]][pe[x]];
        arc.cap -= 1;
        net.adj[x][arc.rev].cap += 1;
      }
      ++flow;
    }
    if (flow < 3) {
      ConnectivityWitness wit;
      wit.ok = false;
      wit.vertex = s;
      std::vector<char> seen(2 * n + 1, 0);
      std::deque<int> q;
      q.push_back(2 * s);
      seen[2 * s] = 1;
      while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (const auto& arc : net.adj[x])
          if (arc.cap > 0 && !seen[arc.to]) {
            seen[arc.to] = 1;
            q.push_back(arc.to);
          }
      }
      // saturated split arcs crossing the cut are the separating vertices;
      // a reachable boundary out-node means its unit edge to the sink is cut
      std::vector<int> cut;
      for (int v = 0; v < n; ++v)
        if (v != s && seen[2 * v] && !seen[2 * v + 1]) cut.push_back(v);
      for (int b : d.boundary_order)
        if (seen[2 * b + 1]) cut.push_back(b);
      if (!cut.empty()) wit.cut.first = cut[0];
      if (cut.size() > 1) wit.cut.second = cut[1];
      return wit;
    }
  }
  return {};
}

Embedding tutte_embed(const AuxDigraph& d,
                      const std::vector<RPoint>& boundary_positions,
                      const TutteOptions& opt) {
  const int n = static_cast<int>(d.boundary.size());
  const int h = static_cast<int>(d.boundary_order.size());
  if (static_cast<int>(boundary_positions.size()) != h)
    throw Error(ErrorCode::BadSize, "expected one position per boundary vertex");
  for (int i = 0; i < h; ++i)
    if (orientation(boundary_positions[i], boundary_positions[(i + 1) % h],
                    boundary_positions[(i + 2) % h]) >= 0)
      throw Error(ErrorCode::DegenerateGraph,
                  "boundary positions must be strictly convex in walk order");
  auto conn = check_boundary_3connectivity(d);
  if (!conn.ok)
    throw Error(ErrorCode::NotThreeConnected,
                "vertex " + std::to_string(conn.vertex) +
                    " has fewer than three disjoint paths to the boundary "
                    "(cut: " + std::to_string(conn.cut.first) + ", " +
                    std::to_string(conn.cut.second) + ")");

  Embedding pos(n);
  for (int i = 0; i < h; ++i) pos[d.boundary_order[i]] = boundary_positions[i];
  std::vector<int> idx(n, -1);
  int k = 0;
  for (int v = 0; v < n; ++v)
    if (!d.boundary[v]) idx[v] = k++;
  if (k == 0) return pos;

  if (opt.exact) {
    std::vector<std::vector<Rat>> A(k, std::vector<Rat>(k, Rat(0)));
    std::vector<Rat> bx(k, Rat(0)), by(k, Rat(0));
    for (int v = 0; v < n; ++v) {
      if (d.boundary[v]) continue;
      int i = idx[v];
      Rat wsum = 0;
      for (std::size_t j = 0; j < d.out[v].size(); ++j) {
        int u = d.out[v][j];
        Rat wj = rat_from_double(d.w[v][j]);
        wsum += wj;
        if (d.boundary[u]) {
          bx[i] += wj * pos[u].x;
          by[i] += wj * pos[u].y;
        } else {
          A[i][idx[u]] -= wj;
        }
      }
      A[i][i] = wsum;
    }
    for (int c = 0; c < k; ++c) {
      int p = -1;
      for (int r = c; r < k && p < 0; ++r)
        if (A[r][c] != 0) p = r;
      if (p < 0)
        throw Error(ErrorCode::SolverFailure, "singular equilibrium system");
      std::swap(A[p], A[c]);
      std::swap(bx[p], bx[c]);
      std::swap(by[p], by[c]);
      for (int r = c + 1; r < k; ++r) {
        if (A[r][c] == 0) continue;
        Rat f = A[r][c] / A[c][c];
        A[r][c] = 0;
        for (int c2 = c + 1; c2 < k; ++c2) A[r][c2] -= f * A[c][c2];
        bx[r] -= f * bx[c];
        by[r] -= f * by[c];
      }
    }
    std::vector<Rat> xs(k), ys(k);
    for (int r = k - 1; r >= 0; --r) {
      Rat sx = bx[r], sy = by[r];
      for (int c = r + 1; c < k; ++c) {
        sx -= A[r][c] * xs[c];
        sy -= A[r][c] * ys[c];
      }
      xs[r] = sx / A[r][r];
      ys[r] = sy / A[r][r];
    }
    for (int v = 0; v < n; ++v)
      if (!d.boundary[v]) pos[v] = {xs[idx[v]], ys[idx[v]]};
    return pos;
  }

  std::vector<Eigen::Triplet<double>> trips;
  Eigen::VectorXd bx = Eigen::VectorXd::Zero(k);
  Eigen::VectorXd by = Eigen::VectorXd::Zero(k);
  for (int v = 0; v < n; ++v) {
    if (d.boundary[v]) continue;
    int i = idx[v];
    double wsum = 0;
    for (std::size_t j = 0; j < d.out[v].size(); ++j) {
      int u = d.out[v][j];
      double wj = d.w[v][j];
      wsum += wj;
      if (d.boundary[u]) {
        bx[i] += wj * rat_to_double(pos[u].x);
        by[i] += wj * rat_to_double(pos[u].y);
      } else {
        trips.emplace_back(i, idx[u], -wj);
      }
    }
    trips.emplace_back(i, i, wsum);
  }
  Eigen::SparseMatrix<double> A(k, k);
  A.setFromTriplets(trips.begin(), trips.end());
  Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
  lu.analyzePattern(A);
  lu.factorize(A);
  if (lu.info() != Eigen::Success)
    throw Error(ErrorCode::SolverFailure, "sparse factorization failed");
  Eigen::VectorXd xs = lu.solve(bx);
  Eigen::VectorXd ys = lu.solve(by);
  if (lu.info() != Eigen::Success)
    throw Error(ErrorCode::SolverFailure, "sparse solve failed");

  std::vector<double> X(n), Y(n);
  for (int v = 0; v < n; ++v) {
    if (d.boundary[v]) {
      X[v] = rat_to_double(pos[v].x);
      Y[v] = rat_to_double(pos[v].y);
    } else {
      X[v] = xs[idx[v]];
      Y[v] = ys[idx[v]];
    }
  }
  double xlo = X[0], xhi = X[0], ylo = Y[0], yhi = Y[0];
  for (int v = 0; v < n; ++v) {
    xlo = std::min(xlo, X[v]);
    xhi = std::max(xhi, X[v]);
    ylo = std::min(ylo, Y[v]);
    yhi = std::max(yhi, Y[v]);
  }
  double diam = std::max(xhi - xlo, yhi - ylo);
  if (!(diam > 0))
    throw Error(ErrorCode::SolverFailure, "degenerate coordinate range");
  double worst = 0;
  for (int v = 0; v < n; ++v) {
    if (d.boundary[v]) continue;
    double rx = 0, ry = 0;
    for (std::size_t j = 0; j < d.out[v].size(); ++j) {
      int u = d.out[v][j];
      rx += d.w[v][j] * (X[v] - X[u]);
      ry += d.w[v][j] * (Y[v] - Y[u]);
    }
    worst = std::max({worst, std::abs(rx), std::abs(ry)});
  }
  if (worst > opt.residual_tol * diam)
    throw Error(ErrorCode::SolverFailure,
                "equilibrium residual " + std::to_string(worst / diam) +
                    " exceeds tolerance");
  for (int v = 0; v < n; ++v)
    if (!d.boundary[v]) pos[v] = {rat_from_double(X[v]), rat_from_double(Y[v])};
  return pos;
}

Embedding stretch_cpt(const PlaneGraph& g, const CptLabeling& lab,
                      const StretchConfig& cfg) {
  auto rep = validate_cpt(g, lab);
  if (!rep.ok())
    throw Error(ErrorCode::LabelMismatch,
                "input labeling violates the angle axioms");

  // boundary: regular polygon on the unit circle, first outer-walk vertex
  // at 12 o'clock, subsequent walk vertices clockwise
  const int h = static_cast<int>(g.faces[g.outer_face].size());
  const double pi = std::acos(-1.0);
  std::vector<RPoint> bpos(h);
  for (int i = 0; i < h; ++i) {
    double ang = pi / 2 - 2 * pi * i / h;
    bpos[i] = {rat_from_double(std::cos(ang)), rat_from_double(std::sin(ang))};
  }

  std::string last = "no attempt made";
  for (int attempt = 0; attempt <= cfg.max_retries; ++attempt) {
    std::uint64_t seed = cfg.weight_seed;
    if (attempt > 0) {
      seed = cfg.weight_seed +
             0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(attempt);
      if (seed == 0) seed = static_cast<std::uint64_t>(attempt);
    }
    AuxDigraph d = build_aux_digraph(g, lab, seed);
    Embedding emb;
    try {
      emb = tutte_embed(d, bpos, TutteOptions{cfg.exact, cfg.residual_tol});
    } catch (const Error& e) {
      if (e.code() == ErrorCode::SolverFailure && attempt < cfg.max_retries) {
        last = e.what();
        continue;  // perturbed weights may fix conditioning
      }
      throw;
    }
    auto geo = verify_geometry(emb, g);
    if (geo.rotation_ok && geo.non_crossing && !geo.degenerate &&
        geo.labeling.big == lab.big)
      return emb;
    last = geo.rotation_ok
               ? (geo.non_crossing ? (geo.degenerate
                                          ? "degenerate angle in embedding"
                                          : "derived labeling differs")
                                   : "edges cross")
               : "rotation order not realized";
  }
  throw Error(ErrorCode::LabelMismatch,
              "stretched coordinates fail verification: " + last);
}

}  // namespace ppt
