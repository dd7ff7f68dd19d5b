#include "ppt/rigidity.hpp"

#include <algorithm>
#include <set>

namespace ppt {

SparsityOracle::SparsityOracle(int n) : n_(n), pebbles_(n, 2), out_(n) {
  if (n < 1) throw Error(ErrorCode::BadSize, "need at least one vertex");
}

// DFS over the orientation from root looking for a free pebble at some
// vertex other than avoid1/avoid2; on success reverses the path to bring
// one pebble to root.
bool SparsityOracle::find_pebble(int root, int avoid1, int avoid2) {
  std::vector<int> parent(n_, -2);
  std::vector<int> stack{root};
  parent[root] = -1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : out_[v]) {
      if (parent[w] != -2) continue;
      parent[w] = v;
      if (w != avoid1 && w != avoid2 && pebbles_[w] > 0) {
        // reverse edges along root ->* w
        int cur = w;
        while (parent[cur] != -1) {
          int p = parent[cur];
          auto it = std::find(out_[p].begin(), out_[p].end(), cur);
          out_[p].erase(it);
          out_[cur].push_back(p);
          cur = p;
        }
        pebbles_[w] -= 1;
        pebbles_[root] += 1;
        return true;
      }
      stack.push_back(w);
    }
  }
  return false;
}

bool SparsityOracle::gather(int target_total, int u, int v) {
  while (pebbles_[u] + pebbles_[v] < target_total) {
    if (pebbles_[u] < 2 && find_pebble(u, u, v)) continue;
    if (pebbles_[v] < 2 && find_pebble(v, u, v)) continue;
    return false;
  }
  return true;
}

bool SparsityOracle::would_reject(int u, int v) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v)
    throw Error(ErrorCode::BadSize, "bad edge endpoints");
  return !gather(4, u, v);
}

bool SparsityOracle::add_edge(int u, int v) {
  if (would_reject(u, v)) return false;
  if (pebbles_[u] == 0) std::swap(u, v);
  pebbles_[u] -= 1;
  out_[u].push_back(v);
  rank_ += 1;
  return true;
}

int sparsity_rank(int n, const std::vector<std::pair<int, int>>& edges) {
  SparsityOracle o(n);
  auto sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  for (auto [u, v] : sorted) o.add_edge(u, v);
  return o.rank();
}

bool is_laman(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 2) return false;
  if (static_cast<int>(edges.size()) != 2 * n - 3) return false;
  return sparsity_rank(n, edges) == 2 * n - 3;
}

bool brute_force_is_laman(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 2 || n > 20)
    throw Error(ErrorCode::TooLarge, "brute force limited to n <= 20");
  int m = static_cast<int>(edges.size());
  if (m != 2 * n - 3) return false;
  // every vertex subset with k >= 2 vertices spans at most 2k-3 edges
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    int k = __builtin_popcount(mask);
    if (k < 2) continue;
    int span = 0;
    for (auto [u, v] : edges)
      if ((mask >> u & 1) && (mask >> v & 1)) ++span;
    if (span > 2 * k - 3) return false;
  }
  return true;
}

Classification classify(int n, const std::vector<std::pair<int, int>>& edges) {
  Classification c;
  int m = static_cast<int>(edges.size());
  if (n < 2) {
    c.cls = RigidityClass::Flexible;
    return c;
  }
  int r = sparsity_rank(n, edges);
  if (r < 2 * n - 3) {
    c.cls = RigidityClass::Flexible;
    return c;
  }
  if (m == 2 * n - 3) {
    c.cls = RigidityClass::Laman;
    return c;
  }
  if (m == 2 * n - 2) {
    // unique circuit: the edges whose removal leaves a minimally rigid graph
    for (int i = 0; i < m; ++i) {
      std::vector<std::pair<int, int>> rest;
      rest.reserve(m - 1);
      for (int j = 0; j < m; ++j)
        if (j != i) rest.push_back(edges[j]);
      if (is_laman(n, rest)) c.circuit_edges.push_back(edges[i]);
    }
    std::sort(c.circuit_edges.begin(), c.circuit_edges.end());
    std::set<int> verts;
    for (auto [u, v] : c.circuit_edges) {
      verts.insert(u);
      verts.insert(v);
    }
    c.circuit_vertices.assign(verts.begin(), verts.end());
    c.cls = (static_cast<int>(c.circuit_edges.size()) == m &&
             static_cast<int>(c.circuit_vertices.size()) == n)
                ? RigidityClass::Circuit
                : RigidityClass::LamanPlusOne;
    return c;
  }
  c.cls = RigidityClass::Overbraced;
  return c;
}

std::vector<std::vector<int>> rigid_components(
    int n, const std::vector<std::pair<int, int>>& edges) {
  int m = static_cast<int>(edges.size());
  if (sparsity_rank(n, edges) != m)
    throw Error(ErrorCode::NotIndependent, "graph has a dependent edge");
  SparsityOracle o(n);
  std::set<std::pair<int, int>> eset;
  for (auto [u, v] : edges) {
    o.add_edge(u, v);
    eset.insert({std::min(u, v), std::max(u, v)});
  }
  auto pair_rigid = [&](int x, int y) {
    if (x == y) return true;
    if (eset.count({std::min(x, y), std::max(x, y)})) return true;
    return o.would_reject(x, y);
  };
  std::set<std::vector<int>> comps;
  std::vector<char> done(m, 0);
  for (int i = 0; i < m; ++i) {
    if (done[i]) continue;
    auto [u, v] = edges[i];
    std::vector<int> comp;
    for (int w = 0; w < n; ++w)
      if (pair_rigid(u, w) && pair_rigid(v, w)) comp.push_back(w);
    std::vector<char> in_comp(n, 0);
    for (int w : comp) in_comp[w] = 1;
    for (int j = 0; j < m; ++j)
      if (!done[j] && in_comp[edges[j].first] && in_comp[edges[j].second])
        done[j] = 1;
    comps.insert(comp);
  }
  return std::vector<std::vector<int>>(comps.begin(), comps.end());
}

const char* rigidity_class_name(RigidityClass c) {
  switch (c) {
    case RigidityClass::Flexible: return "flexible";
    case RigidityClass::Laman: return "laman";
    case RigidityClass::LamanPlusOne: return "laman-plus-one";
    case RigidityClass::Circuit: return "circuit";
    case RigidityClass::Overbraced: return "overbraced";
  }
  return "?";
}

}  // namespace ppt
