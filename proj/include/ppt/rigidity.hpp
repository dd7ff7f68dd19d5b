#pragma once

#include <utility>
#include <vector>

#include "ppt/error.hpp"

namespace ppt {

// Incremental (2,3)-sparsity oracle.  Each vertex starts with 2 pebbles;
// inserting an edge requires gathering 4 pebbles on its endpoints and
// consumes one.  An edge whose insertion fails is dependent.
class SparsityOracle {
 public:
  explicit SparsityOracle(int n);
  // Tries to insert edge u-v; returns false (state unchanged in rank
  // terms) if the edge is dependent on those inserted so far.
  bool add_edge(int u, int v);
  // Would u-v be dependent?  Does not change the span.
  bool would_reject(int u, int v);
  int rank() const { return rank_; }
  int n() const { return n_; }

 private:
  bool gather(int target_total, int u, int v);
  bool find_pebble(int root, int avoid1, int avoid2);
  int n_;
  int rank_ = 0;
  std::vector<int> pebbles_;
  std::vector<std::vector<int>> out_;
};

int sparsity_rank(int n, const std::vector<std::pair<int, int>>& edges);

// Minimally rigid: m == 2n-3 and every edge independent.
bool is_laman(int n, const std::vector<std::pair<int, int>>& edges);

// Exhaustive check of the hereditary counts; n <= 20.
bool brute_force_is_laman(int n, const std::vector<std::pair<int, int>>& edges);

enum class RigidityClass { Flexible, Laman, LamanPlusOne, Circuit, Overbraced };

struct Classification {
  RigidityClass cls = RigidityClass::Flexible;
  // For LamanPlusOne / Circuit: the unique dependent circuit.
  std::vector<std::pair<int, int>> circuit_edges;
  std::vector<int> circuit_vertices;
};

Classification classify(int n, const std::vector<std::pair<int, int>>& edges);

// Vertex sets of the maximal rigid subgraphs of an independent graph
// (every edge lies in exactly one).  Throws NotIndependent otherwise.
std::vector<std::vector<int>> rigid_components(
    int n, const std::vector<std::pair<int, int>>& edges);

const char* rigidity_class_name(RigidityClass c);

}  // namespace ppt
