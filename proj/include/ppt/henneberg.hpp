#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ppt/plane_graph.hpp"

namespace ppt {

enum class StepKind { I, II };

// One insertion step.  `nbrs` is the ccw rotation of the new vertex after
// the step; `pred[i]` is the neighbor immediately ccw-before the new vertex
// in rot[nbrs[i]] after the step (pins the insertion wedge).  Kind II first
// removes `split_edge`, then inserts a degree-3 vertex into the merged
// face.  `outer_witness` is a directed edge lying on the outer face walk of
// the post-step graph.
struct HennebergStep {
  StepKind kind = StepKind::I;
  int v = -1;
  std::vector<int> nbrs;
  std::vector<int> pred;
  std::pair<int, int> split_edge{-1, -1};
  std::pair<int, int> outer_witness{-1, -1};
};

// Starting graph of a sequence: a single edge, a triangle, or a K4.
// Rotations are indexed by original vertex id (ids need not be contiguous).
struct BaseGraph {
  std::vector<int> vertices;  // sorted alive ids
  std::vector<std::vector<int>> rot;
  std::pair<int, int> outer_witness{-1, -1};
};

struct HennebergSequence {
  int id_space = 0;  // all ids are < id_space; equals n of the target graph
  BaseGraph base;
  std::vector<HennebergStep> steps;  // replay (insertion) order
};

struct Prescription {
  enum class Kind { None, Pair, Triangle } kind = Kind::None;
  std::vector<int> vertices;
  static Prescription none() { return {}; }
  static Prescription pair(int a, int b) { return {Kind::Pair, {a, b}}; }
  static Prescription triangle(int a, int b, int c) {
    return {Kind::Triangle, {a, b, c}};
  }
};

// Editable rotation system over a fixed id space with alive/dead vertices.
// Callers use the high-level ops; symmetry is re-validated whenever a
// PlaneGraph is extracted.
class RotationEditor {
 public:
  explicit RotationEditor(int id_space);
  static RotationEditor from_graph(const PlaneGraph& g);
  static RotationEditor from_base(int id_space, const BaseGraph& b);

  int id_space() const { return static_cast<int>(rot_.size()); }
  bool alive(int v) const { return alive_[v]; }
  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return num_edges_; }
  const std::vector<int>& rot(int v) const { return rot_[v]; }
  int degree(int v) const { return static_cast<int>(rot_[v].size()); }
  bool has_edge(int u, int v) const;
  int ccw_pred(int v, int nbr) const;
  int ccw_succ(int v, int nbr) const;
  std::vector<int> alive_vertices() const;
  std::vector<std::pair<int, int>> edge_list() const;  // u < v, sorted

  void add_vertex(int v, const std::vector<int>& nbrs,
                  const std::vector<int>& preds);
  void remove_vertex(int v);
  void add_edge(int u, int pred_u, int v, int pred_v);
  void remove_edge(int u, int v);
  // low-level: declare v alive with an explicit rotation, no symmetry work
  void set_rotation(int v, std::vector<int> r);
  void insert_neighbor_after(int u, int nbr, int after);  // after=-1: append

  // face walk containing the dart u->v, as (tail, head) pairs
  std::vector<std::pair<int, int>> trace_face(int u, int v) const;
  int count_faces() const;
  bool euler_ok() const;

  // Compact alive ids (ascending) to 0..k-1 and build a validated graph
  // whose outer face is the one containing the witness dart.  Optional out
  // params receive the id maps (compact->original, original->compact).
  PlaneGraph to_plane_graph(std::pair<int, int> outer_witness,
                            std::vector<int>* orig_of = nullptr,
                            std::vector<int>* comp_of = nullptr) const;

 private:
  std::vector<std::vector<int>> rot_;
  std::vector<char> alive_;
  int num_vertices_ = 0;
  int num_edges_ = 0;
};

// Step-by-step forward execution of a sequence with validation, exposing
// the insertion context needed by labeling extension and geometric
// placement.
struct StepContext {
  int index = -1;
  const HennebergStep* step = nullptr;
  // Walk of the face the new vertex is inserted into (kind II: after the
  // split edge was removed), in original ids.
  std::vector<std::pair<int, int>> insertion_face;
  bool insertion_face_is_outer = false;
};

class SequenceRunner {
 public:
  // validate_counts: after every step check the Laman / plus-one edge count
  // and independence for the intermediate graph.
  SequenceRunner(const HennebergSequence& seq, bool validate_counts);
  bool done() const { return next_ == static_cast<int>(seq_->steps.size()); }
  int steps_applied() const { return next_; }
  const RotationEditor& editor() const { return ed_; }
  std::pair<int, int> outer_dart() const { return outer_dart_; }
  bool plus_one_mode() const { return plus_one_; }
  StepContext apply_next();
  PlaneGraph current_graph(std::vector<int>* orig_of = nullptr,
                           std::vector<int>* comp_of = nullptr) const;

 private:
  void validate_current(const char* where) const;
  const HennebergSequence* seq_;
  RotationEditor ed_;
  std::pair<int, int> outer_dart_;
  bool plus_one_ = false;
  bool validate_counts_;
  int next_ = 0;
};

// Peel a plane minimally rigid graph down to a base edge (or a prescribed
// pair / prescribed degree-3 triangle face), recording replayable steps.
HennebergSequence reverse_sequence(const PlaneGraph& g,
                                   const Prescription& p = Prescription::none());

// Peel a plane Laman-plus-one graph down to a K4.
HennebergSequence reverse_sequence_plus_one(const PlaneGraph& g);

PlaneGraph replay(const HennebergSequence& seq);

// Reindexes a sequence so base vertices come first (in sorted order)
// followed by each step's vertex in replay order; every prefix of the
// result then occupies a contiguous id range 0..k-1.  orig_of (if given)
// maps new ids back to the input's ids.
HennebergSequence normalize_sequence_ids(const HennebergSequence& seq,
                                         std::vector<int>* orig_of = nullptr);

struct AugmentResult {
  PlaneGraph graph;
  int original_n = 0;  // original ids are 0..original_n-1, unchanged
};

// Encloses the graph in a new triangle of three degree-3 vertices, each
// attached to one of three distinct outer-face vertices.  No-op (identity)
// if the outer face is already a triangle.
AugmentResult augment_outer_triangle(const PlaneGraph& g);

}  // namespace ppt
