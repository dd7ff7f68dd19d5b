#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "ppt/cpt.hpp"
#include "ppt/henneberg.hpp"
#include "ppt/plane_graph.hpp"
#include "ppt/verify_geom.hpp"

namespace ppt {

// On-disk description of a plane graph with optional coordinate / labeling
// layers.  JSON with fixed field order on output; coordinates are exact
// rational strings ("3/4", "-2", "0.5").  Angle labels are (vertex,
// face-index, big) triples, face indices as produced by the builder.
struct GraphDocument {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> rotations;
  std::vector<int> outer_face;  // ccw vertex cycle
  std::optional<Embedding> coords;
  std::optional<std::vector<std::tuple<int, int, bool>>> cpt;
  std::optional<int> prescribed_nonpointed;
};

GraphDocument parse_document(const std::string& text);  // ParseError on bad input
std::string serialize_document(const GraphDocument& doc);

PlaneGraph document_graph(const GraphDocument& doc);
CptLabeling document_labeling(const GraphDocument& doc, const PlaneGraph& g);
GraphDocument make_document(const PlaneGraph& g, const Embedding* coords = nullptr,
                            const CptLabeling* lab = nullptr);

enum class GenKind { laman, circuit };

struct Generated {
  PlaneGraph graph;
  HennebergSequence sequence;  // forward construction, insertions interior only
};

// Deterministic random instance with a triangular outer face on vertices
// 0,1,2.  laman grows a triangle by steps (kind I with probability 0.6,
// kind II when an eligible interior edge exists); circuit grows a K4 by
// edge splits only.
Generated generate_instance(int n, std::uint64_t seed,
                            GenKind kind = GenKind::laman);
GraphDocument generate_plane_laman(int n, std::uint64_t seed,
                                   GenKind kind = GenKind::laman);

// Deterministic standalone SVG; edges as segments, vertices as circles,
// one arc per big angle when a labeling is supplied.
std::string render_svg(const Embedding& pts, const PlaneGraph& g,
                       const CptLabeling* lab = nullptr);

struct RunConfig {
  std::uint64_t seed = 1;
  bool random_weights = false;
  double tolerance = 1e-10;
  std::string method = "tutte";
  int n_limit = 12;  // cap for exponential checks
};

}  // namespace ppt
