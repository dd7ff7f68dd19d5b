#include "ppt/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <utility>

#include "json.hpp"
#include "ppt/geometry.hpp"
#include "ppt/rng.hpp"

namespace ppt {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& msg) {
  throw Error(ErrorCode::ParseError, msg);
}

int as_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) bad(what + " must be an integer");
  return j.get<int>();
}

int as_vertex(const Json& j, int n, const std::string& what) {
  int v = as_int(j, what);
  if (v < 0 || v >= n) bad(what + " out of range [0, " + std::to_string(n) + ")");
  return v;
}

const Json& need(const Json& root, const char* name) {
  auto it = root.find(name);
  if (it == root.end()) bad(std::string("missing field '") + name + "'");
  return *it;
}

}  // namespace

GraphDocument parse_document(const std::string& text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const Json::parse_error& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) bad("top-level value must be an object");
  static const char* known[] = {"n",      "edges", "rotations",
                                "outer_face", "coords", "cpt",
                                "prescribed_nonpointed"};
  for (const auto& item : root.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || item.key() == k;
    if (!ok) bad("unknown field '" + item.key() + "'");
  }

  GraphDocument doc;
  doc.n = as_int(need(root, "n"), "n");
  if (doc.n < 0) bad("n must be nonnegative");

  const Json& je = need(root, "edges");
  if (!je.is_array()) bad("edges must be an array");
  for (std::size_t i = 0; i < je.size(); ++i) {
    const Json& e = je[i];
    std::string what = "edges[" + std::to_string(i) + "]";
    if (!e.is_array() || e.size() != 2) bad(what + " must be a pair");
    doc.edges.emplace_back(as_vertex(e[0], doc.n, what),
                           as_vertex(e[1], doc.n, what));
  }

  const Json& jr = need(root, "rotations");
  if (!jr.is_array()) bad("rotations must be an array");
  if (static_cast<int>(jr.size()) != doc.n)
    bad("rotations must list all " + std::to_string(doc.n) + " vertices");
  for (int v = 0; v < doc.n; ++v) {
    const Json& r = jr[v];
    std::string what = "rotations[" + std::to_string(v) + "]";
    if (!r.is_array()) bad(what + " must be an array");
    std::vector<int> row;
    for (std::size_t i = 0; i < r.size(); ++i)
      row.push_back(as_vertex(r[i], doc.n, what));
    doc.rotations.push_back(std::move(row));
  }

  const Json& jo = need(root, "outer_face");
  if (!jo.is_array() || jo.empty()) bad("outer_face must be a non-empty array");
  for (std::size_t i = 0; i < jo.size(); ++i)
    doc.outer_face.push_back(as_vertex(jo[i], doc.n, "outer_face"));

  if (root.contains("coords")) {
    const Json& jc = root["coords"];
    if (!jc.is_array() || static_cast<int>(jc.size()) != doc.n)
      bad("coords must list all " + std::to_string(doc.n) + " vertices");
    Embedding pts;
    for (int v = 0; v < doc.n; ++v) {
      const Json& p = jc[v];
      std::string what = "coords[" + std::to_string(v) + "]";
      if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
        bad(what + " must be a pair of rational strings");
      pts.push_back({parse_rat(p[0].get<std::string>()),
                     parse_rat(p[1].get<std::string>())});
    }
    doc.coords = std::move(pts);
  }

  if (root.contains("cpt")) {
    const Json& jl = root["cpt"];
    if (!jl.is_array()) bad("cpt must be an array");
    std::vector<std::tuple<int, int, bool>> lab;
    for (std::size_t i = 0; i < jl.size(); ++i) {
      const Json& t = jl[i];
      std::string what = "cpt[" + std::to_string(i) + "]";
      if (!t.is_array() || t.size() != 3) bad(what + " must be [vertex, face, big]");
      int v = as_vertex(t[0], doc.n, what);
      int f = as_int(t[1], what);
      if (f < 0) bad(what + " face must be nonnegative");
      bool big;
      if (t[2].is_boolean()) {
        big = t[2].get<bool>();
      } else {
        int b = as_int(t[2], what);
        if (b != 0 && b != 1) bad(what + " big flag must be 0 or 1");
        big = b != 0;
      }
      lab.emplace_back(v, f, big);
    }
    doc.cpt = std::move(lab);
  }

  if (root.contains("prescribed_nonpointed"))
    doc.prescribed_nonpointed =
        as_vertex(root["prescribed_nonpointed"], doc.n, "prescribed_nonpointed");

  return doc;
}

std::string serialize_document(const GraphDocument& doc) {
  Json j;
  j["n"] = doc.n;
  Json es = Json::array();
  for (const auto& e : doc.edges) es.push_back(Json::array({e.first, e.second}));
  j["edges"] = std::move(es);
  Json rs = Json::array();
  for (const auto& r : doc.rotations) rs.push_back(r);
  j["rotations"] = std::move(rs);
  j["outer_face"] = doc.outer_face;
  if (doc.coords) {
    Json cs = Json::array();
    for (const auto& p : *doc.coords)
      cs.push_back(Json::array({rat_to_string(p.x), rat_to_string(p.y)}));
    j["coords"] = std::move(cs);
  }
  if (doc.cpt) {
    Json ls = Json::array();
    for (const auto& [v, f, big] : *doc.cpt)
      ls.push_back(Json::array({v, f, big ? 1 : 0}));
    j["cpt"] = std::move(ls);
  }
  if (doc.prescribed_nonpointed)
    j["prescribed_nonpointed"] = *doc.prescribed_nonpointed;
  return j.dump(2) + "\n";
}

PlaneGraph document_graph(const GraphDocument& doc) {
  PlaneGraph g = build_plane_graph(doc.n, doc.rotations, doc.outer_face);
  std::vector<std::pair<int, int>> es = doc.edges;
  for (auto& e : es)
    if (e.first > e.second) std::swap(e.first, e.second);
  std::sort(es.begin(), es.end());
  if (es != g.edges) bad("edges field does not match the rotations");
  return g;
}

CptLabeling document_labeling(const GraphDocument& doc, const PlaneGraph& g) {
  if (!doc.cpt) bad("document has no cpt layer");
  CptLabeling lab;
  lab.big.assign(2 * g.m(), 0);
  std::vector<char> seen(2 * g.m(), 0);
  for (const auto& [v, f, big] : *doc.cpt) {
    if (f >= g.num_faces())
      bad("cpt references face " + std::to_string(f) + " of " +
          std::to_string(g.num_faces()));
    int angle = -1;
    for (int a : g.angles_at(v)) {
      if (g.face_of[a] != f) continue;
      if (angle >= 0)
        bad("vertex " + std::to_string(v) + " meets face " + std::to_string(f) +
            " more than once; labeling is ambiguous");
      angle = a;
    }
    if (angle < 0)
      bad("vertex " + std::to_string(v) + " has no angle on face " +
          std::to_string(f));
    if (seen[angle])
      bad("duplicate cpt entry for vertex " + std::to_string(v) + ", face " +
          std::to_string(f));
    seen[angle] = 1;
    lab.big[angle] = big ? 1 : 0;
  }
  for (int a = 0; a < 2 * g.m(); ++a)
    if (!seen[a]) bad("cpt does not cover every angle");
  return lab;
}

GraphDocument make_document(const PlaneGraph& g, const Embedding* coords,
                            const CptLabeling* lab) {
  GraphDocument doc;
  doc.n = g.n;
  doc.edges = g.edges;
  doc.rotations = g.rot;
  for (int d : g.faces[g.outer_face]) doc.outer_face.push_back(g.dart_head(d));
  std::reverse(doc.outer_face.begin(), doc.outer_face.end());
  if (coords) doc.coords = *coords;
  if (lab) {
    std::vector<std::tuple<int, int, bool>> entries;
    for (int v = 0; v < g.n; ++v)
      for (int a : g.angles_at(v))
        entries.emplace_back(v, g.face_of[a], lab->is_big(a));
    doc.cpt = std::move(entries);
  }
  return doc;
}

namespace {

// One eligible interior edge split: the edge, the face walk after its
// removal, and the third-neighbor candidates on that walk.
struct SplitOption {
  int x = -1, y = -1;
  std::vector<std::pair<int, int>> merged;
  std::vector<int> zs;
};

std::vector<SplitOption> split_options(const PlaneGraph& cur, RotationEditor& ed) {
  std::vector<SplitOption> opts;
  for (int e = 0; e < cur.m(); ++e) {
    if (cur.face_of[2 * e] == cur.outer_face ||
        cur.face_of[2 * e + 1] == cur.outer_face)
      continue;
    auto [x, y] = cur.edges[e];
    int px = ed.ccw_pred(x, y), py = ed.ccw_pred(y, x);
    ed.remove_edge(x, y);
    SplitOption o;
    o.x = x;
    o.y = y;
    o.merged = ed.trace_face(y, py);
    ed.add_edge(x, px, y, py);
    std::vector<int> heads;
    for (const auto& d : o.merged) heads.push_back(d.second);
    std::vector<int> sorted = heads;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      continue;  // merged face revisits a vertex; splitting here is unsafe
    for (int h : heads)
      if (h != x && h != y) o.zs.push_back(h);
    if (!o.zs.empty()) opts.push_back(std::move(o));
  }
  return opts;
}

HennebergStep make_split_step(int v, const SplitOption& o, int z) {
  HennebergStep st;
  st.kind = StepKind::II;
  st.v = v;
  st.split_edge = {std::min(o.x, o.y), std::max(o.x, o.y)};
  st.outer_witness = {1, 0};
  int len = static_cast<int>(o.merged.size());
  std::vector<std::pair<int, int>> picks;  // (walk position, neighbor)
  for (int i = 0; i < len; ++i) {
    int h = o.merged[i].second;
    if (h == o.x || h == o.y || h == z) picks.emplace_back(i, h);
  }
  std::sort(picks.begin(), picks.end());
  for (const auto& [pos, nbr] : picks) {
    st.nbrs.push_back(nbr);
    st.pred.push_back(o.merged[(pos + 1) % len].second);
  }
  return st;
}

}  // namespace

Generated generate_instance(int n, std::uint64_t seed, GenKind kind) {
  int base_n = kind == GenKind::circuit ? 4 : 3;
  if (n < base_n)
    throw Error(ErrorCode::BadSize,
                "generator needs n >= " + std::to_string(base_n));

  HennebergSequence seq;
  seq.id_space = n;
  if (kind == GenKind::circuit) {
    seq.base.vertices = {0, 1, 2, 3};
    seq.base.rot = {{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {0, 1, 2}};
  } else {
    seq.base.vertices = {0, 1, 2};
    seq.base.rot = {{1, 2}, {2, 0}, {0, 1}};
  }
  seq.base.outer_witness = {1, 0};

  RotationEditor ed = RotationEditor::from_base(n, seq.base);
  PlaneGraph cur = ed.to_plane_graph({1, 0});
  std::uint64_t st = seed;

  while (ed.num_vertices() < n) {
    int v = ed.num_vertices();
    bool split = kind == GenKind::circuit || rng_unit(st) >= 0.6;
    if (split) {
      auto opts = split_options(cur, ed);
      if (opts.empty()) {
        if (kind == GenKind::circuit)
          throw Error(ErrorCode::NoValidExtension,
                      "no interior edge is eligible for splitting");
        split = false;
      } else {
        const SplitOption& o = opts[rng_below(st, static_cast<int>(opts.size()))];
        int z = o.zs[rng_below(st, static_cast<int>(o.zs.size()))];
        HennebergStep step = make_split_step(v, o, z);
        ed.remove_edge(o.x, o.y);
        ed.add_vertex(v, step.nbrs, step.pred);
        seq.steps.push_back(std::move(step));
      }
    }
    if (!split) {
      int nf = cur.num_faces() - 1;
      int fi = rng_below(st, nf);
      int f = fi + (fi >= cur.outer_face ? 1 : 0);
      const std::vector<int>& walk = cur.faces[f];
      int len = static_cast<int>(walk.size());
      int i = rng_below(st, len);
      int j = rng_below(st, len - 1);
      if (j >= i) ++j;
      HennebergStep step;
      step.kind = StepKind::I;
      step.v = v;
      step.nbrs = {cur.dart_head(walk[i]), cur.dart_head(walk[j])};
      step.pred = {cur.dart_head(walk[(i + 1) % len]),
                   cur.dart_head(walk[(j + 1) % len])};
      step.outer_witness = {1, 0};
      ed.add_vertex(v, step.nbrs, step.pred);
      seq.steps.push_back(std::move(step));
    }
    cur = ed.to_plane_graph({1, 0});
  }
  return Generated{std::move(cur), std::move(seq)};
}

GraphDocument generate_plane_laman(int n, std::uint64_t seed, GenKind kind) {
  Generated gen = generate_instance(n, seed, kind);
  return make_document(gen.graph);
}

namespace {

std::string fmt2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::string render_svg(const Embedding& pts, const PlaneGraph& g,
                       const CptLabeling* lab) {
  if (static_cast<int>(pts.size()) != g.n)
    throw Error(ErrorCode::BadSize, "coordinate count does not match graph");
  double minx = 0, maxx = 0, miny = 0, maxy = 0;
  for (int v = 0; v < g.n; ++v) {
    double x = rat_to_double(pts[v].x), y = rat_to_double(pts[v].y);
    if (v == 0 || x < minx) minx = x;
    if (v == 0 || x > maxx) maxx = x;
    if (v == 0 || y < miny) miny = y;
    if (v == 0 || y > maxy) maxy = y;
  }
  double span = std::max({maxx - minx, maxy - miny, 1e-9});
  double scale = 760.0 / span, pad = 38.0;
  double width = (maxx - minx) * scale + 2 * pad;
  double height = (maxy - miny) * scale + 2 * pad;
  auto sx = [&](const Rat& x) { return pad + (rat_to_double(x) - minx) * scale; };
  auto sy = [&](const Rat& y) { return pad + (maxy - rat_to_double(y)) * scale; };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt2(width) +
         "\" height=\"" + fmt2(height) + "\" viewBox=\"0 0 " + fmt2(width) +
         " " + fmt2(height) + "\">\n";
  out += "<rect width=\"" + fmt2(width) + "\" height=\"" + fmt2(height) +
         "\" fill=\"#ffffff\"/>\n";
  for (const auto& [u, v] : g.edges)
    out += "<line x1=\"" + fmt2(sx(pts[u].x)) + "\" y1=\"" + fmt2(sy(pts[u].y)) +
           "\" x2=\"" + fmt2(sx(pts[v].x)) + "\" y2=\"" + fmt2(sy(pts[v].y)) +
           "\" stroke=\"#444444\" stroke-width=\"1.5\"/>\n";
  if (lab) {
    const double r = 13.0;
    for (int v = 0; v < g.n; ++v) {
      for (int a : g.angles_at(v)) {
        if (!lab->is_big(a)) continue;
        auto [w, u] = g.angle_wedge(a);
        double cx = sx(pts[v].x), cy = sy(pts[v].y);
        if (w == u) {  // full turn at a degree-1 vertex
          out += "<circle cx=\"" + fmt2(cx) + "\" cy=\"" + fmt2(cy) + "\" r=\"" +
                 fmt2(r) + "\" fill=\"none\" stroke=\"#d62728\"/>\n";
          continue;
        }
        RPoint dw = pts[w] - pts[v], du = pts[u] - pts[v];
        Rat cr = cross(dw, du);
        bool large = cr < 0 || (cr == 0 && dot(dw, du) > 0);
        auto tip = [&](const RPoint& d) {
          double dx = rat_to_double(d.x) * scale, dy = -rat_to_double(d.y) * scale;
          double len = std::hypot(dx, dy);
          return std::make_pair(cx + dx / len * r, cy + dy / len * r);
        };
        auto [x0, y0] = tip(dw);
        auto [x1, y1] = tip(du);
        out += "<path d=\"M " + fmt2(x0) + " " + fmt2(y0) + " A " + fmt2(r) +
               " " + fmt2(r) + " 0 " + (large ? "1" : "0") + " 1 " + fmt2(x1) +
               " " + fmt2(y1) + "\" fill=\"none\" stroke=\"#d62728\"/>\n";
      }
    }
  }
  for (int v = 0; v < g.n; ++v) {
    out += "<circle cx=\"" + fmt2(sx(pts[v].x)) + "\" cy=\"" +
           fmt2(sy(pts[v].y)) + "\" r=\"4\" fill=\"#1f77b4\"/>\n";
    out += "<text x=\"" + fmt2(sx(pts[v].x) + 6) + "\" y=\"" +
           fmt2(sy(pts[v].y) - 6) + "\" font-size=\"12\" fill=\"#222222\">" +
           std::to_string(v) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace ppt
