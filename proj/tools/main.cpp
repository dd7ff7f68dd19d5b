#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ppt/cpt.hpp"
#include "ppt/henneberg.hpp"
#include "ppt/incremental.hpp"
#include "ppt/io.hpp"
#include "ppt/rigidity.hpp"
#include "ppt/stretch.hpp"
#include "ppt/verify_geom.hpp"

namespace {

using namespace ppt;

// 0 success, 1 the input fails a required property, 2 bad input or usage,
// 3 internal failure (solver, placement, self-verification).
int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError:
    case ErrorCode::BadSize:
    case ErrorCode::TooLarge:
      return 2;
    case ErrorCode::NotLaman:
    case ErrorCode::NotLamanPlusOne:
    case ErrorCode::NotIndependent:
    case ErrorCode::NoPerfectMatching:
    case ErrorCode::NotThreeConnected:
    case ErrorCode::SequenceNotInteriorOnly:
    case ErrorCode::OuterFaceTooSmall:
    case ErrorCode::PrescribedVertexOnOuterFace:
    case ErrorCode::PrescriptionInvalid:
    case ErrorCode::NoValidExtension:
    case ErrorCode::InconsistentRotation:
    case ErrorCode::OuterFaceNotFound:
    case ErrorCode::DegenerateGraph:
    case ErrorCode::IsolatedVertex:
    case ErrorCode::RepeatedBoundaryVertex:
    case ErrorCode::EmptySubset:
    case ErrorCode::DisconnectedSubset:
    case ErrorCode::NotSimplyConnected:
    case ErrorCode::FacesMismatch:
    case ErrorCode::BadEdgeCount:
      return 1;
    default:
      return 3;
  }
}

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
    ss << f.rdbuf();
  }
  return ss.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f)
    throw Error(ErrorCode::ParseError, "cannot open '" + path + "' for writing");
  f << content;
}

std::uint64_t with_env_seed(std::uint64_t seed) {
  const char* s = std::getenv("PSEUDOTRI_SEED");
  if (s && *s) return std::strtoull(s, nullptr, 10);
  return seed;
}

std::string join_ids(const std::vector<int>& ids) {
  std::string s;
  for (std::size_t i = 0; i < ids.size(); ++i)
    s += (i ? " " : "") + std::to_string(ids[i]);
  return s;
}

int run_check(const std::string& in) {
  GraphDocument doc = parse_document(read_input(in));
  PlaneGraph g = document_graph(doc);
  Classification cls = classify(g.n, g.edges);
  std::cout << "class: " << rigidity_class_name(cls.cls) << "\n"
            << "n: " << g.n << "\nm: " << g.m() << "\nfaces: " << g.num_faces()
            << "\n";
  if (cls.cls == RigidityClass::LamanPlusOne || cls.cls == RigidityClass::Circuit)
    std::cout << "circuit_vertices: " << join_ids(cls.circuit_vertices) << "\n";
  return (cls.cls == RigidityClass::Laman ||
          cls.cls == RigidityClass::LamanPlusOne ||
          cls.cls == RigidityClass::Circuit)
             ? 0
             : 1;
}

int run_henneberg(const std::string& in, const std::string& out) {
  GraphDocument doc = parse_document(read_input(in));
  PlaneGraph g = document_graph(doc);
  Classification cls = classify(g.n, g.edges);
  HennebergSequence seq;
  if (cls.cls == RigidityClass::Laman) {
    seq = reverse_sequence(g);
  } else if (cls.cls == RigidityClass::LamanPlusOne ||
             cls.cls == RigidityClass::Circuit) {
    seq = reverse_sequence_plus_one(g);
  } else {
    throw Error(ErrorCode::NotLaman,
                std::string("rigidity class '") + rigidity_class_name(cls.cls) +
                    "' has no construction sequence");
  }
  std::string text = "base: " + join_ids(seq.base.vertices) + "\n";
  for (const HennebergStep& st : seq.steps) {
    text += st.kind == StepKind::I ? "I " : "II ";
    text += std::to_string(st.v) + " : " + join_ids(st.nbrs);
    if (st.kind == StepKind::II)
      text += " split " + std::to_string(st.split_edge.first) + "-" +
              std::to_string(st.split_edge.second);
    text += "\n";
  }
  write_output(out, text);
  return 0;
}

int run_cpt(const std::string& in, const std::string& out,
            std::optional<int> nonpointed) {
  GraphDocument doc = parse_document(read_input(in));
  PlaneGraph g = document_graph(doc);
  std::optional<int> presc = nonpointed ? nonpointed : doc.prescribed_nonpointed;
  CptLabeling lab = assign_cpt(g, presc);
  GraphDocument od =
      make_document(g, doc.coords ? &*doc.coords : nullptr, &lab);
  od.prescribed_nonpointed = presc;
  write_output(out, serialize_document(od));
  return 0;
}

Embedding tutte_pipeline(const PlaneGraph& g, const GraphDocument& doc,
                         CptLabeling& lab, std::optional<int> nonpointed,
                         bool exact, bool random_weights, std::uint64_t seed,
                         double tol) {
  std::optional<int> presc = nonpointed ? nonpointed : doc.prescribed_nonpointed;
  lab = doc.cpt ? document_labeling(doc, g) : assign_cpt(g, presc);
  StretchConfig cfg;
  cfg.exact = exact;
  cfg.weight_seed = random_weights ? seed : 0;
  cfg.residual_tol = tol;
  return stretch_cpt(g, lab, cfg);
}

int run_stretch(const std::string& in, const std::string& out,
                std::optional<int> nonpointed, bool exact, bool random_weights,
                std::uint64_t seed, double tol) {
  GraphDocument doc = parse_document(read_input(in));
  PlaneGraph g = document_graph(doc);
  CptLabeling lab;
  Embedding emb =
      tutte_pipeline(g, doc, lab, nonpointed, exact, random_weights, seed, tol);
  GraphDocument od = make_document(g, &emb, &lab);
  od.prescribed_nonpointed =
      nonpointed ? nonpointed : doc.prescribed_nonpointed;
  write_output(out, serialize_document(od));
  return 0;
}

int run_embed(const std::string& in, const std::string& out,
              const std::string& method, bool exact, std::uint64_t seed) {
  GraphDocument doc = parse_document(read_input(in));
  PlaneGraph g = document_graph(doc);
  Embedding emb;
  CptLabeling lab;
  if (method == "tutte") {
    emb = tutte_pipeline(g, doc, lab, {}, exact, false, seed, 1e-10);
  } else {
    Classification cls = classify(g.n, g.edges);
    if (cls.cls != RigidityClass::Laman)
      throw Error(ErrorCode::NotLaman,
                  "the incremental method needs a plane Laman graph");
    // Only the outer triangle can host the base: a vertex outside an
    // interior base face would have to be inserted into the outer region.
    if (g.faces[g.outer_face].size() != 3)
      throw Error(ErrorCode::NoValidExtension,
                  "the incremental method needs a triangular outer face");
    std::vector<int> vs = g.face_vertices(g.outer_face);
    HennebergSequence seq =
        reverse_sequence(g, Prescription::triangle(vs[0], vs[1], vs[2]));
    std::vector<RPoint> base{{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
    try {
      emb = embed_incremental(seq, base, seed);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DegenerateGraph) throw;
      std::swap(base[1], base[2]);
      emb = embed_incremental(seq, base, seed);
    }
    GeometricReport rep = verify_geometry(emb, g);
    lab = rep.labeling;
  }
  GraphDocument od = make_document(g, &emb, &lab);
  write_output(out, serialize_document(od));
  return 0;
}

int run_verify(const std::string& in) {
  GraphDocument doc = parse_document(read_input(in));
  PlaneGraph g = document_graph(doc);
  if (!doc.coords)
    throw Error(ErrorCode::ParseError, "document has no coords layer");
  GeometricReport rep = verify_geometry(*doc.coords, g);
  auto yn = [](bool b) { return b ? "true" : "false"; };
  int pointed = 0;
  for (bool p : rep.pointed) pointed += p ? 1 : 0;
  std::cout << "non_crossing: " << yn(rep.non_crossing) << "\n"
            << "rotation_ok: " << yn(rep.rotation_ok) << "\n"
            << "pointed: " << pointed << "/" << g.n << "\n"
            << "non_pointed: "
            << (rep.non_pointed.empty() ? std::string("(none)")
                                        : join_ids(rep.non_pointed))
            << "\n"
            << "pseudo_triangulation: " << yn(rep.pseudo_triangulation) << "\n"
            << "pointed_pseudo_triangulation: "
            << yn(rep.pointed_pseudo_triangulation) << "\n"
            << "degenerate: " << yn(rep.degenerate) << "\n";
  bool ok = rep.non_crossing && rep.rotation_ok && !rep.degenerate &&
            rep.pseudo_triangulation;
  if (doc.cpt) {
    CptLabeling lab = document_labeling(doc, g);
    bool match = lab.big == rep.labeling.big;
    std::cout << "labeling_match: " << yn(match) << "\n";
    ok = ok && match;
  }
  return ok ? 0 : 1;
}

int run_gen(int n, std::uint64_t seed, const std::string& kind,
            const std::string& out) {
  GraphDocument doc = generate_plane_laman(
      n, seed, kind == "circuit" ? GenKind::circuit : GenKind::laman);
  write_output(out, serialize_document(doc));
  return 0;
}

int run_svg(const std::string& in, const std::string& out) {
  GraphDocument doc = parse_document(read_input(in));
  PlaneGraph g = document_graph(doc);
  if (!doc.coords)
    throw Error(ErrorCode::ParseError, "document has no coords layer");
  if (doc.cpt) {
    CptLabeling lab = document_labeling(doc, g);
    write_output(out, render_svg(*doc.coords, g, &lab));
  } else {
    write_output(out, render_svg(*doc.coords, g, nullptr));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"plane minimal rigidity and pointed pseudo-triangulation toolkit"};
  app.require_subcommand(1);

  std::string in = "-", out;
  std::uint64_t seed = 1;
  int gen_n = 0;
  std::string kind = "laman", method = "tutte";
  bool exact = false, random_weights = false;
  double tol = 1e-10;
  int nonpointed = -1;

  CLI::App* c_check = app.add_subcommand("check", "classify the rigidity of a graph document");
  c_check->add_option("input", in, "graph document ('-' for stdin)");

  CLI::App* c_henn = app.add_subcommand("henneberg", "emit a construction sequence");
  c_henn->add_option("input", in);
  c_henn->add_option("-o,--output", out, "output file (default stdout)");

  CLI::App* c_cpt = app.add_subcommand("cpt", "assign an angle labeling");
  c_cpt->add_option("input", in);
  c_cpt->add_option("-o,--output", out);
  c_cpt->add_option("--nonpointed", nonpointed, "vertex forced non-pointed");

  CLI::App* c_stretch = app.add_subcommand("stretch", "embed via the equilibrium pipeline");
  c_stretch->add_option("input", in);
  c_stretch->add_option("-o,--output", out);
  c_stretch->add_option("--nonpointed", nonpointed);
  c_stretch->add_option("--seed", seed, "weight seed");
  c_stretch->add_option("--tol", tol, "residual tolerance");
  c_stretch->add_flag("--exact", exact, "solve over rationals");
  c_stretch->add_flag("--random-weights", random_weights);

  CLI::App* c_embed = app.add_subcommand("embed", "embed a plane Laman graph");
  c_embed->add_option("input", in);
  c_embed->add_option("-o,--output", out);
  c_embed->add_option("--method", method, "tutte or henneberg")
      ->check(CLI::IsMember({"tutte", "henneberg"}));
  c_embed->add_option("--seed", seed);
  c_embed->add_flag("--exact", exact);

  CLI::App* c_verify = app.add_subcommand("verify", "geometric report for an embedded document");
  c_verify->add_option("input", in);

  CLI::App* c_gen = app.add_subcommand("gen", "generate a random plane instance");
  c_gen->add_option("--n", gen_n, "vertex count")->required();
  c_gen->add_option("--seed", seed);
  c_gen->add_option("--kind", kind)->check(CLI::IsMember({"laman", "circuit"}));
  c_gen->add_option("-o,--output", out);

  CLI::App* c_svg = app.add_subcommand("svg", "render an embedded document");
  c_svg->add_option("input", in);
  c_svg->add_option("-o,--output", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  seed = with_env_seed(seed);
  std::optional<int> presc;
  if (nonpointed >= 0) presc = nonpointed;

  try {
    if (c_check->parsed()) return run_check(in);
    if (c_henn->parsed()) return run_henneberg(in, out);
    if (c_cpt->parsed()) return run_cpt(in, out, presc);
    if (c_stretch->parsed())
      return run_stretch(in, out, presc, exact, random_weights, seed, tol);
    if (c_embed->parsed()) return run_embed(in, out, method, exact, seed);
    if (c_verify->parsed()) return run_verify(in);
    if (c_gen->parsed()) return run_gen(gen_n, seed, kind, out);
    if (c_svg->parsed()) return run_svg(in, out);
  } catch (const ppt::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
