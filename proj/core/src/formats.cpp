#include "slc/formats.hpp"

#include <nlohmann/json.hpp>
#include <openssl/evp.h>

#include <array>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <map>
#include <sstream>

#include "slc/error.hpp"

namespace slc {

namespace {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// plumbing

json parse(std::string_view bytes) {
  try {
    return json::parse(bytes.begin(), bytes.end());
  } catch (const json::parse_error& e) {
    throw ParseError(e.byte, "malformed JSON");
  }
}

template <class F>
auto schema_guard(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(Errc::schema, std::string("document does not match the schema: ") + e.what());
  }
}

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw Error(Errc::schema, std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw Error(Errc::schema, std::string("missing field '") + key + "'");
  return *it;
}

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw Error(Errc::schema, std::string(what) + " must be an integer");
  const auto v = j.get<std::int64_t>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
    throw Error(Errc::schema, std::string(what) + " is out of range");
  }
  return static_cast<int>(v);
}

std::vector<int> int_array(const json& j, const char* what) {
  if (!j.is_array()) throw Error(Errc::schema, std::string(what) + " must be an array");
  std::vector<int> out;
  out.reserve(j.size());
  for (const auto& x : j) out.push_back(as_int(x, what));
  return out;
}

std::vector<std::vector<int>> int_matrix(const json& j, const char* what) {
  if (!j.is_array()) throw Error(Errc::schema, std::string(what) + " must be an array of arrays");
  std::vector<std::vector<int>> out;
  out.reserve(j.size());
  for (const auto& row : j) out.push_back(int_array(row, what));
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string envelope(const char* kind, json payload) {
  json doc;
  doc["schema_version"] = std::string(kSchemaVersion);
  doc["kind"] = kind;
  doc["payload"] = std::move(payload);
  return dump(doc);
}

json open_envelope(std::string_view bytes, std::initializer_list<std::string_view> kinds,
                   std::string* kind_out = nullptr) {
  json doc = parse(bytes);
  const json& version = field(doc, "schema_version");
  if (!version.is_string() || version.get<std::string>() != kSchemaVersion) {
    throw Error(Errc::version, "unsupported schema_version " + version.dump() + " (expected \"" +
                                   std::string(kSchemaVersion) + "\")");
  }
  const json& kind = field(doc, "kind");
  if (!kind.is_string()) throw Error(Errc::schema, "kind must be a string");
  const auto k = kind.get<std::string>();
  if (std::find(kinds.begin(), kinds.end(), k) == kinds.end()) {
    throw Error(Errc::schema, "unexpected document kind '" + k + "'");
  }
  if (kind_out) *kind_out = k;
  return field(doc, "payload");
}

// ---------------------------------------------------------------------------
// value <-> json

json to_json(const Permutation& p) { return p.images(); }

Permutation permutation_from_json(const json& j, int k) {
  if (j.is_string()) return parse_cycles(j.get<std::string>(), k);
  if (!j.is_array()) throw Error(Errc::schema, "permutation must be a cycles string or images array");
  auto images = int_array(j, "permutation image");
  if (static_cast<int>(images.size()) != k) {
    throw Error(Errc::invariant, "permutation has " + std::to_string(images.size()) +
                                     " images, expected " + std::to_string(k));
  }
  return Permutation(std::move(images));
}

json to_json(Dart d) { return json::array({d.tail, d.head}); }

Dart dart_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw Error(Errc::schema, "dart must be a [tail, head] pair");
  return Dart{as_int(j[0], "dart tail"), as_int(j[1], "dart head")};
}

json to_json(const Colouring& f) { return f.colours; }

Colouring colouring_from_json(const json& j) {
  return Colouring{int_array(j, "colour")};
}

std::array<int, 3> corners_from_json(const json& j) {
  const auto v = int_array(j, "corner");
  if (v.size() != 3) throw Error(Errc::schema, "corners must list three vertices");
  return {v[0], v[1], v[2]};
}

json to_json(const PlaneGraph& g) {
  json edges = json::array();
  const SimpleGraph simple = g.to_simple_graph();
  for (const auto& [u, v] : simple.edges()) edges.push_back(json::array({u, v}));
  return json{{"vertices", g.num_vertices()},
              {"edges", std::move(edges)},
              {"rotation", g.rotations()},
              {"outer_dart", to_json(g.outer_dart())}};
}

PlaneGraph plane_graph_from_json(const json& j) {
  const int n = as_int(field(j, "vertices"), "vertices");
  auto rotation = int_matrix(field(j, "rotation"), "rotation entry");
  if (static_cast<int>(rotation.size()) != n) {
    throw Error(Errc::invariant, "rotation lists " + std::to_string(rotation.size()) +
                                     " vertices, expected " + std::to_string(n));
  }
  PlaneGraph g(std::move(rotation), dart_from_json(field(j, "outer_dart")));
  std::vector<Edge> edges;
  for (const auto& e : field(j, "edges")) {
    if (!e.is_array() || e.size() != 2) throw Error(Errc::schema, "edge must be a pair");
    edges.emplace_back(as_int(e[0], "edge endpoint"), as_int(e[1], "edge endpoint"));
  }
  if (SimpleGraph(n, std::move(edges)) != g.to_simple_graph()) {
    throw Error(Errc::invariant, "edge list disagrees with the rotation system");
  }
  return g;
}

json to_json(const SLabeledGraph& g) {
  json vertices = json::array();
  for (int v = 0; v < g.num_vertices(); ++v) vertices.push_back(v);
  json arcs = json::array();
  for (const auto& a : g.arcs()) {
    arcs.push_back(json{{"tail", a.tail}, {"head", a.head}, {"label", to_json(a.label)}});
  }
  return json{{"k", g.k()}, {"vertices", std::move(vertices)}, {"arcs", std::move(arcs)}};
}

SLabeledGraph slabeled_from_json(const json& j) {
  const int k = as_int(field(j, "k"), "k");
  if (k < 1) throw Error(Errc::invariant, "k must be positive");
  const json& vertices = field(j, "vertices");
  if (!vertices.is_array()) throw Error(Errc::schema, "vertices must be an array of ids");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (as_int(vertices[i], "vertex id") != static_cast<int>(i)) {
      throw Error(Errc::invariant, "vertex ids must be 0..n-1 in order");
    }
  }
  std::vector<Arc> arcs;
  for (const auto& a : field(j, "arcs")) {
    arcs.push_back(Arc{as_int(field(a, "tail"), "tail"), as_int(field(a, "head"), "head"),
                       permutation_from_json(field(a, "label"), k)});
  }
  return SLabeledGraph(static_cast<int>(vertices.size()), k, std::move(arcs));
}

json to_json(const Provenance& p) {
  json faces = json::array();
  for (std::size_t i = 0; i < p.faces.size(); ++i) {
    const auto& f = p.faces[i];
    const auto& g = p.gadgets[i];
    faces.push_back(json{{"face", to_json(f.face)},
                         {"original_face", to_json(f.original_face)},
                         {"colouring", to_json(f.colouring)},
                         {"corners", f.corners},
                         {"fixup", f.fixup ? json(*f.fixup) : json(nullptr)},
                         {"gadget", json{{"a", g.a}, {"b", g.b}, {"c", g.c}}}});
  }
  return json{{"case", to_string(p.gadget_case)},
              {"label", to_json(p.label)},
              {"relabelled_by", to_json(p.relabelled_by)},
              {"base_vertices", p.base_vertices},
              {"frame_vertices", p.frame_vertices},
              {"embedding", to_json(p.embedding)},
              {"faces", std::move(faces)}};
}

Provenance provenance_from_json(const json& j, const SLabeledGraph& graph) {
  const int k = graph.k();
  Provenance p{gadget_case_from_string(field(j, "case").get<std::string>()),
               permutation_from_json(field(j, "label"), k),
               permutation_from_json(field(j, "relabelled_by"), k),
               as_int(field(j, "base_vertices"), "base_vertices"),
               as_int(field(j, "frame_vertices"), "frame_vertices"),
               plane_graph_from_json(field(j, "embedding")),
               {},
               {}};
  if (p.embedding.to_simple_graph() != graph.underlying()) {
    throw Error(Errc::invariant, "embedding does not match the labelled graph");
  }
  if (p.base_vertices < 3 || p.base_vertices > p.frame_vertices ||
      p.frame_vertices > graph.num_vertices()) {
    throw Error(Errc::invariant, "base/frame vertex counts are inconsistent");
  }
  for (const auto& f : field(j, "faces")) {
    DesignatedFace d{dart_from_json(field(f, "face")),
                     dart_from_json(field(f, "original_face")),
                     colouring_from_json(field(f, "colouring")),
                     corners_from_json(field(f, "corners")),
                     std::nullopt};
    const json& fixup = field(f, "fixup");
    if (!fixup.is_null()) d.fixup = as_int(fixup, "fixup");
    if (static_cast<int>(d.colouring.size()) != p.frame_vertices) {
      throw Error(Errc::invariant, "face colouring does not cover the frame");
    }
    const json& g = field(f, "gadget");
    GadgetRecord r{d.face, d.corners, as_int(field(g, "a"), "a"), as_int(field(g, "b"), "b"),
                   as_int(field(g, "c"), "c")};
    for (int v : {r.a, r.b, r.c}) {
      if (v < p.frame_vertices || v >= graph.num_vertices()) {
        throw Error(Errc::invariant, "gadget vertex outside the instance");
      }
    }
    p.faces.push_back(std::move(d));
    p.gadgets.push_back(r);
  }
  return p;
}

json to_json(const Certificate& c) {
  json base = json::array();
  for (const auto& b : c.base_colourings) {
    base.push_back(json{{"face", to_json(b.face)}, {"colouring", to_json(b.colouring)}});
  }
  json faces = json::array();
  for (const auto& f : c.faces) {
    json rows = json::array();
    for (const auto& r : f.rows) {
      rows.push_back(json{{"a", r.a},
                          {"b", r.b},
                          {"c", r.c},
                          {"violated_arc", r.violated_arc},
                          {"lhs", r.lhs},
                          {"rhs", r.rhs}});
    }
    faces.push_back(json{{"face", to_json(f.face)},
                         {"gadget", json{{"a", f.a}, {"b", f.b}, {"c", f.c}}},
                         {"domains", json{{"a", f.domains[0]}, {"b", f.domains[1]}, {"c", f.domains[2]}}},
                         {"rows", std::move(rows)}});
  }
  return json{{"digest", c.digest},
              {"frame_vertices", c.frame_vertices},
              {"base_colourings", std::move(base)},
              {"faces", std::move(faces)}};
}

Certificate certificate_from_json(const json& j) {
  Certificate c;
  const json& digest = field(j, "digest");
  if (!digest.is_string()) throw Error(Errc::schema, "digest must be a string");
  c.digest = digest.get<std::string>();
  c.frame_vertices = as_int(field(j, "frame_vertices"), "frame_vertices");
  for (const auto& b : field(j, "base_colourings")) {
    c.base_colourings.push_back(
        BaseColouring{dart_from_json(field(b, "face")), colouring_from_json(field(b, "colouring"))});
  }
  for (const auto& f : field(j, "faces")) {
    FaceRefutation r;
    r.face = dart_from_json(field(f, "face"));
    const json& g = field(f, "gadget");
    r.a = as_int(field(g, "a"), "a");
    r.b = as_int(field(g, "b"), "b");
    r.c = as_int(field(g, "c"), "c");
    const json& d = field(f, "domains");
    r.domains = {int_array(field(d, "a"), "domain"), int_array(field(d, "b"), "domain"),
                 int_array(field(d, "c"), "domain")};
    for (const auto& row : field(f, "rows")) {
      r.rows.push_back(RefutationRow{as_int(field(row, "a"), "a"), as_int(field(row, "b"), "b"),
                                     as_int(field(row, "c"), "c"),
                                     as_int(field(row, "violated_arc"), "violated_arc"),
                                     as_int(field(row, "lhs"), "lhs"),
                                     as_int(field(row, "rhs"), "rhs")});
    }
    c.faces.push_back(std::move(r));
  }
  return c;
}

json stats_json(const SolveStats& s, bool with_timing) {
  json j{{"nodes", s.nodes},
         {"propagations", s.propagations},
         {"choice_points", s.choice_points},
         {"splits", s.splits},
         {"seed", nullptr}};
  if (with_timing) j["wall_ms"] = s.wall_ms;
  return j;
}

int vertex_count(const json& j) {
  const json& v = field(j, "vertices");
  if (v.is_number_integer()) return as_int(v, "vertices");
  if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (as_int(v[i], "vertex id") != static_cast<int>(i)) {
        throw Error(Errc::invariant, "vertex ids must be 0..n-1 in order");
      }
    }
    return static_cast<int>(v.size());
  }
  throw Error(Errc::schema, "vertices must be a count or an id list");
}

GroupTable group_from_json(const json& j) {
  if (j.contains("cyclic")) return GroupTable::cyclic(as_int(j["cyclic"], "cyclic"));
  if (j.contains("table")) return GroupTable(int_matrix(j["table"], "group table entry"));
  if (j.contains("symmetric")) {
    const int m = as_int(j["symmetric"], "symmetric");
    const auto all = symmetric_group(m);
    return GroupTable::from_permutations(all.members());
  }
  throw Error(Errc::schema, "group must give 'cyclic', 'table' or 'symmetric'");
}

}  // namespace

// ---------------------------------------------------------------------------
// public surface

std::string encode(const PlaneGraph& graph) { return envelope("plane_graph", to_json(graph)); }
std::string encode(const SLabeledGraph& graph) { return envelope("slabeled_graph", to_json(graph)); }

std::string encode(const Construction& construction) {
  json payload = to_json(construction.instance);
  payload["provenance"] = to_json(construction.provenance);
  return envelope("instance", std::move(payload));
}

std::string encode(const Certificate& cert) { return envelope("certificate", to_json(cert)); }

std::string encode(const Colouring& colouring) {
  return envelope("colouring", json{{"colours", colouring.colours}});
}

PlaneGraph decode_plane_graph(std::string_view bytes) {
  return schema_guard([&] { return plane_graph_from_json(open_envelope(bytes, {"plane_graph"})); });
}

Instance decode_instance(std::string_view bytes) {
  return schema_guard([&] {
    const json payload = open_envelope(bytes, {"slabeled_graph", "instance"});
    Instance out{slabeled_from_json(payload), std::nullopt};
    if (payload.contains("provenance")) {
      out.provenance = provenance_from_json(payload["provenance"], out.graph);
    }
    return out;
  });
}

SLabeledGraph decode_slabeled_graph(std::string_view bytes) { return decode_instance(bytes).graph; }

Certificate decode_certificate(std::string_view bytes) {
  return schema_guard([&] { return certificate_from_json(open_envelope(bytes, {"certificate"})); });
}

Colouring decode_colouring(std::string_view bytes) {
  return schema_guard([&] {
    return colouring_from_json(field(open_envelope(bytes, {"colouring"}), "colours"));
  });
}

Permutation decode_permutation(std::string_view json_value, int k) {
  return schema_guard([&] { return permutation_from_json(parse(json_value), k); });
}

std::string instance_digest(const SLabeledGraph& graph) {
  const std::string bytes = to_json(graph).dump();
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  std::string hex;
  hex.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    char buf[3];
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    hex += buf;
  }
  return "sha256:" + hex;
}

std::string to_dot(const SLabeledGraph& graph) {
  std::ostringstream out;
  out << "digraph slabeled {\n";
  out << "  node [shape=circle];\n";
  for (int v = 0; v < graph.num_vertices(); ++v) out << "  " << v << ";\n";
  for (const auto& a : graph.arcs()) {
    out << "  " << a.tail << " -> " << a.head;
    if (a.label.is_identity()) {
      out << " [dir=none];\n";
    } else {
      out << " [label=\"" << a.label.to_cycles() << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string encode_stats(const SolveStats& stats, bool with_timing) {
  return dump(stats_json(stats, with_timing));
}

std::string encode_solve_result(const SolveResult& result, bool with_timing) {
  json j{{"status", to_string(result.status)},
         {"witness", result.witness ? to_json(*result.witness) : json(nullptr)},
         {"stats", stats_json(result.stats, with_timing)}};
  return dump(j);
}

SLabeledGraph decode_signed_input(std::string_view bytes, int k, SignedMode mode) {
  return schema_guard([&] {
    const json j = parse(bytes);
    const int n = vertex_count(j);
    std::vector<Edge> edges;
    std::map<Edge, int> sign_of;
    for (const auto& e : field(j, "edges")) {
      int u = as_int(field(e, "u"), "u");
      int v = as_int(field(e, "v"), "v");
      if (u > v) std::swap(u, v);
      edges.emplace_back(u, v);
      sign_of[{u, v}] = as_int(field(e, "sign"), "sign");
    }
    SimpleGraph g(n, std::move(edges));
    std::vector<int> signs;
    for (const auto& e : g.edges()) signs.push_back(sign_of.at(e));
    return from_signed(g, signs, k, mode);
  });
}

SLabeledGraph decode_zk_input(std::string_view bytes, int k) {
  return schema_guard([&] {
    const json j = parse(bytes);
    std::vector<WeightedArc> arcs;
    for (const auto& a : field(j, "arcs")) {
      arcs.push_back(WeightedArc{as_int(field(a, "tail"), "tail"), as_int(field(a, "head"), "head"),
                                 as_int(field(a, "weight"), "weight")});
    }
    return from_group_zk(vertex_count(j), arcs, k);
  });
}

SLabeledGraph decode_gain_input(std::string_view bytes, int k) {
  return schema_guard([&] {
    const json j = parse(bytes);
    const GroupTable group = group_from_json(field(j, "group"));
    std::vector<GainArc> arcs;
    for (const auto& a : field(j, "arcs")) {
      arcs.push_back(GainArc{as_int(field(a, "tail"), "tail"), as_int(field(a, "head"), "head"),
                             as_int(field(a, "gain"), "gain")});
    }
    return from_gain(vertex_count(j), arcs, group, k);
  });
}

}  // namespace slc
