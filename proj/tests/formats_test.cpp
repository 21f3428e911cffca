#include "slc/formats.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <functional>

#include "slc/error.hpp"

namespace slc {
namespace {

using json = nlohmann::json;

Permutation cyc(std::string_view text, int k) { return parse_cycles(text, k); }

SLabeledGraph small_instance() {
  return SLabeledGraph(4, 4, {Arc{0, 1, cyc("(123)", 4)}, Arc{2, 1, cyc("id", 4)},
                              Arc{3, 0, cyc("(1234)", 4)}, Arc{2, 3, cyc("(12)(34)", 4)}});
}

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::invariant;
}

TEST(Formats, SLabeledRoundTrip) {
  const auto g = small_instance();
  const auto bytes = encode(g);
  EXPECT_EQ(decode_slabeled_graph(bytes), g);
  EXPECT_EQ(encode(decode_slabeled_graph(bytes)), bytes);
  const auto doc = json::parse(bytes);
  EXPECT_EQ(doc["kind"], "slabeled_graph");
  EXPECT_EQ(doc["schema_version"], "1");
  EXPECT_EQ(doc["payload"]["arcs"][0]["label"], json::array({2, 3, 1, 4}));
}

TEST(Formats, PlaneGraphRoundTrip) {
  const auto g = base_triangulation();
  const auto bytes = encode(g);
  EXPECT_EQ(decode_plane_graph(bytes), g);
  EXPECT_EQ(encode(decode_plane_graph(bytes)), bytes);
}

TEST(Formats, ConstructionRoundTrip) {
  const auto built = build_c1234();
  const auto bytes = encode(built);
  const auto inst = decode_instance(bytes);
  EXPECT_EQ(inst.graph, built.instance);
  ASSERT_TRUE(inst.provenance);
  EXPECT_EQ(*inst.provenance, built.provenance);
  // A plain labelled-graph document carries no provenance.
  EXPECT_FALSE(decode_instance(encode(built.instance)).provenance);
}

TEST(Formats, ColouringRoundTrip) {
  const Colouring f{{1, 4, 2, 2}};
  EXPECT_EQ(decode_colouring(encode(f)), f);
}

TEST(Formats, EncodingIsDeterministic) {
  const auto a = encode(build_c123());
  const auto b = encode(build_c123());
  EXPECT_EQ(a, b);
  EXPECT_EQ(instance_digest(build_c123().instance), instance_digest(build_c123().instance));
  EXPECT_EQ(instance_digest(small_instance()).rfind("sha256:", 0), 0u);
  EXPECT_EQ(instance_digest(small_instance()).size(), 7u + 64u);
  EXPECT_NE(instance_digest(small_instance()), instance_digest(relabel_colours(small_instance(), cyc("(12)", 4))));
}

TEST(Formats, ArcOrderIsCanonicalised) {
  auto doc = json::parse(encode(small_instance()));
  auto& arcs = doc["payload"]["arcs"];
  std::reverse(arcs.begin(), arcs.end());
  EXPECT_EQ(decode_slabeled_graph(doc.dump()), small_instance());
}

TEST(Formats, CycleStringLabels) {
  const std::string text = R"j({"kind":"slabeled_graph","schema_version":"1","payload":
    {"k":4,"vertices":[0,1],"arcs":[{"tail":0,"head":1,"label":"(1234)"}]}})j";
  EXPECT_EQ(decode_slabeled_graph(text).arc(0).label, cyc("(1234)", 4));
  EXPECT_EQ(decode_permutation("\"(12)\"", 3), cyc("(12)", 3));
  EXPECT_EQ(decode_permutation("[2,1,3]", 3), cyc("(12)", 3));
}

TEST(Formats, TruncatedInputReportsOffset) {
  const auto bytes = encode(small_instance());
  const auto cut = bytes.substr(0, 60);
  try {
    decode_slabeled_graph(cut);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.code(), Errc::parse);
    EXPECT_GT(e.position(), 0u);
    EXPECT_LE(e.position(), cut.size() + 1);
  }
}

TEST(Formats, NonBijectiveLabel) {
  auto doc = json::parse(encode(small_instance()));
  doc["payload"]["arcs"][1]["label"] = json::array({1, 1, 3, 4});
  EXPECT_EQ(code_of([&] { decode_slabeled_graph(doc.dump()); }), Errc::invariant);
}

TEST(Formats, UnknownVersion) {
  auto doc = json::parse(encode(small_instance()));
  doc["schema_version"] = "2";
  EXPECT_EQ(code_of([&] { decode_slabeled_graph(doc.dump()); }), Errc::version);
  doc.erase("schema_version");
  EXPECT_EQ(code_of([&] { decode_slabeled_graph(doc.dump()); }), Errc::schema);
}

TEST(Formats, WrongKind) {
  EXPECT_EQ(code_of([&] { decode_certificate(encode(small_instance())); }), Errc::schema);
  EXPECT_EQ(code_of([&] { decode_plane_graph(encode(small_instance())); }), Errc::schema);
}

TEST(Formats, PlaneGraphEdgeListMustAgree) {
  auto doc = json::parse(encode(PlaneGraph::triangle()));
  doc["payload"]["edges"].erase(0);
  EXPECT_EQ(code_of([&] { decode_plane_graph(doc.dump()); }), Errc::invariant);
}

// Replacement values tried at every leaf of a document.
std::vector<json> mutations_of(const json& leaf) {
  std::vector<json> out{json(nullptr), json("x"), json(-1), json(0), json(2.5), json(1 << 20),
                        json::array(), json::object()};
  if (leaf.is_number_integer()) {
    out.push_back(leaf.get<long long>() + 1);
    out.push_back(leaf.get<long long>() - 1);
    out.push_back(json(5'000'000'000LL));
  }
  return out;
}

void for_each_leaf(json& node, const std::function<void(json&)>& visit) {
  if (node.is_object() || node.is_array()) {
    for (auto& child : node) for_each_leaf(child, visit);
  } else {
    visit(node);
  }
}

// Every accepted mutation must decode to exactly what the document says.
TEST(FormatsFuzz, SLabeledSingleFieldMutations) {
  json doc = json::parse(encode(small_instance()));
  int accepted = 0;
  int rejected = 0;
  for_each_leaf(doc, [&](json& leaf) {
    const json original = leaf;
    for (const auto& value : mutations_of(original)) {
      leaf = value;
      try {
        const auto g = decode_slabeled_graph(doc.dump());
        ++accepted;
        const auto& p = doc["payload"];
        ASSERT_EQ(g.k(), p["k"].get<int>());
        ASSERT_EQ(g.num_vertices(), static_cast<int>(p["vertices"].size()));
        ASSERT_EQ(g.num_arcs(), static_cast<int>(p["arcs"].size()));
        for (const auto& a : p["arcs"]) {
          const int idx = g.find_arc(a["tail"].get<int>(), a["head"].get<int>());
          ASSERT_GE(idx, 0);
          EXPECT_EQ(g.arc(idx).tail, a["tail"].get<int>());
          EXPECT_EQ(json(g.arc(idx).label.images()), a["label"]) << doc.dump();
        }
      } catch (const Error&) {
        ++rejected;
      }
    }
    leaf = original;
  });
  EXPECT_GT(rejected, 0);
  EXPECT_GT(accepted, 0);  // e.g. another valid vertex as an arc endpoint
}

TEST(FormatsFuzz, PlaneGraphSingleFieldMutations) {
  json doc = json::parse(encode(base_triangulation()));
  for_each_leaf(doc, [&](json& leaf) {
    const json original = leaf;
    for (const auto& value : mutations_of(original)) {
      leaf = value;
      try {
        const auto g = decode_plane_graph(doc.dump());
        EXPECT_EQ(json::parse(encode(g)), doc);
      } catch (const Error&) {
      }
    }
    leaf = original;
  });
}

TEST(FormatsFuzz, CertificateMutationsNeverVerifyFalsely) {
  const auto built = build_c123();
  const auto cert = make_certificate(built.instance, built.provenance);
  json doc = json::parse(encode(cert));
  // Mutate a sample of leaves; sampling keeps the test fast.
  int index = 0;
  int verified = 0;
  for_each_leaf(doc, [&](json& leaf) {
    if (index++ % 37 != 0) return;
    const json original = leaf;
    for (const auto& value : mutations_of(original)) {
      leaf = value;
      try {
        const auto c = decode_certificate(doc.dump());
        if (verify_certificate(c, built.instance)) {
          ++verified;
          // Only a change that leaves a correct refutation may pass.
          EXPECT_EQ(c.base_colourings.size(), 24u);
        }
      } catch (const Error&) {
      }
    }
    leaf = original;
  });
  EXPECT_LT(verified, index);
}

TEST(Dot, CountsLabelledArcs) {
  const auto built = build_c1234();
  const auto dot = to_dot(built.instance);
  std::size_t labelled = 0;
  std::size_t plain = 0;
  for (std::size_t pos = 0; (pos = dot.find("[label=\"(1234)\"]", pos)) != std::string::npos; ++pos) ++labelled;
  for (std::size_t pos = 0; (pos = dot.find("[dir=none]", pos)) != std::string::npos; ++pos) ++plain;
  EXPECT_EQ(labelled, 96u);
  EXPECT_EQ(labelled + plain, static_cast<std::size_t>(built.instance.num_arcs()));
  EXPECT_EQ(dot.rfind("digraph", 0), 0u);
}

TEST(SolveResultJson, Shape) {
  const auto r = solve(SLabeledGraph::all_identity(SimpleGraph::complete(3), 3));
  const auto j = json::parse(encode_solve_result(r, false));
  EXPECT_EQ(j["status"], "SAT");
  EXPECT_EQ(j["witness"].size(), 3u);
  EXPECT_TRUE(j["stats"]["seed"].is_null());
  EXPECT_FALSE(j["stats"].contains("wall_ms"));
  EXPECT_TRUE(json::parse(encode_solve_result(r, true))["stats"].contains("wall_ms"));
}

TEST(AdapterInputs, Signed) {
  const std::string text = R"j({"vertices":3,"edges":[{"u":0,"v":1,"sign":-1},{"u":2,"v":1,"sign":1}]})j";
  const auto g = decode_signed_input(text, 4, SignedMode::natural);
  EXPECT_EQ(g.arc(0).label, cyc("(12)(34)", 4));
  EXPECT_TRUE(g.arc(1).label.is_identity());
  EXPECT_EQ(code_of([] { decode_signed_input(R"j({"vertices":2,"edges":[{"u":0,"v":1,"sign":2}]})j", 4,
                                             SignedMode::natural); }),
            Errc::domain);
}

TEST(AdapterInputs, ZkAndGain) {
  const auto zk = decode_zk_input(R"j({"vertices":[0,1],"arcs":[{"tail":1,"head":0,"weight":1}]})j", 3);
  EXPECT_EQ(zk.arc(0).label, cyclic_shift(3, 1));
  const auto gain = decode_gain_input(
      R"j({"vertices":2,"group":{"cyclic":2},"arcs":[{"tail":0,"head":1,"gain":1}]})j", 2);
  EXPECT_EQ(gain.k(), 5);
  EXPECT_EQ(gain.arc(0).label.images(), (std::vector<int>{2, 1, 4, 3, 5}));
  const auto s3 = decode_gain_input(
      R"j({"vertices":2,"group":{"symmetric":3},"arcs":[{"tail":0,"head":1,"gain":0}]})j", 1);
  EXPECT_EQ(s3.k(), 7);
  EXPECT_EQ(code_of([] { decode_gain_input(R"j({"vertices":2,"group":{"table":[[0,1],[1,1]]},"arcs":[]})j", 1); }),
            Errc::invariant);
}

}  // namespace
}  // namespace slc
