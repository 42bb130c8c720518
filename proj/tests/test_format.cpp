#include <random>

#include "doctest.h"
#include "hamext/edit.hpp"
#include "hamext/format.hpp"
#include "hamext/generators.hpp"
#include "hamext/json_io.hpp"

using namespace hamext;

namespace {

std::string parse_error(std::string_view text) {
  try {
    parse_document(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("canonical text of the triangle") {
  const std::string text =
      "hamext-embedding 1\n"
      "vertices 3\n"
      "edge 0 0 1\n"
      "edge 1 1 2\n"
      "edge 2 2 0\n"
      "rotation 0 : 0a 2b\n"
      "rotation 1 : 0b 1a\n"
      "rotation 2 : 1b 2a\n";
  CHECK(serialize(cycle_on_sphere(3)) == text);
  auto doc = parse_document(text);
  CHECK(doc.embedding == cycle_on_sphere(3));
  CHECK(serialize(doc) == text);
}

TEST_CASE("parser accepts comments, spacing and any rotation start") {
  auto doc = parse_document(
      "# triangle\n"
      "hamext-embedding 1\n\n"
      "vertices 3   # three\n"
      "edge 0 0 1\nedge 1 1 2\nedge 2 2 0\n"
      "rotation 2: 2a 1b\n"
      "rotation 0 :2b 0a\n"
      "rotation 1 : 1a 0b\n"
      "cycle C : 0a 1a 2a\n");
  CHECK(doc.embedding == cycle_on_sphere(3));
  REQUIRE(doc.cycles.contains("C"));
  CHECK(doc.cycles["C"].vertices == std::vector<VertexId>{0, 1, 2});
  CHECK(serialize(doc).ends_with("cycle C : 0a 1a 2a\n"));
}

TEST_CASE("round trip over generators and random embeddings") {
  std::vector<CombEmbedding> corpus{cycle_on_sphere(1), cycle_on_sphere(2), grid_on_torus(3, 3), theta_graph(),
                                    icosahedron(), triangle_host_with_stellations(2).embedding,
                                    CombEmbedding({}, {{}})};
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    auto p = std::uniform_int_distribution<std::uint32_t>(1, 9)(rng);
    auto q = std::uniform_int_distribution<std::uint32_t>(p - 1, 16)(rng);
    corpus.push_back(random_embedding(random_connected_graph(p, q, rng, true), rng));
  }
  for (const auto& emb : corpus) {
    auto text = serialize(emb);
    auto doc = parse_document(text);
    CHECK(doc.embedding == emb);
    CHECK(serialize(doc) == text);
  }
}

TEST_CASE("cycles and extensions round trip") {
  auto host = triangle_host_with_stellations(2);
  EmbeddingDocument doc{host.embedding, {{"C", host.triangle}}, {}};
  auto grid = grid_on_torus(3, 3);
  doc.extensions.emplace("W", ExtensionMap::identity_prefix(host.embedding,
                                                            stellate_faces(host.embedding, host.inner_faces)));
  auto text = serialize(doc);
  auto back = parse_document(text);
  CHECK(serialize(back) == text);
  CHECK(back.cycles.at("C") == host.triangle);
  CHECK(back.extensions.at("W").extended == doc.extensions.at("W").extended);
  CHECK(back.extensions.at("W").edge_paths == doc.extensions.at("W").edge_paths);

  EmbeddingDocument torus{grid, {{"row", grid_row_cycle(3, 3, 1)}}, {}};
  CHECK(parse_document(serialize(torus)).cycles.at("row") == grid_row_cycle(3, 3, 1));

  // Loops are written with their a end.
  EmbeddingDocument loop{cycle_on_sphere(1), {{"L", GraphCycle{{0}, {0}}}}, {}};
  CHECK(serialize(loop).ends_with("cycle L : 0a\n"));
  CHECK(parse_document(serialize(loop)).cycles.at("L") == GraphCycle{{0}, {0}});
}

TEST_CASE("parse errors carry line and column") {
  const std::string head = "hamext-embedding 1\nvertices 3\nedge 0 0 1\nedge 1 1 2\nedge 2 2 0\n";
  CHECK(parse_error("") == "1:1: empty input");
  CHECK(parse_error("graph 1\n") == "1:1: expected 'hamext-embedding'");
  CHECK(parse_error("hamext-embedding 2\n") == "1:18: unsupported format version");
  CHECK(parse_error("hamext-embedding 1\nvertices x\n") == "2:10: expected a number");
  CHECK(parse_error("hamext-embedding 1\nvertices 3\nedge 1 0 1\n") == "3:6: expected edge id 0");
  CHECK(parse_error("hamext-embedding 1\nvertices 3\nedge 0 0 7\n") == "3:10: vertex out of range");
  CHECK(parse_error(head + "rotation 0 : 0a 2c\n") == "6:17: expected a dart like 3a");
  CHECK(parse_error(head + "rotation 0 : 0a 1a\n") == "6:17: dart does not start at vertex 0");
  CHECK(parse_error(head + "rotation 0 0a 2b\n") == "6:12: expected ':'");
  CHECK(parse_error(head + "rotation 0 : 0a 2b\nrotation 0 : 0b\n") == "7:10: second rotation for vertex 0");
  CHECK(parse_error(head + "rotation 0 : 0a 2b\nrotation 1 : 0b 1a\n") == "7:1: no rotation for vertex 2");
  CHECK(parse_error(head + "rotation 0 : 0a 2b\nrotation 1 : 0b 1a\nrotation 2 : 1b 2a\ncycle C : 0a 2b\n") ==
        "9:14: dart does not continue the cycle");
  CHECK(parse_error(head + "rotation 0 : 0a 2b\nrotation 1 : 0b 1a\nrotation 2 : 1b 2a\ncycle C : 0a 1a\n") ==
        "9:14: cycle is not closed");
  CHECK(parse_error(head + "rotation 0 : 0a 2b\nrotation 1 : 0b 1a\nrotation 2 : 1b 2a\nfoo\n") ==
        "9:1: expected 'cycle' or 'extension'");
  // Well-formed text describing a disconnected map.
  auto bad = parse_error("hamext-embedding 1\nvertices 2\nrotation 0 :\nrotation 1 :\n");
  CHECK(bad.starts_with("2:1: invalid embedding"));
}

TEST_CASE("json certificates round trip") {
  ExtensionCertificate cert{{{0, 1, 3}}, {0, 1, 2, 3}, {{Link::Kind::edge, 0}, {Link::Kind::chord, 0}}};
  auto j = to_json(cert);
  CHECK(extension_certificate_from_json(j) == cert);
  CHECK(extension_certificate_from_json(Json{{"verdict", "YES"}, {"certificate", j}}) == cert);
  CHECK_THROWS_AS(extension_certificate_from_json(Json{{"type", "extension"}}), std::invalid_argument);
  j["links"][0]["kind"] = "bridge";
  CHECK_THROWS_AS(extension_certificate_from_json(j), std::invalid_argument);

  auto host = triangle_host_with_stellations(2);
  auto ext = ExtensionMap::identity_prefix(host.embedding, stellate_faces(host.embedding, host.inner_faces));
  EmbeddingDocument doc{host.embedding, {{"C", host.triangle}}, {{"W", ext}}};
  auto kc = make_klee_certificate(host.embedding, ext, host.triangle);
  auto kj = klee_certificate_to_json(kc, "W", "C");
  auto back = klee_certificate_from_json(kj, doc);
  CHECK(back.kind == KleeKind::local);
  CHECK(back.added.size() == 9);
  CHECK(check_theorem1_certificate(back).valid);
  kj["extension"] = "nope";
  CHECK_THROWS_AS(klee_certificate_from_json(kj, doc), std::invalid_argument);
}
