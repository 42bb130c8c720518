#include <random>

#include "doctest.h"
#include "hamext/embedding.hpp"
#include "hamext/generators.hpp"

using namespace hamext;

namespace {

// K4 drawn with 0 in the middle and 1, 2, 3 counterclockwise around it.
// e0=01 e1=02 e2=03 e3=12 e4=23 e5=31
CombEmbedding planar_k4() {
  std::vector<EdgeEnds> edges{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {3, 1}};
  std::vector<std::vector<Dart>> rot{{0, 2, 4}, {6, 1, 11}, {8, 3, 7}, {10, 5, 9}};
  return CombEmbedding(edges, rot);
}

}  // namespace

TEST_CASE("validate accepts the triangle and reports broken inputs") {
  auto tri = cycle_on_sphere(3);
  auto rep = validate(tri);
  CHECK(rep.ok());
  CHECK(rep.p == 3);
  CHECK(rep.q == 3);

  SUBCASE("dart listed at two vertices") {
    std::vector<EdgeEnds> edges{{0, 1}, {1, 2}, {2, 0}};
    std::vector<std::vector<Dart>> rot{{0, 5}, {1, 2, 0}, {3, 4}};
    auto bad = validate(CombEmbedding(edges, rot));
    CHECK_FALSE(bad.ok());
    CHECK(bad.has(ValidationIssue::Kind::dart_repeated));
  }
  SUBCASE("two disjoint triangles") {
    std::vector<EdgeEnds> edges{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}};
    std::vector<std::vector<Dart>> rot{{0, 5}, {1, 2}, {3, 4}, {6, 11}, {7, 8}, {9, 10}};
    auto bad = validate(CombEmbedding(edges, rot));
    CHECK(bad.has(ValidationIssue::Kind::disconnected));
  }
  SUBCASE("missing dart") {
    std::vector<EdgeEnds> edges{{0, 1}, {1, 2}, {2, 0}};
    std::vector<std::vector<Dart>> rot{{0, 5}, {1, 2}, {3}};
    CHECK(validate(CombEmbedding(edges, rot)).has(ValidationIssue::Kind::dart_missing));
  }
  SUBCASE("operations reject invalid input") {
    std::vector<EdgeEnds> edges{{0, 1}};
    std::vector<std::vector<Dart>> rot{{0, 1}, {}};
    CHECK_THROWS_AS(trace_faces(CombEmbedding(edges, rot)), InvalidEmbedding);
  }
}

TEST_CASE("trace_faces on small maps") {
  auto tri = trace_faces(cycle_on_sphere(3));
  REQUIRE(tri.size() == 2);
  CHECK(tri[0].length() == 3);
  CHECK(tri[1].length() == 3);

  auto k4 = planar_k4();
  auto faces = trace_faces(k4);
  REQUIRE(faces.size() == 4);
  for (const auto& w : faces.walks) CHECK(w.length() == 3);
  // Hand trace from dart 0: 0->1, 1->3, 3->0.
  CHECK(faces[0].darts == std::vector<Dart>{0, 11, 5});
  CHECK(faces[0].corners == std::vector<VertexId>{0, 1, 3});

  auto single = trace_faces(CombEmbedding({}, {{}}));
  CHECK(single.size() == 1);
  CHECK(single[0].length() == 0);
}

TEST_CASE("stats") {
  CHECK(stats(cycle_on_sphere(3)) == SurfaceStats{3, 3, 2, 2, 0});
  CHECK(stats(cycle_on_sphere(1)) == SurfaceStats{1, 1, 2, 2, 0});
  CHECK(stats(cycle_on_sphere(2)) == SurfaceStats{2, 2, 2, 2, 0});
  CHECK(stats(grid_on_torus(3, 3)) == SurfaceStats{9, 18, 9, 0, 1});
  CHECK(stats(grid_on_torus(1, 1)).genus == 1);
  CHECK(stats(theta_graph()) == SurfaceStats{5, 6, 3, 2, 0});
  CHECK(stats(icosahedron()) == SurfaceStats{12, 30, 20, 2, 0});
}

TEST_CASE("find_embedding_with_genus") {
  SUBCASE("Petersen graph on the torus") {
    auto res = find_embedding_with_genus(petersen_graph(), 1);
    REQUIRE(res.status == SearchStatus::found);
    CHECK(validate(*res.embedding).ok());
    CHECK(stats(*res.embedding) == SurfaceStats{10, 15, 5, 0, 1});
    CHECK(res.rotation_systems_tried <= 512);
  }
  SUBCASE("Petersen graph is not planar: the reduced space of 2^9 systems is exhausted") {
    auto res = find_embedding_with_genus(petersen_graph(), 0);
    CHECK(res.status == SearchStatus::none);
    CHECK(res.rotation_systems_tried == 512);
  }
  SUBCASE("triangle") {
    auto g = cycle_on_sphere(3).graph();
    auto res = find_embedding_with_genus(g, 0);
    REQUIRE(res.status == SearchStatus::found);
    CHECK(stats(*res.embedding).r == 2);
    CHECK(find_embedding_with_genus(g, 1).status == SearchStatus::none);
  }
  SUBCASE("budget exhaustion is reported as unknown") {
    auto res = find_embedding_with_genus(petersen_graph(), 0, SearchControl{10});
    CHECK(res.status == SearchStatus::unknown);
  }
  SUBCASE("K5 needs the torus") {
    Graph k5;
    k5.vertex_count = 5;
    for (VertexId u = 0; u < 5; ++u)
      for (VertexId w = u + 1; w < 5; ++w) k5.edges.push_back({u, w});
    CHECK(find_embedding_with_genus(k5, 0).status == SearchStatus::none);
    auto res = find_embedding_with_genus(k5, 1);
    REQUIRE(res.status == SearchStatus::found);
    CHECK(stats(*res.embedding).genus == 1);
  }
  SUBCASE("deterministic") {
    auto x = find_embedding_with_genus(petersen_graph(), 1);
    auto y = find_embedding_with_genus(petersen_graph(), 1);
    CHECK(*x.embedding == *y.embedding);
  }
}

TEST_CASE("face tracing partitions darts on random rotation systems") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    auto p = std::uniform_int_distribution<std::uint32_t>(1, 8)(rng);
    auto q = std::uniform_int_distribution<std::uint32_t>(p - 1, p + 7)(rng);
    auto emb = random_embedding(random_connected_graph(p, q, rng, true), rng);
    REQUIRE(validate(emb).ok());
    auto faces = trace_faces(emb);
    std::size_t total = 0;
    std::vector<int> hits(emb.dart_count(), 0);
    for (const auto& w : faces.walks) {
      total += w.length();
      for (std::size_t i = 0; i < w.length(); ++i) {
        ++hits[w.darts[i]];
        CHECK(emb.face_successor(w.darts[i]) == w.darts[(i + 1) % w.length()]);
      }
    }
    if (emb.edge_count() > 0) CHECK(total == 2 * emb.edge_count());
    for (int h : hits) CHECK(h == 1);
    auto s = stats(emb, faces);
    CHECK(s.euler_characteristic % 2 == 0);
    CHECK(s.genus >= 0);
    CHECK(stats(emb) == s);
  }
}
