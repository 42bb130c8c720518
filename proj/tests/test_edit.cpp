#include <algorithm>
#include <random>

#include "doctest.h"
#include "hamext/edit.hpp"
#include "hamext/extension.hpp"
#include "hamext/generators.hpp"

using namespace hamext;

namespace {

struct Delta {
  std::int64_t p, q, r;
  friend bool operator==(const Delta&, const Delta&) = default;
};

Delta delta(const CombEmbedding& before, const CombEmbedding& after) {
  auto x = stats(before), y = stats(after);
  return {y.p - x.p, y.q - x.q, y.r - x.r};
}

// Face of `emb` that is not the one traversing dart 0 of a cycle_on_sphere.
FaceId other_face(const CombEmbedding& emb) { return trace_faces(emb).face_of_dart[b_dart(0)]; }

}  // namespace

TEST_CASE("crossing rule") {
  CHECK(crossing({0, 0, 2}, {0, 1, 3}));
  CHECK(crossing({0, 2, 0}, {0, 3, 1}));
  CHECK_FALSE(crossing({0, 0, 1}, {0, 2, 3}));
  CHECK_FALSE(crossing({0, 0, 2}, {0, 0, 3}));
  CHECK_FALSE(crossing({0, 0, 2}, {1, 1, 3}));
  CHECK_FALSE(crossing({0, 0, 3}, {0, 1, 2}));
}

TEST_CASE("subdivide_edge") {
  auto tri = cycle_on_sphere(3);
  auto sub = subdivide_edge(tri, 1, 1);
  CHECK(stats(sub) == SurfaceStats{4, 4, 2, 2, 0});

  SUBCASE("count 2 on a loop") {
    auto loop = cycle_on_sphere(1);
    auto out = subdivide_edge(loop, 0, 2);
    CHECK(stats(out) == SurfaceStats{3, 3, 2, 2, 0});
    auto faces = trace_faces(out);
    CHECK(faces[0].length() == 3);
    CHECK(faces[1].length() == 3);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(subdivide_edge(tri, 3, 1), EditError);
    CHECK_THROWS_AS(subdivide_edge(tri, 0, 0), EditError);
  }
  SUBCASE("replacement dart keeps its position") {
    auto k = icosahedron();
    auto out = subdivide_edge(k, 7, 3);
    const VertexId b = k.edge(7).b;
    auto before = k.rotation(b);
    auto after = out.rotation(b);
    REQUIRE(before.size() == after.size());
    for (std::size_t i = 0; i < before.size(); ++i) {
      CHECK(after[i] == (before[i] == b_dart(7) ? b_dart(static_cast<EdgeId>(k.edge_count()) + 2) : before[i]));
    }
  }
}

TEST_CASE("add_face_vertex") {
  auto square = cycle_on_sphere(4);
  const FaceId f = 0;
  SUBCASE("two opposite corners split the face") {
    const FacePosition att[] = {{f, 0}, {f, 2}};
    CHECK(delta(square, add_face_vertex(square, att)) == Delta{1, 2, 1});
  }
  SUBCASE("all eleven ways to use at least two of four corners keep the genus") {
    int patterns = 0;
    for (unsigned mask = 0; mask < 16; ++mask) {
      std::vector<FacePosition> att;
      for (std::uint32_t i = 0; i < 4; ++i)
        if (mask & (1u << i)) att.push_back({f, i});
      if (att.size() < 2) continue;
      ++patterns;
      auto out = add_face_vertex(square, att);
      CHECK(stats(out).euler_characteristic == 2);
      CHECK(delta(square, out) == Delta{1, static_cast<std::int64_t>(att.size()),
                                        static_cast<std::int64_t>(att.size()) - 1});
    }
    CHECK(patterns == 11);
  }
  SUBCASE("pendant") {
    const FacePosition att[] = {{f, 3}};
    CHECK(delta(square, add_face_vertex(square, att)) == Delta{1, 1, 0});
  }
  SUBCASE("errors") {
    const FacePosition mixed[] = {{0, 0}, {1, 1}};
    CHECK_THROWS_AS(add_face_vertex(square, mixed), EditError);
    const FacePosition dup[] = {{0, 1}, {0, 1}};
    CHECK_THROWS_AS(add_face_vertex(square, dup), EditError);
    const FacePosition oob[] = {{0, 9}};
    CHECK_THROWS_AS(add_face_vertex(square, oob), EditError);
  }
}

TEST_CASE("realize_chords") {
  auto square = cycle_on_sphere(4);
  SUBCASE("one chord") {
    const Chord c[] = {{0, 0, 2}};
    auto out = realize_chords(square, c);
    CHECK(delta(square, out) == Delta{0, 1, 1});
    CHECK(stats(out).genus == 0);
    CHECK(out.edge(4) == EdgeEnds{0, 2});
  }
  SUBCASE("interleaved chords are rejected") {
    const Chord c[] = {{0, 0, 2}, {0, 1, 3}};
    CHECK_THROWS_AS(realize_chords(square, c), CrossingChords);
    // Without the check the drawing leaves the sphere.
    CHECK(stats(realize_chords_unchecked(square, c)).genus == 1);
  }
  SUBCASE("fan and parallel chords at shared corners stay planar") {
    auto hex = cycle_on_sphere(6);
    const Chord c[] = {{0, 0, 2}, {0, 0, 3}, {0, 0, 4}, {0, 3, 0}, {0, 2, 0}, {1, 1, 4}, {1, 4, 1}};
    auto out = realize_chords(hex, c);
    CHECK(delta(hex, out) == Delta{0, 7, 7});
  }
  SUBCASE("chord to the same vertex is rejected") {
    auto loop = cycle_on_sphere(1);
    auto sub = subdivide_edge(loop, 0, 1);
    auto faces = trace_faces(sub);
    REQUIRE(faces[0].length() == 2);
    const Chord c[] = {{0, 0, 0}};
    CHECK_THROWS_AS(realize_chords(sub, c), EditError);
  }
}

TEST_CASE("stellate") {
  auto tri = cycle_on_sphere(3);
  auto once = stellate(tri, 0);
  auto faces = trace_faces(once);
  CHECK(faces.size() == 4);
  int triangles = 0;
  for (const auto& w : faces.walks) triangles += w.length() == 3;
  CHECK(triangles == 4);
  CHECK(delta(tri, once) == Delta{1, 3, 2});
  CHECK_THROWS_AS(stellate(cycle_on_sphere(4), 0), EditError);

  auto host = triangle_host_with_stellations(2);
  CHECK(host.inner_faces.size() == 9);
  CHECK(stats(host.embedding) == SurfaceStats{8, 18, 12, 2, 0});
  auto full = stellate_faces(host.embedding, host.inner_faces);
  CHECK(delta(host.embedding, full) == Delta{9, 27, 18});
}

TEST_CASE("edit bookkeeping on randomized inputs") {
  std::mt19937_64 rng(2024);
  int edits = 0;
  while (edits < 1000) {
    auto p = std::uniform_int_distribution<std::uint32_t>(1, 7)(rng);
    auto q = std::uniform_int_distribution<std::uint32_t>(std::max(1u, p - 1), p + 6)(rng);
    auto emb = random_embedding(random_connected_graph(p, q, rng, true), rng);
    auto base = stats(emb);
    auto faces = trace_faces(emb);
    auto f = std::uniform_int_distribution<FaceId>(0, static_cast<FaceId>(faces.size() - 1))(rng);
    const auto& walk = faces[f];
    std::uniform_int_distribution<std::uint32_t> occ(0, static_cast<std::uint32_t>(walk.length() - 1));
    switch (edits % 4) {
      case 0: {
        auto e = std::uniform_int_distribution<EdgeId>(0, static_cast<EdgeId>(emb.edge_count() - 1))(rng);
        auto out = subdivide_edge(emb, e, 1 + edits % 3);
        auto s = stats(out);
        CHECK(s.p - base.p == 1 + edits % 3);
        CHECK(s.q - base.q == 1 + edits % 3);
        CHECK(s.r == base.r);
        CHECK(s.genus == base.genus);
        break;
      }
      case 1: {
        std::vector<std::uint32_t> all(walk.length());
        for (std::uint32_t i = 0; i < all.size(); ++i) all[i] = i;
        std::shuffle(all.begin(), all.end(), rng);
        all.resize(std::uniform_int_distribution<std::size_t>(1, all.size())(rng));
        std::vector<FacePosition> att;
        for (auto i : all) att.push_back({f, i});
        auto s = stats(add_face_vertex(emb, att));
        const auto j = static_cast<std::int64_t>(att.size());
        CHECK(Delta{s.p - base.p, s.q - base.q, s.r - base.r} == Delta{1, j, j - 1});
        CHECK(s.genus == base.genus);
        break;
      }
      case 2: {
        if (walk.length() != 3) continue;
        auto s = stats(stellate(emb, f));
        CHECK(Delta{s.p - base.p, s.q - base.q, s.r - base.r} == Delta{1, 3, 2});
        CHECK(s.genus == base.genus);
        break;
      }
      case 3: {
        // Random non-crossing chord set drawn greedily.
        std::vector<Chord> chords;
        for (int tries = 0; tries < 6; ++tries) {
          Chord c{f, occ(rng), occ(rng)};
          if (walk.corners[c.from] == walk.corners[c.to]) continue;
          if (std::any_of(chords.begin(), chords.end(), [&](const Chord& x) { return crossing(x, c); })) continue;
          chords.push_back(c);
        }
        if (chords.empty()) continue;
        auto s = stats(realize_chords(emb, chords));
        const auto k = static_cast<std::int64_t>(chords.size());
        CHECK(Delta{s.p - base.p, s.q - base.q, s.r - base.r} == Delta{0, k, k});
        CHECK(s.genus == base.genus);
        break;
      }
    }
    ++edits;
  }
}

TEST_CASE("generators") {
  CHECK(stats(cycle_on_sphere(3)) == SurfaceStats{3, 3, 2, 2, 0});
  CHECK(stats(grid_on_torus(3, 3)) == SurfaceStats{9, 18, 9, 0, 1});
  CHECK(stats(grid_on_torus(4, 5)) == SurfaceStats{20, 40, 20, 0, 1});
  auto q5 = hypercube_graph(5);
  CHECK(q5.vertex_count == 32);
  CHECK(q5.edges.size() == 80);
  auto pet = petersen_graph();
  CHECK(pet.vertex_count == 10);
  CHECK(pet.edges.size() == 15);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    auto emb = random_planar_embedding(3 + i % 6, rng);
    CHECK(stats(emb).genus == 0);
  }
}

TEST_CASE("is_extension") {
  auto hex = cycle_on_sphere(6);
  SUBCASE("identity") {
    CHECK(is_extension(hex, ExtensionMap::identity_prefix(hex, hex)).ok);
  }
  SUBCASE("a path of new vertices inside one region") {
    const FaceId f = other_face(hex);
    const FacePosition first[] = {{f, 1}};
    auto step = add_face_vertex(hex, first);  // pendant vertex 6
    auto faces = trace_faces(step);
    const FaceId g = faces.face_of_dart[b_dart(0)];
    auto at_new = occurrences_of(faces, g, 6);
    auto at_four = occurrences_of(faces, g, 4);
    REQUIRE(at_new.size() == 1);
    REQUIRE(at_four.size() == 1);
    const FacePosition second[] = {{g, at_new[0]}, {g, at_four[0]}};
    auto ext = add_face_vertex(step, second);
    auto rep = is_extension(hex, ExtensionMap::identity_prefix(hex, ext));
    CHECK(rep.ok);
    CHECK(rep.region_of_added_vertex.at(6) == f);
    CHECK(rep.region_of_added_vertex.at(7) == f);
    CHECK(restrict_to_base(hex, ExtensionMap::identity_prefix(hex, ext)) == hex);
  }
  SUBCASE("base rotation changed") {
    auto ico = icosahedron();
    const Chord c[] = {{0, 0, 1}};
    auto ext = realize_chords(ico, c);
    auto rot = ext.rotations();
    std::swap(rot[0][0], rot[0][1]);
    auto tampered = CombEmbedding(std::vector<EdgeEnds>(ext.edges().begin(), ext.edges().end()), rot);
    auto rep = is_extension(ico, ExtensionMap::identity_prefix(ico, tampered));
    CHECK_FALSE(rep.ok);
  }
  SUBCASE("edge drawn across two regions") {
    auto square = cycle_on_sphere(4);
    auto faces = trace_faces(square);
    // Join vertex 0 (corner in face 0) to vertex 2 (corner in face 1).
    auto rot = square.rotations();
    std::vector<EdgeEnds> edges(square.edges().begin(), square.edges().end());
    edges.push_back({0, 2});
    rot[0].insert(rot[0].begin(), a_dart(4));
    auto& r2 = rot[2];
    auto it = std::find(r2.begin(), r2.end(), faces[1].darts[occurrences_of(faces, 1, 2)[0]]);
    r2.insert(it, b_dart(4));
    CombEmbedding ext(edges, rot);
    if (stats(ext).genus == 0) {
      // Choose the other corner at vertex 0 instead.
      rot = square.rotations();
      rot[0].push_back(a_dart(4));
      auto& r2b = rot[2];
      r2b.insert(std::find(r2b.begin(), r2b.end(), faces[1].darts[occurrences_of(faces, 1, 2)[0]]), b_dart(4));
      ext = CombEmbedding(edges, rot);
    }
    REQUIRE(stats(ext).genus == 1);
    auto rep = is_extension(square, ExtensionMap::identity_prefix(square, ext));
    CHECK_FALSE(rep.ok);
  }
  SUBCASE("malformed maps") {
    auto map = ExtensionMap::identity_prefix(hex, hex);
    map.vertex_map[1] = 0;
    CHECK_FALSE(is_extension(hex, map).ok);
    map = ExtensionMap::identity_prefix(hex, hex);
    map.edge_paths[0] = {2};
    CHECK_FALSE(is_extension(hex, map).ok);
  }
}

TEST_CASE("extension implies equal genus on random chord extensions") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    auto p = std::uniform_int_distribution<std::uint32_t>(2, 7)(rng);
    auto emb = random_embedding(random_connected_graph(p, p + 2, rng, true), rng);
    auto faces = trace_faces(emb);
    std::vector<Chord> chords;
    for (FaceId f = 0; f < faces.size(); ++f) {
      const auto len = static_cast<std::uint32_t>(faces[f].length());
      for (std::uint32_t i = 0; i + 2 < len; i += 2) {
        Chord c{f, i, i + 2};
        if (faces[f].corners[i] != faces[f].corners[i + 2]) chords.push_back(c);
      }
    }
    // Chords (i, i+2), (i+2, i+4) ... share corners and never interleave.
    auto ext = realize_chords(emb, chords);
    auto map = ExtensionMap::identity_prefix(emb, ext);
    auto rep = is_extension(emb, map);
    CHECK(rep.ok);
    CHECK(stats(ext).genus == stats(emb).genus);
    CHECK(restrict_to_base(emb, map) == emb);
  }
}

TEST_CASE("is_topological_extension") {
  auto tri = cycle_on_sphere(3);
  SUBCASE("plain extension counts") {
    const Chord c[] = {{0, 0, 1}};
    auto ext = realize_chords(tri, c);
    CHECK(is_topological_extension(tri, ExtensionMap::identity_prefix(tri, ext)).ok);
  }
  SUBCASE("subdivided edge with material inside one region") {
    auto sub = subdivide_edge(tri, 0, 1);  // vertex 3 on edge 0, segment edge 3
    auto faces = trace_faces(sub);
    const FaceId f = faces.face_of_dart[a_dart(0)];
    const FacePosition att[] = {{f, occurrences_of(faces, f, 3)[0]}, {f, occurrences_of(faces, f, 2)[0]}};
    auto ext = add_face_vertex(sub, att);
    ExtensionMap map;
    map.extended = ext;
    map.vertex_map = {0, 1, 2};
    map.edge_paths = {{0, 3}, {1}, {2}};
    auto rep = is_topological_extension(tri, map);
    CHECK(rep.ok);
    CHECK(rep.region_of_added_vertex.at(4) == trace_faces(tri).face_of_dart[a_dart(0)]);
  }
  SUBCASE("subdivided edge whose new material is rerouted through the other region") {
    auto sub = subdivide_edge(tri, 0, 1);
    // Edge from the subdivision vertex 3 to vertex 2 leaving 3 on one side of
    // edge 0 and arriving at 2 on the other side.
    std::vector<EdgeEnds> edges(sub.edges().begin(), sub.edges().end());
    edges.push_back({3, 2});
    bool found_bad = false;
    for (int side3 = 0; side3 < 2 && !found_bad; ++side3) {
      for (int side2 = 0; side2 < 2 && !found_bad; ++side2) {
        auto rot = sub.rotations();
        rot[3].insert(rot[3].begin() + side3, a_dart(4));
        rot[2].insert(rot[2].begin() + side2, b_dart(4));
        CombEmbedding ext(edges, rot);
        if (stats(ext).genus == 0) continue;
        found_bad = true;
        ExtensionMap map;
        map.extended = ext;
        map.vertex_map = {0, 1, 2};
        map.edge_paths = {{0, 3}, {1}, {2}};
        CHECK_FALSE(is_topological_extension(tri, map).ok);
      }
    }
    CHECK(found_bad);
  }
  SUBCASE("path that does not follow the edge") {
    auto sub = subdivide_edge(tri, 0, 1);
    ExtensionMap map;
    map.extended = sub;
    map.vertex_map = {0, 1, 2};
    map.edge_paths = {{0, 1}, {1}, {2}};
    CHECK_FALSE(is_topological_extension(tri, map).ok);
  }
}
