#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "hamext/generators.hpp"
#include "hamext/ham.hpp"
#include "hamext/klee.hpp"

using namespace hamext;

namespace {

CombEmbedding petersen_torus() { return *find_embedding_with_genus(petersen_graph(), 1).embedding; }

CombEmbedding fully_stellated_host() {
  auto host = triangle_host_with_stellations(2);
  return stellate_faces(host.embedding, host.inner_faces);
}

Graph complete_graph(std::uint32_t n) {
  Graph g;
  g.vertex_count = n;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId w = u + 1; w < n; ++w) g.edges.push_back({u, w});
  return g;
}

}  // namespace

TEST_CASE("hamiltonian_cycle") {
  CHECK(hamiltonian_cycle(petersen_graph()).status == SearchStatus::none);
  auto k4 = hamiltonian_cycle(complete_graph(4));
  REQUIRE(k4.status == SearchStatus::found);
  CHECK(k4.cycle->length() == 4);
  CHECK(hamiltonian_cycle(fully_stellated_host().graph()).status == SearchStatus::none);
  CHECK(hamiltonian_cycle(cycle_on_sphere(1).graph()).status == SearchStatus::found);
  CHECK(hamiltonian_cycle(Graph{1, {}}).status == SearchStatus::none);
  CHECK(hamiltonian_cycle(Graph{2, {{0, 1}}}).status == SearchStatus::none);
  CHECK(hamiltonian_cycle(Graph{2, {{0, 1}, {1, 0}}}).status == SearchStatus::found);
  CHECK(hamiltonian_cycle(petersen_graph(), SearchControl{3}).status == SearchStatus::unknown);

  SUBCASE("cycles returned are Hamiltonian") {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 200; ++trial) {
      auto p = std::uniform_int_distribution<std::uint32_t>(3, 9)(rng);
      auto g = random_connected_graph(p, p + 4, rng, true);
      auto res = hamiltonian_cycle(g);
      REQUIRE(res.status != SearchStatus::unknown);
      if (res.status != SearchStatus::found) continue;
      const auto& c = *res.cycle;
      CHECK(c.length() == p);
      std::set<VertexId> vs(c.vertices.begin(), c.vertices.end());
      CHECK(vs.size() == p);
      for (std::size_t k = 0; k < p; ++k) {
        auto [a, b] = g.edges[c.edges[k]];
        VertexId u = c.vertices[k], w = c.vertices[(k + 1) % p];
        CHECK(((a == u && b == w) || (a == w && b == u)));
      }
    }
  }
}

TEST_CASE("decide_ham_extendable on fixed examples") {
  for (std::uint32_t n : {1u, 2u, 3u, 7u}) {
    auto out = decide_ham_extendable(cycle_on_sphere(n));
    REQUIRE(out.verdict == Verdict::yes);
    CHECK(out.certificate->chords.empty());
    CHECK(verify_certificate(cycle_on_sphere(n), *out.certificate).ok);
  }

  auto stellated = fully_stellated_host();
  auto no = decide_ham_extendable(stellated, SearchControl{10'000'000});
  CHECK(no.verdict == Verdict::no);
  CHECK(no.nodes <= 10'000'000);

  auto pet = petersen_torus();
  auto yes = decide_ham_extendable(pet);
  REQUIRE(yes.verdict == Verdict::yes);
  CHECK(verify_certificate(pet, *yes.certificate).ok);

  CHECK(decide_ham_extendable(stellated, SearchControl{100}).verdict == Verdict::unknown);
  CHECK(decide_ham_extendable(CombEmbedding({}, {{}})).verdict == Verdict::no);

  SUBCASE("star needs chords all around its one region") {
    Graph star{6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}}};
    auto emb = embed_sorted(star);
    auto res = min_added_edges(emb);
    REQUIRE(res.status == SearchStatus::found);
    CHECK(*res.min_edges == 4);
    CHECK(verify_certificate(emb, *res.certificate).ok);
  }
}

TEST_CASE("min_added_edges") {
  CHECK(*min_added_edges(cycle_on_sphere(5)).min_edges == 0);
  CHECK(*min_added_edges(cycle_on_sphere(3)).min_edges == 0);
  auto pet = petersen_torus();
  auto res = min_added_edges(pet);
  REQUIRE(res.status == SearchStatus::found);
  CHECK(*res.min_edges <= 3);
  // Frozen: one chord suffices on the torus embedding found by the search.
  CHECK(*res.min_edges == 1);
  CHECK(verify_certificate(pet, *res.certificate).ok);
  CHECK(min_added_edges(fully_stellated_host()).status == SearchStatus::none);

  SUBCASE("zero exactly when the graph is Hamiltonian") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 150; ++trial) {
      auto p = std::uniform_int_distribution<std::uint32_t>(2, 7)(rng);
      auto g = random_connected_graph(p, p + 2, rng, true);
      auto emb = random_embedding(g, rng);
      auto m = min_added_edges(emb);
      REQUIRE(m.status != SearchStatus::unknown);
      if (m.status == SearchStatus::none) {
        CHECK(decide_ham_extendable(emb).verdict == Verdict::no);
        CHECK(hamiltonian_cycle(g).status == SearchStatus::none);
        continue;
      }
      CHECK((*m.min_edges == 0) == (hamiltonian_cycle(g).status == SearchStatus::found));
      CHECK(verify_certificate(emb, *m.certificate).ok);
    }
  }
}

TEST_CASE("verify_certificate rejects tampering") {
  auto square = cycle_on_sphere(4);
  ExtensionCertificate ok{{}, {0, 1, 2, 3}, {{Link::Kind::edge, 0}, {Link::Kind::edge, 1}, {Link::Kind::edge, 2},
                                             {Link::Kind::edge, 3}}};
  CHECK(verify_certificate(square, ok).ok);

  auto crossing_pair = ok;
  crossing_pair.chords = {{0, 0, 2}, {0, 1, 3}};
  auto rep = verify_certificate(square, crossing_pair);
  CHECK_FALSE(rep.ok);
  CHECK(rep.problems.front().find("cross") != std::string::npos);

  auto skips = ok;
  skips.cycle = {0, 1, 2};
  skips.links.pop_back();
  CHECK_FALSE(verify_certificate(square, skips).ok);

  auto wrong_edge = ok;
  wrong_edge.links[0].id = 2;
  CHECK_FALSE(verify_certificate(square, wrong_edge).ok);

  auto phantom = ok;
  phantom.links[0] = {Link::Kind::chord, 0};
  CHECK_FALSE(verify_certificate(square, phantom).ok);

  auto pet = petersen_torus();
  auto cert = *decide_ham_extendable(pet).certificate;
  auto moved = cert;
  REQUIRE_FALSE(moved.chords.empty());
  moved.chords[0].to = (moved.chords[0].to + 1) % 6;
  CHECK_FALSE(verify_certificate(pet, moved).ok);
}

TEST_CASE("oracle with added vertices") {
  auto square = cycle_on_sphere(4);
  CHECK(oracle_decide_with_added_vertices(square, 1).verdict == Verdict::yes);
  CHECK(decide_ham_extendable(square).verdict == Verdict::yes);

  auto stellated = fully_stellated_host();
  auto o = oracle_decide_with_added_vertices(stellated, 2);
  CHECK(o.verdict == Verdict::no);
  CHECK(o.relaxation);

  SUBCASE("yes needs added vertices") {
    Graph path{4, {{0, 1}, {1, 2}, {2, 3}}};
    auto emb = embed_sorted(path);
    auto res = oracle_decide_with_added_vertices(emb, 2);
    REQUIRE(res.verdict == Verdict::yes);
    CHECK(res.extension->vertex_count() == 5);
    CHECK(stats(*res.extension).genus == 0);
    CHECK(verify_certificate(emb, *res.certificate).ok);
  }
}

TEST_CASE("decider agrees with the added-vertex oracle on small random embeddings") {
  std::mt19937_64 rng(2718);
  int compared = 0;
  for (int trial = 0; trial < 120; ++trial) {
    auto p = std::uniform_int_distribution<std::uint32_t>(1, 6)(rng);
    auto q = std::uniform_int_distribution<std::uint32_t>(std::max(1u, p - 1), 9)(rng);
    auto emb = random_embedding(random_connected_graph(p, q, rng, true), rng);
    auto d = decide_ham_extendable(emb);
    REQUIRE(d.verdict != Verdict::unknown);
    if (d.verdict == Verdict::yes) CHECK(verify_certificate(emb, *d.certificate).ok);
    auto o = oracle_decide_with_added_vertices(emb, 2, SearchControl{2'000'000});
    if (o.verdict == Verdict::unknown) continue;
    ++compared;
    CHECK(o.verdict == d.verdict);
  }
  CHECK(compared >= 60);
}

TEST_CASE("pre-realizing a non-crossing chord keeps a yes") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 80; ++trial) {
    auto p = std::uniform_int_distribution<std::uint32_t>(3, 7)(rng);
    auto emb = random_embedding(random_connected_graph(p, p + 1, rng, true), rng);
    auto faces = trace_faces(emb);
    std::vector<Chord> options;
    for (const auto& w : faces.walks)
      for (std::uint32_t i = 0; i < w.length(); ++i)
        for (std::uint32_t j = i + 1; j < w.length(); ++j)
          if (w.corners[i] != w.corners[j]) options.push_back({w.id, i, j});
    if (options.empty()) continue;
    const Chord c = options[trial % options.size()];
    auto before = decide_ham_extendable(emb);
    auto after = decide_ham_extendable(realize_chords(emb, std::span(&c, 1)));
    if (before.verdict == Verdict::yes) CHECK(after.verdict == Verdict::yes);
  }
}

TEST_CASE("valid Theorem 1 certificates describe non-Hamiltonian graphs") {
  auto host = triangle_host_with_stellations(2);
  for (std::size_t s = 6; s <= 9; ++s) {
    std::vector<FaceId> chosen(host.inner_faces.begin(), host.inner_faces.begin() + s);
    auto ext = stellate_faces(host.embedding, chosen);
    auto cert = make_klee_certificate(host.embedding, ExtensionMap::identity_prefix(host.embedding, ext),
                                      host.triangle);
    auto check = check_theorem1_certificate(cert);
    auto hc = hamiltonian_cycle(ext.graph());
    if (check.valid) CHECK(hc.status == SearchStatus::none);
    CHECK(check.valid == (s >= 7));
  }
  auto ico = icosahedron();
  std::vector<FaceId> thirteen(13);
  std::iota(thirteen.begin(), thirteen.end(), 0u);
  auto ext = stellate_faces(ico, thirteen);
  auto cert = make_klee_certificate(ico, ExtensionMap::identity_prefix(ico, ext));
  REQUIRE(check_theorem1_certificate(cert).valid);
  CHECK(hamiltonian_cycle(ext.graph()).status == SearchStatus::none);
}

TEST_CASE("every non-extendable small planar embedding has a local Klee witness") {
  std::mt19937_64 rng(404);
  int rejected = 0, candidates = 0;
  for (int trial = 0; trial < 200; ++trial) {
    auto emb = random_planar_embedding(5 + trial % 8, rng);
    // Stellate a few triangles to make rejections possible.
    auto faces = trace_faces(emb);
    std::vector<FaceId> tri;
    for (const auto& w : faces.walks)
      if (w.length() == 3 && (rng() % 3 != 0)) tri.push_back(w.id);
    emb = stellate_faces(emb, tri);
    auto d = decide_ham_extendable(emb, SearchControl{2'000'000});
    if (d.verdict != Verdict::no) continue;
    ++rejected;
    auto scan = scan_local_klee(emb, emb.vertex_count(), SearchControl{2'000'000});
    if (scan.witnesses.empty() && !is_klee_type(emb).klee) {
      ++candidates;
      MESSAGE("conjecture counterexample candidate with p = " << emb.vertex_count());
    }
  }
  MESSAGE("rejected " << rejected << ", candidates " << candidates);
  CHECK(rejected > 0);
}
