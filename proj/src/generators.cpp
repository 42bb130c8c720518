#include "hamext/generators.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hamext/edit.hpp"

namespace hamext {

CombEmbedding from_oriented_faces(std::size_t vertex_count, std::span<const std::vector<VertexId>> faces) {
  std::map<std::pair<VertexId, VertexId>, Dart> dart_of;
  std::vector<EdgeEnds> edges;
  for (const auto& face : faces) {
    for (std::size_t i = 0; i < face.size(); ++i) {
      VertexId u = face[i], w = face[(i + 1) % face.size()];
      if (u >= vertex_count || w >= vertex_count) throw std::invalid_argument("face vertex out of range");
      if (dart_of.count({u, w})) throw std::invalid_argument("directed edge used twice");
      if (auto it = dart_of.find({w, u}); it != dart_of.end()) {
        dart_of[{u, w}] = twin(it->second);
      } else {
        auto e = static_cast<EdgeId>(edges.size());
        edges.push_back(EdgeEnds{u, w});
        dart_of[{u, w}] = a_dart(e);
      }
    }
  }
  if (dart_of.size() != 2 * edges.size()) throw std::invalid_argument("some edge lies on only one face side");
  std::vector<Dart> next(2 * edges.size(), kNone);
  for (const auto& face : faces) {
    const std::size_t k = face.size();
    for (std::size_t i = 0; i < k; ++i) {
      VertexId u = face[i], w = face[(i + 1) % k], x = face[(i + 2) % k];
      next[dart_of.at({w, u})] = dart_of.at({w, x});
    }
  }
  std::vector<std::vector<Dart>> rot(vertex_count);
  std::vector<bool> used(next.size(), false);
  for (Dart d = 0; d < next.size(); ++d) {
    if (used[d]) continue;
    VertexId v = is_b_end(d) ? edges[edge_of(d)].b : edges[edge_of(d)].a;
    if (!rot[v].empty()) throw std::invalid_argument("faces do not close up around vertex " + std::to_string(v));
    for (Dart x = d; !used[x]; x = next[x]) {
      used[x] = true;
      rot[v].push_back(x);
    }
  }
  return CombEmbedding(std::move(edges), std::move(rot));
}

CombEmbedding cycle_on_sphere(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("cycle_on_sphere needs n >= 1");
  std::vector<EdgeEnds> edges;
  std::vector<std::vector<Dart>> rot(n);
  for (VertexId i = 0; i < n; ++i) {
    edges.push_back(EdgeEnds{i, (i + 1) % n});
    rot[i].push_back(a_dart(i));
    rot[(i + 1) % n].push_back(b_dart(i));
  }
  return CombEmbedding(std::move(edges), std::move(rot));
}

CombEmbedding grid_on_torus(std::uint32_t m, std::uint32_t n) {
  if (m == 0 || n == 0) throw std::invalid_argument("grid_on_torus needs m, n >= 1");
  auto id = [&](std::uint32_t i, std::uint32_t j) { return static_cast<VertexId>((i % m) * n + (j % n)); };
  std::vector<EdgeEnds> edges(2 * m * n);
  std::vector<std::vector<Dart>> rot(m * n);
  for (std::uint32_t i = 0; i < m; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      VertexId v = id(i, j);
      edges[2 * v] = EdgeEnds{v, id(i, j + 1)};
      edges[2 * v + 1] = EdgeEnds{v, id(i + 1, j)};
    }
  }
  for (std::uint32_t i = 0; i < m; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      VertexId v = id(i, j);
      EdgeId east = 2 * v, north = 2 * v + 1;
      EdgeId west = 2 * id(i, j + n - 1), south = 2 * id(i + m - 1, j) + 1;
      rot[v] = {a_dart(east), a_dart(north), b_dart(west), b_dart(south)};
    }
  }
  return CombEmbedding(std::move(edges), std::move(rot));
}

GraphCycle grid_row_cycle(std::uint32_t m, std::uint32_t n, std::uint32_t row) {
  if (row >= m) throw std::invalid_argument("row out of range");
  GraphCycle c;
  for (std::uint32_t j = 0; j < n; ++j) {
    VertexId v = row * n + j;
    c.vertices.push_back(v);
    c.edges.push_back(2 * v);
  }
  return c;
}

CombEmbedding theta_graph() {
  const std::vector<std::vector<VertexId>> faces = {{0, 2, 1, 3}, {0, 3, 1, 4}, {0, 4, 1, 2}};
  return from_oriented_faces(5, faces);
}

Graph hypercube_graph(std::uint32_t d) {
  if (d > 20) throw std::invalid_argument("hypercube_graph: dimension too large");
  Graph g;
  g.vertex_count = std::size_t{1} << d;
  for (VertexId v = 0; v < g.vertex_count; ++v)
    for (std::uint32_t bit = 0; bit < d; ++bit)
      if (VertexId w = v ^ (1u << bit); v < w) g.edges.push_back(EdgeEnds{v, w});
  return g;
}

Graph petersen_graph() {
  Graph g;
  g.vertex_count = 10;
  for (VertexId i = 0; i < 5; ++i) {
    g.edges.push_back(EdgeEnds{i, (i + 1) % 5});          // outer 5-cycle
    g.edges.push_back(EdgeEnds{i, i + 5});                // spokes
    g.edges.push_back(EdgeEnds{i + 5, (i + 2) % 5 + 5});  // inner pentagram
  }
  return g;
}

CombEmbedding icosahedron() {
  auto up = [](std::uint32_t i) { return static_cast<VertexId>(1 + i % 5); };
  auto low = [](std::uint32_t i) { return static_cast<VertexId>(6 + i % 5); };
  std::vector<std::vector<VertexId>> faces;
  for (std::uint32_t i = 0; i < 5; ++i) {
    faces.push_back({0, up(i), up(i + 1)});
    faces.push_back({up(i), low(i), up(i + 1)});
    faces.push_back({up(i + 1), low(i), low(i + 1)});
    faces.push_back({11, low(i + 1), low(i)});
  }
  return from_oriented_faces(12, faces);
}

StellatedHost triangle_host_with_stellations(std::uint32_t levels) {
  StellatedHost host;
  CombEmbedding emb = cycle_on_sphere(3);
  // The inside of the triangle is the face traversing dart 0 (0 -> 1).
  {
    Faces f = trace_faces(emb);
    emb = stellate(emb, f.face_of_dart[b_dart(0)]);
  }
  std::vector<Dart> reps{a_dart(0)};
  for (std::uint32_t level = 0; level < levels; ++level) {
    std::vector<Dart> next;
    for (Dart rep : reps) {
      Faces f = trace_faces(emb);
      const auto& walk = f[f.face_of_dart[rep]];
      next.insert(next.end(), walk.darts.begin(), walk.darts.end());
      emb = stellate(emb, walk.id);
    }
    reps = std::move(next);
  }
  Faces f = trace_faces(emb);
  for (Dart rep : reps) host.inner_faces.push_back(f.face_of_dart[rep]);
  std::sort(host.inner_faces.begin(), host.inner_faces.end());
  host.embedding = std::move(emb);
  host.triangle = GraphCycle{{0, 1, 2}, {0, 1, 2}};
  return host;
}

Graph random_connected_graph(std::uint32_t p, std::uint32_t q, std::mt19937_64& rng, bool allow_multi) {
  if (p == 0) throw std::invalid_argument("random_connected_graph needs p >= 1");
  if (q + 1 < p) throw std::invalid_argument("too few edges for a connected graph");
  if (!allow_multi && q > std::uint64_t{p} * (p - 1) / 2) throw std::invalid_argument("too many edges");
  Graph g;
  g.vertex_count = p;
  std::set<std::pair<VertexId, VertexId>> present;
  auto add = [&](VertexId u, VertexId w) {
    if (rng() & 1) std::swap(u, w);
    g.edges.push_back(EdgeEnds{u, w});
    present.insert(std::minmax(u, w));
  };
  for (VertexId v = 1; v < p; ++v) add(std::uniform_int_distribution<VertexId>(0, v - 1)(rng), v);
  std::uniform_int_distribution<VertexId> pick(0, p - 1);
  while (g.edges.size() < q) {
    VertexId u = pick(rng), w = pick(rng);
    if (!allow_multi && (u == w || present.count(std::minmax(u, w)))) continue;
    add(u, w);
  }
  return g;
}

CombEmbedding random_planar_embedding(std::uint32_t target_vertices, std::mt19937_64& rng) {
  CombEmbedding emb = cycle_on_sphere(3);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  while (emb.vertex_count() < target_vertices) {
    Faces faces = trace_faces(emb);
    auto f = std::uniform_int_distribution<FaceId>(0, static_cast<FaceId>(faces.size() - 1))(rng);
    const auto& walk = faces[f];
    const auto len = static_cast<std::uint32_t>(walk.length());
    std::uniform_int_distribution<std::uint32_t> occ(0, len - 1);
    double roll = coin(rng);
    if (roll < 0.45) {
      std::set<std::uint32_t> chosen;
      auto want = std::uniform_int_distribution<std::uint32_t>(1, std::min(len, 3u))(rng);
      while (chosen.size() < want) chosen.insert(occ(rng));
      std::vector<FacePosition> att;
      for (auto o : chosen) att.push_back({f, o});
      emb = add_face_vertex(emb, att);
    } else if (roll < 0.75) {
      std::uint32_t i = occ(rng), j = occ(rng);
      VertexId u = walk.corners[i], w = walk.corners[j];
      bool adjacent = false;
      for (Dart d : emb.rotation(u)) adjacent = adjacent || emb.head(d) == w;
      if (u == w || adjacent) continue;
      const Chord c{f, i, j};
      emb = realize_chords(emb, std::span(&c, 1));
    } else {
      auto e = std::uniform_int_distribution<EdgeId>(0, static_cast<EdgeId>(emb.edge_count() - 1))(rng);
      emb = subdivide_edge(emb, e, 1);
    }
  }
  return emb;
}

}  // namespace hamext
