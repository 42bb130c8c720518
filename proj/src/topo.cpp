#include "hamext/topo.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace hamext {

namespace {

constexpr std::uint32_t kUnreached = kNone;
constexpr std::size_t kRouteChoiceCap = 16;

// Lowest occurrence of v on each face (kNone where v does not occur).
std::vector<std::uint32_t> lowest_occurrence(const Faces& faces, VertexId v) {
  std::vector<std::uint32_t> occ(faces.size(), kNone);
  for (const auto& w : faces.walks) {
    for (std::uint32_t i = 0; i < w.length(); ++i) {
      if (w.corners[i] == v) {
        occ[w.id] = i;
        break;
      }
    }
  }
  return occ;
}

std::vector<std::uint32_t> face_distances(const Faces& faces, const std::vector<std::uint32_t>& source_occ,
                                          const std::vector<bool>& crossable) {
  std::vector<std::uint32_t> dist(faces.size(), kUnreached);
  std::deque<FaceId> queue;
  for (FaceId f = 0; f < faces.size(); ++f) {
    if (source_occ[f] != kNone) {
      dist[f] = 0;
      queue.push_back(f);
    }
  }
  while (!queue.empty()) {
    FaceId f = queue.front();
    queue.pop_front();
    for (Dart d : faces[f].darts) {
      if (!crossable[edge_of(d)]) continue;
      FaceId g = faces.face_of_dart[twin(d)];
      if (dist[g] == kUnreached) {
        dist[g] = dist[f] + 1;
        queue.push_back(g);
      }
    }
  }
  return dist;
}

}  // namespace

std::vector<Route> shortest_routes(const CombEmbedding& work, const Faces& faces, VertexId from, VertexId to,
                                   const std::vector<bool>& crossable, std::size_t limit) {
  if (crossable.size() != work.edge_count()) throw std::invalid_argument("crossable marks do not match the edges");
  std::vector<Route> routes;
  const auto from_occ = lowest_occurrence(faces, from);
  if (from == to) {
    for (FaceId f = 0; f < faces.size() && routes.size() < limit; ++f) {
      if (from_occ[f] == kNone) continue;
      auto occs = occurrences_of(faces, f, from);
      routes.push_back(Route{from, to, {f, occs[0]}, {}, {f, occs.size() > 1 ? occs[1] : occs[0]}});
    }
    return routes;
  }
  const auto to_occ = lowest_occurrence(faces, to);
  const auto dist_from = face_distances(faces, from_occ, crossable);
  const auto dist_to = face_distances(faces, to_occ, crossable);
  std::uint32_t best = kUnreached;
  for (FaceId f = 0; f < faces.size(); ++f) {
    if (to_occ[f] != kNone) best = std::min(best, dist_from[f]);
  }
  if (best == kUnreached) return routes;

  Route cur{from, to, {}, {}, {}};
  auto walk = [&](auto&& self, FaceId f, std::uint32_t depth) -> void {
    if (routes.size() >= limit) return;
    if (depth == best) {
      cur.end = {f, to_occ[f]};
      routes.push_back(cur);
      return;
    }
    const auto& w = faces[f];
    for (std::uint32_t i = 0; i < w.length(); ++i) {
      const Dart d = w.darts[i];
      if (!crossable[edge_of(d)]) continue;
      const FaceId g = faces.face_of_dart[twin(d)];
      if (dist_to[g] != best - depth - 1) continue;
      cur.crossings.push_back({f, i, d});
      self(self, g, depth + 1);
      cur.crossings.pop_back();
    }
  };
  for (FaceId f = 0; f < faces.size(); ++f) {
    if (from_occ[f] == kNone || dist_to[f] != best) continue;
    cur.start = {f, from_occ[f]};
    walk(walk, f, 0);
  }
  return routes;
}

Route plan_route(const CombEmbedding& work, const Faces& faces, VertexId from, VertexId to,
                 const std::vector<bool>& crossable) {
  auto routes = shortest_routes(work, faces, from, to, crossable, 1);
  if (routes.empty()) {
    throw std::logic_error("no route from " + std::to_string(from) + " to " + std::to_string(to));
  }
  return routes.front();
}

namespace {

// Mutable working map. Darts keep their ids across edits; subdividing edge
// e = (a, b) at x keeps e as a -> x and appends f = x -> b.
struct Work {
  std::vector<EdgeEnds> edges;
  std::vector<std::vector<Dart>> rot;
  std::vector<bool> crossable;

  explicit Work(const CombEmbedding& emb)
      : edges(emb.edges().begin(), emb.edges().end()), rot(emb.rotations()), crossable(emb.edge_count(), true) {}

  CombEmbedding snapshot() const { return CombEmbedding(edges, rot); }

  void insert_before(VertexId v, Dart before, Dart d) {
    auto& r = rot[v];
    auto it = std::find(r.begin(), r.end(), before);
    if (it == r.end()) throw std::logic_error("corner dart not found at vertex " + std::to_string(v));
    r.insert(it, d);
  }

  // Returns the new edge f; the new vertex is edges[f].a.
  EdgeId subdivide(EdgeId e) {
    const auto x = static_cast<VertexId>(rot.size());
    const auto f = static_cast<EdgeId>(edges.size());
    const VertexId b = edges[e].b;
    edges[e].b = x;
    edges.push_back({x, b});
    crossable.push_back(crossable[e]);
    std::replace(rot[b].begin(), rot[b].end(), b_dart(e), b_dart(f));
    rot.push_back({b_dart(e), a_dart(f)});
    return f;
  }

  EdgeId connect(VertexId u, Dart before_u, VertexId w, Dart before_w) {
    const auto g = static_cast<EdgeId>(edges.size());
    edges.push_back({u, w});
    crossable.push_back(false);
    insert_before(u, before_u, a_dart(g));
    insert_before(w, before_w, b_dart(g));
    return g;
  }
};

void realize_route(Work& work, const Faces& faces, const Route& route, GraphCycle& cycle) {
  Dart anchor = faces[route.start.face].darts[route.start.occurrence];
  Dart end_anchor = faces[route.end.face].darts[route.end.occurrence];
  VertexId cur = route.from;
  cycle.vertices.push_back(route.from);
  for (const auto& c : route.crossings) {
    const EdgeId e = edge_of(c.dart);
    const EdgeId f = work.subdivide(e);
    const VertexId x = work.edges[f].a;
    for (Dart* a : {&anchor, &end_anchor}) {
      if (*a == b_dart(e)) *a = b_dart(f);
    }
    const Dart in = is_b_end(c.dart) ? b_dart(e) : a_dart(f);
    const Dart out = is_b_end(c.dart) ? a_dart(f) : b_dart(e);
    cycle.edges.push_back(work.connect(cur, anchor, x, in));
    cycle.vertices.push_back(x);
    cur = x;
    anchor = out;
  }
  cycle.edges.push_back(work.connect(cur, anchor, route.to, end_anchor));
}

void check_order(const std::vector<VertexId>& order, std::size_t p) {
  std::vector<bool> seen(p, false);
  if (order.size() != p) throw std::invalid_argument("order must list every vertex once");
  for (VertexId v : order) {
    if (v >= p || seen[v]) throw std::invalid_argument("order must list every vertex once");
    seen[v] = true;
  }
}

TopoExtensionResult build_impl(const CombEmbedding& emb, const std::vector<VertexId>& order,
                               const std::vector<std::uint32_t>& choices, std::vector<std::uint32_t>* option_counts) {
  const std::size_t p = emb.vertex_count();
  TopoExtensionResult res;
  res.order = order;
  Work work(emb);
  if (emb.edge_count() == 0) {
    // One vertex, no corners: the curve is a loop around it.
    work.edges.push_back({0, 0});
    work.crossable.push_back(false);
    work.rot[0] = {a_dart(0), b_dart(0)};
    res.hamiltonian_cycle = GraphCycle{{0}, {0}};
  } else {
    for (std::size_t k = 0; k < p; ++k) {
      const VertexId from = order[k], to = order[(k + 1) % p];
      const CombEmbedding snap = work.snapshot();
      const Faces faces = trace_faces(snap);
      auto routes = shortest_routes(snap, faces, from, to, work.crossable, kRouteChoiceCap);
      if (routes.empty()) {
        throw std::logic_error("no route from " + std::to_string(from) + " to " + std::to_string(to));
      }
      if (option_counts) option_counts->push_back(static_cast<std::uint32_t>(routes.size()));
      const std::uint32_t pick = k < choices.size() ? choices[k] : 0;
      if (pick >= routes.size()) throw std::invalid_argument("route choice out of range");
      realize_route(work, faces, routes[pick], res.hamiltonian_cycle);
      res.routes.push_back(std::move(routes[pick]));
      if (p == 1) break;
    }
  }
  res.extended = work.snapshot();
  res.crossing_count = static_cast<std::uint32_t>(res.extended.vertex_count() - p);

  auto& map = res.extension_map;
  map.vertex_map.resize(p);
  std::iota(map.vertex_map.begin(), map.vertex_map.end(), 0u);
  const auto& ext = res.extended;
  res.gamma_prime = emb;
  for (EdgeId o = 0; o < emb.edge_count(); ++o) {
    std::vector<EdgeId> path;
    Dart t = a_dart(o);
    while (true) {
      path.push_back(edge_of(t));
      const VertexId head = ext.head(t);
      if (head < p) break;
      const Dart arrived = twin(t);
      Dart next = kNone;
      for (Dart d : ext.rotation(head)) {
        if (d != arrived && work.crossable[edge_of(d)]) next = d;
      }
      t = next;
    }
    if (path.size() > 1) res.gamma_prime = subdivide_edge(res.gamma_prime, o, static_cast<std::uint32_t>(path.size() - 1));
    map.edge_paths.push_back(std::move(path));
  }
  map.extended = res.extended;
  return res;
}

}  // namespace

TopoExtensionResult build_extension(const CombEmbedding& emb, const std::optional<std::vector<VertexId>>& order,
                                    const std::vector<std::uint32_t>& choices) {
  require_valid(emb);
  std::vector<VertexId> ord(emb.vertex_count());
  if (order) {
    check_order(*order, emb.vertex_count());
    ord = *order;
  } else {
    std::iota(ord.begin(), ord.end(), 0u);
  }
  return build_impl(emb, ord, choices, nullptr);
}

std::vector<VertexId> random_vertex_order(std::size_t p, std::mt19937_64& rng) {
  std::vector<VertexId> ord(p);
  std::iota(ord.begin(), ord.end(), 0u);
  std::shuffle(ord.begin(), ord.end(), rng);
  return ord;
}

TopoReport verify_result(const CombEmbedding& base, const TopoExtensionResult& result) {
  TopoReport rep;
  auto fail = [&](std::string why) {
    rep.problems.push_back(std::move(why));
    return rep;
  };
  const auto& ext = result.extended;
  if (auto v = validate(ext); !v.ok()) return fail("extended embedding invalid: " + v.summary());
  if (stats(ext).genus != stats(base).genus) rep.problems.push_back("genus changes");

  const auto& map = result.extension_map;
  if (!(map.extended == ext)) rep.problems.push_back("extension map does not refer to the extended embedding");
  auto topo = is_topological_extension(base, map);
  for (const auto& p : topo.problems) rep.problems.push_back("not a topological extension: " + p);
  if (!topo.problems.empty()) return rep;

  CombEmbedding rebuilt = base;
  std::vector<bool> is_path_edge(ext.edge_count(), false);
  for (EdgeId e = 0; e < base.edge_count(); ++e) {
    for (EdgeId g : map.edge_paths[e]) is_path_edge[g] = true;
    if (map.edge_paths[e].size() > 1) {
      rebuilt = subdivide_edge(rebuilt, e, static_cast<std::uint32_t>(map.edge_paths[e].size() - 1));
    }
  }
  if (!(rebuilt == result.gamma_prime)) rep.problems.push_back("gamma_prime is not the marked subdivision");

  const std::size_t pe = ext.vertex_count();
  const auto& cyc = result.hamiltonian_cycle;
  if (cyc.vertices.size() != pe || cyc.edges.size() != pe) return fail("curve does not pass through every vertex");
  std::set<VertexId> seen;
  std::set<EdgeId> used;
  for (std::size_t k = 0; k < pe; ++k) {
    const VertexId u = cyc.vertices[k], w = cyc.vertices[(k + 1) % pe];
    const EdgeId g = cyc.edges[k];
    if (u >= pe || !seen.insert(u).second) return fail("curve repeats or leaves the vertex set at " + std::to_string(u));
    if (g >= ext.edge_count()) return fail("curve edge " + std::to_string(g) + " does not exist");
    const auto& ends = ext.edge(g);
    if (!((ends.a == u && ends.b == w) || (ends.a == w && ends.b == u))) {
      return fail("curve edge " + std::to_string(g) + " does not join " + std::to_string(u) + " and " +
                  std::to_string(w));
    }
    if (!used.insert(g).second) return fail("curve uses edge " + std::to_string(g) + " twice");
    if (is_path_edge[g]) return fail("curve runs along an edge of the subdivided graph");
  }
  if (ext.edge_count() != result.gamma_prime.edge_count() + pe) {
    rep.problems.push_back("extended graph has edges outside the subdivision and the curve");
  }

  std::vector<bool> is_image(pe, false);
  for (VertexId v : map.vertex_map) is_image[v] = true;
  std::uint32_t crossings = 0;
  for (VertexId x = 0; x < pe; ++x) {
    if (is_image[x]) continue;
    ++crossings;
    auto r = ext.rotation(x);
    if (r.size() != 4) {
      rep.problems.push_back("crossing vertex " + std::to_string(x) + " has degree " + std::to_string(r.size()));
      continue;
    }
    for (std::size_t i = 0; i < 4; ++i) {
      if (is_path_edge[edge_of(r[i])] == is_path_edge[edge_of(r[(i + 1) % 4])]) {
        rep.problems.push_back("rotation at crossing vertex " + std::to_string(x) + " does not alternate");
        break;
      }
    }
  }
  if (crossings != result.crossing_count) rep.problems.push_back("crossing count does not match the new vertices");
  if (pe != base.vertex_count() + result.crossing_count) rep.problems.push_back("p(G) != p + |Y|");
  rep.ok = rep.problems.empty();
  return rep;
}

MinCrossingsResult min_crossings_search(const CombEmbedding& emb, MinimizeMode mode, const SearchControl& control,
                                        std::uint32_t samples, std::uint64_t seed) {
  require_valid(emb);
  const std::size_t p = emb.vertex_count();
  MinCrossingsResult res;
  auto consider = [&](TopoExtensionResult&& r) {
    ++res.builds;
    if (!res.best || r.crossing_count < res.crossing_count) {
      res.crossing_count = r.crossing_count;
      res.best = std::move(r);
    }
  };
  auto stop = [&] { return res.builds >= control.budget || control.cancelled(); };

  if (mode == MinimizeMode::heuristic) {
    std::mt19937_64 rng(seed);
    for (std::uint32_t i = 0; i < samples && !stop(); ++i) {
      consider(build_impl(emb, random_vertex_order(p, rng), {}, nullptr));
    }
  } else {
    if (p > 8) throw std::invalid_argument("exact minimisation supports at most 8 vertices");
    std::vector<VertexId> order(p);
    std::iota(order.begin(), order.end(), 0u);
    bool complete = true;
    do {
      std::vector<std::uint32_t> choices;
      while (true) {
        if (stop()) {
          complete = false;
          break;
        }
        std::vector<std::uint32_t> counts;
        consider(build_impl(emb, order, choices, &counts));
        choices.resize(counts.size(), 0);
        for (auto c : counts) complete = complete && c < kRouteChoiceCap;
        std::size_t k = counts.size();
        while (k > 0 && choices[k - 1] + 1 >= counts[k - 1]) --k;
        if (k == 0) break;
        ++choices[k - 1];
        choices.resize(k);
      }
      if (stop() && !complete) break;
    } while (std::next_permutation(order.begin(), order.end()));
    res.strategy_space_exhausted = complete;
  }
  res.globally_minimal = res.best && res.crossing_count == 0;
  return res;
}

}  // namespace hamext
