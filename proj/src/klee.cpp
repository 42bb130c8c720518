#include "hamext/klee.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace hamext {

KleeTypeResult is_klee_type(const CombEmbedding& emb) {
  auto s = stats(emb);
  return {s.r > s.p, s.r, s.p};
}

const char* to_string(Side s) { return s == Side::a ? "a" : "b"; }

const char* to_string(KleeKind k) { return k == KleeKind::global ? "global" : "local"; }

void require_simple_cycle(const CombEmbedding& emb, const GraphCycle& cycle) {
  const std::size_t n = cycle.vertices.size();
  if (n == 0 || cycle.edges.size() != n) throw std::invalid_argument("cycle must list as many edges as vertices");
  std::set<VertexId> vs(cycle.vertices.begin(), cycle.vertices.end());
  std::set<EdgeId> es(cycle.edges.begin(), cycle.edges.end());
  if (vs.size() != n || es.size() != n) throw std::invalid_argument("cycle repeats a vertex or an edge");
  for (std::size_t k = 0; k < n; ++k) {
    VertexId u = cycle.vertices[k], w = cycle.vertices[(k + 1) % n];
    if (u >= emb.vertex_count()) throw std::invalid_argument("cycle vertex out of range");
    if (cycle.edges[k] >= emb.edge_count()) throw std::invalid_argument("cycle edge out of range");
    const auto& ends = emb.edge(cycle.edges[k]);
    if (!((ends.a == u && ends.b == w) || (ends.a == w && ends.b == u))) {
      throw std::invalid_argument("cycle edge " + std::to_string(cycle.edges[k]) + " does not join " +
                                  std::to_string(u) + " and " + std::to_string(w));
    }
  }
}

namespace {

// Dart of edge e at vertex v; for a loop, `outgoing` picks the a end.
Dart dart_at(const CombEmbedding& emb, EdgeId e, VertexId v, bool outgoing) {
  const auto& ends = emb.edge(e);
  if (ends.a == ends.b) return outgoing ? a_dart(e) : b_dart(e);
  return ends.a == v ? a_dart(e) : b_dart(e);
}

}  // namespace

SideDecomposition cycle_side_decomposition(const CombEmbedding& emb, const GraphCycle& cycle) {
  return cycle_side_decomposition(emb, trace_faces(emb), cycle);
}

SideDecomposition cycle_side_decomposition(const CombEmbedding& emb, const Faces& faces, const GraphCycle& cycle) {
  require_simple_cycle(emb, cycle);
  SideDecomposition out;
  out.cycle = cycle;
  const std::size_t n = cycle.length();

  std::vector<FaceId> parent(faces.size());
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](FaceId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](FaceId x, FaceId y) { parent[find(x)] = find(y); };

  std::vector<bool> on_cycle_edge(emb.edge_count(), false);
  for (EdgeId e : cycle.edges) on_cycle_edge[e] = true;
  for (EdgeId e = 0; e < emb.edge_count(); ++e) {
    if (!on_cycle_edge[e]) unite(faces.face_of_dart[a_dart(e)], faces.face_of_dart[b_dart(e)]);
  }
  for (std::size_t k = 0; k < n; ++k) {
    const VertexId v = cycle.vertices[k];
    const Dart out_d = dart_at(emb, cycle.edges[k], v, true);
    const Dart in_d = dart_at(emb, cycle.edges[(k + n - 1) % n], v, false);
    for (auto [from, to] : {std::pair{out_d, in_d}, std::pair{in_d, out_d}}) {
      const FaceId first = faces.face_of_dart[to];
      for (Dart x = emb.next_around(from); x != to; x = emb.next_around(x)) unite(first, faces.face_of_dart[x]);
    }
  }

  const FaceId root_a = find(faces.face_of_dart[dart_at(emb, cycle.edges[0], cycle.vertices[0], true)]);
  out.side_of_face.resize(faces.size());
  std::set<FaceId> roots;
  for (FaceId f = 0; f < faces.size(); ++f) {
    roots.insert(find(f));
    out.side_of_face[f] = find(f) == root_a ? Side::a : Side::b;
    ++out.sides[static_cast<std::size_t>(out.side_of_face[f])].r;
  }
  out.separates = roots.size() > 1;

  std::vector<bool> on_cycle(emb.vertex_count(), false);
  for (VertexId v : cycle.vertices) on_cycle[v] = true;
  out.side_of_vertex.resize(emb.vertex_count());
  for (VertexId v = 0; v < emb.vertex_count(); ++v) {
    if (on_cycle[v]) continue;
    Side s = emb.degree(v) == 0 ? Side::a : out.side_of_face[faces.face_of_dart[emb.rotation(v)[0]]];
    out.side_of_vertex[v] = s;
    ++out.sides[static_cast<std::size_t>(s)].strict;
  }
  for (auto& s : out.sides) s.p = s.strict + static_cast<std::int64_t>(n);
  return out;
}

LocalKleeResult is_local_klee(const CombEmbedding& emb, const GraphCycle& cycle) {
  LocalKleeResult res;
  res.decomposition = cycle_side_decomposition(emb, cycle);
  const auto& d = res.decomposition;
  if (!d.separates) return res;
  if (d.stats_of(Side::a).strict == 0 || d.stats_of(Side::b).strict == 0) return res;
  for (Side s : {Side::a, Side::b}) {
    if (d.stats_of(s).r >= d.stats_of(s).p) res.inside_candidates.push_back(s);
  }
  res.holds = !res.inside_candidates.empty();
  return res;
}

std::vector<GraphCycle> simple_cycles(const CombEmbedding& emb, std::size_t max_length, const SearchControl& control,
                                      bool* exhaustive, std::uint64_t* nodes) {
  const Graph g = emb.graph();
  const auto inc = g.incidence();
  std::vector<GraphCycle> found;
  std::uint64_t visited = 0;
  bool complete = true;
  std::vector<bool> on_path(g.vertex_count, false);
  std::vector<bool> edge_used(g.edges.size(), false);
  GraphCycle path;

  auto other = [&](EdgeId e, VertexId v) { return g.edges[e].a == v ? g.edges[e].b : g.edges[e].a; };

  // Returns false when the budget runs out.
  auto dfs = [&](auto&& self, VertexId start, VertexId u) -> bool {
    if (++visited > control.budget || control.cancelled()) return false;
    for (EdgeId e : inc[u]) {
      if (edge_used[e] || g.edges[e].a == g.edges[e].b) continue;
      const VertexId w = other(e, u);
      if (w == start && path.vertices.size() >= 2) {
        const std::size_t len = path.vertices.size();
        bool canonical = len == 2 ? path.edges[0] < e : path.vertices[1] < u;
        if (canonical) {
          GraphCycle c = path;
          c.edges.push_back(e);
          found.push_back(std::move(c));
        }
        continue;
      }
      if (w <= start || on_path[w] || path.vertices.size() >= max_length) continue;
      on_path[w] = edge_used[e] = true;
      path.edges.push_back(e);
      path.vertices.push_back(w);
      bool ok = self(self, start, w);
      path.vertices.pop_back();
      path.edges.pop_back();
      on_path[w] = edge_used[e] = false;
      if (!ok) return false;
    }
    return true;
  };

  if (max_length >= 1) {
    for (VertexId s = 0; s < g.vertex_count && complete; ++s) {
      for (EdgeId e : inc[s]) {
        if (g.edges[e].a == g.edges[e].b) found.push_back(GraphCycle{{s}, {e}});
      }
      if (max_length < 2) continue;
      path = GraphCycle{{s}, {}};
      on_path[s] = true;
      complete = dfs(dfs, s, s);
      on_path[s] = false;
    }
  }
  std::sort(found.begin(), found.end(), [](const GraphCycle& x, const GraphCycle& y) {
    if (x.length() != y.length()) return x.length() < y.length();
    if (x.vertices != y.vertices) return x.vertices < y.vertices;
    return x.edges < y.edges;
  });
  if (exhaustive) *exhaustive = complete;
  if (nodes) *nodes = visited;
  return found;
}

ScanResult scan_local_klee(const CombEmbedding& emb, std::size_t max_length, const SearchControl& control) {
  ScanResult res;
  auto cycles = simple_cycles(emb, max_length, control, &res.exhaustive, &res.nodes);
  const Faces faces = trace_faces(emb);
  for (const auto& c : cycles) {
    ++res.cycles_examined;
    auto d = cycle_side_decomposition(emb, faces, c);
    if (!d.separates || d.stats_of(Side::a).strict == 0 || d.stats_of(Side::b).strict == 0) continue;
    for (Side s : {Side::a, Side::b}) {
      const auto& st = d.stats_of(s);
      if (st.r >= st.p) res.witnesses.push_back({c, s, st.r, st.p});
    }
  }
  return res;
}

KleeCertificate make_klee_certificate(const CombEmbedding& base, ExtensionMap extension,
                                      std::optional<GraphCycle> cycle) {
  KleeCertificate cert;
  cert.base = base;
  auto rep = is_extension(base, extension);
  for (auto [w, f] : rep.region_of_added_vertex) cert.added.push_back({w, f});
  cert.extension = std::move(extension);
  if (cycle) {
    cert.kind = KleeKind::local;
    auto lk = is_local_klee(base, *cycle);
    if (!lk.inside_candidates.empty()) cert.inside = lk.inside_candidates.front();
    cert.cycle = std::move(cycle);
  }
  return cert;
}

CertificateCheck check_theorem1_certificate(const KleeCertificate& cert) {
  CertificateCheck out;
  auto malformed = [&](std::string why) {
    out.malformed = true;
    out.problems.push_back(std::move(why));
  };
  auto base_check = validate(cert.base);
  if (!base_check.ok()) {
    malformed("base embedding invalid: " + base_check.summary());
    return out;
  }
  auto rep = is_extension(cert.base, cert.extension);
  if (!rep.ok) {
    for (auto& p : rep.problems) malformed("not an extension: " + p);
    return out;
  }
  const Faces faces = trace_faces(cert.base);
  std::set<VertexId> seen_vertices;
  std::set<FaceId> seen_regions;
  for (const auto& [w, region] : cert.added) {
    if (region >= faces.size()) {
      malformed("region " + std::to_string(region) + " does not exist");
      continue;
    }
    auto it = rep.region_of_added_vertex.find(w);
    if (it == rep.region_of_added_vertex.end()) {
      malformed("vertex " + std::to_string(w) + " is not an added vertex (lies on the base graph)");
      continue;
    }
    if (it->second != region) {
      malformed("vertex " + std::to_string(w) + " lies in region " + std::to_string(it->second) + ", not " +
                std::to_string(region));
    }
    if (!seen_vertices.insert(w).second) malformed("vertex " + std::to_string(w) + " listed twice");
    if (!seen_regions.insert(region).second) malformed("region " + std::to_string(region) + " used twice");
  }
  if (out.malformed) return out;
  out.s = static_cast<std::int64_t>(cert.added.size());

  if (cert.kind == KleeKind::global) {
    auto k = is_klee_type(cert.base);
    out.r = k.r;
    out.p = k.p;
    if (!k.klee) out.problems.push_back("base is not of Klee type (r <= p)");
    if (out.s < out.p + 1) out.problems.push_back("s < p + 1");
  } else {
    if (!cert.cycle) {
      malformed("local certificate without a cycle");
      return out;
    }
    LocalKleeResult lk;
    try {
      lk = is_local_klee(cert.base, *cert.cycle);
    } catch (const std::invalid_argument& e) {
      malformed(std::string("bad cycle: ") + e.what());
      return out;
    }
    const auto& side = lk.decomposition.stats_of(cert.inside);
    out.r = side.r;
    out.p = side.p;
    if (!lk.holds || std::find(lk.inside_candidates.begin(), lk.inside_candidates.end(), cert.inside) ==
                         lk.inside_candidates.end()) {
      out.problems.push_back("cycle is not of local Klee type with the stated inside");
    }
    if (out.s > out.r) out.problems.push_back("s > r_C");
    if (out.s < out.p) out.problems.push_back("s < p_C");
    for (const auto& [w, region] : cert.added) {
      if (lk.decomposition.side_of_face[region] != cert.inside) {
        out.problems.push_back("region " + std::to_string(region) + " of vertex " + std::to_string(w) +
                               " is not inside the cycle");
      }
    }
  }
  out.valid = out.problems.empty();
  if (out.valid) {
    out.conclusion = "the extension graph is not Hamiltonian, nor is any extension of its embedding";
  }
  return out;
}

}  // namespace hamext
