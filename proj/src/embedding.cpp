#include "hamext/embedding.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hamext {

const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::none: return "none";
    case SearchStatus::unknown: return "unknown";
  }
  return "?";
}

bool Graph::is_connected() const {
  if (vertex_count == 0) return false;
  std::vector<VertexId> parent(vertex_count);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](VertexId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::size_t components = vertex_count;
  for (const auto& e : edges) {
    if (e.a >= vertex_count || e.b >= vertex_count) return false;
    VertexId x = find(e.a), y = find(e.b);
    if (x != y) {
      parent[x] = y;
      --components;
    }
  }
  return components == 1;
}

std::vector<std::vector<EdgeId>> Graph::incidence() const {
  std::vector<std::vector<EdgeId>> inc(vertex_count);
  for (EdgeId e = 0; e < edges.size(); ++e) {
    inc.at(edges[e].a).push_back(e);
    if (edges[e].b != edges[e].a) inc.at(edges[e].b).push_back(e);
  }
  return inc;
}

CombEmbedding::CombEmbedding(std::vector<EdgeEnds> edges, std::vector<std::vector<Dart>> rotations)
    : edges_(std::move(edges)), rotation_(std::move(rotations)), position_(2 * edges_.size(), kNone) {
  for (auto& rot : rotation_) {
    if (!rot.empty()) std::rotate(rot.begin(), std::min_element(rot.begin(), rot.end()), rot.end());
  }
  well_placed_ = true;
  for (VertexId v = 0; v < rotation_.size(); ++v) {
    for (std::uint32_t i = 0; i < rotation_[v].size(); ++i) {
      Dart d = rotation_[v][i];
      if (d >= position_.size() || position_[d] != kNone) {
        well_placed_ = false;
        continue;
      }
      position_[d] = i;
      const auto& e = edges_[edge_of(d)];
      if ((is_b_end(d) ? e.b : e.a) != v) well_placed_ = false;
    }
  }
  if (std::find(position_.begin(), position_.end(), kNone) != position_.end()) well_placed_ = false;
}

Dart CombEmbedding::next_around(Dart d) const {
  const auto& rot = rotation_[vertex_of(d)];
  std::uint32_t i = position_[d] + 1;
  return rot[i == rot.size() ? 0 : i];
}

Dart CombEmbedding::prev_around(Dart d) const {
  const auto& rot = rotation_[vertex_of(d)];
  std::uint32_t i = position_[d];
  return rot[i == 0 ? rot.size() - 1 : i - 1];
}

Graph CombEmbedding::graph() const { return Graph{vertex_count(), edges_}; }

const char* to_string(ValidationIssue::Kind k) {
  using K = ValidationIssue::Kind;
  switch (k) {
    case K::empty: return "empty";
    case K::endpoint_out_of_range: return "endpoint out of range";
    case K::dart_out_of_range: return "dart out of range";
    case K::dart_missing: return "dart missing";
    case K::dart_repeated: return "dart multiplicity";
    case K::dart_misplaced: return "dart at wrong vertex";
    case K::disconnected: return "connectivity";
    case K::odd_euler_characteristic: return "odd euler characteristic";
    case K::euler_above_two: return "euler characteristic above two";
  }
  return "?";
}

bool ValidationReport::has(ValidationIssue::Kind k) const {
  return std::any_of(issues.begin(), issues.end(), [k](const auto& i) { return i.kind == k; });
}

std::string ValidationReport::summary() const {
  if (ok()) return "valid";
  std::ostringstream os;
  for (std::size_t i = 0; i < issues.size(); ++i) {
    if (i) os << "; ";
    os << to_string(issues[i].kind) << ": " << issues[i].detail;
  }
  return os.str();
}

namespace {

Faces trace_unchecked(const CombEmbedding& emb) {
  Faces faces;
  const std::size_t n = emb.dart_count();
  faces.face_of_dart.assign(n, kNone);
  faces.index_in_face.assign(n, kNone);
  if (n == 0) {
    faces.walks.push_back(FaceWalk{0, {}, {}});
    return faces;
  }
  for (Dart start = 0; start < n; ++start) {
    if (faces.face_of_dart[start] != kNone) continue;
    FaceWalk walk;
    walk.id = static_cast<FaceId>(faces.walks.size());
    Dart d = start;
    do {
      faces.face_of_dart[d] = walk.id;
      faces.index_in_face[d] = static_cast<std::uint32_t>(walk.darts.size());
      walk.darts.push_back(d);
      walk.corners.push_back(emb.vertex_of(d));
      d = emb.face_successor(d);
    } while (d != start);
    faces.walks.push_back(std::move(walk));
  }
  return faces;
}

}  // namespace

ValidationReport validate(const CombEmbedding& emb) {
  using K = ValidationIssue::Kind;
  ValidationReport rep;
  rep.p = emb.vertex_count();
  rep.q = emb.edge_count();
  auto issue = [&](K k, std::uint32_t subject, std::string detail) {
    rep.issues.push_back(ValidationIssue{k, subject, std::move(detail)});
  };
  if (rep.p == 0) {
    issue(K::empty, kNone, "no vertices");
    return rep;
  }
  bool endpoints_ok = true;
  for (EdgeId e = 0; e < rep.q; ++e) {
    const auto& ends = emb.edge(e);
    if (ends.a >= rep.p || ends.b >= rep.p) {
      issue(K::endpoint_out_of_range, e, "edge " + std::to_string(e));
      endpoints_ok = false;
    }
  }
  std::vector<std::uint32_t> seen(emb.dart_count(), 0);
  for (VertexId v = 0; v < rep.p; ++v) {
    for (Dart d : emb.rotation(v)) {
      if (d >= emb.dart_count()) {
        issue(K::dart_out_of_range, d, "dart " + std::to_string(d) + " at vertex " + std::to_string(v));
        continue;
      }
      if (++seen[d] == 2) issue(K::dart_repeated, d, "dart " + std::to_string(d) + " listed more than once");
      if (endpoints_ok && emb.vertex_of(d) != v) {
        issue(K::dart_misplaced, d,
              "dart " + std::to_string(d) + " listed at vertex " + std::to_string(v) + " but belongs to vertex " +
                  std::to_string(emb.vertex_of(d)));
      }
    }
  }
  for (Dart d = 0; d < seen.size(); ++d) {
    if (seen[d] == 0) issue(K::dart_missing, d, "dart " + std::to_string(d) + " not in any rotation");
  }
  if (!endpoints_ok) return rep;
  if (!emb.graph().is_connected()) issue(K::disconnected, kNone, "graph is not connected");
  if (!rep.ok()) return rep;

  Faces faces = trace_unchecked(emb);
  std::int64_t chi = static_cast<std::int64_t>(rep.p) - static_cast<std::int64_t>(rep.q) +
                     static_cast<std::int64_t>(faces.size());
  if (chi % 2 != 0) issue(K::odd_euler_characteristic, kNone, "chi = " + std::to_string(chi));
  if (chi > 2) issue(K::euler_above_two, kNone, "chi = " + std::to_string(chi));
  return rep;
}

void require_valid(const CombEmbedding& emb) {
  auto rep = validate(emb);
  if (!rep.ok()) throw InvalidEmbedding("invalid embedding: " + rep.summary());
}

Faces trace_faces(const CombEmbedding& emb) {
  require_valid(emb);
  return trace_unchecked(emb);
}

SurfaceStats stats(const CombEmbedding& emb, const Faces& faces) {
  SurfaceStats s;
  s.p = static_cast<std::int64_t>(emb.vertex_count());
  s.q = static_cast<std::int64_t>(emb.edge_count());
  s.r = static_cast<std::int64_t>(faces.size());
  s.euler_characteristic = s.p - s.q + s.r;
  if (s.euler_characteristic % 2 != 0 || s.euler_characteristic > 2) {
    throw InvalidEmbedding("euler characteristic " + std::to_string(s.euler_characteristic) +
                           " is not realisable by an orientable surface");
  }
  s.genus = (2 - s.euler_characteristic) / 2;
  return s;
}

SurfaceStats stats(const CombEmbedding& emb) { return stats(emb, trace_faces(emb)); }

CombEmbedding embed(const Graph& graph, std::vector<std::vector<Dart>> rotations) {
  if (rotations.size() != graph.vertex_count) throw std::invalid_argument("one rotation per vertex required");
  return CombEmbedding(graph.edges, std::move(rotations));
}

namespace {

std::vector<std::vector<Dart>> sorted_darts(const Graph& graph) {
  std::vector<std::vector<Dart>> rot(graph.vertex_count);
  for (EdgeId e = 0; e < graph.edges.size(); ++e) {
    rot.at(graph.edges[e].a).push_back(a_dart(e));
    rot.at(graph.edges[e].b).push_back(b_dart(e));
  }
  for (auto& r : rot) std::sort(r.begin(), r.end());
  return rot;
}

// Face count of a well-placed rotation system; avoids the allocation-heavy
// full trace inside the genus search loop.
std::size_t count_faces(const CombEmbedding& emb, std::vector<char>& seen) {
  const std::size_t n = emb.dart_count();
  if (n == 0) return 1;
  seen.assign(n, 0);
  std::size_t r = 0;
  for (Dart s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++r;
    Dart d = s;
    do {
      seen[d] = 1;
      d = emb.face_successor(d);
    } while (d != s);
  }
  return r;
}

// For the symmetry-breaking vertex only one member of each {order, mirror}
// pair is visited: the one whose tail is lexicographically not larger than
// its reversal.
bool canonical_orientation(const std::vector<Dart>& rot) {
  if (rot.size() <= 3) return rot.size() < 3 || rot[1] < rot[2];
  return !std::lexicographical_compare(rot.rbegin(), rot.rend() - 1, rot.begin() + 1, rot.end());
}

}  // namespace

CombEmbedding embed_sorted(const Graph& graph) { return embed(graph, sorted_darts(graph)); }

CombEmbedding random_embedding(const Graph& graph, std::mt19937_64& rng) {
  auto rot = sorted_darts(graph);
  for (auto& r : rot) std::shuffle(r.begin(), r.end(), rng);
  return embed(graph, std::move(rot));
}

GenusSearchResult find_embedding_with_genus(const Graph& graph, std::int64_t target_genus,
                                            const SearchControl& control) {
  if (!graph.is_connected()) throw std::invalid_argument("find_embedding_with_genus: graph must be connected");
  GenusSearchResult result;
  const auto p = static_cast<std::int64_t>(graph.vertex_count);
  const auto q = static_cast<std::int64_t>(graph.edges.size());
  // r >= 1 bounds the genus from above.
  if (target_genus < 0 || 2 * target_genus > q - p + 1) {
    result.status = SearchStatus::none;
    return result;
  }
  auto rot = sorted_darts(graph);
  std::vector<char> seen;
  if (!canonical_orientation(rot[0])) {
    while (std::next_permutation(rot[0].begin() + 1, rot[0].end()) && !canonical_orientation(rot[0])) {
    }
  }
  for (;;) {
    if (result.rotation_systems_tried >= control.budget || control.cancelled()) {
      result.status = SearchStatus::unknown;
      return result;
    }
    ++result.rotation_systems_tried;
    CombEmbedding emb(graph.edges, rot);
    auto r = static_cast<std::int64_t>(count_faces(emb, seen));
    if (2 - (p - q + r) == 2 * target_genus) {
      result.status = SearchStatus::found;
      result.embedding = std::move(emb);
      return result;
    }
    // Odometer step; the last vertex is the fastest digit.
    std::size_t v = rot.size();
    bool advanced = false;
    while (v-- > 0) {
      auto& r_v = rot[v];
      if (r_v.size() > 2) {
        bool more = std::next_permutation(r_v.begin() + 1, r_v.end());
        while (more && v == 0 && !canonical_orientation(r_v)) more = std::next_permutation(r_v.begin() + 1, r_v.end());
        if (more) {
          advanced = true;
          break;
        }
        // next_permutation already wrapped the tail back to sorted order.
      }
    }
    if (!advanced) break;
  }
  result.status = SearchStatus::none;
  return result;
}

}  // namespace hamext
