#include "hamext/extension.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "hamext/edit.hpp"

namespace hamext {

ExtensionMap ExtensionMap::identity_prefix(const CombEmbedding& base, CombEmbedding extended) {
  ExtensionMap map;
  map.extended = std::move(extended);
  map.vertex_map.resize(base.vertex_count());
  std::iota(map.vertex_map.begin(), map.vertex_map.end(), 0u);
  for (EdgeId e = 0; e < base.edge_count(); ++e) map.edge_paths.push_back({e});
  return map;
}

namespace {

struct DartImages {
  std::vector<Dart> forward;   // base dart -> extended dart
  std::vector<Dart> backward;  // extended dart -> base dart or kNone
};

// Returns false (with problems recorded) if the maps are malformed.
bool map_darts(const CombEmbedding& base, const ExtensionMap& map, DartImages& img,
               std::vector<std::string>& problems) {
  const auto& ext = map.extended;
  if (map.vertex_map.size() != base.vertex_count() || map.edge_paths.size() != base.edge_count()) {
    problems.push_back("map sizes do not match the base embedding");
    return false;
  }
  std::set<VertexId> vertex_images;
  for (VertexId v = 0; v < base.vertex_count(); ++v) {
    VertexId w = map.vertex_map[v];
    if (w >= ext.vertex_count()) {
      problems.push_back("vertex image out of range for base vertex " + std::to_string(v));
      return false;
    }
    if (!vertex_images.insert(w).second) problems.push_back("vertex map is not injective at " + std::to_string(w));
  }
  img.forward.assign(base.dart_count(), kNone);
  img.backward.assign(ext.dart_count(), kNone);
  for (EdgeId e = 0; e < base.edge_count(); ++e) {
    if (map.edge_paths[e].size() != 1) {
      problems.push_back("edge " + std::to_string(e) + " does not map to a single edge");
      return false;
    }
    EdgeId g = map.edge_paths[e].front();
    if (g >= ext.edge_count()) {
      problems.push_back("edge image out of range for base edge " + std::to_string(e));
      return false;
    }
    VertexId a = map.vertex_map[base.edge(e).a], b = map.vertex_map[base.edge(e).b];
    const auto& ends = ext.edge(g);
    Dart da, db;
    if (ends.a == a && ends.b == b) {
      da = a_dart(g);
      db = b_dart(g);
    } else if (ends.a == b && ends.b == a) {
      da = b_dart(g);
      db = a_dart(g);
    } else {
      problems.push_back("image of edge " + std::to_string(e) + " does not join the images of its ends");
      return false;
    }
    if (img.backward[da] != kNone) {
      problems.push_back("edge map is not injective at " + std::to_string(g));
      return false;
    }
    img.forward[a_dart(e)] = da;
    img.forward[b_dart(e)] = db;
    img.backward[da] = a_dart(e);
    img.backward[db] = b_dart(e);
  }
  return problems.empty();
}

std::vector<std::vector<Dart>> restricted_rotations(const CombEmbedding& base, const ExtensionMap& map,
                                                    const DartImages& img) {
  std::vector<std::vector<Dart>> rot(base.vertex_count());
  for (VertexId v = 0; v < base.vertex_count(); ++v) {
    for (Dart d : map.extended.rotation(map.vertex_map[v])) {
      if (img.backward[d] != kNone) rot[v].push_back(img.backward[d]);
    }
  }
  return rot;
}

}  // namespace

ExtensionReport is_extension(const CombEmbedding& base, const ExtensionMap& map) {
  ExtensionReport rep;
  for (const auto* emb : {&base, &map.extended}) {
    auto v = validate(*emb);
    if (!v.ok()) {
      rep.problems.push_back((emb == &base ? "base: " : "extended: ") + v.summary());
      return rep;
    }
  }
  DartImages img;
  if (!map_darts(base, map, img, rep.problems)) return rep;
  const auto& ext = map.extended;

  CombEmbedding restricted(std::vector<EdgeEnds>(base.edges().begin(), base.edges().end()),
                           restricted_rotations(base, map, img));
  for (VertexId v = 0; v < base.vertex_count(); ++v) {
    if (!std::ranges::equal(restricted.rotation(v), base.rotation(v))) {
      rep.problems.push_back("rotation at base vertex " + std::to_string(v) + " is not preserved");
    }
  }
  if (stats(ext).genus != stats(base).genus) rep.problems.push_back("genus changes");

  // Union-find over added vertices (ids < pe) and added edges (pe + g).
  const std::size_t pe = ext.vertex_count();
  std::vector<bool> is_image_vertex(pe, false);
  for (VertexId w : map.vertex_map) is_image_vertex[w] = true;
  std::vector<std::uint32_t> parent(pe + ext.edge_count());
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](std::uint32_t x, std::uint32_t y) { parent[find(x)] = find(y); };

  Faces base_faces = trace_faces(base);
  std::map<std::uint32_t, std::set<FaceId>> touched;
  for (EdgeId g = 0; g < ext.edge_count(); ++g) {
    if (img.backward[a_dart(g)] != kNone) continue;
    const auto node = static_cast<std::uint32_t>(pe + g);
    for (Dart d : {a_dart(g), b_dart(g)}) {
      VertexId u = ext.vertex_of(d);
      if (!is_image_vertex[u]) {
        unite(node, u);
        continue;
      }
      // The corner holding d is the base corner before the next image dart.
      Dart probe = ext.next_around(d);
      while (img.backward[probe] == kNone && probe != d) probe = ext.next_around(probe);
      FaceId f = (probe == d) ? 0 : base_faces.face_of_dart[img.backward[probe]];
      touched[node].insert(f);
    }
  }
  std::map<std::uint32_t, std::set<FaceId>> by_component;
  for (auto& [node, fs] : touched) by_component[find(node)].insert(fs.begin(), fs.end());
  std::map<std::uint32_t, FaceId> region;
  for (const auto& [root, fs] : by_component) {
    if (fs.size() > 1) {
      std::string list;
      for (FaceId f : fs) list += (list.empty() ? "" : ", ") + std::to_string(f);
      rep.problems.push_back("added material spans several base regions: " + list);
    }
    region[root] = *fs.begin();
  }
  for (VertexId w = 0; w < pe; ++w) {
    if (is_image_vertex[w]) continue;
    auto it = region.find(find(w));
    if (it == region.end()) {
      rep.problems.push_back("added vertex " + std::to_string(w) + " is not attached to the base");
      continue;
    }
    rep.region_of_added_vertex[w] = it->second;
  }
  for (EdgeId g = 0; g < ext.edge_count(); ++g) {
    if (img.backward[a_dart(g)] != kNone) continue;
    auto it = region.find(find(static_cast<std::uint32_t>(pe + g)));
    if (it != region.end()) rep.region_of_added_edge[g] = it->second;
  }
  rep.ok = rep.problems.empty();
  return rep;
}

ExtensionReport is_topological_extension(const CombEmbedding& base, const ExtensionMap& map) {
  ExtensionReport rep;
  for (const auto* emb : {&base, &map.extended}) {
    auto v = validate(*emb);
    if (!v.ok()) {
      rep.problems.push_back((emb == &base ? "base: " : "extended: ") + v.summary());
      return rep;
    }
  }
  const auto& ext = map.extended;
  if (map.vertex_map.size() != base.vertex_count() || map.edge_paths.size() != base.edge_count()) {
    rep.problems.push_back("map sizes do not match the base embedding");
    return rep;
  }
  for (VertexId w : map.vertex_map) {
    if (w >= ext.vertex_count()) {
      rep.problems.push_back("vertex image out of range");
      return rep;
    }
  }
  std::set<VertexId> images(map.vertex_map.begin(), map.vertex_map.end());
  std::set<VertexId> interior_used;

  // Rebuild the marked subdivision of the base and its map into `ext`.
  CombEmbedding subdivided = base;
  ExtensionMap inner;
  inner.extended = ext;
  inner.vertex_map = map.vertex_map;
  inner.edge_paths.resize(base.edge_count());
  std::vector<std::vector<EdgeId>> new_edge_images;
  for (EdgeId e = 0; e < base.edge_count(); ++e) {
    const auto& path = map.edge_paths[e];
    if (path.empty()) {
      rep.problems.push_back("empty path for base edge " + std::to_string(e));
      return rep;
    }
    VertexId at = map.vertex_map[base.edge(e).a];
    std::vector<VertexId> interior;
    for (std::size_t k = 0; k < path.size(); ++k) {
      if (path[k] >= ext.edge_count()) {
        rep.problems.push_back("path edge out of range for base edge " + std::to_string(e));
        return rep;
      }
      const auto& ends = ext.edge(path[k]);
      if (ends.a == at) at = ends.b;
      else if (ends.b == at) at = ends.a;
      else {
        rep.problems.push_back("path of base edge " + std::to_string(e) + " is not a walk");
        return rep;
      }
      if (k + 1 < path.size()) {
        if (images.count(at) || !interior_used.insert(at).second) {
          rep.problems.push_back("path of base edge " + std::to_string(e) + " reuses vertex " + std::to_string(at));
          return rep;
        }
        interior.push_back(at);
      }
    }
    if (at != map.vertex_map[base.edge(e).b]) {
      rep.problems.push_back("path of base edge " + std::to_string(e) + " ends at the wrong vertex");
      return rep;
    }
    inner.edge_paths[e] = {path.front()};
    if (path.size() > 1) {
      subdivided = subdivide_edge(subdivided, e, static_cast<std::uint32_t>(path.size() - 1));
      inner.vertex_map.insert(inner.vertex_map.end(), interior.begin(), interior.end());
      for (std::size_t k = 1; k < path.size(); ++k) inner.edge_paths.push_back({path[k]});
    }
  }

  ExtensionReport sub = is_extension(subdivided, inner);
  rep.problems = std::move(sub.problems);
  // Subdivision leaves faces intact; translate face ids back to the base.
  Faces base_faces = trace_faces(base);
  Faces sub_faces = trace_faces(subdivided);
  std::vector<FaceId> to_base(sub_faces.size(), kNone);
  // Dart ids of the base survive subdivision on the same directed traversal.
  for (Dart d = 0; d < base.dart_count(); ++d) to_base[sub_faces.face_of_dart[d]] = base_faces.face_of_dart[d];
  for (auto [v, f] : sub.region_of_added_vertex) rep.region_of_added_vertex[v] = to_base[f];
  for (auto [g, f] : sub.region_of_added_edge) rep.region_of_added_edge[g] = to_base[f];
  rep.ok = rep.problems.empty();
  return rep;
}

CombEmbedding restrict_to_base(const CombEmbedding& base, const ExtensionMap& map) {
  DartImages img;
  std::vector<std::string> problems;
  if (!map_darts(base, map, img, problems)) throw std::invalid_argument("restrict_to_base: " + problems.front());
  return CombEmbedding(std::vector<EdgeEnds>(base.edges().begin(), base.edges().end()),
                       restricted_rotations(base, map, img));
}

}  // namespace hamext
