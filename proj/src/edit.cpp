#include "hamext/edit.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace hamext {

bool crossing(const Chord& x, const Chord& y) {
  if (x.face != y.face) return false;
  std::set<std::uint32_t> ends{x.from, x.to, y.from, y.to};
  if (ends.size() != 4) return false;
  auto [lo, hi] = std::minmax(x.from, x.to);
  auto inside = [lo = lo, hi = hi](std::uint32_t i) { return lo < i && i < hi; };
  return inside(y.from) != inside(y.to);
}

CrossingChords::CrossingChords(std::size_t a, std::size_t b)
    : EditError("chords " + std::to_string(a) + " and " + std::to_string(b) + " cross"), first(a), second(b) {}

namespace {

// Darts to be spliced into rotations. Each entry goes immediately before
// `before` in the rotation of its vertex; entries sharing `before` are laid
// out in ascending key order.
struct CornerInsertion {
  Dart before;
  std::tuple<std::int64_t, std::int64_t> key;
  Dart dart;
};

std::vector<std::vector<Dart>> splice(const CombEmbedding& emb, std::vector<CornerInsertion> ins,
                                      std::size_t new_vertex_count) {
  std::sort(ins.begin(), ins.end(), [](const auto& x, const auto& y) {
    return std::tie(x.before, x.key) < std::tie(y.before, y.key);
  });
  std::map<Dart, std::vector<Dart>> groups;
  for (const auto& i : ins) groups[i.before].push_back(i.dart);

  std::vector<std::vector<Dart>> rot(new_vertex_count);
  for (VertexId v = 0; v < emb.vertex_count(); ++v) {
    for (Dart d : emb.rotation(v)) {
      if (auto it = groups.find(d); it != groups.end()) {
        rot[v].insert(rot[v].end(), it->second.begin(), it->second.end());
      }
      rot[v].push_back(d);
    }
  }
  return rot;
}

const FaceWalk& checked_face(const Faces& faces, FaceId f) {
  if (f >= faces.size()) throw EditError("unknown face " + std::to_string(f));
  return faces[f];
}

void check_position(const Faces& faces, const FacePosition& pos) {
  const auto& walk = checked_face(faces, pos.face);
  if (pos.occurrence >= walk.length()) {
    throw EditError("occurrence " + std::to_string(pos.occurrence) + " outside face " + std::to_string(pos.face));
  }
}

CombEmbedding realize(const CombEmbedding& emb, std::span<const Chord> chords, bool check) {
  Faces faces = trace_faces(emb);
  for (std::size_t k = 0; k < chords.size(); ++k) {
    const auto& c = chords[k];
    check_position(faces, {c.face, c.from});
    check_position(faces, {c.face, c.to});
    const auto& walk = faces[c.face];
    if (walk.corners[c.from] == walk.corners[c.to]) {
      throw EditError("chord " + std::to_string(k) + " joins a vertex to itself");
    }
  }
  if (check) {
    for (std::size_t i = 0; i < chords.size(); ++i)
      for (std::size_t j = i + 1; j < chords.size(); ++j)
        if (crossing(chords[i], chords[j])) throw CrossingChords(i, j);
  }

  auto edges = std::vector<EdgeEnds>(emb.edges().begin(), emb.edges().end());
  const auto q = static_cast<EdgeId>(edges.size());
  std::vector<CornerInsertion> ins;
  for (std::size_t k = 0; k < chords.size(); ++k) {
    const auto& c = chords[k];
    const auto& walk = faces[c.face];
    const auto len = static_cast<std::int64_t>(walk.length());
    const EdgeId e = q + static_cast<EdgeId>(k);
    edges.push_back(EdgeEnds{walk.corners[c.from], walk.corners[c.to]});
    // At a shared corner, a chord reaching further along the walk sits
    // further from the walk's outgoing dart.
    auto place = [&](std::uint32_t here, std::uint32_t there, Dart dart) {
      std::int64_t offset = (static_cast<std::int64_t>(there) - here + len) % len;
      std::int64_t nest = here < there ? static_cast<std::int64_t>(k) : -static_cast<std::int64_t>(k);
      ins.push_back(CornerInsertion{walk.darts[here], {len - offset, nest}, dart});
    };
    place(c.from, c.to, a_dart(e));
    place(c.to, c.from, b_dart(e));
  }
  return CombEmbedding(std::move(edges), splice(emb, std::move(ins), emb.vertex_count()));
}

}  // namespace

CombEmbedding subdivide_edge(const CombEmbedding& emb, EdgeId edge, std::uint32_t count) {
  require_valid(emb);
  if (edge >= emb.edge_count()) throw EditError("unknown edge " + std::to_string(edge));
  if (count == 0) throw EditError("subdivision count must be at least 1");

  auto edges = std::vector<EdgeEnds>(emb.edges().begin(), emb.edges().end());
  auto rot = emb.rotations();
  const VertexId b = edges[edge].b;
  const auto first_vertex = static_cast<VertexId>(rot.size());
  const auto first_edge = static_cast<EdgeId>(edges.size());

  // Old b-dart of `edge` is replaced in place by the b-dart of the last segment.
  auto& rot_b = rot[b];
  auto slot = std::find(rot_b.begin(), rot_b.end(), b_dart(edge));
  *slot = b_dart(first_edge + count - 1);

  edges[edge].b = first_vertex;
  for (std::uint32_t k = 0; k < count; ++k) {
    VertexId here = first_vertex + k;
    VertexId next = (k + 1 == count) ? b : here + 1;
    EdgeId seg = first_edge + k;
    edges.push_back(EdgeEnds{here, next});
    Dart incoming = (k == 0) ? b_dart(edge) : b_dart(seg - 1);
    rot.push_back({incoming, a_dart(seg)});
  }
  return CombEmbedding(std::move(edges), std::move(rot));
}

CombEmbedding add_face_vertex(const CombEmbedding& emb, std::span<const FacePosition> attachments) {
  if (attachments.empty()) throw EditError("add_face_vertex needs at least one attachment");
  Faces faces = trace_faces(emb);
  const FaceId f = attachments.front().face;
  std::set<std::uint32_t> seen;
  for (const auto& pos : attachments) {
    check_position(faces, pos);
    if (pos.face != f) throw EditError("attachments lie in different faces");
    if (!seen.insert(pos.occurrence).second) throw EditError("duplicate attachment position");
  }
  const auto& walk = faces[f];
  auto edges = std::vector<EdgeEnds>(emb.edges().begin(), emb.edges().end());
  const auto w = static_cast<VertexId>(emb.vertex_count());
  const auto q = static_cast<EdgeId>(edges.size());

  std::vector<CornerInsertion> ins;
  std::vector<std::pair<std::uint32_t, Dart>> around_w;
  for (std::size_t k = 0; k < attachments.size(); ++k) {
    const EdgeId e = q + static_cast<EdgeId>(k);
    const auto occ = attachments[k].occurrence;
    edges.push_back(EdgeEnds{w, walk.corners[occ]});
    ins.push_back(CornerInsertion{walk.darts[occ], {0, 0}, b_dart(e)});
    around_w.emplace_back(occ, a_dart(e));
  }
  // Counterclockwise around the new vertex the attachments appear in
  // decreasing walk order.
  std::sort(around_w.begin(), around_w.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
  auto rot = splice(emb, std::move(ins), emb.vertex_count() + 1);
  for (const auto& [occ, d] : around_w) rot[w].push_back(d);
  return CombEmbedding(std::move(edges), std::move(rot));
}

CombEmbedding realize_chords(const CombEmbedding& emb, std::span<const Chord> chords) {
  return realize(emb, chords, true);
}

CombEmbedding realize_chords_unchecked(const CombEmbedding& emb, std::span<const Chord> chords) {
  return realize(emb, chords, false);
}

CombEmbedding stellate(const CombEmbedding& emb, FaceId face) {
  Faces faces = trace_faces(emb);
  if (checked_face(faces, face).length() != 3) throw EditError("stellation needs a triangular face");
  const FacePosition corners[] = {{face, 0}, {face, 1}, {face, 2}};
  return add_face_vertex(emb, corners);
}

CombEmbedding stellate_faces(const CombEmbedding& emb, std::span<const FaceId> faces_to_stellate) {
  Faces faces = trace_faces(emb);
  // Darts of a face survive its stellation, so a representative dart tracks
  // each target face through the earlier edits.
  std::vector<Dart> reps;
  for (FaceId f : faces_to_stellate) reps.push_back(checked_face(faces, f).darts.front());
  std::sort(reps.begin(), reps.end());
  if (std::adjacent_find(reps.begin(), reps.end()) != reps.end()) throw EditError("face listed twice");
  CombEmbedding out = emb;
  for (Dart rep : reps) {
    Faces now = trace_faces(out);
    out = stellate(out, now.face_of_dart[rep]);
  }
  return out;
}

std::vector<std::uint32_t> occurrences_of(const Faces& faces, FaceId face, VertexId v) {
  std::vector<std::uint32_t> out;
  const auto& walk = faces[face];
  for (std::uint32_t i = 0; i < walk.length(); ++i)
    if (walk.corners[i] == v) out.push_back(i);
  return out;
}

}  // namespace hamext
