#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hamext/embedding.hpp"

namespace hamext {

/// One corner of a face: occurrence `occurrence` of the face walk `face`.
struct FacePosition {
  FaceId face = 0;
  std::uint32_t occurrence = 0;

  friend bool operator==(const FacePosition&, const FacePosition&) = default;
  friend auto operator<=>(const FacePosition&, const FacePosition&) = default;
};

/// An edge to be drawn inside a region between two of its corners.
struct Chord {
  FaceId face = 0;
  std::uint32_t from = 0;
  std::uint32_t to = 0;

  friend bool operator==(const Chord&, const Chord&) = default;
  friend auto operator<=>(const Chord&, const Chord&) = default;
};

/// True iff both chords lie in the same face, use four distinct occurrences
/// and their endpoints strictly interleave along the walk.
bool crossing(const Chord& x, const Chord& y);

class CrossingChords : public EditError {
 public:
  CrossingChords(std::size_t first, std::size_t second);
  std::size_t first;
  std::size_t second;
};

/// Replaces `edge` by a path through `count` new degree-2 vertices. Edge
/// `edge` becomes the first segment (keeping its `a` dart in place); the new
/// vertices and the remaining segments are appended in path order.
CombEmbedding subdivide_edge(const CombEmbedding& emb, EdgeId edge, std::uint32_t count);

/// Adds one vertex inside a face, joined to each listed corner. The new
/// vertex gets id p and the new edges ids q, q+1, ... in attachment order
/// (each with its `a` end at the new vertex).
CombEmbedding add_face_vertex(const CombEmbedding& emb, std::span<const FacePosition> attachments);

/// Draws each chord as a new edge inside its face; chord k becomes edge q+k
/// with its `a` end at `from`. Chords sharing a corner are ordered so that
/// the drawing stays planar; parallel chords between the same two corners
/// nest with the later-listed one nearer the walk segment from the smaller
/// to the larger occurrence index.
CombEmbedding realize_chords(const CombEmbedding& emb, std::span<const Chord> chords);

/// Same drawing rule without the crossing precondition. Crossing chords
/// yield a valid rotation system of higher genus, which makes this usable as
/// an independent planarity probe.
CombEmbedding realize_chords_unchecked(const CombEmbedding& emb, std::span<const Chord> chords);

/// Stellation of a triangular face.
CombEmbedding stellate(const CombEmbedding& emb, FaceId face);

/// Stellates several faces of `emb` (ids refer to `emb`), in ascending order.
CombEmbedding stellate_faces(const CombEmbedding& emb, std::span<const FaceId> faces);

/// All occurrence indices of `v` on walk `face`.
std::vector<std::uint32_t> occurrences_of(const Faces& faces, FaceId face, VertexId v);

}  // namespace hamext
