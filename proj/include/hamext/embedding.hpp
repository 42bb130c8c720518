#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "hamext/types.hpp"

namespace hamext {

/// Dart-based rotation system describing a 2-cell embedding of a connected
/// multigraph in a closed orientable surface.
///
/// `rotation(v)` lists the darts leaving v in counterclockwise order. The
/// constructor accepts arbitrary (possibly broken) input so that `validate`
/// can report what is wrong; every other operation requires a valid value and
/// throws InvalidEmbedding otherwise. Rotations are stored starting at their
/// least dart, so equality is structural.
class CombEmbedding {
 public:
  CombEmbedding() = default;
  CombEmbedding(std::vector<EdgeEnds> edges, std::vector<std::vector<Dart>> rotations);

  std::size_t vertex_count() const { return rotation_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t dart_count() const { return 2 * edges_.size(); }

  const EdgeEnds& edge(EdgeId e) const { return edges_.at(e); }
  std::span<const EdgeEnds> edges() const { return edges_; }
  std::span<const Dart> rotation(VertexId v) const { return rotation_.at(v); }
  const std::vector<std::vector<Dart>>& rotations() const { return rotation_; }

  VertexId vertex_of(Dart d) const { return is_b_end(d) ? edges_[edge_of(d)].b : edges_[edge_of(d)].a; }
  VertexId head(Dart d) const { return vertex_of(twin(d)); }
  std::size_t degree(VertexId v) const { return rotation_.at(v).size(); }

  /// Position of d inside the rotation of its vertex (kNone if absent).
  std::uint32_t position(Dart d) const { return position_.at(d); }
  Dart next_around(Dart d) const;
  Dart prev_around(Dart d) const;
  /// Face-tracing successor: leave the head of d by the dart following twin(d).
  Dart face_successor(Dart d) const { return next_around(twin(d)); }

  /// True when every dart sits exactly once in the rotation of its own vertex.
  bool darts_well_placed() const { return well_placed_; }

  Graph graph() const;

  friend bool operator==(const CombEmbedding& x, const CombEmbedding& y) {
    return x.edges_ == y.edges_ && x.rotation_ == y.rotation_;
  }

 private:
  std::vector<EdgeEnds> edges_;
  std::vector<std::vector<Dart>> rotation_;
  std::vector<std::uint32_t> position_;
  bool well_placed_ = false;
};

struct ValidationIssue {
  enum class Kind { empty, endpoint_out_of_range, dart_out_of_range, dart_missing, dart_repeated, dart_misplaced,
                    disconnected, odd_euler_characteristic, euler_above_two };
  Kind kind;
  std::uint32_t subject = kNone;  // dart, vertex or edge depending on kind
  std::string detail;
};

const char* to_string(ValidationIssue::Kind k);

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  std::size_t p = 0;
  std::size_t q = 0;

  bool ok() const { return issues.empty(); }
  bool has(ValidationIssue::Kind k) const;
  std::string summary() const;
};

ValidationReport validate(const CombEmbedding& emb);
/// Throws InvalidEmbedding carrying the validation summary.
void require_valid(const CombEmbedding& emb);

/// One region: its boundary walk as a cyclic dart sequence, starting at the
/// least dart. Occurrence i is the corner at `corners[i]` = tail of darts[i],
/// sitting just before darts[i] in that vertex's rotation.
struct FaceWalk {
  FaceId id = 0;
  std::vector<Dart> darts;
  std::vector<VertexId> corners;

  std::size_t length() const { return darts.size(); }
};

struct Faces {
  std::vector<FaceWalk> walks;
  std::vector<FaceId> face_of_dart;
  std::vector<std::uint32_t> index_in_face;

  std::size_t size() const { return walks.size(); }
  const FaceWalk& operator[](FaceId f) const { return walks.at(f); }
};

/// Faces ordered by least dart. The edgeless single-vertex map has one face
/// with an empty walk.
Faces trace_faces(const CombEmbedding& emb);

struct SurfaceStats {
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::int64_t r = 0;
  std::int64_t euler_characteristic = 0;
  std::int64_t genus = 0;

  friend bool operator==(const SurfaceStats&, const SurfaceStats&) = default;
};

SurfaceStats stats(const CombEmbedding& emb);
SurfaceStats stats(const CombEmbedding& emb, const Faces& faces);

/// Builds an embedding of `graph` from per-vertex dart orders.
CombEmbedding embed(const Graph& graph, std::vector<std::vector<Dart>> rotations);
/// Rotation system with each vertex's darts in ascending order.
CombEmbedding embed_sorted(const Graph& graph);
CombEmbedding random_embedding(const Graph& graph, std::mt19937_64& rng);

struct GenusSearchResult {
  SearchStatus status = SearchStatus::none;
  std::optional<CombEmbedding> embedding;
  std::uint64_t rotation_systems_tried = 0;
};

/// Enumerates rotation systems in lexicographic odometer order (vertex 0
/// restricted to one orientation class, the rest free) and returns the first
/// one of the requested genus. Budget counts rotation systems examined.
GenusSearchResult find_embedding_with_genus(const Graph& graph, std::int64_t target_genus,
                                            const SearchControl& control = {});

}  // namespace hamext
