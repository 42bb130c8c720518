#pragma once

#include <atomic>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace hamext {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using Dart = std::uint32_t;
using FaceId = std::uint32_t;

inline constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

// Edge e owns darts 2e (the `a` end) and 2e+1 (the `b` end). A dart points
// away from the vertex it is attached to.
constexpr Dart twin(Dart d) noexcept { return d ^ 1u; }
constexpr EdgeId edge_of(Dart d) noexcept { return d >> 1; }
constexpr Dart a_dart(EdgeId e) noexcept { return e << 1; }
constexpr Dart b_dart(EdgeId e) noexcept { return (e << 1) | 1u; }
constexpr bool is_b_end(Dart d) noexcept { return (d & 1u) != 0; }

struct EdgeEnds {
  VertexId a = 0;
  VertexId b = 0;

  friend bool operator==(const EdgeEnds&, const EdgeEnds&) = default;
};

/// Abstract multigraph (loops and parallel edges allowed).
struct Graph {
  std::size_t vertex_count = 0;
  std::vector<EdgeEnds> edges;

  bool is_connected() const;
  std::vector<std::vector<EdgeId>> incidence() const;

  friend bool operator==(const Graph&, const Graph&) = default;
};

/// A cycle in a graph: edges[k] joins vertices[k] and vertices[(k+1) % n].
/// A loop is the length-1 cycle {v} / {e}.
struct GraphCycle {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  std::size_t length() const { return vertices.size(); }
  friend bool operator==(const GraphCycle&, const GraphCycle&) = default;
};

enum class SearchStatus { found, none, unknown };

const char* to_string(SearchStatus s);

/// Node budget plus an optional cooperative cancel flag (set from a signal
/// handler by the CLI). Exhausting either yields SearchStatus::unknown.
struct SearchControl {
  std::uint64_t budget = std::numeric_limits<std::uint64_t>::max();
  const std::atomic<bool>* cancel = nullptr;

  bool cancelled() const { return cancel != nullptr && cancel->load(std::memory_order_relaxed); }
};

class InvalidEmbedding : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EditError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace hamext
