#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hamext/edit.hpp"
#include "hamext/embedding.hpp"
#include "hamext/extension.hpp"

namespace hamext {

/// Crossing of a route through the interior of an edge: the route leaves
/// `face` across `dart` (occurrence `occurrence` of that face's walk).
struct RouteCrossing {
  FaceId face = 0;
  std::uint32_t occurrence = 0;
  Dart dart = 0;

  friend bool operator==(const RouteCrossing&, const RouteCrossing&) = default;
};

/// A curve segment from corner `start` (at `from`) through faces and edge
/// crossings to corner `end` (at `to`). Face ids refer to the working
/// embedding the route was planned on.
struct Route {
  VertexId from = 0;
  VertexId to = 0;
  FacePosition start;
  std::vector<RouteCrossing> crossings;
  FacePosition end;

  std::size_t crossing_count() const { return crossings.size(); }
  friend bool operator==(const Route&, const Route&) = default;
};

/// Minimum-crossing routes from `from` to `to`, crossing only edges marked
/// crossable, in lexicographic order of (start face, crossed occurrences).
/// Corners are the lowest occurrence of the end vertex on the first and last
/// face; for from == to on a single face, the two lowest occurrences (or the
/// same one twice). At most `limit` routes are returned.
std::vector<Route> shortest_routes(const CombEmbedding& work, const Faces& faces, VertexId from, VertexId to,
                                   const std::vector<bool>& crossable, std::size_t limit);

/// First of shortest_routes. Throws std::logic_error if no route exists,
/// which cannot happen on a valid working embedding whose non-crossable
/// edges form a forest.
Route plan_route(const CombEmbedding& work, const Faces& faces, VertexId from, VertexId to,
                 const std::vector<bool>& crossable);

struct TopoExtensionResult {
  std::vector<VertexId> order;
  /// Base with every crossed edge subdivided (ids as produced by
  /// subdivide_edge applied per edge in ascending order).
  CombEmbedding gamma_prime;
  CombEmbedding extended;
  /// Base vertices keep their ids; each base edge maps to its path of
  /// sub-edges in `extended`.
  ExtensionMap extension_map;
  /// Through every vertex of `extended`; its edges are exactly the curve.
  GraphCycle hamiltonian_cycle;
  std::uint32_t crossing_count = 0;
  std::vector<Route> routes;
};

/// Routes a closed curve through the vertices in `order` (default:
/// ascending), one shortest route per consecutive pair, subdividing every
/// crossed edge at a new degree-4 vertex. Curve edges are never crossed
/// later. `choices[k]`, when present, picks among the shortest routes of
/// step k instead of the first.
TopoExtensionResult build_extension(const CombEmbedding& emb, const std::optional<std::vector<VertexId>>& order = {},
                                    const std::vector<std::uint32_t>& choices = {});

std::vector<VertexId> random_vertex_order(std::size_t p, std::mt19937_64& rng);

struct TopoReport {
  bool ok = false;
  std::vector<std::string> problems;
};

/// Independent check of a result: validity, genus, topological extension,
/// the cycle, and degree-4 alternation at every crossing vertex.
TopoReport verify_result(const CombEmbedding& base, const TopoExtensionResult& result);

enum class MinimizeMode { exact, heuristic };

struct MinCrossingsResult {
  std::optional<TopoExtensionResult> best;
  std::uint32_t crossing_count = 0;
  std::uint64_t builds = 0;
  /// Every order (and, within each, every shortest-route choice) was tried.
  bool strategy_space_exhausted = false;
  /// The best count is provably minimal over all topological Hamiltonian
  /// extensions; only known when it is zero.
  bool globally_minimal = false;
};

/// exact: all p! orders (p <= 8) and all shortest-route choices per step;
/// the budget counts builds. heuristic: `samples` random orders from `seed`.
/// Ties keep the first result in enumeration order.
MinCrossingsResult min_crossings_search(const CombEmbedding& emb, MinimizeMode mode, const SearchControl& control = {},
                                        std::uint32_t samples = 100, std::uint64_t seed = 1);

}  // namespace hamext
