#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hamext/embedding.hpp"
#include "hamext/extension.hpp"

namespace hamext {

struct KleeTypeResult {
  bool klee = false;
  std::int64_t r = 0;
  std::int64_t p = 0;
};

/// r > p.
KleeTypeResult is_klee_type(const CombEmbedding& emb);

enum class Side : std::uint8_t { a, b };

const char* to_string(Side s);

struct SideStats {
  std::int64_t r = 0;       // regions on this side
  std::int64_t strict = 0;  // vertices strictly on this side
  std::int64_t p = 0;       // strict + vertices of the cycle
};

/// How a simple cycle cuts the surface. Side a is the side holding the face
/// of the cycle's first dart (vertices[0] along edges[0]). When the cycle
/// does not separate, every face and vertex is reported on side a.
struct SideDecomposition {
  GraphCycle cycle;
  bool separates = false;
  std::vector<Side> side_of_face;
  /// Side of each vertex; nullopt for vertices on the cycle.
  std::vector<std::optional<Side>> side_of_vertex;
  std::array<SideStats, 2> sides{};

  const SideStats& stats_of(Side s) const { return sides[static_cast<std::size_t>(s)]; }
};

/// Throws std::invalid_argument if `cycle` is not a simple cycle of emb.
void require_simple_cycle(const CombEmbedding& emb, const GraphCycle& cycle);

SideDecomposition cycle_side_decomposition(const CombEmbedding& emb, const GraphCycle& cycle);
SideDecomposition cycle_side_decomposition(const CombEmbedding& emb, const Faces& faces, const GraphCycle& cycle);

struct LocalKleeResult {
  bool holds = false;
  SideDecomposition decomposition;
  /// Sides with r_side >= p_side (meaningful only when the cycle separates
  /// and both open sides hold a vertex).
  std::vector<Side> inside_candidates;
};

/// Local Klee test: the cycle separates the surface, each open side holds at
/// least one vertex, and some side has at least as many regions as vertices
/// inside or on the cycle.
LocalKleeResult is_local_klee(const CombEmbedding& emb, const GraphCycle& cycle);

struct LocalKleeWitness {
  GraphCycle cycle;
  Side inside = Side::a;
  std::int64_t r_side = 0;
  std::int64_t p_side = 0;
};

struct ScanResult {
  std::vector<LocalKleeWitness> witnesses;
  std::uint64_t cycles_examined = 0;
  std::uint64_t nodes = 0;
  bool exhaustive = true;
};

/// Simple cycles up to `max_length`, each listed once: it starts at its least
/// vertex and runs toward the smaller of that vertex's two cycle neighbours
/// (for 2-cycles, the smaller edge comes first). Cycles are ordered by
/// length, then vertex sequence, then edge sequence. The budget counts DFS
/// nodes; running out makes the enumeration non-exhaustive.
std::vector<GraphCycle> simple_cycles(const CombEmbedding& emb, std::size_t max_length, const SearchControl& control,
                                      bool* exhaustive = nullptr, std::uint64_t* nodes = nullptr);

ScanResult scan_local_klee(const CombEmbedding& emb, std::size_t max_length, const SearchControl& control = {});

enum class KleeKind { global, local };

const char* to_string(KleeKind k);

struct AddedVertex {
  VertexId vertex = 0;  // in the extended embedding
  FaceId region = 0;    // face of the base embedding
};

/// Data for a non-Hamiltonicity argument: an extension of `base` adding
/// vertices w_k inside distinct base regions R_k. A local certificate also
/// names a cycle of the base and which of its sides is inside.
struct KleeCertificate {
  KleeKind kind = KleeKind::global;
  CombEmbedding base;
  ExtensionMap extension;
  std::vector<AddedVertex> added;
  std::optional<GraphCycle> cycle;
  Side inside = Side::a;
};

/// Takes every added vertex of the extension as a w_k, with its region as
/// computed by is_extension. With a cycle, the certificate is local and the
/// inside is the first side qualifying under is_local_klee (side a if none).
KleeCertificate make_klee_certificate(const CombEmbedding& base, ExtensionMap extension,
                                      std::optional<GraphCycle> cycle = std::nullopt);

struct CertificateCheck {
  bool valid = false;
  /// Structural defects (bad extension, w_k not an added vertex, regions
  /// reused). A malformed certificate is never valid.
  bool malformed = false;
  std::vector<std::string> problems;
  std::int64_t s = 0;
  std::int64_t r = 0;  // r or r_C
  std::int64_t p = 0;  // p or p_C
  std::string conclusion;
};

CertificateCheck check_theorem1_certificate(const KleeCertificate& cert);

}  // namespace hamext
