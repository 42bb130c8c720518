#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hamext/edit.hpp"
#include "hamext/embedding.hpp"

namespace hamext {

/// One step of a certificate cycle: a base edge, or chords[id].
struct Link {
  enum class Kind : std::uint8_t { edge, chord };
  Kind kind = Kind::edge;
  std::uint32_t id = 0;

  friend bool operator==(const Link&, const Link&) = default;
};

/// Chords to draw inside regions plus a Hamiltonian cycle of the augmented
/// graph: links[k] joins cycle[k] and cycle[(k+1) % p].
struct ExtensionCertificate {
  std::vector<Chord> chords;
  std::vector<VertexId> cycle;
  std::vector<Link> links;

  friend bool operator==(const ExtensionCertificate&, const ExtensionCertificate&) = default;
};

enum class Verdict { yes, no, unknown };

const char* to_string(Verdict v);

struct DeciderOutcome {
  Verdict verdict = Verdict::unknown;
  std::optional<ExtensionCertificate> certificate;  // set for yes
  std::uint64_t nodes = 0;
};

/// Searches for a Hamiltonian cycle in the base graph augmented by chords
/// drawn inside regions, pairwise non-crossing per region. Depth-first from
/// vertex 0; at each step base edges come before chords (edges by id, chords
/// by face, own occurrence, far occurrence). Chords joining already adjacent
/// vertices are skipped once p >= 3. A single-vertex map counts as
/// Hamiltonian exactly when it has a loop. Requires p <= 64.
DeciderOutcome decide_ham_extendable(const CombEmbedding& emb, const SearchControl& control = {});

struct MinEdgesResult {
  SearchStatus status = SearchStatus::unknown;  // none: not extendable at all
  std::optional<std::uint32_t> min_edges;
  std::optional<ExtensionCertificate> certificate;
  std::uint64_t nodes = 0;
};

/// Iterative deepening on the number of chords; the budget is shared by all
/// rounds.
MinEdgesResult min_added_edges(const CombEmbedding& emb, const SearchControl& control = {});

struct CertificateReport {
  bool ok = false;
  std::vector<std::string> problems;
};

/// Checks a certificate without the search code: chord positions and
/// pairwise interleaving, the realized embedding's genus, and the cycle edge
/// by edge in the realized embedding (chord k is edge q+k there).
CertificateReport verify_certificate(const CombEmbedding& emb, const ExtensionCertificate& cert);

struct HamCycleResult {
  SearchStatus status = SearchStatus::unknown;
  std::optional<GraphCycle> cycle;
  std::uint64_t nodes = 0;
};

/// Plain Hamiltonian cycle search (no embedding). p = 1 needs a loop, p = 2
/// two distinct edges. Requires p <= 64.
HamCycleResult hamiltonian_cycle(const Graph& graph, const SearchControl& control = {});

struct OracleOutcome {
  Verdict verdict = Verdict::unknown;
  /// For yes: the added vertices as chords (vertex k subdivides chord k).
  std::optional<ExtensionCertificate> certificate;
  std::optional<CombEmbedding> extension;
  /// The no verdict came from the relaxation (base graph plus every pair of
  /// vertices sharing a region is already non-Hamiltonian).
  bool relaxation = false;
  std::uint64_t extensions_tried = 0;
  std::uint64_t nodes = 0;
};

/// Brute force over extensions that add up to `max_per_face` vertices inside
/// each region, each joined to two corners at distinct vertices, and at most
/// two added neighbours per base vertex. Each candidate is tested with
/// hamiltonian_cycle on the abstract graph and, if Hamiltonian, drawn and
/// accepted when the genus is unchanged. No is reported only when the
/// relaxation fails or the enumeration is exhausted with `max_per_face` at
/// least the number of distinct vertices on every region.
OracleOutcome oracle_decide_with_added_vertices(const CombEmbedding& emb, std::uint32_t max_per_face,
                                                const SearchControl& control = {});

}  // namespace hamext
