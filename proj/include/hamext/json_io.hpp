#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "hamext/cube.hpp"
#include "hamext/embedding.hpp"
#include "hamext/format.hpp"
#include "hamext/ham.hpp"
#include "hamext/klee.hpp"
#include "hamext/topo.hpp"

namespace hamext {

using Json = nlohmann::ordered_json;

Json to_json(const SurfaceStats& s);
Json to_json(const Faces& faces);
Json to_json(const GraphCycle& c);
Json to_json(const SideDecomposition& d);
Json to_json(const LocalKleeWitness& w);
Json to_json(const ScanResult& scan);
Json to_json(const ExtensionCertificate& cert);
Json to_json(const DeciderOutcome& outcome);
Json to_json(const MinEdgesResult& result);
Json to_json(const CertificateReport& report);
Json to_json(const CertificateCheck& check);
Json to_json(const CubeReport& rep);
/// Summary of a topological extension; the embedding of G itself is written
/// separately in text form.
Json to_json(const TopoExtensionResult& result);
Json to_json(const MinCrossingsResult& result);

/// Accepts {"type": "extension", "chords": [...], "cycle": [...],
/// "links": [...]} or a decider outcome holding such a "certificate".
/// Throws std::invalid_argument on malformed input.
ExtensionCertificate extension_certificate_from_json(const Json& j);

/// Theorem-1 certificate referring by name to an extension (and, for the
/// local kind, a cycle) stored in the base document.
Json klee_certificate_to_json(const KleeCertificate& cert, const std::string& extension_name,
                              const std::optional<std::string>& cycle_name);
KleeCertificate klee_certificate_from_json(const Json& j, const EmbeddingDocument& doc);

}  // namespace hamext
