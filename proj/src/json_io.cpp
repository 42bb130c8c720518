#include "hamext/json_io.hpp"

#include <stdexcept>

namespace hamext {

namespace {

Json darts_json(std::span<const Dart> darts) {
  Json out = Json::array();
  for (Dart d : darts) out.push_back(dart_token(d));
  return out;
}

Json link_json(const Link& l) {
  return Json{{"kind", l.kind == Link::Kind::edge ? "edge" : "chord"}, {"id", l.id}};
}

template <class T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw std::invalid_argument(std::string("bad field '") + key + "'");
  }
}

}  // namespace

Json to_json(const SurfaceStats& s) {
  return Json{{"p", s.p}, {"q", s.q}, {"r", s.r}, {"euler_characteristic", s.euler_characteristic}, {"genus", s.genus}};
}

Json to_json(const Faces& faces) {
  Json out = Json::array();
  for (const auto& w : faces.walks)
    out.push_back(Json{{"id", w.id}, {"darts", darts_json(w.darts)}, {"corners", w.corners}});
  return out;
}

Json to_json(const GraphCycle& c) { return Json{{"vertices", c.vertices}, {"edges", c.edges}}; }

Json to_json(const SideDecomposition& d) {
  Json j{{"cycle", to_json(d.cycle)}, {"separates", d.separates}};
  if (d.separates) {
    for (Side s : {Side::a, Side::b}) {
      const auto& st = d.stats_of(s);
      j["sides"][to_string(s)] = Json{{"regions", st.r}, {"strict_vertices", st.strict}, {"vertices_inside_or_on", st.p}};
    }
  }
  return j;
}

Json to_json(const LocalKleeWitness& w) {
  return Json{{"cycle", to_json(w.cycle)}, {"inside", to_string(w.inside)}, {"r_side", w.r_side}, {"p_side", w.p_side}};
}

Json to_json(const ScanResult& scan) {
  Json ws = Json::array();
  for (const auto& w : scan.witnesses) ws.push_back(to_json(w));
  return Json{{"witnesses", ws},
              {"cycles_examined", scan.cycles_examined},
              {"nodes", scan.nodes},
              {"exhaustive", scan.exhaustive}};
}

Json to_json(const ExtensionCertificate& cert) {
  Json chords = Json::array();
  for (const auto& c : cert.chords) chords.push_back(Json{{"face", c.face}, {"from", c.from}, {"to", c.to}});
  Json links = Json::array();
  for (const auto& l : cert.links) links.push_back(link_json(l));
  return Json{{"type", "extension"}, {"chords", chords}, {"cycle", cert.cycle}, {"links", links}};
}

Json to_json(const DeciderOutcome& outcome) {
  Json j{{"verdict", to_string(outcome.verdict)}, {"nodes", outcome.nodes}};
  if (outcome.certificate) j["certificate"] = to_json(*outcome.certificate);
  return j;
}

Json to_json(const MinEdgesResult& result) {
  const char* verdict = result.status == SearchStatus::found  ? "YES"
                        : result.status == SearchStatus::none ? "NO"
                                                              : "UNKNOWN";
  Json j{{"verdict", verdict}, {"nodes", result.nodes}};
  if (result.min_edges) j["min_edges"] = *result.min_edges;
  if (result.certificate) j["certificate"] = to_json(*result.certificate);
  return j;
}

Json to_json(const CertificateReport& report) { return Json{{"ok", report.ok}, {"problems", report.problems}}; }

Json to_json(const CertificateCheck& check) {
  return Json{{"valid", check.valid}, {"malformed", check.malformed}, {"s", check.s},
              {"r", check.r},         {"p", check.p},                 {"problems", check.problems},
              {"conclusion", check.conclusion}};
}

Json to_json(const CubeReport& rep) {
  // Exact integers as decimal strings; they outgrow 64 bits quickly.
  return Json{{"d", rep.d},
              {"p", rep.p.str()},
              {"q", rep.q.str()},
              {"genus", rep.genus.str()},
              {"r", rep.r.str()},
              {"klee", rep.klee}};
}

Json to_json(const TopoExtensionResult& result) {
  Json routes = Json::array();
  for (const auto& r : result.routes) {
    Json crossed = Json::array();
    for (const auto& c : r.crossings) crossed.push_back(dart_token(c.dart));
    routes.push_back(Json{{"from", r.from}, {"to", r.to}, {"crossed", crossed}});
  }
  return Json{{"order", result.order},
              {"crossing_count", result.crossing_count},
              {"p", result.extended.vertex_count()},
              {"q", result.extended.edge_count()},
              {"hamiltonian_cycle", to_json(result.hamiltonian_cycle)},
              {"routes", routes}};
}

Json to_json(const MinCrossingsResult& result) {
  return Json{{"crossing_count", result.crossing_count},
              {"builds", result.builds},
              {"strategy_space_exhausted", result.strategy_space_exhausted},
              {"globally_minimal", result.globally_minimal}};
}

ExtensionCertificate extension_certificate_from_json(const Json& j) {
  if (j.is_object() && j.contains("certificate")) return extension_certificate_from_json(j.at("certificate"));
  if (field<std::string>(j, "type") != "extension") throw std::invalid_argument("not an extension certificate");
  ExtensionCertificate cert;
  for (const auto& c : field<Json>(j, "chords"))
    cert.chords.push_back({field<FaceId>(c, "face"), field<std::uint32_t>(c, "from"), field<std::uint32_t>(c, "to")});
  cert.cycle = field<std::vector<VertexId>>(j, "cycle");
  for (const auto& l : field<Json>(j, "links")) {
    auto kind = field<std::string>(l, "kind");
    if (kind != "edge" && kind != "chord") throw std::invalid_argument("link kind must be edge or chord");
    cert.links.push_back({kind == "edge" ? Link::Kind::edge : Link::Kind::chord, field<std::uint32_t>(l, "id")});
  }
  return cert;
}

Json klee_certificate_to_json(const KleeCertificate& cert, const std::string& extension_name,
                              const std::optional<std::string>& cycle_name) {
  Json added = Json::array();
  for (const auto& a : cert.added) added.push_back(Json{{"vertex", a.vertex}, {"region", a.region}});
  Json j{{"type", "theorem1"}, {"kind", to_string(cert.kind)}, {"extension", extension_name}, {"added", added}};
  if (cycle_name) {
    j["cycle"] = *cycle_name;
    j["inside"] = to_string(cert.inside);
  }
  return j;
}

KleeCertificate klee_certificate_from_json(const Json& j, const EmbeddingDocument& doc) {
  if (field<std::string>(j, "type") != "theorem1") throw std::invalid_argument("not a theorem1 certificate");
  KleeCertificate cert;
  auto kind = field<std::string>(j, "kind");
  if (kind != "global" && kind != "local") throw std::invalid_argument("kind must be global or local");
  cert.kind = kind == "global" ? KleeKind::global : KleeKind::local;
  cert.base = doc.embedding;
  auto ext = field<std::string>(j, "extension");
  auto it = doc.extensions.find(ext);
  if (it == doc.extensions.end()) throw std::invalid_argument("no extension named '" + ext + "'");
  cert.extension = it->second;
  for (const auto& a : field<Json>(j, "added"))
    cert.added.push_back({field<VertexId>(a, "vertex"), field<FaceId>(a, "region")});
  if (j.contains("cycle")) {
    auto name = field<std::string>(j, "cycle");
    auto c = doc.cycles.find(name);
    if (c == doc.cycles.end()) throw std::invalid_argument("no cycle named '" + name + "'");
    cert.cycle = c->second;
    auto inside = j.contains("inside") ? field<std::string>(j, "inside") : std::string("a");
    if (inside != "a" && inside != "b") throw std::invalid_argument("inside must be a or b");
    cert.inside = inside == "a" ? Side::a : Side::b;
  }
  return cert;
}

}  // namespace hamext
