#include <atomic>
#include <csignal>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hamext/cube.hpp"
#include "hamext/edit.hpp"
#include "hamext/format.hpp"
#include "hamext/generators.hpp"
#include "hamext/ham.hpp"
#include "hamext/json_io.hpp"
#include "hamext/klee.hpp"
#include "hamext/topo.hpp"

using namespace hamext;

namespace {

std::atomic<bool> g_interrupted{false};

extern "C" void on_sigint(int) { g_interrupted.store(true); }

constexpr int kExitError = 3;

struct Common {
  bool json = false;
  std::optional<std::uint64_t> budget;
};

SearchControl make_control(const Common& common) {
  SearchControl control;
  control.cancel = &g_interrupted;
  if (common.budget) {
    control.budget = *common.budget;
  } else if (const char* env = std::getenv("HAMEXT_BUDGET"); env != nullptr && *env != '\0') {
    try {
      control.budget = std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("HAMEXT_BUDGET is not a number: ") + env);
    }
  }
  return control;
}

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::string cycle_text(const GraphCycle& c) {
  std::ostringstream out;
  for (std::size_t k = 0; k < c.length(); ++k) out << (k ? " " : "") << c.vertices[k];
  return out.str();
}

std::string certificate_text(const ExtensionCertificate& cert) {
  std::ostringstream out;
  out << "chords " << cert.chords.size() << '\n';
  for (const auto& c : cert.chords) out << "  face " << c.face << " occurrences " << c.from << " " << c.to << '\n';
  out << "cycle";
  for (std::size_t k = 0; k < cert.cycle.size(); ++k) {
    const auto& l = cert.links[k];
    out << ' ' << cert.cycle[k] << (l.kind == Link::Kind::edge ? " -e" : " -c") << l.id << "-";
  }
  out << ' ' << cert.cycle.front() << '\n';
  return out.str();
}

int cmd_format(const std::string& file) {
  std::cout << serialize(read_document(file));
  return 0;
}

int cmd_stats(const std::string& file, const Common& common) {
  auto doc = read_document(file);
  auto faces = trace_faces(doc.embedding);
  auto s = stats(doc.embedding, faces);
  if (common.json) {
    auto j = to_json(s);
    j["faces"] = to_json(faces);
    print_json(j);
    return 0;
  }
  std::cout << "p " << s.p << "\nq " << s.q << "\nr " << s.r << "\neuler_characteristic " << s.euler_characteristic
            << "\ngenus " << s.genus << '\n';
  for (const auto& w : faces.walks) {
    std::cout << "face " << w.id << " :";
    for (Dart d : w.darts) std::cout << ' ' << dart_token(d);
    std::cout << '\n';
  }
  return 0;
}

struct KleeArgs {
  std::string file;
  std::optional<std::string> cycle;
  bool scan = false;
  std::size_t max_len = 3;
  std::optional<std::string> make_certificate;
};

int cmd_klee(const KleeArgs& args, const Common& common) {
  auto doc = read_document(args.file);
  std::optional<GraphCycle> cycle;
  if (args.cycle) {
    auto it = doc.cycles.find(*args.cycle);
    if (it == doc.cycles.end()) throw std::invalid_argument("no cycle named '" + *args.cycle + "'");
    cycle = it->second;
  }
  if (args.make_certificate) {
    auto it = doc.extensions.find(*args.make_certificate);
    if (it == doc.extensions.end()) throw std::invalid_argument("no extension named '" + *args.make_certificate + "'");
    auto cert = make_klee_certificate(doc.embedding, it->second, cycle);
    print_json(klee_certificate_to_json(cert, *args.make_certificate, args.cycle));
    return 0;
  }
  if (cycle) {
    auto lk = is_local_klee(doc.embedding, *cycle);
    if (common.json) {
      auto j = to_json(lk.decomposition);
      j["local_klee"] = lk.holds;
      Json inside = Json::array();
      for (Side s : lk.inside_candidates) inside.push_back(to_string(s));
      j["inside_candidates"] = inside;
      print_json(j);
      return 0;
    }
    const auto& d = lk.decomposition;
    std::cout << "cycle " << cycle_text(*cycle) << "\nseparates " << (d.separates ? "yes" : "no") << '\n';
    if (d.separates) {
      for (Side s : {Side::a, Side::b}) {
        const auto& st = d.stats_of(s);
        std::cout << "side " << to_string(s) << " regions " << st.r << " vertices_inside_or_on " << st.p
                  << " strict " << st.strict << '\n';
      }
    }
    std::cout << "local_klee " << (lk.holds ? "yes" : "no");
    for (Side s : lk.inside_candidates) std::cout << " inside=" << to_string(s);
    std::cout << '\n';
    return 0;
  }
  if (args.scan) {
    auto scan = scan_local_klee(doc.embedding, args.max_len, make_control(common));
    if (common.json) {
      print_json(to_json(scan));
      return 0;
    }
    for (const auto& w : scan.witnesses)
      std::cout << "witness cycle " << cycle_text(w.cycle) << " inside " << to_string(w.inside) << " r_C " << w.r_side
                << " p_C " << w.p_side << '\n';
    std::cout << "witnesses " << scan.witnesses.size() << "\ncycles_examined " << scan.cycles_examined
              << "\nexhaustive " << (scan.exhaustive ? "yes" : "no") << '\n';
    return 0;
  }
  auto k = is_klee_type(doc.embedding);
  if (common.json) {
    print_json(Json{{"klee_type", k.klee}, {"r", k.r}, {"p", k.p}});
    return 0;
  }
  std::cout << "klee_type " << (k.klee ? "yes" : "no") << "\nr " << k.r << "\np " << k.p << '\n';
  return 0;
}

int verdict_exit(Verdict v) { return v == Verdict::yes ? 0 : v == Verdict::no ? 1 : 2; }

int cmd_ham_ext(const std::string& file, bool min_edges, const Common& common) {
  auto doc = read_document(file);
  auto control = make_control(common);
  if (min_edges) {
    auto res = min_added_edges(doc.embedding, control);
    Verdict v = res.status == SearchStatus::found  ? Verdict::yes
                : res.status == SearchStatus::none ? Verdict::no
                                                   : Verdict::unknown;
    if (common.json) {
      auto j = to_json(res);
      if (g_interrupted) j["interrupted"] = true;
      print_json(j);
    } else {
      std::cout << to_string(v) << '\n';
      if (res.min_edges) std::cout << "min_edges " << *res.min_edges << '\n';
      if (res.certificate) std::cout << certificate_text(*res.certificate);
      std::cout << "nodes " << res.nodes << '\n';
      if (g_interrupted) std::cout << "interrupted\n";
    }
    return verdict_exit(v);
  }
  auto out = decide_ham_extendable(doc.embedding, control);
  if (common.json) {
    auto j = to_json(out);
    if (g_interrupted) j["interrupted"] = true;
    print_json(j);
  } else {
    std::cout << to_string(out.verdict) << '\n';
    if (out.certificate) std::cout << certificate_text(*out.certificate);
    std::cout << "nodes " << out.nodes << '\n';
    if (g_interrupted) std::cout << "interrupted\n";
  }
  return verdict_exit(out.verdict);
}

struct TopoArgs {
  std::string file;
  std::optional<std::string> order;
  std::optional<std::string> minimize;
  std::uint32_t samples = 100;
  std::uint64_t seed = 1;
};

std::vector<VertexId> parse_order(const std::string& text) {
  std::vector<VertexId> order;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw std::invalid_argument("bad vertex '" + item + "' in --order");
    order.push_back(static_cast<VertexId>(v));
  }
  return order;
}

int cmd_topo_ext(const TopoArgs& args, const Common& common) {
  auto doc = read_document(args.file);
  std::optional<TopoExtensionResult> result;
  std::optional<MinCrossingsResult> search;
  if (args.minimize) {
    if (args.order) throw std::invalid_argument("--order and --minimize are exclusive");
    auto mode = *args.minimize == "exact" ? MinimizeMode::exact : MinimizeMode::heuristic;
    search = min_crossings_search(doc.embedding, mode, make_control(common), args.samples, args.seed);
    if (!search->best) throw std::runtime_error("budget allowed no build");
    result = *search->best;
  } else {
    std::optional<std::vector<VertexId>> order;
    if (args.order) order = parse_order(*args.order);
    result = build_extension(doc.embedding, order);
  }
  auto report = verify_result(doc.embedding, *result);
  EmbeddingDocument out{result->extended, {{"hamiltonian", result->hamiltonian_cycle}}, {}};
  if (common.json) {
    auto j = to_json(*result);
    j["verified"] = report.ok;
    if (search) j["search"] = to_json(*search);
    j["embedding"] = serialize(out);
    print_json(j);
  } else {
    std::cout << "# crossing_count " << result->crossing_count << '\n';
    std::cout << "# order";
    for (VertexId v : result->order) std::cout << ' ' << v;
    std::cout << '\n';
    if (search)
      std::cout << "# builds " << search->builds << " exhausted " << (search->strategy_space_exhausted ? "yes" : "no")
                << " globally_minimal " << (search->globally_minimal ? "yes" : "no") << '\n';
    std::cout << "# verified " << (report.ok ? "yes" : "no") << '\n';
    std::cout << serialize(out);
  }
  for (const auto& p : report.problems) std::cerr << "verify: " << p << '\n';
  return report.ok ? 0 : 1;
}

int cmd_cert_check(const std::string& file, const std::string& cert_file, const Common& common) {
  auto doc = read_document(file);
  std::ifstream in(cert_file);
  if (!in) throw std::runtime_error("cannot open " + cert_file);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(cert_file + ": " + e.what());
  }
  const bool theorem1 = j.is_object() && j.value("type", "") == "theorem1";
  if (theorem1) {
    auto check = check_theorem1_certificate(klee_certificate_from_json(j, doc));
    if (common.json) {
      print_json(to_json(check));
    } else {
      std::cout << (check.valid ? "valid" : check.malformed ? "malformed" : "invalid") << "\ns " << check.s << "\nr "
                << check.r << "\np " << check.p << '\n';
      for (const auto& p : check.problems) std::cout << "problem " << p << '\n';
      if (!check.conclusion.empty()) std::cout << "conclusion " << check.conclusion << '\n';
    }
    return check.valid ? 0 : 1;
  }
  auto report = verify_certificate(doc.embedding, extension_certificate_from_json(j));
  if (common.json) {
    print_json(to_json(report));
  } else {
    std::cout << (report.ok ? "valid" : "invalid") << '\n';
    for (const auto& p : report.problems) std::cout << "problem " << p << '\n';
  }
  return report.ok ? 0 : 1;
}

struct GenArgs {
  std::string name;
  std::uint32_t n = 3;
  std::uint32_t m = 3;
  std::uint32_t levels = 2;
  std::uint32_t p = 6;
  std::uint32_t q = 8;
  std::uint64_t seed = 1;
  bool stellate_inner = false;
  bool multi = false;
};

int cmd_gen(const GenArgs& args) {
  EmbeddingDocument doc;
  const auto& name = args.name;
  if (name == "cycle") {
    doc.embedding = cycle_on_sphere(args.n);
  } else if (name == "grid-torus") {
    doc.embedding = grid_on_torus(args.m, args.n);
    doc.cycles.emplace("row0", grid_row_cycle(args.m, args.n, 0));
  } else if (name == "theta") {
    doc.embedding = theta_graph();
  } else if (name == "stellated-host") {
    auto host = triangle_host_with_stellations(args.levels);
    doc.embedding = host.embedding;
    doc.cycles.emplace("C", host.triangle);
    if (args.stellate_inner)
      doc.extensions.emplace("W", ExtensionMap::identity_prefix(host.embedding,
                                                                stellate_faces(host.embedding, host.inner_faces)));
  } else if (name == "stellated-full") {
    auto host = triangle_host_with_stellations(args.levels);
    doc.embedding = stellate_faces(host.embedding, host.inner_faces);
    doc.cycles.emplace("C", host.triangle);
  } else if (name == "petersen-torus") {
    auto found = find_embedding_with_genus(petersen_graph(), 1);
    if (!found.embedding) throw std::runtime_error("no torus embedding found");
    doc.embedding = *found.embedding;
  } else if (name == "icosahedron") {
    doc.embedding = icosahedron();
  } else if (name == "random") {
    std::mt19937_64 rng(args.seed);
    doc.embedding = random_embedding(random_connected_graph(args.p, args.q, rng, args.multi), rng);
  } else {
    throw std::invalid_argument("unknown generator '" + name + "'");
  }
  std::cout << serialize(doc);
  return 0;
}

int cmd_cube(std::uint32_t d, const Common& common) {
  auto rep = cube_report(d);
  if (common.json) {
    print_json(to_json(rep));
    return 0;
  }
  std::cout << "d " << rep.d << "\np " << rep.p << "\nq " << rep.q << "\ngenus " << rep.genus << "\nr " << rep.r
            << "\nklee " << (rep.klee ? "yes" : "no") << '\n';
  return 0;
}

int cmd_cube_count(std::uint32_t r, std::uint32_t smin, std::uint32_t smax, const std::string& patterns,
                   unsigned digits, const Common& common) {
  BigInt pat;
  try {
    pat = BigInt(patterns);
  } catch (const std::exception&) {
    throw std::invalid_argument("patterns must be a non-negative integer");
  }
  if (pat < 0) throw std::invalid_argument("patterns must be a non-negative integer");
  auto n = klee_count(r, smin, smax, pat);
  if (common.json) {
    print_json(Json{{"count", n.str()}, {"scientific", scientific(n, digits)}});
    return 0;
  }
  std::cout << n << '\n' << scientific(n, digits) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hamiltonian extensions of graph embeddings"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub, bool with_budget) {
    sub->add_flag("--json", common.json, "structured output");
    if (with_budget) sub->add_option("--budget", common.budget, "search node budget (default: $HAMEXT_BUDGET)");
  };

  std::string file;
  auto* stats_cmd = app.add_subcommand("stats", "counts, genus and face walks");
  stats_cmd->add_option("file", file)->required()->check(CLI::ExistingFile);
  add_common(stats_cmd, false);

  auto* format_cmd = app.add_subcommand("format", "rewrite a file in canonical form");
  format_cmd->add_option("file", file)->required()->check(CLI::ExistingFile);

  KleeArgs klee;
  auto* klee_cmd = app.add_subcommand("klee", "Klee type, local Klee test of a named cycle, or cycle scan");
  klee_cmd->add_option("file", klee.file)->required()->check(CLI::ExistingFile);
  auto* cycle_opt = klee_cmd->add_option("--cycle", klee.cycle, "name of a cycle in the file");
  auto* scan_opt = klee_cmd->add_flag("--scan", klee.scan, "scan all short simple cycles");
  klee_cmd->add_option("--max-len", klee.max_len, "longest cycle to scan")->check(CLI::PositiveNumber);
  klee_cmd->add_option("--make-certificate", klee.make_certificate,
                       "print a Theorem-1 certificate for the named extension (local with --cycle)");
  cycle_opt->excludes(scan_opt);
  add_common(klee_cmd, true);

  bool min_edges = false;
  auto* ham_cmd = app.add_subcommand("ham-ext", "decide Hamiltonian extendability (exit 0 YES, 1 NO, 2 UNKNOWN)");
  ham_cmd->add_option("file", file)->required()->check(CLI::ExistingFile);
  ham_cmd->add_flag("--min-edges", min_edges, "fewest added edges");
  add_common(ham_cmd, true);

  TopoArgs topo;
  auto* topo_cmd = app.add_subcommand("topo-ext", "Hamiltonian topological extension");
  topo_cmd->add_option("file", topo.file)->required()->check(CLI::ExistingFile);
  topo_cmd->add_option("--order", topo.order, "vertex order, comma separated");
  topo_cmd->add_option("--minimize", topo.minimize, "search orders for fewest crossings")
      ->check(CLI::IsMember({"exact", "heuristic"}));
  topo_cmd->add_option("--samples", topo.samples, "random orders in heuristic mode");
  topo_cmd->add_option("--seed", topo.seed, "seed for heuristic mode");
  add_common(topo_cmd, true);

  std::string cert_file;
  auto* cert_cmd = app.add_subcommand("cert-check", "verify an extension or Theorem-1 certificate");
  cert_cmd->add_option("file", file)->required()->check(CLI::ExistingFile);
  cert_cmd->add_option("--certificate", cert_file)->required()->check(CLI::ExistingFile);
  add_common(cert_cmd, false);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "emit a fixture embedding");
  gen_cmd->add_option("name", gen.name, "cycle, grid-torus, theta, stellated-host, stellated-full, petersen-torus, icosahedron, random")
      ->required();
  gen_cmd->add_option("--n", gen.n, "cycle length, or grid columns");
  gen_cmd->add_option("--m", gen.m, "grid rows");
  gen_cmd->add_option("--levels", gen.levels, "stellation levels inside the triangle");
  gen_cmd->add_flag("--stellate-inner", gen.stellate_inner, "add extension W stellating every inner region");
  gen_cmd->add_option("--p", gen.p, "random: vertices");
  gen_cmd->add_option("--q", gen.q, "random: edges");
  gen_cmd->add_flag("--multi", gen.multi, "random: allow loops and parallel edges");
  gen_cmd->add_option("--seed", gen.seed, "random: seed");

  std::uint32_t d = 0;
  auto* cube_cmd = app.add_subcommand("cube", "counts for the d-cube");
  cube_cmd->add_option("d", d)->required();
  add_common(cube_cmd, false);

  std::uint32_t r = 0, smin = 0, smax = 0;
  std::string patterns;
  unsigned digits = 3;
  auto* count_cmd = app.add_subcommand("cube-count", "sum_{k=smin}^{smax} C(r,k) patterns^k");
  count_cmd->add_option("r", r)->required();
  count_cmd->add_option("smin", smin)->required();
  count_cmd->add_option("smax", smax)->required();
  count_cmd->add_option("patterns", patterns)->required();
  count_cmd->add_option("--digits", digits, "significant figures")->check(CLI::PositiveNumber);
  add_common(count_cmd, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  std::signal(SIGINT, on_sigint);
  try {
    if (*stats_cmd) return cmd_stats(file, common);
    if (*format_cmd) return cmd_format(file);
    if (*klee_cmd) return cmd_klee(klee, common);
    if (*ham_cmd) return cmd_ham_ext(file, min_edges, common);
    if (*topo_cmd) return cmd_topo_ext(topo, common);
    if (*cert_cmd) return cmd_cert_check(file, cert_file, common);
    if (*gen_cmd) return cmd_gen(gen);
    if (*cube_cmd) return cmd_cube(d, common);
    if (*count_cmd) return cmd_cube_count(r, smin, smax, patterns, digits, common);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kExitError;
}
