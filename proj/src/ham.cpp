#include "hamext/ham.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

namespace hamext {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "YES";
    case Verdict::no: return "NO";
    case Verdict::unknown: return "UNKNOWN";
  }
  return "?";
}

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(VertexId v) { return Mask{1} << v; }

void require_small(std::size_t p) {
  if (p == 0) throw std::invalid_argument("graph has no vertices");
  if (p > 64) throw std::invalid_argument("Hamiltonian search supports at most 64 vertices");
}

Mask all_but_zero(std::size_t p) { return (p == 64 ? ~Mask{0} : (bit(static_cast<VertexId>(p)) - 1)) & ~Mask{1}; }

// Necessary conditions for closing a Hamiltonian path cur ... start through
// every unvisited vertex, judged on an over-approximating adjacency.
bool feasible(const std::vector<Mask>& adj, Mask unvisited, VertexId cur, VertexId start) {
  if (unvisited == 0) return true;
  const Mask ends = bit(cur) | bit(start);
  for (Mask m = unvisited; m; m &= m - 1) {
    auto w = static_cast<VertexId>(std::countr_zero(m));
    if (std::popcount(adj[w] & (unvisited | ends)) < 2) return false;
  }
  if ((adj[start] & unvisited) == 0) return false;
  const Mask allowed = unvisited | bit(cur);
  Mask reach = bit(cur), frontier = reach;
  while (frontier) {
    Mask next = 0;
    for (Mask m = frontier; m; m &= m - 1) next |= adj[std::countr_zero(m)];
    next &= allowed & ~reach;
    reach |= next;
    frontier = next;
  }
  return (reach & unvisited) == unvisited;
}

class CycleSearch {
 public:
  CycleSearch(const Graph& g, const SearchControl& control) : g_(g), control_(control), adj_(g.vertex_count, 0) {
    const auto p = g.vertex_count;
    moves_.resize(p);
    std::vector<std::map<VertexId, EdgeId>> first(p);
    for (EdgeId e = 0; e < g.edges.size(); ++e) {
      auto [a, b] = g.edges[e];
      if (a == b) continue;
      first[a].try_emplace(b, e);
      first[b].try_emplace(a, e);
    }
    for (VertexId v = 0; v < p; ++v) {
      for (auto [w, e] : first[v]) {
        moves_[v].push_back({e, w});
        adj_[v] |= bit(w);
      }
      std::sort(moves_[v].begin(), moves_[v].end());
    }
  }

  HamCycleResult run() {
    HamCycleResult res;
    path_ = GraphCycle{{0}, {}};
    bool found = dfs(0, all_but_zero(g_.vertex_count));
    res.nodes = nodes_;
    if (found) {
      res.status = SearchStatus::found;
      res.cycle = path_;
    } else {
      res.status = aborted_ ? SearchStatus::unknown : SearchStatus::none;
    }
    return res;
  }

 private:
  bool dfs(VertexId u, Mask unvisited) {
    if (++nodes_ > control_.budget || control_.cancelled()) {
      aborted_ = true;
      return false;
    }
    if (unvisited == 0) {
      for (auto [e, w] : moves_[u]) {
        if (w == 0) {
          path_.edges.push_back(e);
          return true;
        }
      }
      return false;
    }
    if (!feasible(adj_, unvisited, u, 0)) return false;
    for (auto [e, w] : moves_[u]) {
      if (!(unvisited & bit(w))) continue;
      path_.vertices.push_back(w);
      path_.edges.push_back(e);
      if (dfs(w, unvisited & ~bit(w))) return true;
      path_.vertices.pop_back();
      path_.edges.pop_back();
      if (aborted_) return false;
    }
    return false;
  }

  const Graph& g_;
  const SearchControl& control_;
  std::vector<Mask> adj_;
  std::vector<std::vector<std::pair<EdgeId, VertexId>>> moves_;
  GraphCycle path_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

struct ChordMove {
  Chord chord;  // `from` is the occurrence at the moving vertex
  VertexId to = 0;
};

class ExtensionSearch {
 public:
  ExtensionSearch(const CombEmbedding& emb, const SearchControl& control, std::uint64_t max_chords)
      : emb_(emb), control_(control), max_chords_(max_chords), p_(emb.vertex_count()) {
    require_small(p_);
    faces_ = trace_faces(emb);
    adj_.assign(p_, 0);
    potential_.assign(p_, 0);
    edge_moves_.resize(p_);
    chord_moves_.resize(p_);
    std::vector<std::set<VertexId>> seen(p_);
    for (EdgeId e = 0; e < emb.edge_count(); ++e) {
      auto [a, b] = emb.edge(e);
      if (a == b) continue;
      adj_[a] |= bit(b);
      adj_[b] |= bit(a);
      for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
        // Parallel base edges are interchangeable once p >= 3.
        if (p_ >= 3 && !seen[x].insert(y).second) continue;
        edge_moves_[x].push_back({e, y});
      }
    }
    for (const auto& walk : faces_.walks) {
      const auto len = static_cast<std::uint32_t>(walk.length());
      for (std::uint32_t i = 0; i < len; ++i) {
        for (std::uint32_t j = 0; j < len; ++j) {
          VertexId u = walk.corners[i], w = walk.corners[j];
          if (u == w) continue;
          potential_[u] |= bit(w);
          if (p_ >= 3 && (adj_[u] & bit(w))) continue;
          chord_moves_[u].push_back({Chord{walk.id, i, j}, w});
        }
      }
    }
    for (VertexId v = 0; v < p_; ++v) potential_[v] |= adj_[v];
    chosen_.resize(faces_.size());
  }

  SearchStatus run() {
    if (p_ == 1) {
      // Every edge of a one-vertex map is a loop.
      if (emb_.edge_count() == 0) return SearchStatus::none;
      cert_ = ExtensionCertificate{{}, {0}, {Link{Link::Kind::edge, 0}}};
      return SearchStatus::found;
    }
    cert_.cycle = {0};
    if (dfs(0, all_but_zero(p_))) return SearchStatus::found;
    return aborted_ ? SearchStatus::unknown : SearchStatus::none;
  }

  const ExtensionCertificate& certificate() const { return cert_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  bool blocked(const Chord& c) const {
    for (const auto& x : chosen_[c.face]) {
      if (crossing(x, c)) return true;
    }
    return false;
  }

  bool take_chord(const Chord& c) {
    if (cert_.chords.size() >= max_chords_ || blocked(c)) return false;
    cert_.links.push_back(Link{Link::Kind::chord, static_cast<std::uint32_t>(cert_.chords.size())});
    cert_.chords.push_back(c);
    chosen_[c.face].push_back(c);
    return true;
  }

  void drop_chord() {
    chosen_[cert_.chords.back().face].pop_back();
    cert_.chords.pop_back();
    cert_.links.pop_back();
  }

  bool dfs(VertexId u, Mask unvisited) {
    if (++nodes_ > control_.budget || control_.cancelled()) {
      aborted_ = true;
      return false;
    }
    if (unvisited == 0) {
      for (auto [e, w] : edge_moves_[u]) {
        const Link link{Link::Kind::edge, e};
        if (w == 0 && cert_.links.front() != link) {
          cert_.links.push_back(link);
          return true;
        }
      }
      for (const auto& m : chord_moves_[u]) {
        if (m.to == 0 && take_chord(m.chord)) return true;
      }
      return false;
    }
    if (p_ >= 3 && !feasible(potential_, unvisited, u, 0)) return false;
    auto descend = [&](VertexId w) {
      cert_.cycle.push_back(w);
      if (dfs(w, unvisited & ~bit(w))) return true;
      cert_.cycle.pop_back();
      return false;
    };
    for (auto [e, w] : edge_moves_[u]) {
      if (!(unvisited & bit(w))) continue;
      cert_.links.push_back(Link{Link::Kind::edge, e});
      if (descend(w)) return true;
      cert_.links.pop_back();
      if (aborted_) return false;
    }
    for (const auto& m : chord_moves_[u]) {
      if (!(unvisited & bit(m.to)) || !take_chord(m.chord)) continue;
      if (descend(m.to)) return true;
      drop_chord();
      if (aborted_) return false;
    }
    return false;
  }

  const CombEmbedding& emb_;
  const SearchControl& control_;
  std::uint64_t max_chords_;
  std::size_t p_;
  Faces faces_;
  std::vector<Mask> adj_;
  std::vector<Mask> potential_;
  std::vector<std::vector<std::pair<EdgeId, VertexId>>> edge_moves_;
  std::vector<std::vector<ChordMove>> chord_moves_;
  std::vector<std::vector<Chord>> chosen_;
  ExtensionCertificate cert_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

SearchControl remaining(const SearchControl& control, std::uint64_t used) {
  SearchControl c = control;
  c.budget = used >= control.budget ? 0 : control.budget - used;
  return c;
}

}  // namespace

HamCycleResult hamiltonian_cycle(const Graph& graph, const SearchControl& control) {
  require_small(graph.vertex_count);
  HamCycleResult res;
  const auto p = graph.vertex_count;
  if (p <= 2) {
    res.nodes = 1;
    std::vector<EdgeId> usable;
    for (EdgeId e = 0; e < graph.edges.size(); ++e) {
      const bool loop = graph.edges[e].a == graph.edges[e].b;
      if (loop == (p == 1)) usable.push_back(e);
    }
    if (usable.size() >= p) {
      res.status = SearchStatus::found;
      res.cycle = p == 1 ? GraphCycle{{0}, {usable[0]}} : GraphCycle{{0, 1}, {usable[0], usable[1]}};
    } else {
      res.status = SearchStatus::none;
    }
    return res;
  }
  return CycleSearch(graph, control).run();
}

DeciderOutcome decide_ham_extendable(const CombEmbedding& emb, const SearchControl& control) {
  require_valid(emb);
  ExtensionSearch search(emb, control, std::numeric_limits<std::uint64_t>::max());
  DeciderOutcome out;
  auto status = search.run();
  out.nodes = search.nodes();
  if (status == SearchStatus::found) {
    out.verdict = Verdict::yes;
    out.certificate = search.certificate();
  } else {
    out.verdict = status == SearchStatus::none ? Verdict::no : Verdict::unknown;
  }
  return out;
}

MinEdgesResult min_added_edges(const CombEmbedding& emb, const SearchControl& control) {
  require_valid(emb);
  MinEdgesResult res;
  // A Hamiltonian cycle has p links, so more chords are never needed.
  for (std::uint64_t k = 0; k <= emb.vertex_count(); ++k) {
    ExtensionSearch search(emb, remaining(control, res.nodes), k);
    auto status = search.run();
    res.nodes += search.nodes();
    if (status == SearchStatus::unknown) {
      res.status = SearchStatus::unknown;
      return res;
    }
    if (status == SearchStatus::found) {
      res.status = SearchStatus::found;
      res.min_edges = static_cast<std::uint32_t>(search.certificate().chords.size());
      res.certificate = search.certificate();
      return res;
    }
  }
  res.status = SearchStatus::none;
  return res;
}

CertificateReport verify_certificate(const CombEmbedding& emb, const ExtensionCertificate& cert) {
  CertificateReport rep;
  auto fail = [&](std::string why) {
    rep.problems.push_back(std::move(why));
    return rep;
  };
  auto v = validate(emb);
  if (!v.ok()) return fail("embedding invalid: " + v.summary());
  const Faces faces = trace_faces(emb);
  for (std::size_t k = 0; k < cert.chords.size(); ++k) {
    const auto& c = cert.chords[k];
    if (c.face >= faces.size()) return fail("chord " + std::to_string(k) + " names a missing region");
    const auto& walk = faces[c.face];
    if (c.from >= walk.length() || c.to >= walk.length()) {
      return fail("chord " + std::to_string(k) + " names a missing corner");
    }
    if (walk.corners[c.from] == walk.corners[c.to]) return fail("chord " + std::to_string(k) + " is a loop");
  }
  for (std::size_t x = 0; x < cert.chords.size(); ++x) {
    for (std::size_t y = x + 1; y < cert.chords.size(); ++y) {
      const auto &c = cert.chords[x], &d = cert.chords[y];
      if (c.face != d.face) continue;
      auto lo = std::min(c.from, c.to), hi = std::max(c.from, c.to);
      if (d.from == lo || d.from == hi || d.to == lo || d.to == hi) continue;
      const bool in1 = lo < d.from && d.from < hi, in2 = lo < d.to && d.to < hi;
      if (in1 != in2) rep.problems.push_back("chords " + std::to_string(x) + " and " + std::to_string(y) + " cross");
    }
  }
  if (!rep.problems.empty()) return rep;
  const CombEmbedding realized = realize_chords_unchecked(emb, cert.chords);
  if (stats(realized).genus != stats(emb).genus) return fail("drawing the chords changes the genus");

  const std::size_t p = emb.vertex_count();
  if (cert.cycle.size() != p || cert.links.size() != p) return fail("cycle does not have p vertices and p links");
  std::set<VertexId> seen;
  for (VertexId w : cert.cycle) {
    if (w >= p || !seen.insert(w).second) return fail("cycle repeats or leaves the vertex set at " + std::to_string(w));
  }
  std::set<EdgeId> used;
  for (std::size_t k = 0; k < p; ++k) {
    const auto& link = cert.links[k];
    EdgeId g = link.id;
    if (link.kind == Link::Kind::edge) {
      if (g >= emb.edge_count()) return fail("link " + std::to_string(k) + " names a missing edge");
    } else {
      if (g >= cert.chords.size()) return fail("link " + std::to_string(k) + " names a missing chord");
      g += static_cast<EdgeId>(emb.edge_count());
    }
    const VertexId u = cert.cycle[k], w = cert.cycle[(k + 1) % p];
    const auto& ends = realized.edge(g);
    if (!((ends.a == u && ends.b == w) || (ends.a == w && ends.b == u))) {
      return fail("link " + std::to_string(k) + " does not join " + std::to_string(u) + " and " + std::to_string(w));
    }
    if (!used.insert(g).second) return fail("link " + std::to_string(k) + " reuses an edge");
  }
  rep.ok = true;
  return rep;
}

OracleOutcome oracle_decide_with_added_vertices(const CombEmbedding& emb, std::uint32_t max_per_face,
                                                const SearchControl& control) {
  require_valid(emb);
  const std::size_t p = emb.vertex_count();
  require_small(p);
  const auto q = static_cast<EdgeId>(emb.edge_count());
  const std::int64_t genus = stats(emb).genus;
  const Faces faces = trace_faces(emb);
  const Graph base = emb.graph();
  OracleOutcome out;
  auto out_of_budget = [&] { return out.nodes > control.budget || control.cancelled(); };

  // Relaxation: every excursion through added material joins two vertices
  // of one region.
  Graph relaxed = base;
  for (const auto& walk : faces.walks) {
    std::set<VertexId> on(walk.corners.begin(), walk.corners.end());
    for (auto x = on.begin(); x != on.end(); ++x)
      for (auto y = std::next(x); y != on.end(); ++y) relaxed.edges.push_back({*x, *y});
  }
  auto relax = hamiltonian_cycle(relaxed, control);
  out.nodes += relax.nodes;
  if (relax.status == SearchStatus::unknown) return out;
  if (relax.status == SearchStatus::none) {
    out.verdict = Verdict::no;
    out.relaxation = true;
    return out;
  }

  std::vector<Chord> slots;
  std::vector<std::pair<VertexId, VertexId>> slot_ends;
  for (const auto& walk : faces.walks) {
    const auto len = static_cast<std::uint32_t>(walk.length());
    for (std::uint32_t i = 0; i < len; ++i) {
      for (std::uint32_t j = i + 1; j < len; ++j) {
        if (walk.corners[i] == walk.corners[j]) continue;
        slots.push_back(Chord{walk.id, i, j});
        slot_ends.push_back({walk.corners[i], walk.corners[j]});
      }
    }
  }

  std::vector<std::uint32_t> per_face(faces.size(), 0), ends(p, 0);
  std::vector<std::size_t> pick;
  bool aborted = false;

  auto test = [&]() -> bool {
    ++out.extensions_tried;
    ++out.nodes;
    Graph g = base;
    g.vertex_count = p + pick.size();
    for (std::size_t s = 0; s < pick.size(); ++s) {
      const auto w = static_cast<VertexId>(p + s);
      g.edges.push_back({slot_ends[pick[s]].first, w});
      g.edges.push_back({w, slot_ends[pick[s]].second});
    }
    if (g.vertex_count > 64) return false;
    auto hc = hamiltonian_cycle(g, remaining(control, out.nodes));
    out.nodes += hc.nodes;
    if (hc.status == SearchStatus::unknown) {
      aborted = true;
      return false;
    }
    if (hc.status == SearchStatus::none) return false;
    std::vector<Chord> chords;
    for (auto s : pick) chords.push_back(slots[s]);
    CombEmbedding ext = realize_chords_unchecked(emb, chords);
    for (EdgeId s = 0; s < chords.size(); ++s) ext = subdivide_edge(ext, q + s, 1);
    if (stats(ext).genus != genus) return false;

    ExtensionCertificate cert;
    cert.chords = chords;
    const auto& cyc = *hc.cycle;
    const std::size_t n = cyc.length();
    for (std::size_t k = 0; k < n; ++k) {
      if (cyc.vertices[k] >= p) continue;
      cert.cycle.push_back(cyc.vertices[k]);
      const VertexId next = cyc.vertices[(k + 1) % n];
      if (next < p) {
        cert.links.push_back(Link{Link::Kind::edge, cyc.edges[k]});
      } else {
        cert.links.push_back(Link{Link::Kind::chord, static_cast<std::uint32_t>(next - p)});
      }
    }
    out.certificate = std::move(cert);
    out.extension = std::move(ext);
    return true;
  };

  auto extend = [&](auto&& self, std::size_t from, std::size_t left) -> bool {
    if (left == 0) return test();
    for (std::size_t s = from; s < slots.size(); ++s) {
      if (aborted || out_of_budget()) {
        aborted = true;
        return false;
      }
      const auto [u, w] = slot_ends[s];
      const FaceId f = slots[s].face;
      if (per_face[f] >= max_per_face || ends[u] >= 2 || ends[w] >= 2) continue;
      ++per_face[f], ++ends[u], ++ends[w];
      pick.push_back(s);
      bool hit = self(self, s, left - 1);
      pick.pop_back();
      --per_face[f], --ends[u], --ends[w];
      if (hit) return true;
    }
    return false;
  };

  for (std::size_t total = 0; total <= p; ++total) {
    if (extend(extend, 0, total)) {
      out.verdict = Verdict::yes;
      return out;
    }
    if (aborted) return out;
  }
  bool covers = true;
  for (const auto& walk : faces.walks) {
    std::set<VertexId> on(walk.corners.begin(), walk.corners.end());
    covers = covers && on.size() <= max_per_face;
  }
  if (covers) out.verdict = Verdict::no;
  return out;
}

}  // namespace hamext
