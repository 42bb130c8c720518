#include "hamext/format.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "hamext/klee.hpp"

namespace hamext {

ParseError::ParseError(std::size_t line_, std::size_t column_, const std::string& message_, const std::string& source)
    : std::runtime_error((source.empty() ? "" : source + ":") + std::to_string(line_) + ":" + std::to_string(column_) + ": " + message_),
      line(line_),
      column(column_),
      message(message_) {}

namespace {

constexpr std::string_view kHeader = "hamext-embedding";
constexpr int kVersion = 1;

struct Token {
  std::string_view text;
  std::size_t column = 0;
};

struct Line {
  std::size_t number = 0;
  std::vector<Token> tokens;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      if (std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      if (raw[i] == ':') {
        j = i + 1;
      } else {
        while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j])) && raw[j] != ':') ++j;
      }
      line.tokens.push_back({raw.substr(i, j - i), i + 1});
      i = j;
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : lines_(split_lines(text)) {}

  EmbeddingDocument document() {
    if (lines_.empty()) throw ParseError(1, 1, "empty input");
    const Line& head = lines_[0];
    if (head.tokens[0].text != kHeader) fail(head, 0, "expected '" + std::string(kHeader) + "'");
    expect_count(head, 2);
    if (number(head, 1) != kVersion) fail(head, 1, "unsupported format version");
    ++pos_;

    EmbeddingDocument doc;
    std::size_t anchor = pos_ < lines_.size() ? lines_[pos_].number : head.number + 1;
    doc.embedding = embedding_block();
    auto report = validate(doc.embedding);
    if (!report.ok()) throw ParseError(anchor, 1, "invalid embedding: " + report.summary());

    while (pos_ < lines_.size()) {
      const Line& line = lines_[pos_];
      auto keyword = line.tokens[0].text;
      if (keyword == "cycle") {
        auto name = take_name(line, 1);
        if (doc.cycles.contains(name)) fail(line, 1, "duplicate cycle '" + name + "'");
        doc.cycles.emplace(name, cycle(line, doc.embedding));
        ++pos_;
      } else if (keyword == "extension") {
        expect_count(line, 2);
        auto name = take_name(line, 1);
        if (doc.extensions.contains(name)) fail(line, 1, "duplicate extension '" + name + "'");
        ++pos_;
        doc.extensions.emplace(name, extension(line, doc.embedding));
      } else {
        fail(line, 0, "expected 'cycle' or 'extension'");
      }
    }
    return doc;
  }

 private:
  [[noreturn]] static void fail(const Line& line, std::size_t token, const std::string& message) {
    std::size_t column = token < line.tokens.size() ? line.tokens[token].column
                                                    : line.tokens.back().column + line.tokens.back().text.size();
    throw ParseError(line.number, column, message);
  }

  static void expect_count(const Line& line, std::size_t count) {
    if (line.tokens.size() < count) fail(line, line.tokens.size(), "missing field");
    if (line.tokens.size() > count) fail(line, count, "unexpected token");
  }

  static std::uint32_t parse_uint(std::string_view s, const Line& line, std::size_t token) {
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) fail(line, token, "expected a number");
    return value;
  }

  static std::uint32_t number(const Line& line, std::size_t token) {
    if (token >= line.tokens.size()) fail(line, token, "missing number");
    return parse_uint(line.tokens[token].text, line, token);
  }

  static Dart dart(const Line& line, std::size_t token, std::size_t edge_count) {
    auto text = line.tokens[token].text;
    if (text.size() < 2 || (text.back() != 'a' && text.back() != 'b')) fail(line, token, "expected a dart like 3a");
    auto e = parse_uint(text.substr(0, text.size() - 1), line, token);
    if (e >= edge_count) fail(line, token, "unknown edge " + std::to_string(e));
    return text.back() == 'a' ? a_dart(e) : b_dart(e);
  }

  static void expect_colon(const Line& line, std::size_t token) {
    if (token >= line.tokens.size() || line.tokens[token].text != ":") fail(line, token, "expected ':'");
  }

  static std::string take_name(const Line& line, std::size_t token) {
    if (token >= line.tokens.size()) fail(line, token, "missing name");
    auto text = line.tokens[token].text;
    bool ok = std::isalpha(static_cast<unsigned char>(text[0])) || text[0] == '_';
    for (char c : text) ok = ok && (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.');
    if (!ok) fail(line, token, "bad name");
    return std::string(text);
  }

  const Line& current(std::string_view what) {
    if (pos_ >= lines_.size()) {
      std::size_t last = lines_.empty() ? 1 : lines_.back().number;
      throw ParseError(last + 1, 1, "expected '" + std::string(what) + "' before end of input");
    }
    return lines_[pos_];
  }

  CombEmbedding embedding_block() {
    const Line& vline = current("vertices");
    if (vline.tokens[0].text != "vertices") fail(vline, 0, "expected 'vertices'");
    expect_count(vline, 2);
    const auto p = number(vline, 1);
    ++pos_;

    std::vector<EdgeEnds> edges;
    while (pos_ < lines_.size() && lines_[pos_].tokens[0].text == "edge") {
      const Line& line = lines_[pos_];
      expect_count(line, 4);
      if (number(line, 1) != edges.size())
        fail(line, 1, "expected edge id " + std::to_string(edges.size()));
      EdgeEnds ends{number(line, 2), number(line, 3)};
      if (ends.a >= p) fail(line, 2, "vertex out of range");
      if (ends.b >= p) fail(line, 3, "vertex out of range");
      edges.push_back(ends);
      ++pos_;
    }

    std::vector<std::vector<Dart>> rotations(p);
    std::vector<bool> seen(p, false);
    std::vector<std::size_t> dart_line(2 * edges.size(), 0);
    std::size_t count = 0;
    while (pos_ < lines_.size() && lines_[pos_].tokens[0].text == "rotation") {
      const Line& line = lines_[pos_];
      auto v = number(line, 1);
      if (v >= p) fail(line, 1, "vertex out of range");
      if (seen[v]) fail(line, 1, "second rotation for vertex " + std::to_string(v));
      seen[v] = true;
      ++count;
      expect_colon(line, 2);
      for (std::size_t t = 3; t < line.tokens.size(); ++t) {
        Dart d = dart(line, t, edges.size());
        const auto& ends = edges[edge_of(d)];
        if ((is_b_end(d) ? ends.b : ends.a) != v) fail(line, t, "dart does not start at vertex " + std::to_string(v));
        if (dart_line[d] != 0) fail(line, t, "dart already listed on line " + std::to_string(dart_line[d]));
        dart_line[d] = line.number;
        rotations[v].push_back(d);
      }
      ++pos_;
    }
    if (count != p) {
      VertexId missing = static_cast<VertexId>(std::find(seen.begin(), seen.end(), false) - seen.begin());
      const Line& at = pos_ < lines_.size() ? lines_[pos_] : lines_.back();
      fail(at, 0, "no rotation for vertex " + std::to_string(missing));
    }
    for (Dart d = 0; d < dart_line.size(); ++d) {
      if (dart_line[d] == 0) {
        const Line& at = pos_ < lines_.size() ? lines_[pos_] : lines_.back();
        fail(at, 0, "dart " + dart_token(d) + " missing from every rotation");
      }
    }
    return CombEmbedding(std::move(edges), std::move(rotations));
  }

  GraphCycle cycle(const Line& line, const CombEmbedding& emb) {
    expect_colon(line, 2);
    if (line.tokens.size() < 4) fail(line, 3, "empty cycle");
    GraphCycle c;
    std::vector<Dart> darts;
    for (std::size_t t = 3; t < line.tokens.size(); ++t) {
      Dart d = dart(line, t, emb.edge_count());
      if (!darts.empty() && emb.head(darts.back()) != emb.vertex_of(d)) fail(line, t, "dart does not continue the cycle");
      darts.push_back(d);
      c.vertices.push_back(emb.vertex_of(d));
      c.edges.push_back(edge_of(d));
    }
    if (emb.head(darts.back()) != emb.vertex_of(darts.front())) fail(line, line.tokens.size() - 1, "cycle is not closed");
    try {
      require_simple_cycle(emb, c);
    } catch (const std::invalid_argument& e) {
      fail(line, 1, e.what());
    }
    return c;
  }

  ExtensionMap extension(const Line& head, const CombEmbedding& base) {
    ExtensionMap map;
    map.extended = embedding_block();
    auto report = validate(map.extended);
    if (!report.ok()) fail(head, 1, "invalid extended embedding: " + report.summary());

    const Line& vm = current("vertex-map");
    if (vm.tokens[0].text != "vertex-map") fail(vm, 0, "expected 'vertex-map'");
    expect_colon(vm, 1);
    if (vm.tokens.size() - 2 != base.vertex_count()) fail(vm, vm.tokens.size(), "vertex-map needs one entry per base vertex");
    for (std::size_t t = 2; t < vm.tokens.size(); ++t) {
      auto v = number(vm, t);
      if (v >= map.extended.vertex_count()) fail(vm, t, "vertex out of range");
      map.vertex_map.push_back(v);
    }
    ++pos_;
    while (pos_ < lines_.size() && lines_[pos_].tokens[0].text == "path") {
      const Line& line = lines_[pos_];
      if (number(line, 1) != map.edge_paths.size())
        fail(line, 1, "expected path for edge " + std::to_string(map.edge_paths.size()));
      expect_colon(line, 2);
      if (line.tokens.size() < 4) fail(line, 3, "empty path");
      std::vector<EdgeId> path;
      for (std::size_t t = 3; t < line.tokens.size(); ++t) {
        auto e = number(line, t);
        if (e >= map.extended.edge_count()) fail(line, t, "edge out of range");
        path.push_back(e);
      }
      map.edge_paths.push_back(std::move(path));
      ++pos_;
    }
    if (map.edge_paths.size() != base.edge_count()) {
      const Line& at = current("path");
      fail(at, 0, "expected path for edge " + std::to_string(map.edge_paths.size()));
    }
    const Line& end = current("end");
    if (end.tokens[0].text != "end") fail(end, 0, "expected 'end'");
    expect_count(end, 1);
    ++pos_;
    return map;
  }

  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

void write_embedding(std::ostringstream& out, const CombEmbedding& emb, std::string_view indent) {
  out << indent << "vertices " << emb.vertex_count() << '\n';
  for (EdgeId e = 0; e < emb.edge_count(); ++e)
    out << indent << "edge " << e << ' ' << emb.edge(e).a << ' ' << emb.edge(e).b << '\n';
  for (VertexId v = 0; v < emb.vertex_count(); ++v) {
    out << indent << "rotation " << v << " :";
    for (Dart d : emb.rotation(v)) out << ' ' << dart_token(d);
    out << '\n';
  }
}

}  // namespace

std::string dart_token(Dart d) { return std::to_string(edge_of(d)) + (is_b_end(d) ? "b" : "a"); }

EmbeddingDocument parse_document(std::string_view text) { return Parser(text).document(); }

EmbeddingDocument read_document(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_document(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(e.line, e.column, e.message, path.string());
  }
}

std::string serialize(const EmbeddingDocument& doc) {
  std::ostringstream out;
  out << kHeader << ' ' << kVersion << '\n';
  write_embedding(out, doc.embedding, "");
  for (const auto& [name, c] : doc.cycles) {
    out << "cycle " << name << " :";
    for (std::size_t k = 0; k < c.length(); ++k) {
      const auto& ends = doc.embedding.edge(c.edges[k]);
      out << ' ' << dart_token(ends.a == c.vertices[k] ? a_dart(c.edges[k]) : b_dart(c.edges[k]));
    }
    out << '\n';
  }
  for (const auto& [name, map] : doc.extensions) {
    out << "extension " << name << '\n';
    write_embedding(out, map.extended, "  ");
    out << "  vertex-map :";
    for (VertexId v : map.vertex_map) out << ' ' << v;
    out << '\n';
    for (EdgeId e = 0; e < map.edge_paths.size(); ++e) {
      out << "  path " << e << " :";
      for (EdgeId x : map.edge_paths[e]) out << ' ' << x;
      out << '\n';
    }
    out << "end\n";
  }
  return out.str();
}

std::string serialize(const CombEmbedding& emb) { return serialize(EmbeddingDocument{emb, {}, {}}); }

}  // namespace hamext
