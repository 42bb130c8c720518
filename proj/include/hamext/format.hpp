#pragma once

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hamext/embedding.hpp"
#include "hamext/extension.hpp"

namespace hamext {

/// Text form of an embedding plus optional named cycles and extension maps.
/// See docs/embedding-format.md for the grammar.
struct EmbeddingDocument {
  CombEmbedding embedding;
  std::map<std::string, GraphCycle> cycles;
  std::map<std::string, ExtensionMap> extensions;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message, const std::string& source = "");
  std::size_t line;
  std::size_t column;
  std::string message;
};

/// Throws ParseError (1-based line and column) on malformed text and on
/// input that does not describe a valid embedding.
EmbeddingDocument parse_document(std::string_view text);
EmbeddingDocument read_document(const std::filesystem::path& path);

/// Canonical text: edges by id, rotations by vertex starting at the least
/// dart, cycles and extensions by name. Loop darts in cycles use the `a` end.
std::string serialize(const EmbeddingDocument& doc);
std::string serialize(const CombEmbedding& emb);

/// Dart tokens as used in the text form: edge id followed by `a` or `b`.
std::string dart_token(Dart d);

}  // namespace hamext
