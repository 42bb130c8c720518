#pragma once

#include <map>
#include <string>
#include <vector>

#include "hamext/embedding.hpp"

namespace hamext {

/// Correspondence between a base embedding and an extended one. Each base
/// edge maps to a path of extended edges running from the image of its `a`
/// end to the image of its `b` end; a plain extension has paths of length 1.
/// For a loop image the dart orientation is taken to be preserved.
struct ExtensionMap {
  CombEmbedding extended;
  std::vector<VertexId> vertex_map;
  std::vector<std::vector<EdgeId>> edge_paths;

  static ExtensionMap identity_prefix(const CombEmbedding& base, CombEmbedding extended);
};

struct ExtensionReport {
  bool ok = false;
  std::vector<std::string> problems;
  /// Base face containing each added vertex of the extended embedding.
  std::map<VertexId, FaceId> region_of_added_vertex;
  /// Base face containing each added edge.
  std::map<EdgeId, FaceId> region_of_added_edge;
};

/// Checks that `map.extended` restricts to `base`: rotations of image darts
/// reproduce the base rotations, the surface genus is unchanged, and every
/// connected piece of added material attaches inside a single base region.
ExtensionReport is_extension(const CombEmbedding& base, const ExtensionMap& map);

/// As is_extension, but edge paths may be longer than one edge: the marked
/// subdivision of the base is rebuilt with subdivide_edge and checked as a
/// plain extension. Path-interior vertices must be fresh and unshared.
ExtensionReport is_topological_extension(const CombEmbedding& base, const ExtensionMap& map);

/// Removes the added material of a plain extension and returns the induced
/// embedding of the image, relabelled to base ids.
CombEmbedding restrict_to_base(const CombEmbedding& base, const ExtensionMap& map);

}  // namespace hamext
