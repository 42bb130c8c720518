#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "hamext/embedding.hpp"

namespace hamext {

/// Builds a rotation system from oriented polygons: every edge {u,w} must
/// occur once as u->w and once as w->u. Edges are numbered in order of first
/// appearance, oriented as first traversed.
CombEmbedding from_oriented_faces(std::size_t vertex_count, std::span<const std::vector<VertexId>> faces);

/// n-cycle on the sphere (n >= 1; n = 1 is a loop, n = 2 a digon).
/// p = n, q = n, r = 2. Edge i runs from i to i+1 mod n.
CombEmbedding cycle_on_sphere(std::uint32_t n);

/// m x n quadrangulation of the torus; p = mn, q = 2mn, r = mn.
/// Vertex (i,j) has id i*n+j; edge 2(i*n+j) runs east to (i,j+1), edge
/// 2(i*n+j)+1 runs north to (i+1,j).
CombEmbedding grid_on_torus(std::uint32_t m, std::uint32_t n);

/// Edges of row i of grid_on_torus(m, n), as a cycle.
GraphCycle grid_row_cycle(std::uint32_t m, std::uint32_t n, std::uint32_t row);

/// Planar theta graph: hubs 0 and 1 joined through middles 2, 3, 4
/// (K_{2,3}); p = 5, q = 6, r = 3.
CombEmbedding theta_graph();

/// Q_d as an abstract graph (no embedding is constructed).
Graph hypercube_graph(std::uint32_t d);

Graph petersen_graph();

CombEmbedding icosahedron();

/// Triangle C = (0,1,2) whose outer face is stellated once (vertex 3) and
/// whose inner face is stellated `levels` times, each level stellating every
/// triangle produced by the previous one. For levels = 2:
/// p = 8, q = 18, r = 12, and the inside of C holds 9 regions and 7 vertices.
struct StellatedHost {
  CombEmbedding embedding;
  GraphCycle triangle;
  std::vector<FaceId> inner_faces;  // faces inside the triangle
};
StellatedHost triangle_host_with_stellations(std::uint32_t levels);

/// Random connected multigraph: a random spanning tree plus extra edges.
/// Loops and parallel edges appear only when allowed.
Graph random_connected_graph(std::uint32_t p, std::uint32_t q, std::mt19937_64& rng, bool allow_multi = false);

/// Random genus-0 embedding grown from a triangle by random in-face edits.
CombEmbedding random_planar_embedding(std::uint32_t target_vertices, std::mt19937_64& rng);

}  // namespace hamext
