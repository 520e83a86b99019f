#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "smale/order.hpp"

namespace smale {

// Plain undirected multigraph; loops are edges with equal endpoints.
struct Multigraph {
  std::size_t vertex_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

// Isomorphism respecting loops and edge multiplicities.
bool isomorphic(const Multigraph& a, const Multigraph& b);

struct LevelEdge {
  ElementId saddle{};
  std::size_t u = 0;  // indices into LevelGraph::vertices
  std::size_t v = 0;
};

struct LevelGraph {
  std::vector<ElementId> vertices;
  std::vector<LevelEdge> edges;

  Multigraph shape() const;
  bool connected() const;
};

struct LevelGraphs {
  LevelGraph highest;
  LevelGraph lowest;
};

// Throws NotGradientShape unless every saddle is first-generation with at
// most two maximal and two minimal relatives.
LevelGraphs level_graphs(const FiniteOrder& order);

// Edge e has darts 2e (at its first endpoint) and 2e + 1; the involution
// swaps them. rotation[v] is the cyclic order of darts around vertex v.
struct RotationSystem {
  std::vector<std::vector<std::size_t>> rotation;

  bool operator==(const RotationSystem&) const = default;
};

struct Embedding {
  RotationSystem rotation;
  std::size_t genus = 0;
  // Face boundary walks as dart sequences.
  std::vector<std::vector<std::size_t>> faces;
};

struct EnumerationOptions {
  std::size_t max_genus = 0;
  // Worker threads; the result is identical for every value.
  std::size_t threads = 1;
};

// Face index of every dart for the given embedding.
std::vector<std::size_t> face_of_dart(const Embedding& embedding, std::size_t dart_count);

// All rotation systems in lexicographic order of the per-vertex permutations,
// filtered to genus <= max_genus. Throws DisconnectedGraph.
std::vector<Embedding> enumerate_embeddings(const LevelGraph& graph, const EnumerationOptions& options);

// Number of rotation systems: product of (deg - 1)!.
std::size_t rotation_system_count(const LevelGraph& graph);

// Dual multigraph: one vertex per face, one edge per primal edge.
Multigraph dual_graph(const LevelGraph& graph, const Embedding& embedding);

// Dual of the dual, computed on the dual map with its induced rotation.
Multigraph dual_of_dual(const LevelGraph& graph, const Embedding& embedding);

struct GradientWitness {
  Embedding embedding;
  Multigraph dual;
  // Face i of the embedding holds lowest.vertices[face_to_vertex[i]].
  std::vector<std::size_t> face_to_vertex;
};

struct GradientVerdict {
  bool realizable = false;
  std::size_t max_genus = 0;
  std::size_t examined = 0;
  LevelGraphs graphs;
  std::optional<GradientWitness> witness;
};

// max_genus defaults to the number of edges of the highest graph.
GradientVerdict check_gradient_like(const FiniteOrder& order, std::optional<std::size_t> max_genus = std::nullopt,
                                    std::size_t threads = 1);

}  // namespace smale
