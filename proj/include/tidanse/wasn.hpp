#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tidanse/rng.hpp"
#include "tidanse/types.hpp"

namespace tidanse::wasn {

struct Edge {
  int a = 0;
  int b = 0;
  double weight = 1.0;
};

// Undirected connected graph over the nodes. Edges are stored with a < b.
struct Topology {
  int num_nodes = 0;
  std::vector<Edge> edges;

  void validate() const;  // connectivity, self-loops, finite weights
  bool connected() const;
};

// Spanning tree with a designated root for gather/flood.
struct Tree {
  int root = 0;
  std::vector<int> parent;                 // -1 for the root
  std::vector<std::vector<int>> children;  // sorted by node index
  std::vector<int> depth;                  // hops from the root

  int num_nodes() const { return static_cast<int>(parent.size()); }
};

Topology topology_from_edges(int num_nodes, std::vector<Edge> edges);

// Random connected graph: a random spanning tree plus each remaining pair
// with the given probability. Weights are uniform in (0, 1).
Topology random_topology(int num_nodes, double edge_density, RngStream& rng);

// Re-draws every edge weight uniformly in (0, 1); the edge set is kept.
void randomize_weights(Topology& topo, RngStream& rng);

// Minimum-weight spanning tree grown from the root with Prim's algorithm.
// Weight ties resolve to the lowest new-node index, then the lowest
// in-tree endpoint, so the result is deterministic.
Tree prune_tree(const Topology& topo, int root);

// In-network summation: post-order partial sums from the leaves toward the
// root. partial[k] is the sum of node k's subtree, so partial[root] is the
// network-wide total.
struct GatherResult {
  CMat total;
  std::vector<CMat> partial;
};
GatherResult gather_partial_sums(const Tree& tree, const std::vector<CMat>& z);
CMat gather_sum(const Tree& tree, const std::vector<CMat>& z);

// Root-to-leaf broadcast; every node receives an identical copy and the
// hop count equals its tree depth.
struct FloodResult {
  std::vector<CMat> payload;
  std::vector<int> hops;
};
FloodResult flood(const Tree& tree, const CMat& payload);

// Per-node observation vector: local sensors stacked over the in-network
// sum with the node's own contribution removed.
CMat build_observation(const CMat& y_k, const CMat& eta, const CMat& z_k);

}  // namespace tidanse::wasn
