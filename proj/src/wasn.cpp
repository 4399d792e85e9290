#include "tidanse/wasn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "tidanse/errors.hpp"

namespace tidanse::wasn {

namespace {

std::vector<std::vector<std::pair<int, double>>> adjacency(const Topology& topo) {
  std::vector<std::vector<std::pair<int, double>>> adj(static_cast<size_t>(topo.num_nodes));
  for (const Edge& e : topo.edges) {
    adj[static_cast<size_t>(e.a)].emplace_back(e.b, e.weight);
    adj[static_cast<size_t>(e.b)].emplace_back(e.a, e.weight);
  }
  return adj;
}

}  // namespace

void Topology::validate() const {
  if (num_nodes < 1) throw InvalidConfig("topology needs at least one node");
  for (const Edge& e : edges) {
    if (e.a == e.b) throw InvalidConfig("topology contains a self-loop");
    if (e.a < 0 || e.b < 0 || e.a >= num_nodes || e.b >= num_nodes)
      throw InvalidConfig("topology edge endpoint out of range");
    if (!std::isfinite(e.weight)) throw InvalidConfig("topology edge weight is not finite");
  }
  if (!connected()) throw DisconnectedGraph("topology is not connected");
}

bool Topology::connected() const {
  if (num_nodes <= 1) return true;
  const auto adj = adjacency(*this);
  std::vector<bool> seen(static_cast<size_t>(num_nodes), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (const auto& [w, _] : adj[static_cast<size_t>(v)]) {
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == num_nodes;
}

Topology topology_from_edges(int num_nodes, std::vector<Edge> edges) {
  Topology topo;
  topo.num_nodes = num_nodes;
  for (Edge& e : edges) {
    if (e.a > e.b) std::swap(e.a, e.b);
  }
  topo.edges = std::move(edges);
  topo.validate();
  return topo;
}

Topology random_topology(int num_nodes, double edge_density, RngStream& rng) {
  if (num_nodes < 1) throw InvalidConfig("topology needs at least one node");
  if (edge_density < 0.0 || edge_density > 1.0)
    throw InvalidConfig("edge_density must lie in [0, 1]");

  std::vector<Edge> edges;
  std::vector<std::vector<bool>> present(
      static_cast<size_t>(num_nodes), std::vector<bool>(static_cast<size_t>(num_nodes), false));

  // Random spanning tree first: attach each node to a uniformly chosen
  // earlier node, after a seeded shuffle of the attachment order.
  std::vector<int> order(static_cast<size_t>(num_nodes));
  std::iota(order.begin(), order.end(), 0);
  for (int i = num_nodes - 1; i > 0; --i) {
    const int j = static_cast<int>(rng.uniform01() * (i + 1));
    std::swap(order[static_cast<size_t>(i)], order[static_cast<size_t>(std::min(j, i))]);
  }
  for (int i = 1; i < num_nodes; ++i) {
    const int j = static_cast<int>(rng.uniform01() * i);
    const int a = order[static_cast<size_t>(std::min(j, i - 1))];
    const int b = order[static_cast<size_t>(i)];
    edges.push_back(Edge{std::min(a, b), std::max(a, b), rng.uniform(0.0, 1.0)});
    present[static_cast<size_t>(std::min(a, b))][static_cast<size_t>(std::max(a, b))] = true;
  }
  for (int a = 0; a < num_nodes; ++a)
    for (int b = a + 1; b < num_nodes; ++b) {
      if (present[static_cast<size_t>(a)][static_cast<size_t>(b)]) continue;
      if (rng.bernoulli(edge_density))
        edges.push_back(Edge{a, b, rng.uniform(0.0, 1.0)});
    }
  return topology_from_edges(num_nodes, std::move(edges));
}

void randomize_weights(Topology& topo, RngStream& rng) {
  for (Edge& e : topo.edges) e.weight = rng.uniform(0.0, 1.0);
}

Tree prune_tree(const Topology& topo, int root) {
  topo.validate();
  if (root < 0 || root >= topo.num_nodes) throw InvalidConfig("prune_tree: root out of range");

  const int n = topo.num_nodes;
  const auto adj = adjacency(topo);

  Tree tree;
  tree.root = root;
  tree.parent.assign(static_cast<size_t>(n), -1);
  tree.children.resize(static_cast<size_t>(n));
  tree.depth.assign(static_cast<size_t>(n), 0);

  std::vector<bool> in_tree(static_cast<size_t>(n), false);
  in_tree[static_cast<size_t>(root)] = true;

  for (int added = 1; added < n; ++added) {
    double best_w = std::numeric_limits<double>::infinity();
    int best_new = -1;
    int best_link = -1;
    for (int v = 0; v < n; ++v) {
      if (!in_tree[static_cast<size_t>(v)]) continue;
      for (const auto& [w, weight] : adj[static_cast<size_t>(v)]) {
        if (in_tree[static_cast<size_t>(w)]) continue;
        const bool better = weight < best_w ||
                            (weight == best_w && (w < best_new || (w == best_new && v < best_link)));
        if (better) {
          best_w = weight;
          best_new = w;
          best_link = v;
        }
      }
    }
    in_tree[static_cast<size_t>(best_new)] = true;
    tree.parent[static_cast<size_t>(best_new)] = best_link;
    tree.depth[static_cast<size_t>(best_new)] = tree.depth[static_cast<size_t>(best_link)] + 1;
  }
  for (int v = 0; v < n; ++v)
    if (v != root) tree.children[static_cast<size_t>(tree.parent[static_cast<size_t>(v)])].push_back(v);
  for (auto& c : tree.children) std::sort(c.begin(), c.end());
  return tree;
}

GatherResult gather_partial_sums(const Tree& tree, const std::vector<CMat>& z) {
  const int n = tree.num_nodes();
  if (static_cast<int>(z.size()) != n) throw ShapeMismatch("gather_sum: one signal per node required");
  for (const CMat& m : z)
    if (m.rows() != z[0].rows() || m.cols() != z[0].cols())
      throw ShapeMismatch("gather_sum: fused signals differ in shape");

  GatherResult out;
  out.partial.assign(static_cast<size_t>(n), CMat());

  // Children are deeper than their parents, so accumulating nodes in
  // decreasing depth order visits every child before its parent.
  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return tree.depth[static_cast<size_t>(a)] > tree.depth[static_cast<size_t>(b)];
  });
  for (int v : order) {
    CMat acc = z[static_cast<size_t>(v)];
    for (int c : tree.children[static_cast<size_t>(v)]) acc += out.partial[static_cast<size_t>(c)];
    out.partial[static_cast<size_t>(v)] = std::move(acc);
  }
  out.total = out.partial[static_cast<size_t>(tree.root)];
  return out;
}

CMat gather_sum(const Tree& tree, const std::vector<CMat>& z) {
  return gather_partial_sums(tree, z).total;
}

FloodResult flood(const Tree& tree, const CMat& payload) {
  FloodResult out;
  out.payload.assign(static_cast<size_t>(tree.num_nodes()), payload);
  out.hops = tree.depth;
  return out;
}

CMat build_observation(const CMat& y_k, const CMat& eta, const CMat& z_k) {
  if (eta.rows() != z_k.rows() || eta.cols() != z_k.cols() || y_k.cols() != eta.cols())
    throw ShapeMismatch("build_observation: shapes disagree");
  CMat obs(y_k.rows() + eta.rows(), y_k.cols());
  obs.topRows(y_k.rows()) = y_k;
  obs.bottomRows(eta.rows()) = eta - z_k;
  return obs;
}

}  // namespace tidanse::wasn
