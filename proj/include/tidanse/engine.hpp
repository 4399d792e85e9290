#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tidanse/covariance.hpp"
#include "tidanse/metrics.hpp"
#include "tidanse/scenario.hpp"
#include "tidanse/types.hpp"
#include "tidanse/wasn.hpp"

namespace tidanse::engine {

enum class Algorithm { tidanse, tigevd };
enum class ScmPolicy { batch_mean, ewma, analytic };
enum class TreeWeights { unit, random_per_iteration };

// Per-node algorithm state. The full node filter is [w_local; g_remote],
// with w_local applied to the local sensors and g_remote to the incoming
// in-network sum. fusion compresses the local sensors into the node's
// broadcast contribution and satisfies fusion * g_remote = w_local after
// every refresh.
struct NodeState {
  int id = 0;
  CMat w_local;   // M_k x J
  CMat g_remote;  // J x J
  CMat fusion;    // M_k x J
  covariance::ScmPair scm;  // D_k x D_k with D_k = M_k + J
};

struct EngineOptions {
  Algorithm algorithm = Algorithm::tigevd;
  ScmPolicy scm_policy = ScmPolicy::batch_mean;
  bool normalized = false;
  Index rank = 1;
  double beta = 0.7;
  int reference_node = 0;
  int gamma_cadence = 1;
  // Eq.-(4)-style noise tracking from noise-only frames by default; the
  // alternative updates the noise statistics from the mixed signal.
  bool noise_update_uses_mixed = false;
  TreeWeights tree_weights = TreeWeights::random_per_iteration;
  std::uint64_t seed = 0;
};

// Result of one algorithm iteration.
struct StepResult {
  metrics::RunTraceRow row;
  std::vector<CMat> d_hat;  // per node, J x B; empty once unstable
  std::vector<CMat> w_net;  // per node, M x J network-wide expansion
  bool stable = true;
};

struct EngineCounters {
  long singular_g_solves = 0;
  long degenerate_gamma_warnings = 0;
  long loading_retries = 0;
  long unstable_since = -1;  // iteration index of the first instability
};

// Normalized fusion of local sensors: gamma^* fusion^H y_k.
CMat fuse_local(const NodeState& state, const CMat& y_k, double gamma);

struct UpdateResult {
  CMat w_local;
  CMat g_remote;
};

// Full-rank local filter update, partitioned into the local and
// sum-weight blocks. Shares the centralized MWF code path exactly.
UpdateResult tidanse_update(const covariance::ScmPair& scm, const std::vector<int>& sel);

// Low-rank (GEVD) local filter update on the node pencil.
UpdateResult tigevd_update(const covariance::ScmPair& scm, Index rank, const std::vector<int>& sel);

// Scales the trailing J rows of a stacked node filter by 1/gamma,
// keeping non-updating nodes consistent with the normalization applied to
// their inputs this iteration.
CMat compensate_non_updating(const CMat& stacked_filter, double gamma, Index m_k, Index j);

// Frobenius norm of the reference node's sum-weight block. A norm below
// 1e-12 yields 1 and reports a degenerate normalization instead of
// propagating a near-zero scale.
double compute_gamma(const CMat& g_r, bool* degenerate = nullptr);

// Network-wide filter of node k: remote blocks gamma * fusion_q *
// g_k_next, own block w_local. gamma is the scale the fused signals
// carried when the fusion matrices in `states` were applied.
CMat network_wide_expand(const std::vector<NodeState>& states, int k, const CMat& g_k_next,
                         double gamma = 1.0);

// Sequential round-robin simulation of the distributed algorithm. One call
// to step() is one algorithm iteration on one signal frame.
class Engine {
 public:
  Engine(const Scenario& scenario, wasn::Topology topology, EngineOptions options);

  // Centralized filters used for the mse_w columns of the trace; one M x J
  // matrix per node. Optional; without them mse_w stays at zero.
  void set_reference_filters(std::vector<CMat> reference);

  // analytic must be supplied when the SCM policy is analytic and reflect
  // the scenario the frame was drawn from.
  StepResult step(const SignalFrame& frame, const covariance::AnalyticScm* analytic = nullptr,
                  bool scenario_changed = false);

  const EngineCounters& counters() const { return counters_; }
  const std::vector<NodeState>& nodes() const { return nodes_; }
  long iteration() const { return iter_; }
  int updating_node() const { return updating_; }
  double gamma() const { return gamma_; }
  bool stable() const { return stable_; }
  int num_nodes() const { return static_cast<int>(nodes_.size()); }

 private:
  StepResult frozen_step(bool scenario_changed);

  EngineOptions options_;
  wasn::Topology topology_;
  std::vector<NodeState> nodes_;
  std::vector<std::vector<int>> selections_;  // local channel picks per node
  std::vector<int> sensors_per_node_;
  int channels_ = 1;
  int total_sensors_ = 0;

  long iter_ = 0;       // completed iterations
  int updating_ = 0;    // node updating in the next iteration
  double gamma_ = 1.0;  // normalization carried by the next fusion pass
  bool stable_ = true;
  metrics::RunTraceRow last_row_;
  std::vector<CMat> reference_filters_;
  EngineCounters counters_;
  RngStream tree_rng_;
};

}  // namespace tidanse::engine
