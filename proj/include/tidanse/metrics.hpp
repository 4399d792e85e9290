#pragma once

#include <vector>

#include "tidanse/types.hpp"

namespace tidanse::metrics {

enum class Stability { stable, unstable };

// One iteration of a run, as emitted to CSV.
struct RunTraceRow {
  long iter = 0;
  int updating_node = 0;
  double gamma = 1.0;
  bool scenario_changed = false;
  Stability stability = Stability::stable;
  std::vector<double> mse_w;    // per node, vs the centralized reference
  std::vector<double> mse_d;    // per node
  std::vector<double> g_norm;   // per node
  double mse_w_mean = 0.0;
  double mse_d_mean = 0.0;
  double g_norm_mean = 0.0;
  double mse_d_central = 0.0;   // centralized baseline on the same data
};

// Normalized squared Frobenius distance (1/(M J)) ||w_net - w_central||_F^2.
double mse_w(const CMat& w_net, const CMat& w_central);

// Per-entry mean squared error (1/(J N)) sum_n ||d_hat[n] - d_true[n]||^2.
double mse_d(const CMat& d_hat, const CMat& d_true);

}  // namespace tidanse::metrics
