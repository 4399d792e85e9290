#include "tidanse/covariance.hpp"

#include <string>

#include "tidanse/errors.hpp"
#include "tidanse/numerics.hpp"

namespace tidanse::covariance {

CMat batch_scm(const CMat& samples) {
  const Index d = samples.rows();
  const Index n = samples.cols();
  if (n < 1) throw InvalidConfig("batch_scm: need at least one sample");
  CMat r = CMat::Zero(d, d);
  r.selfadjointView<Eigen::Lower>().rankUpdate(samples, 1.0 / static_cast<double>(n));
  return CMat(r.selfadjointView<Eigen::Lower>());
}

CMat ewma_update(const CMat& prev, const CMat& frame, double beta) {
  return normalized_ewma_update(prev, frame, beta, NormBlock{prev.rows(), 0, 1.0});
}

CMat normalized_ewma_update(const CMat& prev, const CMat& frame, double beta, const NormBlock& n_k) {
  if (!(beta > 0.0 && beta < 1.0)) throw InvalidConfig("forgetting factor must lie in (0, 1)");
  if (prev.rows() != prev.cols() || prev.rows() != frame.rows())
    throw ShapeMismatch("normalized_ewma_update: dimension mismatch");
  if (n_k.m + n_k.j != prev.rows())
    throw ShapeMismatch("normalized_ewma_update: normalization blocks do not span the matrix");

  CMat r = prev;
  if (n_k.gamma != 1.0) {
    const double g = n_k.gamma;
    r.topRightCorner(n_k.m, n_k.j) *= g;
    r.bottomLeftCorner(n_k.j, n_k.m) *= g;
    r.bottomRightCorner(n_k.j, n_k.j) *= g * g;
  }
  for (Index t = 0; t < frame.cols(); ++t) {
    r *= beta;
    r.selfadjointView<Eigen::Lower>().rankUpdate(frame.col(t), 1.0 - beta);
  }
  // rankUpdate only maintains the lower triangle.
  return CMat(r.selfadjointView<Eigen::Lower>());
}

AnalyticScm analytic_scm(const Scenario& scenario) {
  const ScenarioConfig& c = scenario.config;
  const int m = c.total_sensors();
  const double width = c.sample_hi - c.sample_lo;
  const double source_var = 2.0 * width * width / 12.0;

  CMat thermal = CMat::Zero(m, m);
  for (int k = 0; k < c.num_nodes; ++k) {
    const int off = scenario.node_offset[static_cast<size_t>(k)];
    const int mk = c.sensors_per_node[static_cast<size_t>(k)];
    const double var = scenario.thermal_std(k) * scenario.thermal_std(k);
    for (int r = 0; r < mk; ++r) thermal(off + r, off + r) = var;
  }

  AnalyticScm out;
  out.r_nn = source_var * (scenario.b * scenario.b.adjoint()) + thermal;
  out.r_yy = source_var * (scenario.a * scenario.a.adjoint()) + out.r_nn;
  out.r_nn = symmetrize(out.r_nn);
  out.r_yy = symmetrize(out.r_yy);
  return out;
}

CMat load_diagonal(const CMat& a, double eps_rel) {
  if (a.rows() != a.cols()) throw ShapeMismatch("load_diagonal: matrix is not square");
  const double mean_diag = a.trace().real() / static_cast<double>(a.rows() == 0 ? 1 : a.rows());
  return a + eps_rel * mean_diag * CMat::Identity(a.rows(), a.cols());
}

CMat apply_loading_policy(const CMat& r_nn, int* retries) {
  const double eps[] = {0.0, 1e-10, 1e-6};
  for (int attempt = 0; attempt < 3; ++attempt) {
    CMat candidate = attempt == 0 ? r_nn : load_diagonal(r_nn, eps[attempt]);
    try {
      numerics::cholesky(candidate);
      if (retries) *retries += attempt;
      return candidate;
    } catch (const NotPositiveDefinite&) {
      if (attempt == 2) throw;
    }
  }
  throw NotPositiveDefinite("apply_loading_policy: unreachable");
}

CMat random_spd_init(Index dim, RngStream& rng) {
  const CMat h = rng.complex_uniform_matrix(dim, dim, -0.5, 0.5);
  CMat r = 0.5 * CMat::Identity(dim, dim) + 0.05 * (h * h.adjoint());
  return symmetrize(r);
}

}  // namespace tidanse::covariance
