#pragma once

#include "tidanse/scenario.hpp"
#include "tidanse/types.hpp"

namespace tidanse::covariance {

// Paired signal/noise covariance estimates of one observation vector.
// Both stay Hermitian (re-symmetrized after every update) and keep their
// dimension for the pair's lifetime.
struct ScmPair {
  CMat r_yy;
  CMat r_nn;
  long frames_absorbed_yy = 0;
  long frames_absorbed_nn = 0;
};

// Block-diagonal normalization blkdiag(I_m, gamma * I_j).
struct NormBlock {
  Index m = 0;
  Index j = 0;
  double gamma = 1.0;
};

// Sample mean (1/N) sum_t x_t x_t^H over the columns of samples.
CMat batch_scm(const CMat& samples);

// Exponential forgetting, applied per sample in time order across the frame.
CMat ewma_update(const CMat& prev, const CMat& frame, double beta);

// Forgetting recursion for normalized observation vectors: the previous
// estimate is re-aligned once per frame as N * prev * N^H before the
// frame's samples are absorbed. With gamma = 1 this is ewma_update on the
// same code path, bit for bit.
CMat normalized_ewma_update(const CMat& prev, const CMat& frame, double beta, const NormBlock& n_k);

// Exact second-order statistics of the generative model: steering through
// uniform latents plus the diagonal thermal term.
struct AnalyticScm {
  CMat r_yy;
  CMat r_nn;
};
AnalyticScm analytic_scm(const Scenario& scenario);

CMat load_diagonal(const CMat& a, double eps_rel = 1e-10);

// PD repair policy: try the factorization as-is, then with loading at
// 1e-10 and 1e-6. Returns the accepted matrix; throws NotPositiveDefinite
// if even the heaviest loading fails.
CMat apply_loading_policy(const CMat& r_nn, int* retries = nullptr);

// Seeded random positive-definite initializer for online runs:
// 0.5 I + 0.05 H H^H with H i.i.d. uniform complex.
CMat random_spd_init(Index dim, RngStream& rng);

}  // namespace tidanse::covariance
