#pragma once

#include "tidanse/types.hpp"

namespace tidanse::numerics {

// Generalized eigendecomposition of a Hermitian pencil {r_yy, r_nn} in the
// non-unitary convention
//   r_yy = q * diag(sigma) * q^H,   r_nn = q * q^H,
// with sigma sorted descending. chol_l and u are the factors of the
// construction q = chol_l * u (chol_l lower-triangular Cholesky factor of
// r_nn, u unitary); callers that need q^{-H} can use them to avoid forming
// an inverse.
struct GevdResult {
  CMat q;
  RealVec sigma;
  CMat chol_l;
  CMat u;
};

// Cholesky factorization a = L L^H with real positive diagonal.
// Throws NotPositiveDefinite when a pivot is not strictly positive; the
// caller decides whether to retry with diagonal loading.
CMat cholesky(const CMat& a);

struct HermitianEig {
  CMat u;        // unitary, columns are eigenvectors
  RealVec lam;   // descending
};

// Eigendecomposition of a Hermitian matrix with deterministic output:
// eigenvalues descending, each eigenvector's largest-magnitude component
// made real and positive.
HermitianEig hermitian_eig(const CMat& a);

GevdResult gevd_pencil(const CMat& r_yy, const CMat& r_nn);

}  // namespace tidanse::numerics
