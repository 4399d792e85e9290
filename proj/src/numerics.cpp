#include "tidanse/numerics.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "tidanse/errors.hpp"

namespace tidanse::numerics {

namespace {

void require_square_hermitian(const CMat& a, const char* op) {
  if (a.rows() != a.cols())
    throw ShapeMismatch(std::string(op) + ": matrix is not square");
  if (hermitian_defect(a) > 1e-12)
    throw ShapeMismatch(std::string(op) + ": matrix is not Hermitian");
}

// Rotate each column so its largest-magnitude entry is real positive.
// Ties on magnitude resolve to the lowest row index.
void fix_column_phases(CMat& u) {
  for (Index c = 0; c < u.cols(); ++c) {
    Index imax = 0;
    double vmax = -1.0;
    for (Index r = 0; r < u.rows(); ++r) {
      const double v = std::abs(u(r, c));
      if (v > vmax) {
        vmax = v;
        imax = r;
      }
    }
    if (vmax > 0.0) {
      const Complex pivot = u(imax, c);
      u.col(c) *= std::conj(pivot) / std::abs(pivot);
    }
  }
}

}  // namespace

CMat cholesky(const CMat& a) {
  require_square_hermitian(a, "cholesky");
  const Index n = a.rows();
  CMat h = symmetrize(a);
  CMat l = CMat::Zero(n, n);
  for (Index j = 0; j < n; ++j) {
    double d = h(j, j).real() - l.row(j).head(j).squaredNorm();
    if (!(d > 0.0) || !std::isfinite(d))
      throw NotPositiveDefinite("cholesky: pivot " + std::to_string(j) + " is not positive");
    const double pivot = std::sqrt(d);
    l(j, j) = pivot;
    for (Index i = j + 1; i < n; ++i) {
      Complex s = h(i, j);
      for (Index k = 0; k < j; ++k) s -= l(i, k) * std::conj(l(j, k));
      l(i, j) = s / pivot;
    }
  }
  return l;
}

HermitianEig hermitian_eig(const CMat& a) {
  require_square_hermitian(a, "hermitian_eig");
  Eigen::SelfAdjointEigenSolver<CMat> solver(symmetrize(a));
  if (solver.info() != Eigen::Success)
    throw ConvergenceFailure("hermitian_eig: eigensolver did not converge");
  const Index n = a.rows();
  HermitianEig out;
  out.u.resize(n, n);
  out.lam.resize(n);
  // Eigen returns ascending order; flip to descending.
  for (Index j = 0; j < n; ++j) {
    out.lam(j) = solver.eigenvalues()(n - 1 - j);
    out.u.col(j) = solver.eigenvectors().col(n - 1 - j);
  }
  fix_column_phases(out.u);
  return out;
}

GevdResult gevd_pencil(const CMat& r_yy, const CMat& r_nn) {
  require_square_hermitian(r_yy, "gevd_pencil");
  require_square_hermitian(r_nn, "gevd_pencil");
  if (r_yy.rows() != r_nn.rows())
    throw ShapeMismatch("gevd_pencil: pencil members differ in size");

  const CMat l = cholesky(r_nn);
  // Standard-form reduction m = L^{-1} r_yy L^{-H} via two triangular solves.
  const CMat t = l.triangularView<Eigen::Lower>().solve(symmetrize(r_yy));
  const CMat m = l.triangularView<Eigen::Lower>().solve(CMat(t.adjoint()));
  const HermitianEig eig = hermitian_eig(m);

  GevdResult out;
  out.sigma = eig.lam;
  out.u = eig.u;
  out.chol_l = l;
  out.q = l * eig.u;
  return out;
}

}  // namespace tidanse::numerics
