#include "tidanse/beamformers.hpp"

#include <algorithm>
#include <string>

#include "tidanse/errors.hpp"
#include "tidanse/numerics.hpp"

namespace tidanse::beamformers {

namespace {

constexpr double kConditionLimit = 1e12;

void check_selection(const std::vector<int>& sel, Index dim) {
  if (sel.empty()) throw InvalidConfig("filter selection must not be empty");
  for (int s : sel)
    if (s < 0 || s >= dim) throw ShapeMismatch("selection index out of range");
}

CMat select_columns(const CMat& a, const std::vector<int>& sel) {
  CMat out(a.rows(), static_cast<Index>(sel.size()));
  for (size_t j = 0; j < sel.size(); ++j) out.col(static_cast<Index>(j)) = a.col(sel[j]);
  return out;
}

}  // namespace

Filter mwf(const CMat& r_yy, const CMat& r_ss, const std::vector<int>& sel) {
  const Index d = r_yy.rows();
  if (r_yy.cols() != d || r_ss.rows() != d || r_ss.cols() != d)
    throw ShapeMismatch("mwf: covariance dimensions disagree");
  check_selection(sel, d);

  const CMat sym = symmetrize(r_yy);
  const numerics::HermitianEig eig = numerics::hermitian_eig(sym);
  const double lam_max = eig.lam(0);
  const double lam_min = eig.lam(d - 1);
  if (!(lam_min > 0.0) || lam_max / lam_min > kConditionLimit)
    throw SingularCovariance("mwf: signal covariance is singular or ill-conditioned");

  const CMat rhs = select_columns(r_ss, sel);
  const CMat l = numerics::cholesky(sym);
  CMat w = l.triangularView<Eigen::Lower>().solve(rhs);
  w = l.adjoint().triangularView<Eigen::Upper>().solve(w);
  return Filter{std::move(w), d};
}

Filter gevd_mwf(const CMat& r_yy, const CMat& r_nn, Index rank, const std::vector<int>& sel) {
  const Index d = r_yy.rows();
  if (rank < 1 || rank > d) throw InvalidConfig("gevd_mwf: rank must lie in [1, D]");
  check_selection(sel, d);

  const numerics::GevdResult gevd = numerics::gevd_pencil(r_yy, r_nn);

  // w = q^{-H} diag(spectral gains) q^H E, with q^{-H} = L^{-H} U from the
  // pencil factors; trailing directions and eigenvalues below one give a
  // zero gain.
  CMat t = gevd.q.adjoint() * select_columns(CMat::Identity(d, d), sel);
  for (Index j = 0; j < d; ++j) {
    const double gain = j < rank ? std::max(0.0, 1.0 - 1.0 / gevd.sigma(j)) : 0.0;
    t.row(j) *= gain;
  }
  CMat w = gevd.u * t;
  w = gevd.chol_l.adjoint().triangularView<Eigen::Upper>().solve(w);
  return Filter{std::move(w), rank};
}

CMat apply_filter(const Filter& f, const CMat& y) {
  if (f.w.rows() != y.rows()) throw ShapeMismatch("apply_filter: dimension mismatch");
  return f.w.adjoint() * y;
}

}  // namespace tidanse::beamformers
