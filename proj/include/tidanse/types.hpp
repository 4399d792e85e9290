#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

namespace tidanse {

using Complex = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RealVec = Eigen::VectorXd;
using Index = Eigen::Index;

inline bool all_finite(const CMat& a) {
  return a.array().real().isFinite().all() && a.array().imag().isFinite().all();
}

inline double frobenius(const CMat& a) { return a.norm(); }

// Relative asymmetry ||A - A^H|| / ||A||, zero matrix counts as Hermitian.
inline double hermitian_defect(const CMat& a) {
  const double n = a.norm();
  if (n == 0.0) return 0.0;
  return (a - a.adjoint()).norm() / n;
}

inline CMat symmetrize(const CMat& a) { return 0.5 * (a + a.adjoint()); }

}  // namespace tidanse
