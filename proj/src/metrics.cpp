#include "tidanse/metrics.hpp"

#include "tidanse/errors.hpp"

namespace tidanse::metrics {

double mse_w(const CMat& w_net, const CMat& w_central) {
  if (w_net.rows() != w_central.rows() || w_net.cols() != w_central.cols())
    throw ShapeMismatch("mse_w: filter shapes disagree");
  const double mj = static_cast<double>(w_net.rows() * w_net.cols());
  return (w_net - w_central).squaredNorm() / mj;
}

double mse_d(const CMat& d_hat, const CMat& d_true) {
  if (d_hat.rows() != d_true.rows() || d_hat.cols() != d_true.cols())
    throw ShapeMismatch("mse_d: signal shapes disagree");
  const double jn = static_cast<double>(d_hat.rows() * d_hat.cols());
  return (d_hat - d_true).squaredNorm() / jn;
}

}  // namespace tidanse::metrics
