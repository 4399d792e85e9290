#pragma once

#include <stdexcept>
#include <string>

namespace tidanse {

enum class ErrorCode {
  invalid_config,
  not_positive_definite,
  singular_covariance,
  convergence_failure,
  shape_mismatch,
  disconnected_graph,
  degenerate_gamma,
  io_error,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

struct InvalidConfig : Error {
  explicit InvalidConfig(const std::string& w) : Error(ErrorCode::invalid_config, w) {}
};
struct NotPositiveDefinite : Error {
  explicit NotPositiveDefinite(const std::string& w) : Error(ErrorCode::not_positive_definite, w) {}
};
struct SingularCovariance : Error {
  explicit SingularCovariance(const std::string& w) : Error(ErrorCode::singular_covariance, w) {}
};
struct ConvergenceFailure : Error {
  explicit ConvergenceFailure(const std::string& w) : Error(ErrorCode::convergence_failure, w) {}
};
struct ShapeMismatch : Error {
  explicit ShapeMismatch(const std::string& w) : Error(ErrorCode::shape_mismatch, w) {}
};
struct DisconnectedGraph : Error {
  explicit DisconnectedGraph(const std::string& w) : Error(ErrorCode::disconnected_graph, w) {}
};
struct DegenerateGamma : Error {
  explicit DegenerateGamma(const std::string& w) : Error(ErrorCode::degenerate_gamma, w) {}
};
struct IoError : Error {
  explicit IoError(const std::string& w) : Error(ErrorCode::io_error, w) {}
};

}  // namespace tidanse
