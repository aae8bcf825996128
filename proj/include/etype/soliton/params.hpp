#pragma once

#include <string>

namespace etype::soliton {

enum class LambdaMode { constant, function_of_r, unconstrained };

std::string to_string(LambdaMode mode);

/// Constants of  alpha Ric + beta Hess F + mu dF (x) dF = (rho R + lambda) g
/// with alpha fixed to zero.
class EinsteinTypeParams {
 public:
  /// Throws InvalidParametersError if alpha != 0 or (beta, mu) == (0, 0).
  EinsteinTypeParams(double alpha, double beta, double mu, double rho,
                     LambdaMode lambda_mode = LambdaMode::unconstrained);
  EinsteinTypeParams(double beta, double mu, double rho,
                     LambdaMode lambda_mode = LambdaMode::unconstrained)
      : EinsteinTypeParams(0.0, beta, mu, rho, lambda_mode) {}

  double alpha() const { return 0.0; }
  double beta() const { return beta_; }
  double mu() const { return mu_; }
  double rho() const { return rho_; }
  LambdaMode lambda_mode() const { return lambda_mode_; }

 private:
  double beta_;
  double mu_;
  double rho_;
  LambdaMode lambda_mode_;
};

/// Hess F = phi g + c dF (x) dF with c = -mu/beta, where phi is the
/// original right-hand side divided by beta. beta is kept so that lambda can
/// be recovered without a second division.
struct ReducedParams {
  double c = 0.0;
  double beta = 1.0;
  bool phi_divided_by_beta = true;
};

/// Throws BetaZeroError when beta == 0 (use triviality_check_beta_zero).
ReducedParams reduce(const EinsteinTypeParams& params);

}  // namespace etype::soliton
