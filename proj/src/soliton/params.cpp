#include "etype/soliton/params.hpp"

#include "etype/errors.hpp"

namespace etype::soliton {

std::string to_string(LambdaMode mode) {
  switch (mode) {
    case LambdaMode::constant: return "constant";
    case LambdaMode::function_of_r: return "function-of-r";
    case LambdaMode::unconstrained: return "unconstrained";
  }
  return "unknown";
}

EinsteinTypeParams::EinsteinTypeParams(double alpha, double beta, double mu, double rho,
                                       LambdaMode lambda_mode)
    : beta_(beta), mu_(mu), rho_(rho), lambda_mode_(lambda_mode) {
  if (alpha != 0.0) throw InvalidParametersError("only alpha = 0 Einstein-type structures are supported");
  if (beta == 0.0 && mu == 0.0)
    throw InvalidParametersError("(alpha, beta, mu) = (0, 0, 0) is not an Einstein-type structure");
}

ReducedParams reduce(const EinsteinTypeParams& params) {
  if (params.beta() == 0.0)
    throw BetaZeroError("beta = 0 cannot be reduced; use triviality_check_beta_zero");
  return {-params.mu() / params.beta(), params.beta(), true};
}

}  // namespace etype::soliton
