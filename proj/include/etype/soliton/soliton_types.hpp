#pragma once

#include <string>
#include <vector>

#include "etype/soliton/params.hpp"
#include "etype/soliton/theorem_case.hpp"
#include "etype/warped/record.hpp"

namespace etype::soliton {

struct LambdaSemantics {
  enum class Kind { constant, unconstrained, sigma_k_minus_nu };
  Kind kind = Kind::unconstrained;
  int k = 0;        // sigma_k index, sigma_k_minus_nu only
  double nu = 0.0;  // sigma_k_minus_nu only
};

std::string to_string(LambdaSemantics::Kind kind);

struct SolitonTypeEntry {
  std::string name;
  double alpha = 0.0;
  double beta = 0.0;
  double mu = 0.0;
  double rho = 0.0;
  LambdaSemantics lambda;

  EinsteinTypeParams params() const;
};

struct SolitonTypeOptions {
  int dimension = 4;         // n, enters the k-Yamabe beta
  int sigma_index = 1;       // k of the k-Yamabe entry
  double nu = 0.0;           // constant of the k-Yamabe entry
  double quasi_k = 1.0;      // k of the quasi-Yamabe entry, nonzero
};

/// Gradient Yamabe, almost Yamabe, k-Yamabe, conformal and quasi-Yamabe
/// solitons as Einstein-type specializations.
std::vector<SolitonTypeEntry> soliton_type_table(const SolitonTypeOptions& options = {});

/// Throws UnknownNameError for names outside the table.
SolitonTypeEntry lookup(const std::string& name, const SolitonTypeOptions& options = {});

warped::KeyValueRecord to_record(const SolitonTypeEntry& entry);
SolitonTypeEntry soliton_type_from_record(const warped::KeyValueRecord& record);

warped::KeyValueRecord to_record(const TheoremCase& theorem_case);
TheoremCase theorem_case_from_record(const warped::KeyValueRecord& record);

}  // namespace etype::soliton
