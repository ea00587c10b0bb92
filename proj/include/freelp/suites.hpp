#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "freelp/report.hpp"

namespace freelp {

struct SuiteOptions {
  std::uint64_t seed = 1;
  /// Random instances per configuration.
  int instances = 10;
  MomentOptions moments;
};

/// counterexample, lower-estimate, degree1, fell, converse, transposition,
/// signed, oracle.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Unknown names raise invalid_argument.
std::vector<SuiteResult> run_suites(const std::string& name, const SuiteOptions& options = {});

/// a_ij = e_ji in M_n, d = 2.
CoeffTensor transpose_counterexample(int n);

/// The three quantities of the degree-2 transposition estimate at p = inf:
/// A = sup_j ||sum_i a_ij a_ij^*||^{1/2}, C = sup_i ||sum_j a_ij^* a_ij||^{1/2},
/// B = sup_ij ||a_ij||.
struct TranspositionTerms {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};
TranspositionTerms transposition_terms(const CoeffTensor& t);

}  // namespace freelp
