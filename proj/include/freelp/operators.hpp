#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "freelp/schatten.hpp"
#include "freelp/tensors.hpp"
#include "freelp/words.hpp"

namespace freelp {

/// sum_I a_I (x) lambda(w_I) over a free group or a direct product of free
/// groups. Single groups are stored as one-factor products.
///
/// Norms use the unnormalized trace on the m x m coefficients and the
/// normalized trace on the group side: ||X||_p^p = (tr (x) tau)(|X|^p).
class FreeOperator {
 public:
  struct Term {
    MultiIndex index;
    Matrix coeff;
    ProductWord word;
  };

  FreeOperator(CoeffTensor coefficients, std::vector<int> ranks,
               std::map<MultiIndex, ProductWord> words);

  const CoeffTensor& coefficients() const noexcept { return coeffs_; }
  const std::vector<int>& ranks() const noexcept { return ranks_; }
  const std::map<MultiIndex, ProductWord>& words() const noexcept { return words_; }
  std::size_t factors() const noexcept { return ranks_.size(); }

  /// Supported terms in index order.
  std::vector<Term> terms() const;
  bool words_distinct() const;

 private:
  CoeffTensor coeffs_;
  std::vector<int> ranks_;
  std::map<MultiIndex, ProductWord> words_;
};

/// Natural word map of the tensor's alphabet: g_{i_1}..g_{i_d} or h_{i_1}..h_{i_d}.
FreeOperator free_operator(const CoeffTensor& t);
/// g_{1 i_1} ... g_{d i_d} in F_{nd}.
FreeOperator separated_operator(const CoeffTensor& t);
/// S_d(a) = sum a_I (x) lambda(g_{i_1}) (x) ... (x) lambda(g_{i_d}) over F_n^d.
FreeOperator tensor_power_operator(const CoeffTensor& t);

struct MomentOptions {
  std::uint64_t node_budget = 50'000'000;
  /// 0 = FREELP_THREADS or hardware concurrency.
  int threads = 1;
};

struct MomentResult {
  double value = 0.0;
  std::uint64_t nodes = 0;
};

/// Threads requested by FREELP_THREADS (0 or unset = hardware concurrency).
int default_thread_count();

/// (tr (x) tau)((X^* X)^q) by depth-first search over word tuples.
MomentResult moment_even(const FreeOperator& x, int q, const MomentOptions& options = {});

/// Same quantity by plain enumeration of every 2q-tuple.
MomentResult moment_even_bruteforce(const FreeOperator& x, int q,
                                    std::uint64_t tuple_cap = 20'000'000);

/// Frobenius mass; requires pairwise distinct words.
double norm_p2(const FreeOperator& x);

/// moment_even(x, p/2)^{1/p} for even p.
double norm_even_p(const FreeOperator& x, int p, const MomentOptions& options = {});

struct TruncationOptions {
  double tol = 1e-13;
  int max_iter = 5000;
  std::uint64_t ball_cap = 2'000'000;
  std::uint64_t seed = 1;
  /// Use the sign-pattern quotient when x = a (x) sum_i lambda(g_i).
  bool use_symmetry = true;
};

struct TruncationResult {
  double value = 0.0;
  bool converged = false;
  int iterations = 0;
  std::uint64_t dimension = 0;
  bool reduced = false;
};

/// sqrt of the top eigenvalue of P X^* X P, with P the projection onto
/// C^m (x) span{delta_w : |w| <= radius}. A lower bound for ||X||_inf.
TruncationResult opnorm_lower_trunc(const FreeOperator& x, int radius,
                                    const TruncationOptions& options = {});

/// Multiplies each a_I by the character value prod sign(letter generator).
/// `signs` lists one +-1 per generator, factor by factor.
FreeOperator character_twist(const FreeOperator& x, const std::vector<int>& signs);

/// sum a_I (x) lambda(w_I) (x) lambda(w_I) over G x G.
FreeOperator double_with_regular(const FreeOperator& x);

struct Check {
  std::string name;
  bool pass = false;
  double slack = 0.0;
  /// False when the check could not be decided (p = inf with only a lower bound).
  bool conclusive = true;
};

struct KhintchineOptions {
  MomentOptions moments;
  TruncationOptions truncation;
  int depth = 4;
  double slack = 1e-9;
  Eigen::Index cap = kDefaultDenseCap;
};

struct KhintchineReport {
  Exponent p = 2.0;
  NormReport splits;
  double lp_lower = 0.0;
  double lp_upper = 0.0;
  bool lp_exact = true;
  std::vector<double> ratios;
  std::vector<Check> checks;
};

/// Both sides of the Khintchine comparison for p in {2, 4, 6, ..., inf}.
KhintchineReport khintchine_report(const CoeffTensor& t, const Exponent& p,
                                   const KhintchineOptions& options = {});

}  // namespace freelp
