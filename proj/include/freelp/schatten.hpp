#pragma once

#include <Eigen/SVD>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "freelp/error.hpp"
#include "freelp/tensors.hpp"

namespace freelp {

/// Exponent p in [1, inf]. Infinity is a distinct state, never a large float.
class Exponent {
 public:
  Exponent(double p) : p_(p) {  // NOLINT(google-explicit-constructor)
    if (!(p >= 1.0) || !std::isfinite(p)) {
      fail(ErrorKind::invalid_argument, "exponent must be a finite p >= 1 or inf");
    }
  }
  static Exponent infinity() {
    Exponent e(1.0);
    e.inf_ = true;
    return e;
  }
  /// Accepts a number or "inf".
  static Exponent parse(const std::string& text);

  bool is_infinite() const noexcept { return inf_; }
  /// Finite value; undefined for infinity.
  double value() const noexcept { return p_; }
  /// 1/p, with 1/inf = 0.
  double reciprocal() const noexcept { return inf_ ? 0.0 : 1.0 / p_; }
  Exponent conjugate() const;
  bool is_even_integer() const noexcept;
  std::string str() const;

  friend bool operator==(const Exponent& a, const Exponent& b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.p_ == b.p_);
  }

 private:
  double p_ = 1.0;
  bool inf_ = false;
};

inline Exponent conjugate_exponent(const Exponent& p) { return p.conjugate(); }

/// (sum sigma_i^p)^{1/p} of non-negative values, summed in descending order
/// with Neumaier compensation; max for p = inf.
double lp_norm_of_values(std::vector<double> values, const Exponent& p);

template <typename Derived>
double schatten_norm(const Eigen::MatrixBase<Derived>& m, const Exponent& p) {
  using Scalar = typename Derived::Scalar;
  using Dense = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  if (m.size() == 0) return 0.0;
  if (!m.allFinite()) fail(ErrorKind::invalid_argument, "non-finite matrix entry");
  Dense dense = m;
  Eigen::BDCSVD<Dense> svd(dense);
  const auto& s = svd.singularValues();
  return lp_norm_of_values(std::vector<double>(s.data(), s.data() + s.size()), p);
}

/// <A, B> = sum_I tr(b_I^* a_I).
Complex pairing(const CoeffTensor& a, const CoeffTensor& b);

struct SplitNorm {
  PartitionSplit split;
  double norm = 0.0;
  int transposition = 0;
  bool transposed = false;
};

/// Dual certificate data attached to sum-norm reports.
struct SumCertificate {
  double upper = 0.0;
  double lower = 0.0;
  double gap = 0.0;
  bool converged = false;
  int iterations = 0;
  /// Y^{(0..d)}, summing to the input; block k is measured in split {1..k}.
  std::vector<CoeffTensor> decomposition;
};

struct NormReport {
  Exponent p = 2.0;
  std::vector<SplitNorm> splits;
  double value = 0.0;
  /// Position in `splits` of the maximizing split (smallest on ties). For
  /// consecutive splits this is k.
  int argmax_k = 0;
  std::optional<SumCertificate> sum;
};

SplitNorm split_norm(const CoeffTensor& t, const PartitionSplit& split,
                     const Exponent& p, Eigen::Index cap = kDefaultDenseCap);

/// max over the d+1 consecutive splits {1..k}, k = 0..d.
NormReport intersection_norm(const CoeffTensor& t, const Exponent& p,
                             Eigen::Index cap = kDefaultDenseCap);

/// All 2^d splits in enumerate_partitions order; value is the maximum.
NormReport partition_spectrum(const CoeffTensor& t, const Exponent& p,
                              Eigen::Index cap = kDefaultDenseCap);

struct SumNormOptions {
  double tol = 1e-8;
  int max_iter = 20000;
  std::uint64_t seed = 0x5eed;
  int random_probes = 32;
  Eigen::Index cap = kDefaultDenseCap;
};

/// inf over t = sum_k Y^{(k)} of sum_k ||R_k(Y^{(k)})||_p for 1 <= p <= 2,
/// returned as a certified interval [lower, upper].
NormReport sum_norm(const CoeffTensor& t, const Exponent& p,
                    const SumNormOptions& options = {});

/// Proximal map of gamma * ||.||_p on a non-negative vector.
Eigen::VectorXd prox_lp(const Eigen::VectorXd& s, double gamma, const Exponent& p);

}  // namespace freelp
