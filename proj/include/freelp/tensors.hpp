#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <filesystem>
#include <map>
#include <utility>
#include <vector>

#include "freelp/words.hpp"

namespace freelp {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// 0-based multi-index (i_1, ..., i_d).
using MultiIndex = std::vector<int>;

enum class Alphabet { generators, signed_letters };

const char* to_string(Alphabet a);
Alphabet parse_alphabet(const std::string& s);

/// Default cap on the row or column count of a dense matricization.
inline constexpr Eigen::Index kDefaultDenseCap = 4096;

/// Sparse family {a_I} of m x m complex matrices indexed by [A]^d, where the
/// alphabet size A is n (generators) or 2n (signed letters).
class CoeffTensor {
 public:
  using Entries = std::map<MultiIndex, Matrix>;

  CoeffTensor(int n, int d, int m, Alphabet alphabet = Alphabet::generators);

  int n() const noexcept { return n_; }
  int d() const noexcept { return d_; }
  int m() const noexcept { return m_; }
  Alphabet alphabet() const noexcept { return alphabet_; }
  int alphabet_size() const noexcept {
    return alphabet_ == Alphabet::generators ? n_ : 2 * n_;
  }

  /// Stores `value` at `index`; storing an exact zero erases the entry.
  void set(const MultiIndex& index, Matrix value);
  /// Stored entry or the zero matrix.
  Matrix at(const MultiIndex& index) const;
  bool contains(const MultiIndex& index) const {
    return entries_.count(index) != 0;
  }
  void erase(const MultiIndex& index) { entries_.erase(index); }

  const Entries& entries() const noexcept { return entries_; }
  std::size_t nnz() const noexcept { return entries_.size(); }
  bool same_shape(const CoeffTensor& other) const;
  void check_index(const MultiIndex& index) const;

  CoeffTensor& operator+=(const CoeffTensor& other);
  CoeffTensor& operator-=(const CoeffTensor& other);
  CoeffTensor& operator*=(Complex s);

  friend CoeffTensor operator+(CoeffTensor a, const CoeffTensor& b) { return a += b; }
  friend CoeffTensor operator-(CoeffTensor a, const CoeffTensor& b) { return a -= b; }
  friend CoeffTensor operator*(Complex s, CoeffTensor a) { return a *= s; }

  /// Exact equality of shape and entries.
  friend bool operator==(const CoeffTensor& a, const CoeffTensor& b);

 private:
  int n_, d_, m_;
  Alphabet alphabet_;
  Entries entries_;
};

/// All A^d indices of [A]^d in big-endian counting order.
std::vector<MultiIndex> all_indices(int alphabet_size, int d);

/// Ordered pair (alpha, beta) partitioning {1..d}; members are 1-based.
struct PartitionSplit {
  int d = 0;
  std::vector<int> alpha;
  std::vector<int> beta;

  /// alpha = {1..k}.
  static PartitionSplit consecutive(int d, int k);
  /// Validates and sorts `alpha`; beta is the complement.
  static PartitionSplit from_alpha(int d, std::vector<int> alpha);

  friend bool operator==(const PartitionSplit&, const PartitionSplit&) = default;
};

/// 2^d splits; alpha follows a binary counter with bit (k-1) marking k.
std::vector<PartitionSplit> enumerate_partitions(int d);

/// max(alpha) - min(beta), with max(empty) = 0 and min(empty) = d + 1.
int transposition_number(const PartitionSplit& split);
inline bool is_transposed(const PartitionSplit& s) {
  return transposition_number(s) > 0;
}

/// Big-endian flattening of pi_alpha(I) and pi_beta(I).
std::pair<Eigen::Index, Eigen::Index> flatten_index(const MultiIndex& index,
                                                    const PartitionSplit& split,
                                                    int alphabet_size);
/// Inverse of flatten_index.
MultiIndex unflatten_index(Eigen::Index row, Eigen::Index col,
                           const PartitionSplit& split, int alphabet_size);

/// Block matrix sum_I e_{pi_alpha(I), pi_beta(I)} (x) a_I of shape
/// (m A^|alpha|) x (m A^|beta|).
Matrix reshape(const CoeffTensor& t, const PartitionSplit& split,
               Eigen::Index cap = kDefaultDenseCap);

ReducedWord word_map_plain(const MultiIndex& index, int n);
/// g_{1 i_1} g_{2 i_2} ... g_{d i_d} in F_{nd}, where g_{s k} is letter (s-1)n + k.
ReducedWord word_map_separated(const MultiIndex& index, int n);
/// Reduced h_{i_1} ... h_{i_d}; may be shorter than d.
ReducedWord word_map_signed(const MultiIndex& index, int n);

/// True iff no adjacent pair has i_s = n + i_{s+1} (mod 2n), 1-based.
bool validate_cancellation(const MultiIndex& index, int n);
/// Zeroes the entries whose adjacent pair (s, s+1) (1-based s) cancels.
CoeffTensor mask_adjacent_pair(const CoeffTensor& t, int s);
/// Projection onto indices satisfying the cancellation property.
CoeffTensor apply_projection_Q(const CoeffTensor& t);

/// The word a tensor index is sent to under the alphabet's natural map.
ReducedWord index_word(const MultiIndex& index, int n, Alphabet alphabet);

using WordCoefficients = std::map<ReducedWord, Matrix>;

/// Sum_I a_I lambda(w_I) as a word -> coefficient map.
WordCoefficients word_coefficients(const CoeffTensor& t);

/// Restriction of a finitely supported f to the degree-d words spanned by the
/// alphabet, re-indexed as a tensor.
CoeffTensor project_to_degree(const WordCoefficients& f, int d,
                              Alphabet alphabet, int n, int m);

}  // namespace freelp
