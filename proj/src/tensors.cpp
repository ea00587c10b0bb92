#include "freelp/tensors.hpp"

#include <algorithm>

#include "freelp/error.hpp"

namespace freelp {

const char* to_string(Alphabet a) {
  return a == Alphabet::generators ? "generators" : "signed";
}

Alphabet parse_alphabet(const std::string& s) {
  if (s == "generators") return Alphabet::generators;
  if (s == "signed") return Alphabet::signed_letters;
  fail(ErrorKind::schema, "unknown alphabet '" + s + "'");
}

CoeffTensor::CoeffTensor(int n, int d, int m, Alphabet alphabet)
    : n_(n), d_(d), m_(m), alphabet_(alphabet) {
  if (n < 1 || d < 0 || m < 1) {
    fail(ErrorKind::invalid_argument, "tensor shape needs n >= 1, d >= 0, m >= 1");
  }
}

void CoeffTensor::check_index(const MultiIndex& index) const {
  if (static_cast<int>(index.size()) != d_) {
    fail(ErrorKind::invalid_argument, "index length differs from degree");
  }
  for (int i : index) {
    if (i < 0 || i >= alphabet_size()) {
      fail(ErrorKind::invalid_argument, "index entry out of range");
    }
  }
}

void CoeffTensor::set(const MultiIndex& index, Matrix value) {
  check_index(index);
  if (value.rows() != m_ || value.cols() != m_) {
    fail(ErrorKind::invalid_argument, "coefficient must be m x m");
  }
  if (value.isZero(0.0)) {
    entries_.erase(index);
  } else {
    entries_[index] = std::move(value);
  }
}

Matrix CoeffTensor::at(const MultiIndex& index) const {
  auto it = entries_.find(index);
  return it == entries_.end() ? Matrix::Zero(m_, m_) : it->second;
}

bool CoeffTensor::same_shape(const CoeffTensor& o) const {
  return n_ == o.n_ && d_ == o.d_ && m_ == o.m_ && alphabet_ == o.alphabet_;
}

CoeffTensor& CoeffTensor::operator+=(const CoeffTensor& other) {
  if (!same_shape(other)) fail(ErrorKind::invalid_argument, "tensor shape mismatch");
  for (const auto& [index, value] : other.entries_) set(index, at(index) + value);
  return *this;
}

CoeffTensor& CoeffTensor::operator-=(const CoeffTensor& other) {
  if (!same_shape(other)) fail(ErrorKind::invalid_argument, "tensor shape mismatch");
  for (const auto& [index, value] : other.entries_) set(index, at(index) - value);
  return *this;
}

CoeffTensor& CoeffTensor::operator*=(Complex s) {
  if (s == Complex(0.0)) {
    entries_.clear();
    return *this;
  }
  for (auto& [index, value] : entries_) value *= s;
  return *this;
}

bool operator==(const CoeffTensor& a, const CoeffTensor& b) {
  if (!a.same_shape(b) || a.entries_.size() != b.entries_.size()) return false;
  for (const auto& [index, value] : a.entries_) {
    auto it = b.entries_.find(index);
    if (it == b.entries_.end() || it->second != value) return false;
  }
  return true;
}

std::vector<MultiIndex> all_indices(int alphabet_size, int d) {
  std::vector<MultiIndex> out;
  MultiIndex index(d, 0);
  while (true) {
    out.push_back(index);
    int pos = d - 1;
    while (pos >= 0 && ++index[pos] == alphabet_size) index[pos--] = 0;
    if (pos < 0) break;
  }
  return out;
}

PartitionSplit PartitionSplit::consecutive(int d, int k) {
  if (k < 0 || k > d) fail(ErrorKind::invalid_argument, "split position out of range");
  std::vector<int> alpha(k);
  for (int i = 0; i < k; ++i) alpha[i] = i + 1;
  return from_alpha(d, std::move(alpha));
}

PartitionSplit PartitionSplit::from_alpha(int d, std::vector<int> alpha) {
  if (d < 0) fail(ErrorKind::invalid_argument, "negative degree");
  std::sort(alpha.begin(), alpha.end());
  if (std::adjacent_find(alpha.begin(), alpha.end()) != alpha.end()) {
    fail(ErrorKind::invalid_argument, "repeated member in alpha");
  }
  PartitionSplit s;
  s.d = d;
  for (int k : alpha) {
    if (k < 1 || k > d) fail(ErrorKind::invalid_argument, "alpha member out of range");
  }
  s.alpha = std::move(alpha);
  for (int k = 1; k <= d; ++k) {
    if (!std::binary_search(s.alpha.begin(), s.alpha.end(), k)) s.beta.push_back(k);
  }
  return s;
}

std::vector<PartitionSplit> enumerate_partitions(int d) {
  if (d < 0 || d > 30) fail(ErrorKind::invalid_argument, "degree out of range");
  std::vector<PartitionSplit> out;
  for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
    std::vector<int> alpha;
    for (int k = 1; k <= d; ++k) {
      if (mask & (1u << (k - 1))) alpha.push_back(k);
    }
    out.push_back(PartitionSplit::from_alpha(d, std::move(alpha)));
  }
  return out;
}

int transposition_number(const PartitionSplit& split) {
  const int a = split.alpha.empty() ? 0 : split.alpha.back();
  const int b = split.beta.empty() ? split.d + 1 : split.beta.front();
  return a - b;
}

namespace {

Eigen::Index checked_power(int base, std::size_t exponent, Eigen::Index cap) {
  Eigen::Index out = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    out *= base;
    if (out > cap) return cap + 1;
  }
  return out;
}

}  // namespace

std::pair<Eigen::Index, Eigen::Index> flatten_index(const MultiIndex& index,
                                                    const PartitionSplit& split,
                                                    int alphabet_size) {
  if (static_cast<int>(index.size()) != split.d) {
    fail(ErrorKind::invalid_argument, "index length differs from split degree");
  }
  auto flatten = [&](const std::vector<int>& positions) {
    Eigen::Index v = 0;
    for (int k : positions) {
      const int i = index[k - 1];
      if (i < 0 || i >= alphabet_size) {
        fail(ErrorKind::invalid_argument, "index entry out of range");
      }
      v = v * alphabet_size + i;
    }
    return v;
  };
  return {flatten(split.alpha), flatten(split.beta)};
}

MultiIndex unflatten_index(Eigen::Index row, Eigen::Index col,
                           const PartitionSplit& split, int alphabet_size) {
  MultiIndex index(split.d, 0);
  auto unflatten = [&](Eigen::Index v, const std::vector<int>& positions) {
    for (auto it = positions.rbegin(); it != positions.rend(); ++it) {
      index[*it - 1] = static_cast<int>(v % alphabet_size);
      v /= alphabet_size;
    }
  };
  unflatten(row, split.alpha);
  unflatten(col, split.beta);
  return index;
}

Matrix reshape(const CoeffTensor& t, const PartitionSplit& split, Eigen::Index cap) {
  if (split.d != t.d()) fail(ErrorKind::invalid_argument, "split degree differs from tensor");
  const int A = t.alphabet_size();
  const Eigen::Index m = t.m();
  const Eigen::Index rows = m * checked_power(A, split.alpha.size(), cap);
  const Eigen::Index cols = m * checked_power(A, split.beta.size(), cap);
  if (rows > cap || cols > cap) {
    fail(ErrorKind::too_large, "matricization exceeds dense cap of " +
                                   std::to_string(cap) + " rows/cols");
  }
  Matrix out = Matrix::Zero(rows, cols);
  for (const auto& [index, value] : t.entries()) {
    const auto [r, c] = flatten_index(index, split, A);
    out.block(r * m, c * m, m, m) = value;
  }
  return out;
}

ReducedWord word_map_plain(const MultiIndex& index, int n) {
  std::vector<Letter> letters;
  letters.reserve(index.size());
  for (int i : index) letters.push_back(i + 1);
  return ReducedWord::reduce(letters, n);
}

ReducedWord word_map_separated(const MultiIndex& index, int n) {
  const int d = static_cast<int>(index.size());
  std::vector<Letter> letters;
  letters.reserve(index.size());
  for (int s = 0; s < d; ++s) {
    if (index[s] < 0 || index[s] >= n) {
      fail(ErrorKind::invalid_argument, "index entry out of range");
    }
    letters.push_back(s * n + index[s] + 1);
  }
  return ReducedWord::reduce(letters, std::max(1, n * d));
}

ReducedWord word_map_signed(const MultiIndex& index, int n) {
  std::vector<Letter> letters;
  letters.reserve(index.size());
  for (int i : index) letters.push_back(h_letter(i + 1, n));
  return ReducedWord::reduce(letters, n);
}

namespace {

bool pair_cancels(int left, int right, int n) {
  // 1-based: i_s == n + i_{s+1} (mod 2n)
  const int diff = (left + 1) - n - (right + 1);
  return ((diff % (2 * n)) + 2 * n) % (2 * n) == 0;
}

}  // namespace

bool validate_cancellation(const MultiIndex& index, int n) {
  for (std::size_t s = 0; s + 1 < index.size(); ++s) {
    if (pair_cancels(index[s], index[s + 1], n)) return false;
  }
  return true;
}

CoeffTensor mask_adjacent_pair(const CoeffTensor& t, int s) {
  if (s < 1 || s >= t.d()) fail(ErrorKind::invalid_argument, "pair position out of range");
  CoeffTensor out = t;
  for (const auto& [index, value] : t.entries()) {
    if (pair_cancels(index[s - 1], index[s], t.n())) out.erase(index);
  }
  return out;
}

CoeffTensor apply_projection_Q(const CoeffTensor& t) {
  if (t.alphabet() != Alphabet::signed_letters) {
    fail(ErrorKind::invalid_argument, "projection Q needs the signed alphabet");
  }
  CoeffTensor out = t;
  for (int s = 1; s < t.d(); ++s) out = mask_adjacent_pair(out, s);
  return out;
}

ReducedWord index_word(const MultiIndex& index, int n, Alphabet alphabet) {
  return alphabet == Alphabet::generators ? word_map_plain(index, n)
                                          : word_map_signed(index, n);
}

WordCoefficients word_coefficients(const CoeffTensor& t) {
  WordCoefficients out;
  for (const auto& [index, value] : t.entries()) {
    auto w = index_word(index, t.n(), t.alphabet());
    auto [it, inserted] = out.try_emplace(std::move(w), value);
    if (!inserted) it->second += value;
  }
  return out;
}

CoeffTensor project_to_degree(const WordCoefficients& f, int d,
                              Alphabet alphabet, int n, int m) {
  CoeffTensor out(n, d, m, alphabet);
  for (const auto& [word, value] : f) {
    if (word.rank() != n) fail(ErrorKind::invalid_argument, "word rank differs from n");
    if (static_cast<int>(word.length()) != d) continue;
    MultiIndex index;
    bool keep = true;
    for (Letter l : word.letters()) {
      if (l > 0) {
        index.push_back(l - 1);
      } else if (alphabet == Alphabet::signed_letters) {
        index.push_back(n - l - 1);
      } else {
        keep = false;
        break;
      }
    }
    if (keep) out.set(index, value);
  }
  return out;
}

}  // namespace freelp
