#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace freelp {

/// A generator letter: +k is g_k, -k is g_k^{-1}, with k 1-based.
using Letter = int;

/// Reduced word in the free group of a given rank. The empty word is e.
class ReducedWord {
 public:
  ReducedWord() = default;
  explicit ReducedWord(int rank) : rank_(rank) {}

  /// Freely reduces `letters`. Throws invalid_argument on 0 or |letter| > rank.
  static ReducedWord reduce(std::span<const Letter> letters, int rank);
  static ReducedWord generator(int k, int rank);

  int rank() const noexcept { return rank_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const std::vector<Letter>& letters() const noexcept { return letters_; }

  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;
  friend auto operator<=>(const ReducedWord&, const ReducedWord&) = default;

 private:
  int rank_ = 1;
  std::vector<Letter> letters_;

  friend ReducedWord multiply(const ReducedWord&, const ReducedWord&);
  friend ReducedWord inverse(const ReducedWord&);
};

ReducedWord multiply(const ReducedWord& a, const ReducedWord& b);
ReducedWord inverse(const ReducedWord& w);
bool is_identity(const ReducedWord& w);

/// Element of a direct product of free groups, one reduced word per factor.
class ProductWord {
 public:
  ProductWord() = default;
  explicit ProductWord(std::vector<ReducedWord> components);
  /// Identity of the product group with the given per-factor ranks.
  static ProductWord identity(std::span<const int> ranks);

  std::size_t factors() const noexcept { return components_.size(); }
  const ReducedWord& operator[](std::size_t i) const { return components_[i]; }
  const std::vector<ReducedWord>& components() const noexcept {
    return components_;
  }
  std::vector<int> ranks() const;

  friend bool operator==(const ProductWord&, const ProductWord&) = default;
  friend auto operator<=>(const ProductWord&, const ProductWord&) = default;

 private:
  std::vector<ReducedWord> components_;
};

ProductWord multiply(const ProductWord& a, const ProductWord& b);
ProductWord inverse(const ProductWord& w);
bool is_identity(const ProductWord& w);

/// The signed alphabet h_1..h_{2n}: h_k = g_k for k <= n, g_{k-n}^{-1} otherwise.
Letter h_letter(int k, int n);

/// Position of a letter in the order +1 < -1 < +2 < -2 < ...
inline int letter_key(Letter l) { return 2 * ((l < 0 ? -l : l) - 1) + (l < 0); }

/// Number of reduced words of length <= radius in F_n.
std::uint64_t ball_size(int n, int radius);

/// All reduced words of length <= radius, ordered by (length, letter_key lex).
std::vector<ReducedWord> enumerate_ball(int n, int radius);

/// "1,-2,3"; empty string for e.
std::string to_string(const ReducedWord& w);
std::string to_string(const ProductWord& w);
ReducedWord parse_word(const std::string& text, int rank);

}  // namespace freelp
