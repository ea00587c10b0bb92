#include "freelp/operators.hpp"

#include <set>

#include "freelp/error.hpp"

namespace freelp {

FreeOperator::FreeOperator(CoeffTensor coefficients, std::vector<int> ranks,
                           std::map<MultiIndex, ProductWord> words)
    : coeffs_(std::move(coefficients)), ranks_(std::move(ranks)), words_(std::move(words)) {
  for (int r : ranks_) {
    if (r < 1) fail(ErrorKind::invalid_argument, "group ranks must be positive");
  }
  for (const auto& [index, value] : coeffs_.entries()) {
    auto it = words_.find(index);
    if (it == words_.end()) {
      fail(ErrorKind::invalid_argument, "supported index without a word");
    }
    if (it->second.ranks() != ranks_) {
      fail(ErrorKind::invalid_argument, "word does not live in the operator's group");
    }
  }
}

std::vector<FreeOperator::Term> FreeOperator::terms() const {
  std::vector<Term> out;
  out.reserve(coeffs_.nnz());
  for (const auto& [index, value] : coeffs_.entries()) {
    out.push_back(Term{index, value, words_.at(index)});
  }
  return out;
}

bool FreeOperator::words_distinct() const {
  std::set<ProductWord> seen;
  for (const auto& [index, value] : coeffs_.entries()) {
    if (!seen.insert(words_.at(index)).second) return false;
  }
  return true;
}

FreeOperator free_operator(const CoeffTensor& t) {
  std::map<MultiIndex, ProductWord> words;
  for (const auto& [index, value] : t.entries()) {
    words.emplace(index, ProductWord({index_word(index, t.n(), t.alphabet())}));
  }
  return FreeOperator(t, {t.n()}, std::move(words));
}

FreeOperator separated_operator(const CoeffTensor& t) {
  if (t.alphabet() != Alphabet::generators) {
    fail(ErrorKind::invalid_argument, "separated word map needs the generator alphabet");
  }
  const int rank = std::max(1, t.n() * t.d());
  std::map<MultiIndex, ProductWord> words;
  for (const auto& [index, value] : t.entries()) {
    words.emplace(index, ProductWord({word_map_separated(index, t.n())}));
  }
  return FreeOperator(t, {rank}, std::move(words));
}

FreeOperator tensor_power_operator(const CoeffTensor& t) {
  if (t.alphabet() != Alphabet::generators) {
    fail(ErrorKind::invalid_argument, "tensor power operator needs the generator alphabet");
  }
  std::map<MultiIndex, ProductWord> words;
  for (const auto& [index, value] : t.entries()) {
    std::vector<ReducedWord> parts;
    for (int i : index) parts.push_back(ReducedWord::generator(i + 1, t.n()));
    words.emplace(index, ProductWord(std::move(parts)));
  }
  return FreeOperator(t, std::vector<int>(t.d(), t.n()), std::move(words));
}

FreeOperator character_twist(const FreeOperator& x, const std::vector<int>& signs) {
  std::size_t expected = 0;
  for (int r : x.ranks()) expected += static_cast<std::size_t>(r);
  if (signs.size() != expected) {
    fail(ErrorKind::invalid_argument, "need one sign per generator of every factor");
  }
  for (int s : signs) {
    if (s != 1 && s != -1) fail(ErrorKind::invalid_argument, "signs must be +1 or -1");
  }
  CoeffTensor twisted = x.coefficients();
  for (const auto& term : x.terms()) {
    int value = 1;
    std::size_t offset = 0;
    for (std::size_t f = 0; f < x.factors(); ++f) {
      for (Letter l : term.word[f].letters()) value *= signs[offset + std::abs(l) - 1];
      offset += static_cast<std::size_t>(x.ranks()[f]);
    }
    twisted.set(term.index, term.coeff * static_cast<double>(value));
  }
  return FreeOperator(std::move(twisted), x.ranks(), x.words());
}

FreeOperator double_with_regular(const FreeOperator& x) {
  std::vector<int> ranks = x.ranks();
  ranks.insert(ranks.end(), x.ranks().begin(), x.ranks().end());
  std::map<MultiIndex, ProductWord> words;
  for (const auto& [index, word] : x.words()) {
    std::vector<ReducedWord> parts = word.components();
    parts.insert(parts.end(), word.components().begin(), word.components().end());
    words.emplace(index, ProductWord(std::move(parts)));
  }
  return FreeOperator(x.coefficients(), std::move(ranks), std::move(words));
}

}  // namespace freelp
