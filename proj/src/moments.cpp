#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <optional>
#include <thread>
#include <unordered_map>

#include "freelp/error.hpp"
#include "freelp/operators.hpp"

namespace freelp {

int default_thread_count() {
  if (const char* env = std::getenv("FREELP_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

struct KeyHash {
  std::size_t operator()(const std::vector<int>& key) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (int v : key) {
      h ^= static_cast<std::size_t>(static_cast<unsigned>(v));
      h *= 0x100000001b3ull;
    }
    return h;
  }
};

// One tuple slot: coefficient and per-factor letters. Even slots (0-based)
// carry the adjoint a^* and the inverse word, odd slots a and the word.
struct Slot {
  Matrix coeff;
  std::vector<std::vector<Letter>> letters;
};

// Depth-first search over tuple positions. The reduced prefix word of every
// factor is kept as a stack; the suffix sum below a node depends only on
// (position, stacks), so it is memoized as an m x m matrix.
class MomentSearch {
 public:
  MomentSearch(const std::vector<std::array<Slot, 2>>& slots, int positions,
               std::vector<std::vector<std::size_t>> capacity, int m,
               std::size_t factors, std::uint64_t budget,
               std::atomic<std::uint64_t>& nodes)
      : slots_(slots),
        positions_(positions),
        capacity_(std::move(capacity)),
        m_(m),
        stacks_(factors),
        budget_(budget),
        nodes_(nodes) {}

  // Sum over slot choices j at `pos` of coeff_j * suffix(pos + 1).
  Matrix expand(int pos) {
    Matrix total = Matrix::Zero(m_, m_);
    for (std::size_t j = 0; j < slots_.size(); ++j) {
      if (auto child = descend(pos, j)) total += *child;
    }
    return total;
  }

  // coeff_j * suffix(pos + 1), or nothing when the branch is pruned.
  std::optional<Matrix> descend(int pos, std::size_t j) {
    if (nodes_.fetch_add(1, std::memory_order_relaxed) + 1 > budget_) {
      fail(ErrorKind::budget_exceeded, "moment search exceeded node budget");
    }
    const Slot& slot = slots_[j][pos % 2];
    std::vector<std::size_t> cancelled(stacks_.size());
    bool feasible = true;
    for (std::size_t f = 0; f < stacks_.size(); ++f) {
      cancelled[f] = push(stacks_[f], slot.letters[f]);
      if (stacks_[f].size() > capacity_[pos + 1][f]) feasible = false;
    }
    std::optional<Matrix> out;
    if (feasible) out = slot.coeff * suffix(pos + 1);
    for (std::size_t f = 0; f < stacks_.size(); ++f) {
      pop(stacks_[f], slot.letters[f], cancelled[f]);
    }
    return out;
  }

 private:
  // Appends a reduced word to a reduced stack; returns the number of letters
  // cancelled at the junction.
  static std::size_t push(std::vector<Letter>& stack, const std::vector<Letter>& word) {
    std::size_t k = 0;
    while (k < word.size() && !stack.empty() && stack.back() == -word[k]) {
      stack.pop_back();
      ++k;
    }
    stack.insert(stack.end(), word.begin() + static_cast<std::ptrdiff_t>(k), word.end());
    return k;
  }

  static void pop(std::vector<Letter>& stack, const std::vector<Letter>& word, std::size_t k) {
    stack.resize(stack.size() - (word.size() - k));
    for (std::size_t i = k; i-- > 0;) stack.push_back(-word[i]);
  }

  Matrix suffix(int pos) {
    if (pos == positions_) return Matrix::Identity(m_, m_);  // stacks are empty here
    std::vector<int> key{pos};
    for (const auto& s : stacks_) {
      key.insert(key.end(), s.begin(), s.end());
      key.push_back(0);
    }
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Matrix total = expand(pos);
    memo_.emplace(std::move(key), total);
    return total;
  }

  const std::vector<std::array<Slot, 2>>& slots_;
  int positions_;
  // capacity_[pos][f]: letters of factor f in positions pos..end.
  std::vector<std::vector<std::size_t>> capacity_;
  int m_;
  std::vector<std::vector<Letter>> stacks_;
  std::uint64_t budget_;
  std::atomic<std::uint64_t>& nodes_;
  std::unordered_map<std::vector<int>, Matrix, KeyHash> memo_;
};

}  // namespace

MomentResult moment_even(const FreeOperator& x, int q, const MomentOptions& options) {
  if (q < 1) fail(ErrorKind::invalid_argument, "moment order q must be >= 1");
  const auto terms = x.terms();
  MomentResult result;
  if (terms.empty()) return result;

  const std::size_t factors = x.factors();
  const int m = x.coefficients().m();
  const int positions = 2 * q;

  std::vector<std::array<Slot, 2>> slots;
  std::vector<std::size_t> longest(factors, 0);
  for (const auto& term : terms) {
    std::array<Slot, 2> pair;
    pair[0].coeff = term.coeff.adjoint();
    pair[1].coeff = term.coeff;
    const ProductWord inv = inverse(term.word);
    for (std::size_t f = 0; f < factors; ++f) {
      pair[0].letters.push_back(inv[f].letters());
      pair[1].letters.push_back(term.word[f].letters());
      longest[f] = std::max(longest[f], term.word[f].length());
    }
    slots.push_back(std::move(pair));
  }
  // Each remaining letter cancels at most one stacked letter.
  std::vector<std::vector<std::size_t>> capacity(positions + 1, std::vector<std::size_t>(factors));
  for (int pos = 0; pos <= positions; ++pos) {
    for (std::size_t f = 0; f < factors; ++f) {
      capacity[pos][f] = longest[f] * static_cast<std::size_t>(positions - pos);
    }
  }

  std::atomic<std::uint64_t> nodes{0};
  int threads = options.threads > 0 ? options.threads : default_thread_count();
  threads = std::clamp(threads, 1, static_cast<int>(slots.size()));

  // Root children are split into contiguous chunks, one search per thread;
  // chunk results are summed in slot order.
  std::vector<Matrix> partial(slots.size(), Matrix::Zero(m, m));
  auto work = [&](std::size_t begin, std::size_t end) {
    MomentSearch search(slots, positions, capacity, m, factors, options.node_budget, nodes);
    for (std::size_t j = begin; j < end; ++j) {
      if (auto child = search.descend(0, j)) partial[j] = *child;
    }
  };
  if (threads == 1) {
    work(0, slots.size());
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    const std::size_t chunk = (slots.size() + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      const std::size_t begin = std::min(slots.size(), t * chunk);
      const std::size_t end = std::min(slots.size(), begin + chunk);
      pool.emplace_back([&, t, begin, end] {
        try {
          work(begin, end);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  Matrix total = Matrix::Zero(m, m);
  for (const auto& p : partial) total += p;
  result.value = total.trace().real();
  result.nodes = nodes.load();
  return result;
}

MomentResult moment_even_bruteforce(const FreeOperator& x, int q, std::uint64_t tuple_cap) {
  if (q < 1) fail(ErrorKind::invalid_argument, "moment order q must be >= 1");
  const auto terms = x.terms();
  MomentResult result;
  if (terms.empty()) return result;
  const std::size_t count = terms.size();
  const int positions = 2 * q;
  std::uint64_t tuples = 1;
  for (int i = 0; i < positions; ++i) {
    tuples *= count;
    if (tuples > tuple_cap) fail(ErrorKind::budget_exceeded, "brute-force tuple cap exceeded");
  }
  std::vector<ProductWord> inverses;
  for (const auto& t : terms) inverses.push_back(inverse(t.word));
  const int m = x.coefficients().m();
  const ProductWord identity = ProductWord::identity(x.ranks());

  Complex total(0.0);
  std::vector<std::size_t> tuple(positions, 0);
  for (std::uint64_t n = 0; n < tuples; ++n) {
    ProductWord w = identity;
    Matrix product = Matrix::Identity(m, m);
    for (int pos = 0; pos < positions; ++pos) {
      const auto& term = terms[tuple[pos]];
      if (pos % 2 == 0) {
        w = multiply(w, inverses[tuple[pos]]);
        product = product * term.coeff.adjoint();
      } else {
        w = multiply(w, term.word);
        product = product * term.coeff;
      }
    }
    if (is_identity(w)) total += product.trace();
    for (int pos = positions - 1; pos >= 0; --pos) {
      if (++tuple[pos] < count) break;
      tuple[pos] = 0;
    }
  }
  result.value = total.real();
  result.nodes = tuples;
  return result;
}

double norm_p2(const FreeOperator& x) {
  if (!x.words_distinct()) {
    fail(ErrorKind::invalid_argument,
         "norm_p2 needs distinct words; use norm_even_p(x, 2) for coincident words");
  }
  double s = 0.0;
  for (const auto& [index, value] : x.coefficients().entries()) s += value.squaredNorm();
  return std::sqrt(s);
}

double norm_even_p(const FreeOperator& x, int p, const MomentOptions& options) {
  if (p < 2 || p % 2 != 0) fail(ErrorKind::invalid_argument, "p must be an even integer >= 2");
  const double moment = moment_even(x, p / 2, options).value;
  return std::pow(std::max(moment, 0.0), 1.0 / p);
}

}  // namespace freelp
