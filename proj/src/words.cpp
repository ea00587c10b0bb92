#include "freelp/words.hpp"

#include <algorithm>
#include <sstream>

#include "freelp/error.hpp"

namespace freelp {

namespace {

void check_letter(Letter l, int rank) {
  if (l == 0 || l > rank || -l > rank) {
    fail(ErrorKind::invalid_argument,
         "invalid letter " + std::to_string(l) + " for rank " +
             std::to_string(rank));
  }
}

// Appends `l` to a reduced stack, cancelling against the top.
inline void push_reduced(std::vector<Letter>& stack, Letter l) {
  if (!stack.empty() && stack.back() == -l) {
    stack.pop_back();
  } else {
    stack.push_back(l);
  }
}

}  // namespace

ReducedWord ReducedWord::reduce(std::span<const Letter> letters, int rank) {
  if (rank < 1) fail(ErrorKind::invalid_argument, "rank must be positive");
  ReducedWord w(rank);
  w.letters_.reserve(letters.size());
  for (Letter l : letters) {
    check_letter(l, rank);
    push_reduced(w.letters_, l);
  }
  return w;
}

ReducedWord ReducedWord::generator(int k, int rank) {
  const Letter l = k;
  return reduce(std::span<const Letter>(&l, 1), rank);
}

ReducedWord multiply(const ReducedWord& a, const ReducedWord& b) {
  if (a.rank_ != b.rank_) {
    fail(ErrorKind::invalid_argument, "rank mismatch in multiply");
  }
  ReducedWord out = a;
  out.letters_.reserve(a.length() + b.length());
  for (Letter l : b.letters_) push_reduced(out.letters_, l);
  return out;
}

ReducedWord inverse(const ReducedWord& w) {
  ReducedWord out(w.rank_);
  out.letters_.resize(w.letters_.size());
  std::transform(w.letters_.rbegin(), w.letters_.rend(), out.letters_.begin(),
                 [](Letter l) { return -l; });
  return out;
}

bool is_identity(const ReducedWord& w) { return w.empty(); }

ProductWord::ProductWord(std::vector<ReducedWord> components)
    : components_(std::move(components)) {}

ProductWord ProductWord::identity(std::span<const int> ranks) {
  std::vector<ReducedWord> parts;
  parts.reserve(ranks.size());
  for (int r : ranks) parts.emplace_back(r);
  return ProductWord(std::move(parts));
}

std::vector<int> ProductWord::ranks() const {
  std::vector<int> r;
  r.reserve(components_.size());
  for (const auto& c : components_) r.push_back(c.rank());
  return r;
}

ProductWord multiply(const ProductWord& a, const ProductWord& b) {
  if (a.factors() != b.factors()) {
    fail(ErrorKind::invalid_argument, "factor count mismatch in multiply");
  }
  std::vector<ReducedWord> parts;
  parts.reserve(a.factors());
  for (std::size_t i = 0; i < a.factors(); ++i) {
    parts.push_back(multiply(a[i], b[i]));
  }
  return ProductWord(std::move(parts));
}

ProductWord inverse(const ProductWord& w) {
  std::vector<ReducedWord> parts;
  parts.reserve(w.factors());
  for (const auto& c : w.components()) parts.push_back(inverse(c));
  return ProductWord(std::move(parts));
}

bool is_identity(const ProductWord& w) {
  return std::all_of(w.components().begin(), w.components().end(),
                     [](const ReducedWord& c) { return c.empty(); });
}

Letter h_letter(int k, int n) {
  if (n < 1 || k < 1 || k > 2 * n) {
    fail(ErrorKind::invalid_argument,
         "h index " + std::to_string(k) + " out of range for n=" +
             std::to_string(n));
  }
  return k <= n ? k : -(k - n);
}

std::uint64_t ball_size(int n, int radius) {
  if (n < 1 || radius < 0) fail(ErrorKind::invalid_argument, "bad ball shape");
  std::uint64_t total = 1;
  std::uint64_t shell = 2 * static_cast<std::uint64_t>(n);
  for (int k = 1; k <= radius; ++k) {
    total += shell;
    shell *= 2 * static_cast<std::uint64_t>(n) - 1;
  }
  return total;
}

std::vector<ReducedWord> enumerate_ball(int n, int radius) {
  if (n < 1 || radius < 0) fail(ErrorKind::invalid_argument, "bad ball shape");
  std::vector<Letter> alphabet;
  for (int k = 1; k <= n; ++k) {
    alphabet.push_back(k);
    alphabet.push_back(-k);
  }
  std::vector<ReducedWord> out;
  out.reserve(ball_size(n, radius));
  out.emplace_back(n);
  // Extending each word of the previous shell in alphabet order keeps the
  // shell sorted lexicographically by letter_key.
  std::size_t shell_begin = 0;
  for (int len = 1; len <= radius; ++len) {
    const std::size_t shell_end = out.size();
    for (std::size_t i = shell_begin; i < shell_end; ++i) {
      for (Letter l : alphabet) {
        const auto& prev = out[i].letters();
        if (!prev.empty() && prev.back() == -l) continue;
        std::vector<Letter> next = prev;
        next.push_back(l);
        out.push_back(ReducedWord::reduce(next, n));
      }
    }
    shell_begin = shell_end;
  }
  return out;
}

std::string to_string(const ReducedWord& w) {
  std::string s;
  for (std::size_t i = 0; i < w.letters().size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w.letters()[i]);
  }
  return s;
}

std::string to_string(const ProductWord& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.factors(); ++i) {
    if (i) s += ';';
    s += to_string(w[i]);
  }
  return s + ")";
}

ReducedWord parse_word(const std::string& text, int rank) {
  std::vector<Letter> letters;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) fail(ErrorKind::schema, "empty letter in word '" + text + "'");
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      fail(ErrorKind::schema, "bad letter '" + item + "'");
    }
    if (used != item.size()) fail(ErrorKind::schema, "bad letter '" + item + "'");
    letters.push_back(value);
  }
  return ReducedWord::reduce(letters, rank);
}

}  // namespace freelp
