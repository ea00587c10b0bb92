#include <cmath>
#include <random>
#include <unordered_map>

#include "freelp/error.hpp"
#include "freelp/operators.hpp"

namespace freelp {

namespace {

struct WordHash {
  std::size_t operator()(const ReducedWord& w) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (Letter l : w.letters()) {
      h ^= static_cast<std::size_t>(static_cast<unsigned>(l));
      h *= 0x100000001b3ull;
    }
    return h;
  }
};

// Power iteration on A^T A (or A^* A) given apply / apply_adjoint. Returns the
// square root of the last Rayleigh quotient.
template <typename Vec, typename Apply, typename Adjoint>
TruncationResult power_iteration(Vec x, Apply apply, Adjoint adjoint,
                                 const TruncationOptions& options) {
  TruncationResult result;
  double norm = x.norm();
  if (norm == 0.0) return result;
  x /= norm;
  double previous = -1.0;
  for (int it = 1; it <= options.max_iter; ++it) {
    const Vec y = apply(x);
    const double rayleigh = y.squaredNorm();
    result.iterations = it;
    result.value = std::sqrt(rayleigh);
    if (rayleigh == 0.0) {
      result.converged = true;
      break;
    }
    if (previous >= 0.0 && std::abs(rayleigh - previous) <= options.tol * rayleigh) {
      result.converged = true;
      break;
    }
    previous = rayleigh;
    x = adjoint(y);
    norm = x.norm();
    if (norm == 0.0) {
      result.converged = true;
      break;
    }
    x /= norm;
  }
  return result;
}

// a (x) sum_i lambda(g_i) over all generators, one term per generator.
std::optional<Matrix> uniform_generator_sum(const FreeOperator& x) {
  const int rank = x.ranks()[0];
  const auto terms = x.terms();
  if (terms.size() != static_cast<std::size_t>(rank)) return std::nullopt;
  std::vector<bool> seen(rank, false);
  for (const auto& term : terms) {
    const auto& letters = term.word[0].letters();
    if (letters.size() != 1 || letters[0] < 1 || seen[letters[0] - 1]) return std::nullopt;
    seen[letters[0] - 1] = true;
    if (term.coeff != terms.front().coeff) return std::nullopt;
  }
  return terms.front().coeff;
}

std::size_t pattern_index(int length, std::uint64_t bits) {
  return (std::size_t{1} << length) - 1 + bits;
}

// Compression of S = sum_{i<=N} lambda(g_i) to the ball of radius L, reduced to
// sign patterns of reduced words. Bit k-1 of a length-k pattern is the first
// letter, set when that letter is an inverse. In the normalized class basis S
// maps pattern s to (+,s) with weight sqrt(N) if s starts with + (or s = e)
// and sqrt(N-1) otherwise, and s = (-,s') additionally to s' with weight
// sqrt(N) if s' is empty or starts with -, sqrt(N-1) otherwise.
TruncationResult reduced_generator_sum(int rank, int radius, const TruncationOptions& options) {
  const double n = rank;
  const double full = std::sqrt(n);
  const double less = std::sqrt(n - 1.0);
  const std::size_t domain = pattern_index(radius + 1, 0);
  const std::size_t range = pattern_index(radius + 2, 0);
  if (range > options.ball_cap) fail(ErrorKind::too_large, "pattern space exceeds ball cap");

  auto apply = [&](const Eigen::VectorXd& x) {
    Eigen::VectorXd y = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(range));
    y(1) += full * x(0);
    for (int k = 1; k <= radius; ++k) {
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << k); ++bits) {
        const double v = x(static_cast<Eigen::Index>(pattern_index(k, bits)));
        const bool inverse_first = (bits >> (k - 1)) & 1u;
        y(static_cast<Eigen::Index>(pattern_index(k + 1, bits))) += (inverse_first ? less : full) * v;
        if (inverse_first) {
          const std::uint64_t rest = bits & ((std::uint64_t{1} << (k - 1)) - 1);
          const bool same = k == 1 || ((bits >> (k - 2)) & 1u);
          y(static_cast<Eigen::Index>(pattern_index(k - 1, rest))) += (same ? full : less) * v;
        }
      }
    }
    return y;
  };
  auto adjoint = [&](const Eigen::VectorXd& y) {
    Eigen::VectorXd x(static_cast<Eigen::Index>(domain));
    x(0) = full * y(1);
    for (int k = 1; k <= radius; ++k) {
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << k); ++bits) {
        const bool inverse_first = (bits >> (k - 1)) & 1u;
        double v = (inverse_first ? less : full) *
                   y(static_cast<Eigen::Index>(pattern_index(k + 1, bits)));
        if (inverse_first) {
          const std::uint64_t rest = bits & ((std::uint64_t{1} << (k - 1)) - 1);
          const bool same = k == 1 || ((bits >> (k - 2)) & 1u);
          v += (same ? full : less) * y(static_cast<Eigen::Index>(pattern_index(k - 1, rest)));
        }
        x(static_cast<Eigen::Index>(pattern_index(k, bits))) = v;
      }
    }
    return x;
  };
  const Eigen::VectorXd start = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(domain));
  TruncationResult result = power_iteration(start, apply, adjoint, options);
  result.dimension = domain;
  result.reduced = true;
  return result;
}

}  // namespace

TruncationResult opnorm_lower_trunc(const FreeOperator& x, int radius,
                                    const TruncationOptions& options) {
  if (x.factors() != 1) fail(ErrorKind::invalid_argument, "compression needs a single free group");
  if (radius < 0) fail(ErrorKind::invalid_argument, "radius must be >= 0");
  const int rank = x.ranks()[0];
  const auto terms = x.terms();
  if (terms.empty()) {
    TruncationResult zero;
    zero.converged = true;
    return zero;
  }

  if (options.use_symmetry && rank >= 2) {
    if (auto a = uniform_generator_sum(x)) {
      TruncationResult r = reduced_generator_sum(rank, radius, options);
      r.value *= schatten_norm(*a, Exponent::infinity());
      return r;
    }
  }

  std::size_t longest = 0;
  for (const auto& term : terms) longest = std::max(longest, term.word[0].length());
  if (ball_size(rank, radius + static_cast<int>(longest)) > options.ball_cap) {
    fail(ErrorKind::too_large, "word ball exceeds ball cap");
  }
  const auto domain = enumerate_ball(rank, radius);
  const auto range = enumerate_ball(rank, radius + static_cast<int>(longest));
  std::unordered_map<ReducedWord, std::size_t, WordHash> position;
  position.reserve(range.size());
  for (std::size_t i = 0; i < range.size(); ++i) position.emplace(range[i], i);

  // target[v * T + t]: range position of w_t v.
  const std::size_t count = terms.size();
  std::vector<std::size_t> target(domain.size() * count);
  for (std::size_t v = 0; v < domain.size(); ++v) {
    for (std::size_t t = 0; t < count; ++t) {
      target[v * count + t] = position.at(multiply(terms[t].word[0], domain[v]));
    }
  }

  const Eigen::Index m = x.coefficients().m();
  using Block = Eigen::Map<Eigen::VectorXcd>;
  using ConstBlock = Eigen::Map<const Eigen::VectorXcd>;
  auto apply = [&](const Eigen::VectorXcd& in) {
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(range.size()) * m);
    for (std::size_t v = 0; v < domain.size(); ++v) {
      ConstBlock src(in.data() + v * m, m);
      for (std::size_t t = 0; t < count; ++t) {
        Block(out.data() + target[v * count + t] * m, m) += terms[t].coeff * src;
      }
    }
    return out;
  };
  auto adjoint = [&](const Eigen::VectorXcd& in) {
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(domain.size()) * m);
    for (std::size_t v = 0; v < domain.size(); ++v) {
      Block dst(out.data() + v * m, m);
      for (std::size_t t = 0; t < count; ++t) {
        dst += terms[t].coeff.adjoint() * ConstBlock(in.data() + target[v * count + t] * m, m);
      }
    }
    return out;
  };

  std::mt19937_64 rng(options.seed);
  std::normal_distribution<double> normal;
  Eigen::VectorXcd start(static_cast<Eigen::Index>(domain.size()) * m);
  for (Eigen::Index i = 0; i < start.size(); ++i) start(i) = Complex(normal(rng), normal(rng));

  TruncationResult result = power_iteration(start, apply, adjoint, options);
  result.dimension = domain.size() * static_cast<std::uint64_t>(m);
  return result;
}

}  // namespace freelp
