#include "freelp/suites.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <map>

#include "freelp/error.hpp"
#include "freelp/random.hpp"

namespace freelp {

namespace {

constexpr double kSlack = 1e-9;

std::string split_text(const PartitionSplit& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.alpha.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(s.alpha[i]);
  }
  return out + "}";
}

SuiteCase relative_case(std::string description, double observed, double expected, double tol) {
  const double scale = std::max(1.0, std::abs(expected));
  return {std::move(description), std::abs(observed - expected) <= tol * scale, observed, expected,
          tol};
}

SuiteCase bound_case(std::string description, double small, double large, double slack) {
  return {std::move(description), small <= large + slack, small, large, slack};
}

std::uint64_t seed_for(const SuiteOptions& o, std::uint64_t salt, int instance) {
  return o.seed * 1000003ull + salt * 7919ull + static_cast<std::uint64_t>(instance);
}

void counterexample(SuiteResult& r, const SuiteOptions&) {
  for (int n : {2, 3, 4}) {
    const CoeffTensor t = transpose_counterexample(n);
    for (const Exponent& p : {Exponent(1.0), Exponent(1.5), Exponent(2.0), Exponent(3.0),
                              Exponent(4.0), Exponent::infinity()}) {
      const double row = std::pow(n, 0.5 + p.reciprocal());
      const double middle = std::pow(n, 2.0 * p.reciprocal());
      const std::string tag = "transpose counterexample n=" + std::to_string(n) + " p=" + p.str();
      const NormReport rep = intersection_norm(t, p);
      r.cases.push_back(relative_case(tag + " split {}: n^(1/2+1/p)", rep.splits[0].norm, row, 1e-9));
      r.cases.push_back(relative_case(tag + " split {1}: n^(2/p)", rep.splits[1].norm, middle, 1e-9));
      r.cases.push_back(relative_case(tag + " split {1,2}: n^(1/2+1/p)", rep.splits[2].norm, row, 1e-9));
      const SplitNorm transposed = split_norm(t, PartitionSplit::from_alpha(2, {2}), p);
      r.cases.push_back(relative_case(tag + " transposed split {2}: n", transposed.norm, n, 1e-9));
    }
  }
}

void lower_estimate(SuiteResult& r, const SuiteOptions& o) {
  KhintchineOptions ko;
  ko.moments = o.moments;
  for (int d : {1, 2, 3}) {
    for (int p : {2, 4}) {
      for (int i = 0; i < o.instances; ++i) {
        const int m = d == 3 ? 1 : 2;
        const CoeffTensor t = random_tensor(2, d, m, Alphabet::generators, seed_for(o, 10 * d + p, i));
        const KhintchineReport k = khintchine_report(t, p, ko);
        for (const auto& s : k.splits.splits) {
          r.cases.push_back(bound_case("lower estimate with constant 1, d=" + std::to_string(d) +
                                           " p=" + std::to_string(p) + " instance " +
                                           std::to_string(i) + " split " + split_text(s.split),
                                       s.norm, k.lp_lower, kSlack));
        }
      }
    }
  }
}

void degree1(SuiteResult& r, const SuiteOptions& o) {
  KhintchineOptions ko;
  ko.moments = o.moments;
  for (int i = 0; i < 3 * o.instances; ++i) {
    const int n = 1 + i % 4;
    const int m = 1 + (i / 4) % 3;
    const CoeffTensor t = random_tensor(n, 1, m, Alphabet::generators, seed_for(o, 1, i));
    for (int p : {2, 4, 6}) {
      const KhintchineReport k = khintchine_report(t, p, ko);
      const double row_col = std::max(k.splits.splits[0].norm, k.splits.splits[1].norm);
      const std::string tag = "degree-1 Khintchine n=" + std::to_string(n) + " m=" +
                              std::to_string(m) + " p=" + std::to_string(p) + " instance " +
                              std::to_string(i);
      r.cases.push_back(bound_case(tag + ": max(row,col) <= L_p", row_col, k.lp_lower, kSlack));
      r.cases.push_back(bound_case(tag + ": L_p <= 2 max(row,col)", k.lp_lower, 2.0 * row_col, kSlack));
    }
  }
}

void fell(SuiteResult& r, const SuiteOptions& o) {
  for (int n = 1; n <= 3; ++n) {
    for (int d = 1; d <= 2; ++d) {
      const CoeffTensor t = random_tensor(n, d, 1, Alphabet::generators, seed_for(o, 20 + n * 3 + d, 0));
      const FreeOperator x = free_operator(t);
      std::vector<double> base;
      for (int q = 1; q <= 3; ++q) base.push_back(moment_even(x, q, o.moments).value);
      for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int> signs(n);
        for (int i = 0; i < n; ++i) signs[i] = (mask >> i) & 1 ? -1 : 1;
        const FreeOperator y = character_twist(x, signs);
        for (int q = 1; q <= 3; ++q) {
          r.cases.push_back(relative_case(
              "absorption of a character, n=" + std::to_string(n) + " d=" + std::to_string(d) +
                  " signs " + std::to_string(mask) + " q=" + std::to_string(q),
              moment_even(y, q, o.moments).value, base[q - 1], 1e-10));
        }
      }
    }
  }
  for (int i = 0; i < o.instances; ++i) {
    const int d = 1 + i % 2;
    const CoeffTensor t = random_tensor(2, d, 1 + (i / 2) % 2, Alphabet::generators, seed_for(o, 30, i));
    const FreeOperator x = free_operator(t);
    const FreeOperator y = double_with_regular(x);
    for (int q = 1; q <= 3; ++q) {
      r.cases.push_back(relative_case("absorption of the regular representation, instance " +
                                          std::to_string(i) + " q=" + std::to_string(q),
                                      moment_even(y, q, o.moments).value,
                                      moment_even(x, q, o.moments).value, 1e-10));
    }
  }
}

void converse(SuiteResult& r, const SuiteOptions& o) {
  for (int d = 1; d <= 3; ++d) {
    for (int p : {2, 4}) {
      for (int i = 0; i < o.instances; ++i) {
        const int m = d == 3 ? 1 : 2;
        const CoeffTensor t = random_tensor(2, d, m, Alphabet::generators, seed_for(o, 40 + 10 * d + p, i));
        const double lp = norm_even_p(tensor_power_operator(t), p, o.moments);
        const NormReport spectrum = partition_spectrum(t, p);
        for (const auto& s : spectrum.splits) {
          r.cases.push_back(bound_case("tensor-power upper bound with constant 1, d=" +
                                           std::to_string(d) + " p=" + std::to_string(p) +
                                           " instance " + std::to_string(i) + " split " +
                                           split_text(s.split),
                                       s.norm, lp, kSlack));
        }
      }
    }
  }
}

void transposition(SuiteResult& r, const SuiteOptions& o) {
  const Exponent inf = Exponent::infinity();
  for (int i = 0; i < o.instances; ++i) {
    const int n = 1 + i % 3;
    const int m = 1 + (i / 3) % 3;
    const CoeffTensor t = random_tensor(n, 2, m, Alphabet::generators, seed_for(o, 50, i));
    const TranspositionTerms terms = transposition_terms(t);
    const double row = split_norm(t, PartitionSplit::consecutive(2, 0), inf).norm;
    const double col = split_norm(t, PartitionSplit::consecutive(2, 2), inf).norm;
    const std::string tag = "transposition estimate terms, instance " + std::to_string(i);
    r.cases.push_back(bound_case(tag + ": B <= A", terms.b, terms.a, kSlack));
    r.cases.push_back(bound_case(tag + ": B <= C", terms.b, terms.c, kSlack));
    r.cases.push_back(bound_case(tag + ": A <= row split", terms.a, row, kSlack));
    r.cases.push_back(bound_case(tag + ": C <= column split", terms.c, col, kSlack));
  }
}

void signed_alphabet(SuiteResult& r, const SuiteOptions& o) {
  for (int n = 1; n <= 3; ++n) {
    for (int d = 1; d <= 3; ++d) {
      int mismatches = 0;
      for (const auto& index : all_indices(2 * n, d)) {
        bool cancels = false;
        for (int s = 0; s + 1 < d; ++s) {
          cancels = cancels || word_map_signed({index[s], index[s + 1]}, n).empty();
        }
        if (validate_cancellation(index, n) == cancels) ++mismatches;
      }
      r.cases.push_back({"cancellation property agrees with free reduction, n=" + std::to_string(n) +
                             " d=" + std::to_string(d),
                         mismatches == 0, static_cast<double>(mismatches), 0.0, 0.0});
    }
  }
  KhintchineOptions ko;
  ko.moments = o.moments;
  for (int i = 0; i < o.instances; ++i) {
    const CoeffTensor q = random_tensor(2, 2, 1 + i % 2, Alphabet::signed_letters, seed_for(o, 60, i));
    r.cases.push_back({"projection Q is idempotent, instance " + std::to_string(i),
                       apply_projection_Q(q) == q, 0.0, 0.0, 0.0});
    for (int p : {2, 4}) {
      const KhintchineReport k = khintchine_report(q, p, ko);
      for (const auto& s : k.splits.splits) {
        r.cases.push_back(bound_case("signed lower estimate with constant 1, p=" + std::to_string(p) +
                                         " instance " + std::to_string(i) + " split " +
                                         split_text(s.split),
                                     s.norm, k.lp_lower, kSlack));
      }
    }

    // Unprojected signed tensor split into the pairs reducing to e and the rest.
    const CoeffTensor raw = random_tensor(4, 2, 1 + i % 2, Alphabet::generators, seed_for(o, 61, i));
    CoeffTensor total(2, 2, raw.m(), Alphabet::signed_letters);
    for (const auto& [index, value] : raw.entries()) total.set(index, value);
    const CoeffTensor off = apply_projection_Q(total);
    const CoeffTensor diag = total - off;
    const double lt = norm_even_p(free_operator(total), 4, o.moments);
    const double ld = norm_even_p(free_operator(diag), 4, o.moments);
    const double lo = norm_even_p(free_operator(off), 4, o.moments);
    r.cases.push_back({"signed diagonal plus off-diagonal reconstructs the total, instance " +
                           std::to_string(i),
                       diag + off == total, 0.0, 0.0, 0.0});
    r.cases.push_back(bound_case("signed triangle inequality p=4, instance " + std::to_string(i), lt,
                                 ld + lo, kSlack));
  }
}

void oracle(SuiteResult& r, const SuiteOptions& o) {
  std::uint64_t dfs_nodes = 0;
  std::uint64_t brute_nodes = 0;
  for (int i = 0; i < 50; ++i) {
    const int n = 1 + i % 2;
    const int d = 1 + (i / 2) % 2;
    const int m = 1 + (i / 4) % 2;
    const int q = 1 + (i / 8) % 3;
    const CoeffTensor t = random_tensor(n, d, m, Alphabet::generators, seed_for(o, 70, i));
    const FreeOperator x = free_operator(t);
    const MomentResult dfs = moment_even(x, q, o.moments);
    const MomentResult brute = moment_even_bruteforce(x, q);
    if (q == 3) {
      dfs_nodes += dfs.nodes;
      brute_nodes += brute.nodes;
    }
    r.cases.push_back(relative_case("pruned search equals enumeration, n=" + std::to_string(n) +
                                        " d=" + std::to_string(d) + " m=" + std::to_string(m) +
                                        " q=" + std::to_string(q),
                                    dfs.value, brute.value, 1e-10));
  }
  const double ratio = dfs_nodes == 0 ? 0.0 : static_cast<double>(brute_nodes) / dfs_nodes;
  r.cases.push_back({"enumerated tuples / search nodes over the q=3 cases", ratio >= 10.0, ratio,
                     10.0, 0.0});
}

using SuiteFn = std::function<void(SuiteResult&, const SuiteOptions&)>;

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> fns{
      {"counterexample", counterexample}, {"lower-estimate", lower_estimate},
      {"degree1", degree1},               {"fell", fell},
      {"converse", converse},             {"transposition", transposition},
      {"signed", signed_alphabet},        {"oracle", oracle},
  };
  return fns;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"counterexample", "lower-estimate", "degree1",
                                              "fell",           "converse",       "transposition",
                                              "signed",         "oracle"};
  return names;
}

std::vector<SuiteResult> run_suites(const std::string& name, const SuiteOptions& options) {
  std::vector<std::string> selected;
  if (name == "all") {
    selected = suite_names();
  } else if (registry().count(name)) {
    selected = {name};
  } else {
    fail(ErrorKind::invalid_argument, "unknown suite '" + name + "'");
  }
  std::vector<SuiteResult> out;
  for (const auto& s : selected) {
    SuiteResult r;
    r.suite = s;
    const auto start = std::chrono::steady_clock::now();
    registry().at(s)(r, options);
    r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(r));
  }
  return out;
}

CoeffTensor transpose_counterexample(int n) {
  CoeffTensor t(n, 2, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Matrix e = Matrix::Zero(n, n);
      e(j, i) = 1.0;
      t.set({i, j}, e);
    }
  }
  return t;
}

TranspositionTerms transposition_terms(const CoeffTensor& t) {
  if (t.d() != 2) fail(ErrorKind::invalid_argument, "transposition terms need d = 2");
  const int a = t.alphabet_size();
  const int m = t.m();
  const Exponent inf = Exponent::infinity();
  TranspositionTerms out;
  for (int j = 0; j < a; ++j) {
    Matrix s = Matrix::Zero(m, m);
    for (int i = 0; i < a; ++i) {
      const Matrix x = t.at({i, j});
      s += x * x.adjoint();
    }
    out.a = std::max(out.a, std::sqrt(schatten_norm(s, inf)));
  }
  for (int i = 0; i < a; ++i) {
    Matrix s = Matrix::Zero(m, m);
    for (int j = 0; j < a; ++j) {
      const Matrix x = t.at({i, j});
      s += x.adjoint() * x;
    }
    out.c = std::max(out.c, std::sqrt(schatten_norm(s, inf)));
  }
  for (const auto& [index, value] : t.entries()) out.b = std::max(out.b, schatten_norm(value, inf));
  return out;
}

}  // namespace freelp
