#include <CLI11.hpp>
#include <iostream>

#include "freelp/error.hpp"
#include "freelp/io.hpp"
#include "freelp/random.hpp"
#include "freelp/report.hpp"
#include "freelp/suites.hpp"

using namespace freelp;

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitUnconverged = 4;

struct ComputeArgs {
  std::string input;
  std::string output = "-";
  std::string format = "json";
  std::string norm = "intersection";
  std::string p = "2";
  std::vector<int> alpha;
  bool has_alpha = false;
  int depth = 4;
  double tol = 1e-8;
  int max_iter = 0;
  std::uint64_t node_budget = MomentOptions{}.node_budget;
  std::uint64_t seed = SumNormOptions{}.seed;
  std::int64_t dense_cap = kDefaultDenseCap;
  std::uint64_t ball_cap = TruncationOptions{}.ball_cap;
  bool strict = false;
};

struct VerifyArgs {
  std::string suite = "all";
  std::string output = "-";
  std::string format = "json";
  std::uint64_t seed = 1;
  int instances = SuiteOptions{}.instances;
  std::uint64_t node_budget = MomentOptions{}.node_budget;
};

struct RandomArgs {
  int n = 2;
  int d = 2;
  int m = 1;
  std::string alphabet = "generators";
  std::uint64_t seed = 0;
  double density = 1.0;
  std::string output = "-";
};

void emit(const std::string& path, const std::string& format, const Json& json,
          const std::string& csv) {
  write_text(path, format == "csv" ? csv : json.dump(2) + "\n");
}

int run_compute(const ComputeArgs& a) {
  const CoeffTensor t = load_tensor(a.input);
  const Exponent p = Exponent::parse(a.p);
  MomentOptions moments;
  moments.node_budget = a.node_budget;
  moments.threads = 0;

  if (a.norm == "intersection" || a.norm == "spectrum") {
    NormReport r;
    if (a.has_alpha) {
      r.p = p;
      r.splits.push_back(split_norm(t, PartitionSplit::from_alpha(t.d(), a.alpha), p, a.dense_cap));
      r.value = r.splits.front().norm;
    } else if (a.norm == "intersection") {
      r = intersection_norm(t, p, a.dense_cap);
    } else {
      r = partition_spectrum(t, p, a.dense_cap);
    }
    emit(a.output, a.format, to_json(r), to_csv(r));
    return 0;
  }
  if (a.norm == "sum") {
    SumNormOptions o;
    o.tol = a.tol;
    if (a.max_iter > 0) o.max_iter = a.max_iter;
    o.seed = a.seed;
    o.cap = a.dense_cap;
    const NormReport r = sum_norm(t, p, o);
    emit(a.output, a.format, to_json(r), to_csv(r));
    return a.strict && !r.sum->converged ? kExitUnconverged : 0;
  }
  if (a.norm == "lp") {
    KhintchineOptions o;
    o.moments = moments;
    o.depth = a.depth;
    o.cap = a.dense_cap;
    o.truncation.ball_cap = a.ball_cap;
    if (a.max_iter > 0) o.truncation.max_iter = a.max_iter;
    const KhintchineReport r = khintchine_report(t, p, o);
    emit(a.output, a.format, to_json(r), to_csv(r));
    return 0;
  }
  if (a.norm == "opnorm-lower") {
    TruncationOptions o;
    o.tol = a.tol;
    if (a.max_iter > 0) o.max_iter = a.max_iter;
    o.ball_cap = a.ball_cap;
    o.seed = a.seed;
    const TruncationResult r = opnorm_lower_trunc(free_operator(t), a.depth, o);
    emit(a.output, a.format, to_json(r, a.depth), to_csv(r, a.depth));
    return a.strict && !r.converged ? kExitUnconverged : 0;
  }
  fail(ErrorKind::invalid_argument, "unknown norm '" + a.norm + "'");
}

int run_verify(const VerifyArgs& a) {
  SuiteOptions o;
  o.seed = a.seed;
  o.instances = a.instances;
  o.moments.node_budget = a.node_budget;
  o.moments.threads = 0;
  const std::vector<SuiteResult> results = run_suites(a.suite, o);
  emit(a.output, a.format, to_json(results), to_csv(results));
  bool pass = true;
  for (const auto& r : results) {
    std::size_t passed = 0;
    for (const auto& c : r.cases) passed += c.pass;
    std::cerr << r.suite << ": " << passed << "/" << r.cases.size() << " cases passed ("
              << r.wall_time << " s)\n";
    pass = pass && r.pass();
  }
  return pass ? 0 : kExitVerifyFailed;
}

int run_random(const RandomArgs& a) {
  const CoeffTensor t = random_tensor(a.n, a.d, a.m, parse_alphabet(a.alphabet), a.seed, a.density);
  write_text(a.output, tensor_to_json(t).dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Norms of free polynomials with matrix coefficients"};
  app.require_subcommand(1);

  ComputeArgs ca;
  auto* compute = app.add_subcommand("compute", "Compute a norm report for a tensor file");
  compute->add_option("--input", ca.input, "Tensor file")->required();
  compute->add_option("--output", ca.output, "Report file ('-' for stdout)");
  compute->add_option("--format", ca.format)->check(CLI::IsMember({"json", "csv"}));
  compute->add_option("--norm", ca.norm)
      ->check(CLI::IsMember({"intersection", "sum", "spectrum", "lp", "opnorm-lower"}));
  compute->add_option("--p", ca.p, "Exponent, a number >= 1 or inf");
  auto* alpha = compute->add_option("--alpha", ca.alpha, "Explicit split, e.g. 1,3")->delimiter(',');
  compute->add_option("--depth", ca.depth, "Ball radius for p = inf")->check(CLI::NonNegativeNumber);
  compute->add_option("--tol", ca.tol);
  compute->add_option("--max-iter", ca.max_iter)->check(CLI::PositiveNumber);
  compute->add_option("--node-budget", ca.node_budget);
  compute->add_option("--seed", ca.seed);
  compute->add_option("--dense-cap", ca.dense_cap, "Largest reshaped dimension")->check(CLI::PositiveNumber);
  compute->add_option("--ball-cap", ca.ball_cap, "Largest word ball");
  compute->add_flag("--strict", ca.strict, "Exit 4 when an iterative method does not converge");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("suite", va.suite)
      ->check(CLI::IsMember({"counterexample", "lower-estimate", "degree1", "fell", "converse",
                             "transposition", "signed", "oracle", "all"}));
  verify->add_option("--output", va.output);
  verify->add_option("--format", va.format)->check(CLI::IsMember({"json", "csv"}));
  verify->add_option("--seed", va.seed);
  verify->add_option("--instances", va.instances, "Random instances per configuration")
      ->check(CLI::PositiveNumber);
  verify->add_option("--node-budget", va.node_budget);

  RandomArgs ra;
  auto* random = app.add_subcommand("random", "Write a seeded random tensor");
  random->add_option("--n", ra.n)->check(CLI::PositiveNumber);
  random->add_option("--d", ra.d)->check(CLI::NonNegativeNumber);
  random->add_option("--m", ra.m)->check(CLI::PositiveNumber);
  random->add_option("--alphabet", ra.alphabet)->check(CLI::IsMember({"generators", "signed"}));
  random->add_option("--seed", ra.seed);
  random->add_option("--density", ra.density);
  random->add_option("--output", ra.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  ca.has_alpha = alpha->count() > 0;

  try {
    if (compute->parsed()) return run_compute(ca);
    if (verify->parsed()) return run_verify(va);
    return run_random(ra);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::too_large:
      case ErrorKind::budget_exceeded:
        return kExitBudget;
      default:
        return kExitUsage;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
