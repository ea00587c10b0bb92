#include <algorithm>

#include "freelp/error.hpp"
#include "freelp/operators.hpp"

namespace freelp {

namespace {

// Verdict of `small <= large + slack` when `large` is only known to lie in
// [large_lower, large_upper].
Check compare(std::string name, double small, double large_lower, double large_upper,
              double slack) {
  Check c{std::move(name)};
  c.slack = large_lower + slack - small;
  if (c.slack >= 0.0) {
    c.pass = true;
  } else if (small > large_upper + slack) {
    c.pass = false;
  } else {
    c.pass = false;
    c.conclusive = false;
  }
  return c;
}

}  // namespace

KhintchineReport khintchine_report(const CoeffTensor& t, const Exponent& p,
                                   const KhintchineOptions& options) {
  if (!p.is_infinite() && !p.is_even_integer()) {
    fail(ErrorKind::invalid_argument, "free-side norms need an even integer p or inf");
  }
  KhintchineReport report;
  report.p = p;
  report.splits = intersection_norm(t, p, options.cap);

  const FreeOperator x = free_operator(t);
  if (p.is_infinite()) {
    report.lp_lower = opnorm_lower_trunc(x, options.depth, options.truncation).value;
    report.lp_upper = 0.0;
    for (const auto& s : report.splits.splits) report.lp_upper += s.norm;
    report.lp_exact = false;
  } else {
    report.lp_lower = norm_even_p(x, static_cast<int>(p.value()), options.moments);
    report.lp_upper = report.lp_lower;
  }

  for (const auto& s : report.splits.splits) {
    report.ratios.push_back(s.norm > 0.0 ? report.lp_lower / s.norm : 0.0);
    const int k = static_cast<int>(s.split.alpha.size());
    report.checks.push_back(compare("lower estimate k=" + std::to_string(k), s.norm,
                                    report.lp_lower, report.lp_upper, options.slack));
  }

  if (t.d() == 1) {
    const double row_col = std::max(report.splits.splits[0].norm, report.splits.splits[1].norm);
    Check upper{"degree-1 upper 2*max(row,col)"};
    upper.slack = 2.0 * row_col + options.slack - report.lp_upper;
    if (report.lp_exact) {
      upper.pass = upper.slack >= 0.0;
    } else if (report.lp_lower > 2.0 * row_col + options.slack) {
      upper.slack = 2.0 * row_col + options.slack - report.lp_lower;
      upper.pass = false;
    } else {
      upper.pass = false;
      upper.conclusive = false;
    }
    report.checks.push_back(upper);
  }
  return report;
}

}  // namespace freelp
