#include "freelp/report.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace freelp {

bool SuiteResult::pass() const {
  return std::all_of(cases.begin(), cases.end(), [](const SuiteCase& c) { return c.pass; });
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

Json exponent_to_json(const Exponent& p) {
  if (p.is_infinite()) return "inf";
  return p.value();
}

namespace {

std::string alpha_text(const std::vector<int>& alpha) {
  std::string s;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (i > 0) s += ' ';
    s += std::to_string(alpha[i]);
  }
  return s;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Json to_json(const NormReport& r) {
  Json j;
  j["p"] = exponent_to_json(r.p);
  j["splits"] = Json::array();
  for (const auto& s : r.splits) {
    j["splits"].push_back({{"alpha", s.split.alpha},
                           {"norm", s.norm},
                           {"T", s.transposition},
                           {"transposed", s.transposed}});
  }
  j["value"] = r.value;
  j["argmax_k"] = r.argmax_k;
  if (r.sum) {
    j["upper"] = r.sum->upper;
    j["lower"] = r.sum->lower;
    j["gap"] = r.sum->gap;
    j["converged"] = r.sum->converged;
    j["iterations"] = r.sum->iterations;
  }
  return j;
}

Json to_json(const KhintchineReport& r) {
  Json j = to_json(r.splits);
  Json lp{{"p", exponent_to_json(r.p)}};
  if (r.lp_exact) {
    lp["value"] = r.lp_lower;
  } else {
    lp["value"] = {{"lower", r.lp_lower}, {"upper", r.lp_upper}};
  }
  j["lp"] = lp;
  j["ratios"] = r.ratios;
  j["checks"] = Json::array();
  for (const auto& c : r.checks) {
    j["checks"].push_back(
        {{"name", c.name}, {"pass", c.pass}, {"slack", c.slack}, {"conclusive", c.conclusive}});
  }
  return j;
}

Json to_json(const TruncationResult& r, int radius) {
  return {{"p", "inf"},
          {"radius", radius},
          {"lower", r.value},
          {"converged", r.converged},
          {"iterations", r.iterations},
          {"dimension", r.dimension},
          {"reduced", r.reduced}};
}

Json to_json(const SuiteResult& r) {
  Json j{{"suite", r.suite}, {"pass", r.pass()}, {"wall_time", r.wall_time}};
  j["cases"] = Json::array();
  for (const auto& c : r.cases) {
    j["cases"].push_back({{"description", c.description},
                          {"pass", c.pass},
                          {"observed", c.observed},
                          {"expected", c.expected},
                          {"tolerance", c.tolerance}});
  }
  return j;
}

Json to_json(const std::vector<SuiteResult>& results) {
  Json j = Json::array();
  for (const auto& r : results) j.push_back(to_json(r));
  return j;
}

std::string to_csv(const NormReport& r) {
  std::ostringstream os;
  os << "p,alpha,norm,T,transposed\n";
  for (const auto& s : r.splits) {
    os << r.p.str() << ',' << csv_quote(alpha_text(s.split.alpha)) << ',' << format_double(s.norm)
       << ',' << s.transposition << ',' << (s.transposed ? "true" : "false") << '\n';
  }
  return os.str();
}

std::string to_csv(const KhintchineReport& r) {
  std::ostringstream os;
  os << "p,alpha,norm,T,transposed,lp_lower,lp_upper,ratio\n";
  for (std::size_t i = 0; i < r.splits.splits.size(); ++i) {
    const auto& s = r.splits.splits[i];
    os << r.p.str() << ',' << csv_quote(alpha_text(s.split.alpha)) << ',' << format_double(s.norm)
       << ',' << s.transposition << ',' << (s.transposed ? "true" : "false") << ','
       << format_double(r.lp_lower) << ',' << format_double(r.lp_upper) << ','
       << format_double(r.ratios[i]) << '\n';
  }
  return os.str();
}

std::string to_csv(const TruncationResult& r, int radius) {
  std::ostringstream os;
  os << "p,radius,lower,converged,iterations,dimension\n";
  os << "inf," << radius << ',' << format_double(r.value) << ','
     << (r.converged ? "true" : "false") << ',' << r.iterations << ',' << r.dimension << '\n';
  return os.str();
}

std::string to_csv(const std::vector<SuiteResult>& results) {
  std::ostringstream os;
  os << "suite,description,pass,observed,expected,tolerance\n";
  for (const auto& r : results) {
    for (const auto& c : r.cases) {
      os << r.suite << ',' << csv_quote(c.description) << ',' << (c.pass ? "true" : "false") << ','
         << format_double(c.observed) << ',' << format_double(c.expected) << ','
         << format_double(c.tolerance) << '\n';
    }
  }
  return os.str();
}

}  // namespace freelp
