#pragma once

#include <string>
#include <vector>

#include "freelp/io.hpp"
#include "freelp/operators.hpp"
#include "freelp/schatten.hpp"

namespace freelp {

/// One verification case. `observed` and `expected` are free-form numbers
/// whose meaning is given by the description.
struct SuiteCase {
  std::string description;
  bool pass = false;
  double observed = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
};

struct SuiteResult {
  std::string suite;
  std::vector<SuiteCase> cases;
  double wall_time = 0.0;

  bool pass() const;
};

/// "p" as a number, or the string "inf".
Json exponent_to_json(const Exponent& p);

Json to_json(const NormReport& r);
Json to_json(const KhintchineReport& r);
Json to_json(const TruncationResult& r, int radius);
Json to_json(const SuiteResult& r);
Json to_json(const std::vector<SuiteResult>& results);

/// One row per split.
std::string to_csv(const NormReport& r);
std::string to_csv(const KhintchineReport& r);
std::string to_csv(const TruncationResult& r, int radius);
/// One row per case.
std::string to_csv(const std::vector<SuiteResult>& results);

/// Shortest round-trip decimal form.
std::string format_double(double v);

}  // namespace freelp
