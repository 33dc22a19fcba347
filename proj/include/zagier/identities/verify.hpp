#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zagier/exact/big_rational.hpp"
#include "zagier/mult/mult_element.hpp"

namespace zagier {

enum class Decider { chain, rho, both };
enum class VerifyTarget { theorem3, fiveterm, b_element, antisym31, t0_tautology };
enum class CheckStatus { pass, fail, error };

std::optional<VerifyTarget> parse_target(const std::string& name);
std::string target_name(VerifyTarget t);
std::string status_name(CheckStatus s);

struct CheckReport {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::size_t residual_count = 0;
  std::vector<std::string> residual_sample;  // at most 10 rendered terms
  double elapsed_ms = 0;
  std::uint64_t seed = 0;
  std::string message;
};

// Variable name → value; unassigned variables stay symbolic.
using NamedAssignment = std::map<std::string, BigRational>;

struct VerifyOptions {
  Decider decider = Decider::both;
  // Random rational specializations with numerators and denominators in
  // [−97, 97]; a degenerate draw is redrawn up to 10 times.
  bool random = false;
  unsigned trials = 20;
  std::uint64_t seed = 0;
  std::optional<NamedAssignment> assignment;
};

// Runs the checks for one target in declaration order. DegenerateArgument and
// DivergentTerm propagate (after the retry budget for random draws).
std::vector<CheckReport> run_verify(VerifyTarget target, const VerifyOptions& opts);

// "A=0, B=1/2, C=-3"; ParseError on malformed input.
NamedAssignment parse_assignment(const std::string& text);

// Report for an exact zero test.
CheckReport report_from(const std::string& name, const ZeroCheck& z);

// Σ c_i D(x_i) over the five arguments of build_A at `pairs` random complex
// (x, y), as the largest absolute residual.
double fiveterm_numeric_residual(unsigned pairs, std::uint64_t seed);

}  // namespace zagier
