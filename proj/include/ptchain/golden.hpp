#pragma once

#include <string>
#include <vector>

#include "ptchain/coef.hpp"

namespace ptchain {

struct GoldenResult {
  std::string name;
  bool passed = false;
  std::string expected;  // canonical text of the fixture
  std::string actual;    // canonical text of the computed value
  std::string message;
};

// Canonical text of a printed expression: parsed and re-serialized.
std::string canonical_expression(const std::string& text);
// Same, with the overall sign chosen so the highest power of t has a
// positive coefficient.
std::string canonical_up_to_sign(const std::string& text);
std::string canonical_of(const SymbolicFraction& f);

// Compares every fixture in dir against freshly computed values.
std::vector<GoldenResult> run_golden(const std::string& dir);

std::string default_golden_dir();

}  // namespace ptchain
