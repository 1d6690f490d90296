#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rotor {

struct FixtureProgram {
  std::string_view name;    // file stem, e.g. "sigma_y_quarter_turn"
  std::string_view source;
};

// The shipped fixture programs, embedded at build time.
std::span<const FixtureProgram> fixture_corpus();

struct SelftestResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Evaluates every fixture and checks its expected outcome, plus the
// print/parse round trip of each program.
std::vector<SelftestResult> run_selftest();

}  // namespace rotor
