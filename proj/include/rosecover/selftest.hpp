#pragma once

#include <iosfwd>
#include <string>

namespace rosecover {

struct SelftestOptions {
  bool quick = false;        // only groups of order <= 8
  std::string inject_fault;  // suite name forced to fail (test hook)
};

/// Runs every invariant suite over the standard battery and prints one line
/// per suite, in name order. Returns true iff all suites pass.
bool run_selftest(const SelftestOptions &options, std::ostream &out);

} // namespace rosecover
