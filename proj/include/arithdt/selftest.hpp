#pragma once

#include <string>
#include <vector>

namespace arithdt {

struct SelftestCheck {
  std::string name;
  bool passed;
  std::string detail;
};

/// Runs a fixed-seed invariant suite over all modules.
std::vector<SelftestCheck> run_selftest();

}  // namespace arithdt
