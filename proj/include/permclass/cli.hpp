#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace permclass {

// args excludes the program name. Exit codes: 0 success, 1 domain or
// input error (one line on err), 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct SelftestReport {
  int passed = 0;
  int failed = 0;
  std::vector<std::string> failures;
  void check(bool ok, std::string what);
};

// perm, class, gf, grid, encode, witness, families, decide-kappa, rect
SelftestReport run_selftest(std::string_view module);

}  // namespace permclass
