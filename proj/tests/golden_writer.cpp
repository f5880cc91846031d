// Regenerates the CLI golden files from the shared case table. Run from the
// build tree with SYMPROD_BIN and SYMPROD_GOLDEN set; review the diff before
// committing regenerated files.

#include "cli_util.hpp"

#include <iostream>

int main() {
  std::string bin = cli_util::require_env("SYMPROD_BIN");
  std::string golden_dir = cli_util::require_env("SYMPROD_GOLDEN");
  int failures = 0;
  for (const auto& c : cli_util::cases()) {
    auto result = cli_util::run_command(bin, cli_util::expand_args(c, golden_dir, 1), 1);
    if (result.exit_code != c.expected_exit) {
      std::cerr << "unexpected exit " << result.exit_code << " (want " << c.expected_exit
                << ") for: " << c.args << "\n";
      ++failures;
      continue;
    }
    std::ofstream out(golden_dir + "/" + c.golden, std::ios::binary);
    out << result.output;
    std::cout << "wrote " << c.golden << " (" << result.output.size() << " bytes)\n";
  }
  return failures == 0 ? 0 : 1;
}
