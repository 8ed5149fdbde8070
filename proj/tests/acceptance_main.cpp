#include <cstdlib>
#include <iostream>
#include <string>

#include "lieball/acceptance.hpp"

int main(int argc, char** argv) {
  lieball::AcceptanceConfig cfg;
  if (argc > 1) cfg.seed = std::stoull(argv[1]);
  bool all = true;
  for (const auto& r : lieball::run_acceptance(cfg)) {
    std::cout << lieball::format_line(r) << '\n';
    all = all && r.pass;
  }
  std::cout << (all ? "acceptance: all criteria passed" : "acceptance: FAILED") << std::endl;
  return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
