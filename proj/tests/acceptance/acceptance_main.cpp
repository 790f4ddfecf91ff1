// One line per acceptance criterion; exit status 1 if a required one fails.
// CIRCSTAB_ACCEPTANCE_EXTENDED=1 adds the hours-long extended census, cached
// in CIRCSTAB_CACHE_DIR (default .circstab-cache).

#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>

#include "circstab_cli/acceptance.hpp"

int main() {
  using namespace circstab::cli;
  AcceptanceOptions options;
  options.workers = std::max(1u, std::thread::hardware_concurrency());
  if (const char* e = std::getenv("CIRCSTAB_ACCEPTANCE_EXTENDED"); e && std::string(e) == "1") {
    options.extended = true;
  }
  if (const char* d = std::getenv("CIRCSTAB_CACHE_DIR")) options.cache_dir = d;
  options.on_result = [](const CriterionResult& r) { std::cout << format_result(r) << std::endl; };
  const bool ok = all_required_pass(run_acceptance(options));
  std::cout << (ok ? "acceptance: all required criteria pass" : "acceptance: FAILED") << std::endl;
  return ok ? 0 : 1;
}
