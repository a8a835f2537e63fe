// Acceptance gate: one PASS/FAIL line per criterion.
#include <iostream>
#include <string>

#include "icc/acceptance.hpp"

#ifndef ICC_FIXTURE_DIR
#define ICC_FIXTURE_DIR "fixtures"
#endif

int main(int argc, char** argv) {
  icc::AcceptanceOptions opts;
  opts.fixtures = ICC_FIXTURE_DIR;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--fixtures" && i + 1 < argc) {
      opts.fixtures = argv[++i];
    } else if (a == "--filter" && i + 1 < argc) {
      opts.filter = argv[++i];
    } else if (a == "--seed" && i + 1 < argc) {
      opts.seed = std::stoull(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--fixtures DIR] [--filter TAG] [--seed N]\n";
      return 1;
    }
  }
  std::size_t failed = 0, ran = 0;
  icc::run_acceptance(opts, [&](const icc::CriterionResult& r) {
    ++ran;
    failed += r.pass ? 0 : 1;
    std::cout << r.line() << std::endl;
  });
  std::cout << (ran - failed) << "/" << ran << " criteria passed" << std::endl;
  return failed == 0 && ran > 0 ? 0 : 1;
}
