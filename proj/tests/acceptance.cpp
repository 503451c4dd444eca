#include <cstdlib>
#include <iostream>

#include "mcg/acceptance.hpp"

int main(int argc, char** argv) {
  mcg::acceptance::Options options;
  if (argc > 1) options.seed = std::strtoull(argv[1], nullptr, 10);
  const auto results = mcg::acceptance::run(options, [](const auto& r) { std::cout << mcg::acceptance::format(r) << std::flush; });
  int failed = 0;
  for (const auto& r : results) failed += !r.pass;
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << (results.size() - failed) << "/" << results.size() << "\n";
  return failed ? 1 : 0;
}
