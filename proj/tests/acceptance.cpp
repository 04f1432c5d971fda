// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <iostream>

#include "suites.hpp"

int main(int argc, char** argv) {
  using namespace braidhom;
  suites::Options opts;
  int only = argc > 1 ? std::atoi(argv[1]) : 0;
  int failed = 0;
  for (const auto& e : suites::catalog()) {
    if (only && e.criterion != only) continue;
    const auto t0 = std::chrono::steady_clock::now();
    suites::Result r;
    try {
      r = e.run(opts);
    } catch (const std::exception& ex) {
      r.fail(std::string("exception: ") + ex.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (e.time_limit_s > 0 && secs > e.time_limit_s) r.fail("runtime over the limit");
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << e.criterion << " [" << e.name << "] " << e.summary
              << " (" << timing;
    if (e.time_limit_s > 0) std::cout << ", limit " << e.time_limit_s << "s";
    std::cout << ")\n";
    for (const auto& note : r.notes) std::cout << "    " << note << "\n";
    std::cout << "    " << r.data.dump() << "\n";
    failed += r.pass ? 0 : 1;
  }
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << failed << " criteria failing\n";
  return failed ? 1 : 0;
}
