#include <cstdio>
#include <iostream>

#include "dp1/verify.hpp"

int main() {
  try {
    const auto results = dp1::run_acceptance_suite();
    std::cout << dp1::format_acceptance_table(results);
    return dp1::all_passed(results) ? 0 : 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "acceptance suite aborted: %s\n", e.what());
    return 2;
  }
}
