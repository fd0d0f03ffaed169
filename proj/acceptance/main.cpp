#include <iostream>

#include "acceptance.hpp"

int main() {
  hardy::acceptance::SuiteOptions options;
  bool all = true;
  hardy::acceptance::run_suite(options, [&](const hardy::acceptance::CriterionResult& r) {
    std::cout << r.summary_line() << std::endl;
    if (!r.pass()) {
      all = false;
      for (const auto& c : r.checks)
        if (!c.pass) std::cout << "      failed: " << c.name << (c.detail.empty() ? "" : " -- " + c.detail) << "\n";
    }
  });
  return all ? 0 : 1;
}
