#ifndef GAUSSDIM_VERIFY_HPP
#define GAUSSDIM_VERIFY_HPP

#include <string>
#include <vector>

namespace gaussdim {

struct Check {
  std::string suite;
  std::string name;
  bool pass = false;
  std::string detail;  // witness for failures, summary value otherwise
};

std::vector<Check> verify_axioms();
std::vector<Check> verify_counting(unsigned long long node_budget = 100'000'000ull);
std::vector<Check> verify_lem_a();
std::vector<Check> verify_covering();
std::vector<Check> verify_schedules();

/// All suites in a fixed order.
std::vector<Check> verify_suite(const std::string& name);

bool all_pass(const std::vector<Check>& checks);

}  // namespace gaussdim

#endif
