#ifndef CLONEDUAL_CHECKS_HPP
#define CLONEDUAL_CHECKS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace clonedual {

enum class Budget { small, full };

Budget budget_from_string(const std::string& name);
std::string to_string(Budget b);

struct CheckFailure {
  std::string instance;
  std::string detail;
};

struct CheckResult {
  std::string id;
  std::size_t instances = 0;
  std::size_t failed = 0;
  // First few counterexample renderings, in discovery order.
  std::vector<CheckFailure> failures;

  bool passed() const { return failed == 0; }
};

struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  Budget budget = Budget::small;
  std::vector<CheckResult> checks;  // sorted by check id

  bool all_passed() const;
  std::size_t total_instances() const;
  std::size_t total_failed() const;
  // Deterministic plain-text rendering; byte-identical for equal inputs.
  std::string render() const;
};

std::vector<std::string> suite_names();
bool is_suite(const std::string& name);
std::vector<std::string> checks_in_suite(const std::string& suite);

// Runs every check of the suite deterministically.  Exhaustive sweeps ignore
// the seed; sampled sweeps derive their generators from it.  Throws
// ValidationError on an unknown suite name.
Report run_suite(const std::string& suite, std::uint64_t seed, Budget budget);

// The statement a check verifies and the executable formulation it runs.
// Throws ValidationError on an unknown check id.
std::string explain(const std::string& check_id);

std::vector<std::string> all_check_ids();

}  // namespace clonedual

#endif
