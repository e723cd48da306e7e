// clonedual: verification CLI for the duality between finitely presented
// non-Archimedean uniform spaces and finite-index clone powers.
//
// Exit codes: 0 all checks passed, 1 a check failed, 2 usage/schema error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "clonedual/checks.hpp"
#include "clonedual/errors.hpp"
#include "clonedual/instance_io.hpp"

namespace {

int run_check(const std::string& suite, std::uint64_t seed,
              const std::string& budget_name, const std::string& report_path) {
  if (!clonedual::is_suite(suite)) {
    std::cerr << "unknown suite '" << suite << "'\navailable suites:";
    for (const auto& name : clonedual::suite_names()) std::cerr << " " << name;
    std::cerr << "\n";
    return 2;
  }
  const clonedual::Budget budget = clonedual::budget_from_string(budget_name);
  const clonedual::Report report = clonedual::run_suite(suite, seed, budget);
  const std::string rendered = report.render();
  if (report_path.empty()) {
    std::cout << rendered;
  } else {
    std::ofstream out(report_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write report to '" << report_path << "'\n";
      return 2;
    }
    out << rendered;
  }
  return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"checks for the duality between non-Archimedean uniform spaces "
               "and finite-index clone powers"};
  app.require_subcommand(1);

  std::string suite;
  std::uint64_t seed = 0;
  std::string budget = "small";
  std::string report_path;
  CLI::App* check = app.add_subcommand("check", "run a verification suite");
  check->add_option("suite", suite, "suite name (see 'check --list')")
      ->required();
  check->add_option("--seed", seed, "seed for the sampled sweeps");
  check->add_option("--budget", budget, "small or full")
      ->check(CLI::IsMember({"small", "full"}));
  check->add_option("--report", report_path, "write the report to a file");

  std::string inspect_path;
  CLI::App* inspect = app.add_subcommand("inspect", "validate and summarize an instance file");
  inspect->add_option("file", inspect_path, "instance file")->required();

  std::string check_id;
  CLI::App* explain = app.add_subcommand("explain", "print what a check verifies");
  explain->add_option("check-id", check_id, "check id")->required();

  CLI::App* suites = app.add_subcommand("suites", "list suites and their checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) {
      return run_check(suite, seed, budget, report_path);
    }
    if (inspect->parsed()) {
      const clonedual::Instance instance = clonedual::ingest(inspect_path);
      std::cout << "kind: " << kind_of(instance) << "\n"
                << clonedual::describe(instance);
      return 0;
    }
    if (explain->parsed()) {
      std::cout << clonedual::explain(check_id);
      return 0;
    }
    if (suites->parsed()) {
      for (const auto& name : clonedual::suite_names()) {
        std::cout << name << ":";
        for (const auto& id : clonedual::checks_in_suite(name)) {
          std::cout << " " << id;
        }
        std::cout << "\n";
      }
      return 0;
    }
  } catch (const clonedual::SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return 2;
  } catch (const clonedual::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const clonedual::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
