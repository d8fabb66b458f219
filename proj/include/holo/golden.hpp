#pragma once

#include <map>
#include <string>
#include <vector>

#include "holo/sequences.hpp"

namespace holo {

/// Outcome of one golden case from data/golden.
struct GoldenResult {
  std::string file;
  std::string id;
  int criterion = 0;
  bool pass = false;
  std::string detail;
  double millis = 0;  ///< time spent in the computation under test
};

struct GoldenSuite {
  std::vector<GoldenResult> results;
  /// Wall-clock budget per criterion, from "max_total_ms" in the files.
  std::map<int, double> budget_ms;
};

/// Runs one golden file. Malformed cases are reported as failures, not
/// thrown.
GoldenSuite run_golden_file(const std::string& path, const Catalog& catalog);

/// Every *.json under dir, in file-name order.
GoldenSuite run_golden_dir(const std::string& dir, const Catalog& catalog);

/// Sum of millis per criterion and the budget check; criteria without a
/// budget always pass.
bool within_budget(const GoldenSuite& suite, int criterion, double* total_ms = nullptr);

}  // namespace holo
