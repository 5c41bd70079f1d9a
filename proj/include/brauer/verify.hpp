#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace brauer::verify {

/// Fixed seed for the sampling criteria; chosen once so the suite is
/// deterministic on every machine.
inline constexpr std::uint64_t kDefaultSeed = 123456789;

struct CriterionResult {
  int id;
  std::string name;
  bool passed;
  std::string details;
  double elapsed_seconds;
};

struct Options {
  std::uint64_t seed = kDefaultSeed;
  int workers = 4;
};

/// Runs the full verification grid (thirteen criteria) and reports one
/// result per criterion. Never throws; a criterion that raises is reported
/// as failed with the exception text.
std::vector<CriterionResult> run_all(const Options& options = {});

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace brauer::verify
