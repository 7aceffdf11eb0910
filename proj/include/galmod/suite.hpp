#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "galmod/json_io.hpp"

namespace galmod {

struct SuiteOptions {
  long max_order = 27;                      // largest group order swept
  std::vector<long> primes{3, 5, 7};        // wild primes
  std::vector<long> tame_degrees{3, 5, 7, 9};
  std::uint64_t seed = 0;
};

/// Rejects options outside the supported ranges (Precondition).
void validate_suite_options(const SuiteOptions& opts);

/// Residue field size paired with each tame degree.
long tame_residue_size(long e);

struct SuiteEntry {
  int criterion = 0;
  std::string check_id;
  std::string anchor;
  Json params;
  bool passed = false;
  std::string witness;
  double wall_ms = 0;
};

constexpr int kCriterionCount = 11;

/// Entries for a single acceptance criterion, 1..11.
std::vector<SuiteEntry> run_criterion(int criterion, const SuiteOptions& opts);

/// The formal wild checks at one odd prime p.
std::vector<SuiteEntry> wild_checks(long p);

/// Every criterion, sorted by check id.
std::vector<SuiteEntry> run_suite(const SuiteOptions& opts);

/// Wall time is included only when requested so that reports stay reproducible.
Json suite_report_json(const std::vector<SuiteEntry>& entries, bool timings);

bool all_passed(const std::vector<SuiteEntry>& entries);

/// Odd-order abelian groups of order in [3, max_order], as invariant factors.
std::vector<std::vector<long>> odd_groups_up_to(long max_order);

}  // namespace galmod
