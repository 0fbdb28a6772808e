#pragma once

#include "modcone/jacobian.hpp"
#include "modcone/syzygy.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace modcone {

/// Inclusive (s, i) grid; empty when a max lies below its min.
struct SweepRange {
  int s_min = 1;
  int s_max = 3;
  int i_min = 0;
  int i_max = 2;

  /// Throws DomainError for s_min < 1 or i_min < 0.
  void validate() const;
  std::vector<std::pair<int, int>> points() const;
};

/// Work allowance in solve_cost units. Seconds are converted at a fixed
/// rate, so the same flags always select the same solver runs.
struct Budget {
  std::uint64_t units = 0;

  static constexpr std::uint64_t kUnitsPerSecond = 5'000'000;
  static Budget from_seconds(double seconds);
  static Budget unlimited();
};

struct ReportRow {
  SyzygyFamily family;
  BundleRanks ranks;
  Rational virtual_slope;
  std::optional<SlopeBound> bound;   // s ≥ 2 only
  std::optional<SolvedClass> solved; // empty when skipped
  std::uint64_t cost = 0;

  bool skipped() const { return !solved.has_value(); }
  bool ok() const;
};

struct FixtureComparison {
  std::string label;  // e.g. "(2,2)"
  Rational formula;
  Rational reported;
  bool ok() const { return formula == reported; }
  /// "(2,2): formula 1665/256 = paper 1665/256 ✓"
  std::string line() const;
};

struct SweepReport {
  std::vector<ReportRow> rows;
  std::vector<FixtureComparison> fixtures;
  bool ok() const;
};

/// Evaluates every grid point; solver runs are admitted in grid order while
/// their cost fits the remaining budget and then run on `jobs` threads.
SweepReport build_report(const SweepRange& range, const Budget& budget, int jobs);

/// Runs `task(k)` for k in [0, count) on up to `jobs` threads.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& task);

}  // namespace modcone
