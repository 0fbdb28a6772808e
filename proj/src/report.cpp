#include "modcone/report.hpp"

#include "modcone/slopes.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

namespace modcone {

void SweepRange::validate() const {
  if (s_min < 1) throw DomainError("sweep needs s ≥ 1");
  if (i_min < 0) throw DomainError("sweep needs i ≥ 0");
}

std::vector<std::pair<int, int>> SweepRange::points() const {
  validate();
  std::vector<std::pair<int, int>> out;
  for (int s = s_min; s <= s_max; ++s) {
    for (int i = i_min; i <= i_max; ++i) out.emplace_back(s, i);
  }
  return out;
}

Budget Budget::from_seconds(double seconds) {
  if (!(seconds >= 0)) throw DomainError("budget must be a nonnegative number of seconds");
  const double units = seconds * static_cast<double>(kUnitsPerSecond);
  if (units >= static_cast<double>(std::numeric_limits<std::uint64_t>::max())) return unlimited();
  return {static_cast<std::uint64_t>(std::floor(units))};
}

Budget Budget::unlimited() { return {std::numeric_limits<std::uint64_t>::max()}; }

bool ReportRow::ok() const {
  if (ranks.source != ranks.target) return false;
  if (bound && !bound->ok()) return false;
  if (solved && solved->slope() != virtual_slope) return false;
  return true;
}

std::string FixtureComparison::line() const {
  return label + ": formula " + to_string(formula) + (ok() ? " = " : " ≠ ") + "paper " + to_string(reported) +
         (ok() ? " ✓" : " ✗");
}

bool SweepReport::ok() const {
  for (const auto& r : rows) {
    if (!r.ok()) return false;
  }
  for (const auto& f : fixtures) {
    if (!f.ok()) return false;
  }
  return true;
}

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& task) {
  const std::size_t workers = std::min<std::size_t>(count, static_cast<std::size_t>(std::max(jobs, 1)));
  if (workers <= 1) {
    for (std::size_t k = 0; k < count; ++k) task(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < count; k = next++) {
        try {
          task(k);
        } catch (...) {
          const std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

SweepReport build_report(const SweepRange& range, const Budget& budget, int jobs) {
  SweepReport report;
  std::vector<std::size_t> admitted;
  std::uint64_t remaining = budget.units;
  for (const auto& [s, i] : range.points()) {
    ReportRow row;
    row.family = SyzygyFamily::make(s, i);
    row.ranks = ranks(row.family);
    row.virtual_slope = virtual_slope(s, i);
    if (s >= 2) row.bound = bound_check(s, i);
    row.cost = solve_cost(s, i);
    if (row.cost <= remaining) {
      remaining -= row.cost;
      admitted.push_back(report.rows.size());
    }
    report.rows.push_back(std::move(row));
  }
  parallel_for(admitted.size(), jobs, [&](std::size_t k) {
    ReportRow& row = report.rows[admitted[k]];
    row.solved = solve_coefficients(row.family.s, row.family.i);
  });
  report.fixtures.push_back({"(2,2)", virtual_slope(2, 2), make_rational(1665, 256)});
  report.fixtures.push_back({"(2,0)", virtual_slope(2, 0), make_rational(7)});
  return report;
}

}  // namespace modcone
