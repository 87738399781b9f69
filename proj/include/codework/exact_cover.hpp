#pragma once

// Exact cover: pick rows so that every column lies in exactly one picked
// row. Solved by depth-first search on a dancing-links matrix, branching on
// the column with the fewest live rows (lowest index on ties).

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace codework {

class ExactCoverInstance {
 public:
  ExactCoverInstance() = default;
  /// Rows are sorted and checked: non-empty, no repeated column, every
  /// column index in [0, num_columns). Overlapping forced rows make the
  /// instance unsatisfiable (reported by `forced_conflict`), not invalid.
  ExactCoverInstance(int num_columns, std::vector<std::vector<int>> rows,
                     std::vector<int> forced_rows = {});

  int num_columns() const { return num_columns_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  const std::vector<int>& forced_rows() const { return forced_; }
  bool forced_conflict() const { return forced_conflict_; }

 private:
  int num_columns_ = 0;
  std::vector<std::vector<int>> rows_;
  std::vector<int> forced_;
  bool forced_conflict_ = false;
};

struct CoverSolution {
  std::vector<int> rows;  // sorted row indices, forced rows included

  friend bool operator==(const CoverSolution&, const CoverSolution&) = default;
  friend auto operator<=>(const CoverSolution&, const CoverSolution&) = default;
};

/// Independent check that `rows` partition the column set.
bool is_exact_cover(const ExactCoverInstance& instance, std::span<const int> rows);

struct CoverStats {
  std::uint64_t nodes = 0;
  std::uint64_t solutions = 0;
  bool complete = true;  // false when stopped by a cap or node limit
};

struct CoverLimits {
  std::uint64_t max_solutions = 0;  // 0: unlimited
  std::uint64_t max_nodes = 0;      // 0: unlimited
};

/// Runs the search, calling `on_solution` (if set) for every solution. The
/// callback returns false to stop.
CoverStats search_covers(const ExactCoverInstance& instance, const CoverLimits& limits,
                         const std::function<bool(std::span<const int>)>& on_solution);

std::optional<CoverSolution> solve_exists(const ExactCoverInstance& instance);

struct CoverEnumeration {
  std::vector<CoverSolution> solutions;
  bool complete = true;
};

CoverEnumeration enumerate(const ExactCoverInstance& instance, std::uint64_t cap);

std::uint64_t count(const ExactCoverInstance& instance);

}  // namespace codework
