#include "codework/exact_cover.hpp"

#include <algorithm>
#include <string>

#include "codework/code.hpp"

namespace codework {

ExactCoverInstance::ExactCoverInstance(int num_columns, std::vector<std::vector<int>> rows,
                                       std::vector<int> forced_rows)
    : num_columns_(num_columns), rows_(std::move(rows)), forced_(std::move(forced_rows)) {
  if (num_columns < 0) throw CodeError("exact cover: negative column count");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    auto& row = rows_[r];
    if (row.empty()) throw CodeError("exact cover: row " + std::to_string(r) + " is empty");
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end()) {
      throw CodeError("exact cover: row " + std::to_string(r) + " repeats a column");
    }
    if (row.front() < 0 || row.back() >= num_columns) {
      throw CodeError("exact cover: row " + std::to_string(r) + " has a column out of range");
    }
  }
  std::sort(forced_.begin(), forced_.end());
  forced_.erase(std::unique(forced_.begin(), forced_.end()), forced_.end());
  std::vector<char> used(static_cast<std::size_t>(num_columns), 0);
  for (int f : forced_) {
    if (f < 0 || static_cast<std::size_t>(f) >= rows_.size()) {
      throw CodeError("exact cover: forced row " + std::to_string(f) + " does not exist");
    }
    for (int c : rows_[static_cast<std::size_t>(f)]) {
      if (used[static_cast<std::size_t>(c)]) forced_conflict_ = true;
      used[static_cast<std::size_t>(c)] = 1;
    }
  }
}

bool is_exact_cover(const ExactCoverInstance& instance, std::span<const int> rows) {
  std::vector<int> hits(static_cast<std::size_t>(instance.num_columns()), 0);
  std::vector<int> sorted(rows.begin(), rows.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (int r : sorted) {
    if (r < 0 || static_cast<std::size_t>(r) >= instance.rows().size()) return false;
    for (int c : instance.rows()[static_cast<std::size_t>(r)]) ++hits[static_cast<std::size_t>(c)];
  }
  for (int f : instance.forced_rows()) {
    if (!std::binary_search(sorted.begin(), sorted.end(), f)) return false;
  }
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

namespace {

class DancingLinks {
 public:
  explicit DancingLinks(const ExactCoverInstance& inst) {
    const int cols = inst.num_columns();
    std::size_t total = 1 + static_cast<std::size_t>(cols);
    for (const auto& row : inst.rows()) total += row.size();
    left_.resize(total);
    right_.resize(total);
    up_.resize(total);
    down_.resize(total);
    column_.resize(total);
    row_of_.resize(total, -1);
    size_.assign(static_cast<std::size_t>(cols) + 1, 0);

    for (int c = 0; c <= cols; ++c) {
      const auto i = static_cast<std::size_t>(c);
      left_[i] = c == 0 ? cols : c - 1;
      right_[i] = c == cols ? 0 : c + 1;
      up_[i] = down_[i] = c;
      column_[i] = c;
    }
    int next = cols + 1;
    for (std::size_t r = 0; r < inst.rows().size(); ++r) {
      const int first = next;
      for (int c : inst.rows()[r]) {
        const int col = c + 1;
        const auto i = static_cast<std::size_t>(next);
        column_[i] = col;
        row_of_[i] = static_cast<int>(r);
        up_[i] = up_[static_cast<std::size_t>(col)];
        down_[i] = col;
        down_[static_cast<std::size_t>(up_[static_cast<std::size_t>(col)])] = next;
        up_[static_cast<std::size_t>(col)] = next;
        ++size_[static_cast<std::size_t>(col)];
        left_[i] = next - 1;
        right_[i] = next + 1;
        ++next;
      }
      left_[static_cast<std::size_t>(first)] = next - 1;
      right_[static_cast<std::size_t>(next - 1)] = first;
    }
    row_head_.assign(inst.rows().size(), -1);
    for (int i = cols + 1; i < next; ++i) {
      auto& head = row_head_[static_cast<std::size_t>(row_of_[static_cast<std::size_t>(i)])];
      if (head < 0) head = i;
    }
  }

  // Selects a row outright (used for forced rows).
  void select_row(int row) {
    const int start = row_head_[static_cast<std::size_t>(row)];
    int j = start;
    do {
      cover(column_[static_cast<std::size_t>(j)]);
      j = right_[static_cast<std::size_t>(j)];
    } while (j != start);
  }

  CoverStats run(std::vector<int> prefix, const CoverLimits& limits,
                 const std::function<bool(std::span<const int>)>& on_solution) {
    limits_ = limits;
    on_solution_ = &on_solution;
    chosen_ = std::move(prefix);
    stats_ = CoverStats{};
    stop_ = false;
    search();
    stats_.complete = !stop_;
    return stats_;
  }

 private:
  void cover(int c) {
    const auto ci = static_cast<std::size_t>(c);
    right_[static_cast<std::size_t>(left_[ci])] = right_[ci];
    left_[static_cast<std::size_t>(right_[ci])] = left_[ci];
    for (int i = down_[ci]; i != c; i = down_[static_cast<std::size_t>(i)]) {
      for (int j = right_[static_cast<std::size_t>(i)]; j != i; j = right_[static_cast<std::size_t>(j)]) {
        const auto ji = static_cast<std::size_t>(j);
        up_[static_cast<std::size_t>(down_[ji])] = up_[ji];
        down_[static_cast<std::size_t>(up_[ji])] = down_[ji];
        --size_[static_cast<std::size_t>(column_[ji])];
      }
    }
  }

  void uncover(int c) {
    const auto ci = static_cast<std::size_t>(c);
    for (int i = up_[ci]; i != c; i = up_[static_cast<std::size_t>(i)]) {
      for (int j = left_[static_cast<std::size_t>(i)]; j != i; j = left_[static_cast<std::size_t>(j)]) {
        const auto ji = static_cast<std::size_t>(j);
        ++size_[static_cast<std::size_t>(column_[ji])];
        up_[static_cast<std::size_t>(down_[ji])] = j;
        down_[static_cast<std::size_t>(up_[ji])] = j;
      }
    }
    right_[static_cast<std::size_t>(left_[ci])] = c;
    left_[static_cast<std::size_t>(right_[ci])] = c;
  }

  void search() {
    if (stop_) return;
    ++stats_.nodes;
    if (limits_.max_nodes != 0 && stats_.nodes > limits_.max_nodes) {
      stop_ = true;
      return;
    }
    if (right_[0] == 0) {
      ++stats_.solutions;
      if (*on_solution_) {
        std::vector<int> sorted = chosen_;
        std::sort(sorted.begin(), sorted.end());
        if (!(*on_solution_)(sorted)) stop_ = true;
      }
      if (limits_.max_solutions != 0 && stats_.solutions >= limits_.max_solutions) stop_ = true;
      return;
    }
    int best = right_[0];
    for (int c = right_[0]; c != 0; c = right_[static_cast<std::size_t>(c)]) {
      if (size_[static_cast<std::size_t>(c)] < size_[static_cast<std::size_t>(best)]) best = c;
      if (size_[static_cast<std::size_t>(best)] == 0) return;
    }
    cover(best);
    for (int r = down_[static_cast<std::size_t>(best)]; r != best && !stop_;
         r = down_[static_cast<std::size_t>(r)]) {
      chosen_.push_back(row_of_[static_cast<std::size_t>(r)]);
      for (int j = right_[static_cast<std::size_t>(r)]; j != r; j = right_[static_cast<std::size_t>(j)]) {
        cover(column_[static_cast<std::size_t>(j)]);
      }
      search();
      for (int j = left_[static_cast<std::size_t>(r)]; j != r; j = left_[static_cast<std::size_t>(j)]) {
        uncover(column_[static_cast<std::size_t>(j)]);
      }
      chosen_.pop_back();
    }
    uncover(best);
  }

  std::vector<int> left_, right_, up_, down_, column_, row_of_, size_, row_head_;
  std::vector<int> chosen_;
  CoverLimits limits_;
  const std::function<bool(std::span<const int>)>* on_solution_ = nullptr;
  CoverStats stats_;
  bool stop_ = false;
};

}  // namespace

CoverStats search_covers(const ExactCoverInstance& instance, const CoverLimits& limits,
                         const std::function<bool(std::span<const int>)>& on_solution) {
  if (instance.forced_conflict()) return CoverStats{};
  DancingLinks dlx(instance);
  for (int f : instance.forced_rows()) dlx.select_row(f);
  return dlx.run(instance.forced_rows(), limits, on_solution);
}

std::optional<CoverSolution> solve_exists(const ExactCoverInstance& instance) {
  std::optional<CoverSolution> found;
  search_covers(instance, CoverLimits{1, 0}, [&](std::span<const int> rows) {
    found = CoverSolution{{rows.begin(), rows.end()}};
    return false;
  });
  if (found && !is_exact_cover(instance, found->rows)) {
    throw std::logic_error("exact cover solver returned an invalid solution");
  }
  return found;
}

CoverEnumeration enumerate(const ExactCoverInstance& instance, std::uint64_t cap) {
  if (cap < 1) throw CodeError("enumerate: cap must be at least 1");
  CoverEnumeration out;
  const CoverStats stats = search_covers(instance, CoverLimits{0, 0}, [&](std::span<const int> rows) {
    if (out.solutions.size() == cap) {
      out.complete = false;
      return false;
    }
    out.solutions.push_back(CoverSolution{{rows.begin(), rows.end()}});
    return true;
  });
  (void)stats;
  return out;
}

std::uint64_t count(const ExactCoverInstance& instance) {
  return search_covers(instance, CoverLimits{}, {}).solutions;
}

}  // namespace codework
