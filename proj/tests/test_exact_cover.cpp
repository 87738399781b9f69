#include <numeric>
#include <random>

#include "codework/exact_cover.hpp"
#include "codework/lengthening.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace codework;

namespace {

// Every subset of rows that partitions the columns, by brute force.
std::vector<CoverSolution> naive_covers(const ExactCoverInstance& inst) {
  std::vector<CoverSolution> out;
  const std::size_t m = inst.rows().size();
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    CoverSolution s;
    for (std::size_t r = 0; r < m; ++r) {
      if (mask >> r & 1u) s.rows.push_back(static_cast<int>(r));
    }
    bool forced_ok = true;
    for (int f : inst.forced_rows()) forced_ok &= static_cast<bool>(mask >> f & 1u);
    if (forced_ok && is_exact_cover(inst, s.rows)) out.push_back(std::move(s));
  }
  return out;
}

ExactCoverInstance random_instance(std::mt19937_64& rng, bool with_forced) {
  std::uniform_int_distribution<int> cols_dist(1, 7), rows_dist(0, 12);
  const int cols = cols_dist(rng);
  const int nrows = rows_dist(rng);
  std::vector<std::vector<int>> rows;
  std::bernoulli_distribution take(0.35);
  for (int r = 0; r < nrows; ++r) {
    std::vector<int> row;
    for (int c = 0; c < cols; ++c) {
      if (take(rng)) row.push_back(c);
    }
    if (row.empty()) row.push_back(static_cast<int>(rng() % static_cast<unsigned>(cols)));
    rows.push_back(row);
  }
  std::vector<int> forced;
  if (with_forced && nrows > 0 && rng() % 3 == 0) forced.push_back(static_cast<int>(rng() % nrows));
  return ExactCoverInstance(cols, rows, forced);
}

}  // namespace

TEST_CASE("instance validation") {
  CHECK_THROWS_AS(ExactCoverInstance(2, {{}}), CodeError);
  CHECK_THROWS_AS(ExactCoverInstance(2, {{0, 0}}), CodeError);
  CHECK_THROWS_AS(ExactCoverInstance(2, {{2}}), CodeError);
  CHECK_THROWS_AS(ExactCoverInstance(2, {{0}}, {3}), CodeError);
  const ExactCoverInstance sorted(3, {{2, 0}});
  CHECK(sorted.rows()[0] == std::vector<int>{0, 2});
  const ExactCoverInstance clash(2, {{0}, {0, 1}}, {0, 1});
  CHECK(clash.forced_conflict());
  CHECK_FALSE(solve_exists(clash));
  CHECK(count(clash) == 0);
}

TEST_CASE("solve_exists") {
  const ExactCoverInstance id(3, {{0}, {1}, {2}});
  const auto s = solve_exists(id);
  REQUIRE(s);
  CHECK(s->rows == std::vector<int>{0, 1, 2});
  CHECK_FALSE(solve_exists(ExactCoverInstance(2, {{0}})));
  const auto h = find_extension(shorten(shorten(hamming_code(3), 7, 0), 6, 0), 2);
  REQUIRE(h);
  CHECK(is_perfect(*h));
}

TEST_CASE("enumerate") {
  const auto dup = enumerate(ExactCoverInstance(1, {{0}, {0}}), 10);
  CHECK(dup.complete);
  CHECK(dup.solutions.size() == 2);
  const auto two = enumerate(ExactCoverInstance(3, {{0, 1}, {2}, {0}, {1, 2}}), 10);
  CHECK(two.complete);
  REQUIRE(two.solutions.size() == 2);
  CHECK(two.solutions[0].rows == std::vector<int>{0, 1});
  CHECK(two.solutions[1].rows == std::vector<int>{2, 3});
  const auto capped = enumerate(ExactCoverInstance(3, {{0, 1}, {2}, {0}, {1, 2}}), 1);
  CHECK_FALSE(capped.complete);
  CHECK(capped.solutions.size() == 1);
  const auto exact_cap = enumerate(ExactCoverInstance(3, {{0, 1}, {2}, {0}, {1, 2}}), 2);
  CHECK(exact_cap.complete);
}

TEST_CASE("count") {
  CHECK(count(ExactCoverInstance(2, {{0}})) == 0);
  CHECK(count(ExactCoverInstance(5, {{0}, {1}, {2}, {3}, {4}})) == 1);
  CHECK(count(ExactCoverInstance(0, {})) == 1);
}

TEST_CASE("perfect codes of length 7 as exact covers") {
  // One row per word: its radius-1 ball.
  std::vector<std::vector<int>> rows;
  for (Bits w = 0; w < 128; ++w) {
    std::vector<int> row{static_cast<int>(w)};
    for (int j = 0; j < 7; ++j) row.push_back(static_cast<int>(w ^ (Bits{1} << j)));
    rows.push_back(row);
  }
  const ExactCoverInstance inst(128, rows);
  CHECK(count(inst) == 240);
  const auto all = enumerate(inst, 1000);
  CHECK(all.complete);
  CHECK(all.solutions.size() == 240);
}

TEST_CASE("forced rows appear in every solution") {
  const ExactCoverInstance inst(3, {{0, 1}, {2}, {0}, {1, 2}}, {3});
  const auto all = enumerate(inst, 10);
  REQUIRE(all.solutions.size() == 1);
  CHECK(all.solutions[0].rows == std::vector<int>{2, 3});
  const ExactCoverInstance dead(3, {{0, 1}, {0, 1, 2}, {2}}, {1, 2});
  CHECK(count(dead) == 0);
}

TEST_CASE("solver agrees with naive enumeration") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 150; ++t) {
    const auto inst = random_instance(rng, true);
    auto expect = naive_covers(inst);
    std::sort(expect.begin(), expect.end());
    auto got = enumerate(inst, 100000);
    CHECK(got.complete);
    std::sort(got.solutions.begin(), got.solutions.end());
    CHECK(got.solutions == expect);
    for (const auto& s : got.solutions) CHECK(is_exact_cover(inst, s.rows));
    CHECK(count(inst) == expect.size());
  }
}

TEST_CASE("count is invariant under row and column shuffles") {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 100; ++t) {
    const auto inst = random_instance(rng, false);
    std::vector<int> colmap(static_cast<std::size_t>(inst.num_columns()));
    std::iota(colmap.begin(), colmap.end(), 0);
    std::shuffle(colmap.begin(), colmap.end(), rng);
    auto rows = inst.rows();
    for (auto& row : rows) {
      for (int& c : row) c = colmap[static_cast<std::size_t>(c)];
    }
    std::shuffle(rows.begin(), rows.end(), rng);
    CHECK(count(ExactCoverInstance(inst.num_columns(), rows)) == count(inst));
  }
}

TEST_CASE("is_exact_cover rejects overlaps and gaps") {
  const ExactCoverInstance inst(3, {{0, 1}, {1, 2}, {2}, {0}});
  const std::vector<int> overlap = {0, 1}, gap = {0}, ok = {0, 2}, bad_index = {0, 9};
  CHECK_FALSE(is_exact_cover(inst, overlap));
  CHECK_FALSE(is_exact_cover(inst, gap));
  CHECK_FALSE(is_exact_cover(inst, bad_index));
  CHECK(is_exact_cover(inst, ok));
}
