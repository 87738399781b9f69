#include "codework/lengthening.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace codework {

namespace {

bool is_perfect_length(int n) { return n == 3 || n == 7 || n == 15; }

int log2_exact(int v) { return std::countr_zero(static_cast<unsigned>(v)); }

void check_shape(int length, int appended) {
  if (appended < 0 || appended > 4 || !is_perfect_length(length + appended)) {
    throw CodeError("parameter shape invalid: length " + std::to_string(length) + " + " +
                    std::to_string(appended) + " is not 3, 7 or 15 with 0 <= i <= 4");
  }
}

// Size and distance a shortening of that shape must have.
bool extension_shaped(const Code& base, int target) {
  const int i = target - base.length();
  const int log_size = target - log2_exact(target + 1) - i;
  if (log_size < 0 || base.size() != (std::size_t{1} << log_size)) return false;
  return base.size() < 2 || min_distance(base) >= 3;
}

}  // namespace

ExtensionInstance extension_instance(const ExtensionProblem& problem) {
  const int N = problem.target_length;
  const Code& base = problem.base;
  if (!is_perfect_length(N) || N < base.length() || !extension_shaped(base, N)) {
    throw CodeError("not extension-shaped");
  }
  const std::size_t space = std::size_t{1} << N;
  std::vector<char> covered(space, 0);
  for (Bits w : base.words()) {
    covered[w] = 1;
    for (int k = 0; k < N; ++k) covered[w ^ (Bits{1} << k)] = 1;
  }

  ExtensionInstance out;
  std::vector<int> column_of(space, -1);
  for (std::size_t p = 0; p < space; ++p) {
    if (!covered[p]) {
      column_of[p] = static_cast<int>(out.columns.size());
      out.columns.push_back(static_cast<Bits>(p));
    }
  }
  // A candidate whose ball meets a covered point can never join the base in
  // a perfect code; this also keeps every candidate at distance >= 3.
  std::vector<std::vector<int>> rows;
  for (Bits c : out.columns) {
    std::vector<int> row{column_of[c]};
    bool inside = true;
    for (int k = 0; k < N && inside; ++k) {
      const int col = column_of[c ^ (Bits{1} << k)];
      inside = col >= 0;
      row.push_back(col);
    }
    if (!inside) continue;
    rows.push_back(std::move(row));
    out.candidates.push_back(c);
  }
  out.cover = ExactCoverInstance(static_cast<int>(out.columns.size()), std::move(rows));
  return out;
}

Code assemble_extension(const ExtensionProblem& problem, const ExtensionInstance& instance,
                        const CoverSolution& solution) {
  std::vector<Bits> words(problem.base.words());
  for (int r : solution.rows) words.push_back(instance.candidates[static_cast<std::size_t>(r)]);
  return Code(problem.target_length, std::move(words));
}

std::optional<Code> find_extension(const Code& code, int appended) {
  check_shape(code.length(), appended);
  const ExtensionProblem problem{code, code.length() + appended};
  if (!extension_shaped(code, problem.target_length)) return std::nullopt;
  const ExtensionInstance inst = extension_instance(problem);
  const auto solution = solve_exists(inst.cover);
  if (!solution) return std::nullopt;
  Code perfect = assemble_extension(problem, inst, *solution);
  if (!is_perfect(perfect)) throw std::logic_error("extension is not a perfect code");
  return perfect;
}

bool is_shortened_perfect(const Code& code, int appended) {
  return find_extension(code, appended).has_value();
}

std::uint64_t count_extensions(const Code& code, int appended) {
  check_shape(code.length(), appended);
  const ExtensionProblem problem{code, code.length() + appended};
  if (!extension_shaped(code, problem.target_length)) return 0;
  return count(extension_instance(problem).cover);
}

std::vector<Code> enumerate_perfect(int n) {
  if (n != 3 && n != 7) throw CodeError("enumerate_perfect: n must be 3 or 7");
  const std::size_t space = std::size_t{1} << n;
  std::vector<std::vector<int>> rows;
  for (std::size_t c = 0; c < space; ++c) {
    std::vector<int> row{static_cast<int>(c)};
    for (int k = 0; k < n; ++k) row.push_back(static_cast<int>(c ^ (std::size_t{1} << k)));
    rows.push_back(std::move(row));
  }
  const ExactCoverInstance inst(static_cast<int>(space), std::move(rows));
  std::vector<Code> codes;
  search_covers(inst, CoverLimits{}, [&](std::span<const int> chosen) {
    std::vector<Bits> words(chosen.begin(), chosen.end());
    codes.emplace_back(n, std::move(words));
    return true;
  });
  std::sort(codes.begin(), codes.end());
  return codes;
}

}  // namespace codework
