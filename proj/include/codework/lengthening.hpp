#pragma once

// Deciding whether a code is an i-times shortened 1-perfect code.
//
// A base code of length n is embedded in F_2^N (N = n + i) by appending i
// zero coordinates. The base is a zero-value shortening at the last i
// coordinates of some perfect code P exactly when the points left uncovered
// by the base's radius-1 balls can be tiled by radius-1 balls of further
// codewords; that tiling problem is an exact cover instance.

#include <cstdint>
#include <optional>
#include <vector>

#include "codework/code.hpp"
#include "codework/exact_cover.hpp"

namespace codework {

/// N must be 3, 7 or 15 and at least the base length.
struct ExtensionProblem {
  Code base;
  int target_length = 0;

  int appended() const { return target_length - base.length(); }
};

struct ExtensionInstance {
  ExactCoverInstance cover;
  std::vector<Bits> columns;     // uncovered points of F_2^N, by column index
  std::vector<Bits> candidates;  // candidate codeword for each row
};

/// Throws CodeError("not extension-shaped") when the base cannot be a
/// shortening of that shape (size, minimum distance or target length).
ExtensionInstance extension_instance(const ExtensionProblem& problem);

/// The perfect code obtained by adding the candidates of `solution` to the
/// embedded base.
Code assemble_extension(const ExtensionProblem& problem, const ExtensionInstance& instance,
                        const CoverSolution& solution);

/// Code length plus i must be 3, 7 or 15, with 0 <= i <= 4. Codes of the
/// wrong size or minimum distance simply answer false / zero.
bool is_shortened_perfect(const Code& code, int appended);

/// A perfect code whose zero-suffix shortening is `code`, if one exists.
std::optional<Code> find_extension(const Code& code, int appended);

/// E(C): number of perfect codes of length n + i whose zero-suffix
/// i-fold shortening equals C.
std::uint64_t count_extensions(const Code& code, int appended);

/// All 1-perfect codes of length 3 or 7, sorted.
std::vector<Code> enumerate_perfect(int n);

}  // namespace codework
