#pragma once

// Isomorph-free classification of shortened codes and the orbit-counting
// identity that cross-checks it.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <vector>

#include "codework/canonical.hpp"
#include "codework/code.hpp"

namespace codework {

struct Shortening {
  int coord = 0;
  int value = 0;
  Code code;
};

/// All 2n shortenings: coordinates ascending, value 0 before 1.
std::vector<Shortening> shorten_all(const Code& code);

/// One way a class arises: shortening parent `parent` (an index into the
/// previous level, or into the seeds at the first level).
struct ShorteningEdge {
  std::size_t parent = 0;
  int coord = 0;
  int value = 0;

  friend bool operator==(const ShorteningEdge&, const ShorteningEdge&) = default;
};

struct ClassRecord {
  CanonicalForm form;
  Code representative;  // the canonical form itself
  std::uint64_t aut_order = 0;
  std::optional<std::uint64_t> extension_count;
  std::vector<ShorteningEdge> provenance;

  std::uint64_t digest() const { return code_digest(form.form); }
};

struct ClassifyOptions {
  unsigned jobs = 1;
  /// When set, every level is written under <dir>/level-<k>/ and a level
  /// that is already complete on disk is loaded instead of recomputed.
  std::optional<std::filesystem::path> checkpoint_dir;
};

/// Classes of all `depth`-fold shortenings of the seeds, sorted by canonical
/// form. Empty shortenings are dropped.
std::vector<ClassRecord> classify_shortenings(std::span<const Code> seeds, int depth,
                                              const ClassifyOptions& options = {});

/// Fills extension_count (E values) for records whose count is missing.
void populate_extension_counts(std::vector<ClassRecord>& records, int appended, unsigned jobs = 1);

struct CountingIdentity {
  std::uint64_t lhs = 0;  // sum of n! 2^n E(C) / |Aut(C)|
  std::uint64_t rhs = 0;  // number of perfect codes of length n + i
  bool equal = false;
};

/// Throws when a record lacks E, when a term is not an integer, or when the
/// number of perfect codes of length n + i is not available (only 3 and 7).
CountingIdentity counting_identity(std::span<const ClassRecord> records, int n, int appended);

/// Same sum from bare (aut_order, E) pairs, e.g. read back from an
/// inventory file.
std::uint64_t counting_sum(std::span<const std::pair<std::uint64_t, std::uint64_t>> aut_and_e, int n);

/// n! * 2^n.
std::uint64_t group_order(int n);

}  // namespace codework
