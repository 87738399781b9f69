#pragma once

// Canonical forms, equivalence testing and automorphism groups.
//
// The canonical form of a code C is the least code pi(C + c), over
// codewords c in C and coordinate permutations pi, where codes of equal size
// are compared by their sorted word lists. Translating by a codeword loses
// nothing: the least candidate always contains the zero word.
//
// The search fills target coordinates 1, 2, ... in turn. After k steps the
// words supported on the first k target coordinates are fixed, and those
// words form a prefix of the final sorted list, so prefixes can be compared
// against the best leaf found so far. Automorphisms found from equal leaves
// prune translations and sibling choices in the same orbit.

#include <cstdint>
#include <optional>
#include <vector>

#include "codework/code.hpp"
#include "codework/symmetry.hpp"

namespace codework {

struct CanonicalForm {
  Code form;
  /// Maps the input code onto `form`.
  SignedPermutation transporter;
};

CanonicalForm canonical_form(const Code& code);

/// Exhaustive minimum over all n! * 2^n group elements. n <= 6 only.
CanonicalForm canonical_form_bruteforce(const Code& code);

bool are_equivalent(const Code& a, const Code& b);

/// A map g with apply_code(g, a) == b, when the codes are equivalent.
std::optional<SignedPermutation> equivalence_witness(const Code& a, const Code& b);

struct AutomorphismGroup {
  int n = 0;
  std::vector<SignedPermutation> generators;
  std::uint64_t order = 1;
  /// False when the stabilizer count hit the node budget; `order` is then a
  /// lower bound.
  bool exact = true;

  /// Explicit listing via closure (throws past the cap).
  Group to_group(std::size_t cap = kDefaultClosureCap) const;
};

struct AutomorphismOptions {
  /// Search nodes allowed while counting the stabilizer of one codeword.
  std::uint64_t node_budget = 50'000'000;
};

AutomorphismGroup automorphism_group(const Code& code, const AutomorphismOptions& options = {});

/// Exhaustive n! * 2^n scan. n <= 5 only.
AutomorphismGroup automorphism_group_bruteforce(const Code& code);

/// 64-bit digest of a code's word list (FNV-1a). Used as a lookup key; equal
/// digests must still be confirmed by comparing the codes.
std::uint64_t code_digest(const Code& code);
std::string digest_hex(std::uint64_t digest);

}  // namespace codework
