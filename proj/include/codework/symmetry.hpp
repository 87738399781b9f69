#pragma once

// The equivalence group of F_2^n: translations followed by coordinate
// permutations, written as signed permutations.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "codework/code.hpp"

namespace codework {

/// A group element acting on words by flipping the coordinates in `flips`
/// and then moving coordinate i to coordinate perm(i).
///
/// Text form uses disjoint cycles over 1-based coordinates, with a leading
/// '~' on a coordinate that is flipped: "(1 3 2 13)(~4 ~7 ~8 9)(~12)".
class SignedPermutation {
 public:
  SignedPermutation() = default;
  /// `image` is 0-based: image[i] is where coordinate i+1 goes, minus one.
  SignedPermutation(int n, std::span<const int> image, Bits flips);

  static SignedPermutation identity(int n);
  static SignedPermutation parse(std::string_view text, int n);

  int n() const { return n_; }
  Bits flips() const { return flips_; }
  /// 0-based image of a 0-based coordinate.
  int image(int index) const { return image_[static_cast<std::size_t>(index)]; }
  bool is_identity() const;

  Bits apply(Bits w) const;
  Codeword apply(const Codeword& w) const;
  Code apply(const Code& code) const;

  SignedPermutation inverse() const;

  /// Cycle notation; the identity renders as "()".
  std::string str() const;

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
  friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  int n_ = 0;
  std::array<std::uint8_t, kMaxLength> image_{};
  Bits flips_ = 0;
};

/// apply(compose(g2, g1), w) == apply(g2, apply(g1, w)).
SignedPermutation compose(const SignedPermutation& g2, const SignedPermutation& g1);

Codeword apply(const SignedPermutation& g, const Codeword& w);
Code apply_code(const SignedPermutation& g, const Code& code);

/// An explicitly listed group.
struct Group {
  int n = 0;
  std::vector<SignedPermutation> generators;
  std::vector<SignedPermutation> elements;  // sorted

  std::size_t order() const { return elements.size(); }
  bool contains(const SignedPermutation& g) const;
};

inline constexpr std::size_t kDefaultClosureCap = 1'000'000;

/// Breadth-first closure of the generators under composition. Throws
/// CodeError when more than `cap` elements appear.
Group closure(std::span<const SignedPermutation> generators, int n,
              std::size_t cap = kDefaultClosureCap);

/// Union of the orbits of the representatives.
Code expand_orbits(const Group& group, std::span<const Codeword> reps);

/// Sizes of the individual orbits, in representative order.
std::vector<std::size_t> orbit_sizes(const Group& group, std::span<const Codeword> reps);

}  // namespace codework
