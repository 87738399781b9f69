#pragma once

// Binary codes of length <= 16: codewords, codes, distances, shortening,
// perfection and optimality checks.
//
// Coordinates are numbered 1..n from left to right in text form; coordinate i
// lives in bit i-1 of the stored pattern.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace codework {

using Bits = std::uint32_t;

inline constexpr int kMaxLength = 16;

/// Raised for domain errors (bad parameters, malformed input, refused
/// computations). Usage errors in the CLI are reported separately.
class CodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr Bits low_mask(int n) { return n >= 32 ? ~Bits{0} : ((Bits{1} << n) - 1); }
inline constexpr Bits coord_bit(int coord) { return Bits{1} << (coord - 1); }

class Codeword {
 public:
  Codeword() = default;
  Codeword(int length, Bits bits);

  static Codeword parse(std::string_view text);

  int length() const { return length_; }
  Bits bits() const { return bits_; }
  /// Value (0 or 1) at a 1-based coordinate.
  int at(int coord) const { return static_cast<int>((bits_ >> (coord - 1)) & 1u); }

  std::string str() const;

  friend bool operator==(const Codeword&, const Codeword&) = default;
  friend auto operator<=>(const Codeword&, const Codeword&) = default;

 private:
  int length_ = 0;
  Bits bits_ = 0;
};

/// A set of equal-length codewords, stored strictly increasing by bit
/// pattern.
class Code {
 public:
  Code() = default;
  /// Sorts and removes duplicates. Throws if any pattern has bits set at or
  /// above `length`.
  Code(int length, std::vector<Bits> words);
  Code(int length, std::span<const Codeword> words);

  int length() const { return length_; }
  std::size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }
  const std::vector<Bits>& words() const { return words_; }
  Codeword word(std::size_t index) const { return Codeword(length_, words_[index]); }
  bool contains(Bits w) const;
  /// Index of `w` in the sorted word list, or nullopt.
  std::optional<std::size_t> index_of(Bits w) const;

  friend bool operator==(const Code&, const Code&) = default;
  friend auto operator<=>(const Code&, const Code&) = default;

 private:
  int length_ = 0;
  std::vector<Bits> words_;
};

struct CodeParams {
  int n = 0;
  std::size_t M = 0;
  std::optional<int> d;  // absent when M < 2

  std::string str() const;
};

int weight(const Codeword& w);
int weight(Bits w);
int distance(const Codeword& u, const Codeword& v);

/// Throws CodeError("undefined minimum distance") for codes with < 2 words.
int min_distance(const Code& code);
CodeParams params(const Code& code);

Code shorten(const Code& code, int coord, int value);

std::vector<Codeword> ball(const Codeword& center, int radius);

bool is_perfect(const Code& code);

/// A(n,3) where this library can vouch for it: exhaustive search for n <= 7,
/// the shortened-perfect values for n = 12..15. Anything else throws.
std::uint64_t max_code_size(int n, int d = 3);

struct OptimalSearchResult {
  std::size_t size = 0;
  Code witness;
};

/// Maximum size of a length-n code with minimum distance >= d, by
/// branch-and-bound over words in increasing order with the zero word fixed.
OptimalSearchResult brute_force_optimal(int n, int d);

/// The linear Hamming code of length 2^m - 1 (kernel of the matrix whose
/// columns are 1..2^m-1 in binary).
Code hamming_code(int m);

/// Full space F_2^n as a code.
Code full_space(int n);

}  // namespace codework
