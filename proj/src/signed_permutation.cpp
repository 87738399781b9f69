#include <algorithm>
#include <cctype>
#include <numeric>

#include "codework/symmetry.hpp"

namespace codework {

SignedPermutation::SignedPermutation(int n, std::span<const int> image, Bits flips)
    : n_(n), flips_(flips) {
  if (n < 1 || n > kMaxLength) throw CodeError("signed permutation: bad length");
  if (image.size() != static_cast<std::size_t>(n)) {
    throw CodeError("signed permutation: image has wrong size");
  }
  if ((flips & ~low_mask(n)) != 0) throw CodeError("signed permutation: flips beyond length");
  unsigned seen = 0;
  for (int i = 0; i < n; ++i) {
    const int j = image[static_cast<std::size_t>(i)];
    if (j < 0 || j >= n || ((seen >> j) & 1u)) {
      throw CodeError("signed permutation: image is not a bijection");
    }
    seen |= 1u << j;
    image_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(j);
  }
}

SignedPermutation SignedPermutation::identity(int n) {
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 0);
  return SignedPermutation(n, image, 0);
}

SignedPermutation SignedPermutation::parse(std::string_view text, int n) {
  if (n < 1 || n > kMaxLength) throw CodeError("signed permutation: bad length");
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 0);
  Bits flips = 0;
  unsigned used = 0;
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) -> void {
    throw CodeError("malformed permutation '" + std::string(text) + "': " + why);
  };
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') fail("expected '('");
    ++pos;
    std::vector<int> cycle;
    for (;;) {
      skip_space();
      if (pos >= text.size()) fail("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      bool flipped = false;
      if (text[pos] == '~') {
        flipped = true;
        ++pos;
      }
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
        fail("expected coordinate");
      }
      int value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        if (value > n) fail("coordinate out of range");
        ++pos;
      }
      if (value < 1 || value > n) fail("coordinate out of range");
      if ((used >> (value - 1)) & 1u) fail("coordinate " + std::to_string(value) + " repeated");
      used |= 1u << (value - 1);
      if (flipped) flips |= coord_bit(value);
      cycle.push_back(value - 1);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      image[static_cast<std::size_t>(cycle[k])] = cycle[(k + 1) % cycle.size()];
    }
    skip_space();
  }
  return SignedPermutation(n, image, flips);
}

bool SignedPermutation::is_identity() const {
  if (flips_ != 0) return false;
  for (int i = 0; i < n_; ++i) {
    if (image_[static_cast<std::size_t>(i)] != i) return false;
  }
  return true;
}

Bits SignedPermutation::apply(Bits w) const {
  w ^= flips_;
  Bits out = 0;
  while (w != 0) {
    const int i = std::countr_zero(w);
    w &= w - 1;
    out |= Bits{1} << image_[static_cast<std::size_t>(i)];
  }
  return out;
}

Codeword SignedPermutation::apply(const Codeword& w) const {
  if (w.length() != n_) throw CodeError("apply: length mismatch");
  return Codeword(n_, apply(w.bits()));
}

Code SignedPermutation::apply(const Code& code) const {
  if (code.length() != n_) throw CodeError("apply_code: length mismatch");
  std::vector<Bits> out;
  out.reserve(code.size());
  for (Bits w : code.words()) out.push_back(apply(w));
  return Code(n_, std::move(out));
}

SignedPermutation SignedPermutation::inverse() const {
  // g(w) = P(w + x), so g^-1(y) = P^-1(y) + x = P^-1(y + P(x)).
  std::vector<int> inv(static_cast<std::size_t>(n_));
  Bits moved_flips = 0;
  for (int i = 0; i < n_; ++i) {
    const int j = image_[static_cast<std::size_t>(i)];
    inv[static_cast<std::size_t>(j)] = i;
    if ((flips_ >> i) & 1u) moved_flips |= Bits{1} << j;
  }
  return SignedPermutation(n_, inv, moved_flips);
}

std::string SignedPermutation::str() const {
  std::string out;
  unsigned done = 0;
  for (int start = 0; start < n_; ++start) {
    if ((done >> start) & 1u) continue;
    const bool fixed = image_[static_cast<std::size_t>(start)] == start;
    if (fixed && !((flips_ >> start) & 1u)) {
      done |= 1u << start;
      continue;
    }
    out += '(';
    int i = start;
    bool first = true;
    do {
      if (!first) out += ' ';
      first = false;
      if ((flips_ >> i) & 1u) out += '~';
      out += std::to_string(i + 1);
      done |= 1u << i;
      i = image_[static_cast<std::size_t>(i)];
    } while (i != start);
    out += ')';
  }
  return out.empty() ? "()" : out;
}

SignedPermutation compose(const SignedPermutation& g2, const SignedPermutation& g1) {
  if (g1.n() != g2.n()) throw CodeError("compose: length mismatch");
  const int n = g1.n();
  // g2(g1(w)) = P2(P1(w + x1) + x2) = P2 P1 (w + x1 + P1^-1(x2)).
  std::vector<int> image(static_cast<std::size_t>(n));
  Bits flips = g1.flips();
  for (int i = 0; i < n; ++i) {
    const int mid = g1.image(i);
    image[static_cast<std::size_t>(i)] = g2.image(mid);
    if ((g2.flips() >> mid) & 1u) flips ^= Bits{1} << i;
  }
  return SignedPermutation(n, image, flips);
}

Codeword apply(const SignedPermutation& g, const Codeword& w) { return g.apply(w); }
Code apply_code(const SignedPermutation& g, const Code& code) { return g.apply(code); }

}  // namespace codework
