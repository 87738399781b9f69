#include "codework/code.hpp"

#include <algorithm>
#include <array>
#include <bit>

namespace codework {

namespace {

void check_length(int length) {
  if (length < 1 || length > kMaxLength) {
    throw CodeError("code length must be in 1.." + std::to_string(kMaxLength) + ", got " +
                    std::to_string(length));
  }
}

}  // namespace

Codeword::Codeword(int length, Bits bits) : length_(length), bits_(bits) {
  check_length(length);
  if ((bits & ~low_mask(length)) != 0) throw CodeError("codeword has bits beyond its length");
}

Codeword Codeword::parse(std::string_view text) {
  if (text.empty() || text.size() > static_cast<std::size_t>(kMaxLength)) {
    throw CodeError("codeword must have 1.." + std::to_string(kMaxLength) + " characters");
  }
  Bits bits = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      bits |= Bits{1} << i;
    } else if (text[i] != '0') {
      throw CodeError("invalid character '" + std::string(1, text[i]) + "' in codeword");
    }
  }
  return Codeword(static_cast<int>(text.size()), bits);
}

std::string Codeword::str() const {
  std::string s(static_cast<std::size_t>(length_), '0');
  for (int i = 0; i < length_; ++i) {
    if ((bits_ >> i) & 1u) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

Code::Code(int length, std::vector<Bits> words) : length_(length), words_(std::move(words)) {
  check_length(length);
  const Bits mask = low_mask(length);
  for (Bits w : words_) {
    if ((w & ~mask) != 0) throw CodeError("codeword has bits beyond the code length");
  }
  std::sort(words_.begin(), words_.end());
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

Code::Code(int length, std::span<const Codeword> words) : length_(length) {
  check_length(length);
  words_.reserve(words.size());
  for (const Codeword& w : words) {
    if (w.length() != length) throw CodeError("codeword length differs from code length");
    words_.push_back(w.bits());
  }
  std::sort(words_.begin(), words_.end());
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

bool Code::contains(Bits w) const { return std::binary_search(words_.begin(), words_.end(), w); }

std::optional<std::size_t> Code::index_of(Bits w) const {
  auto it = std::lower_bound(words_.begin(), words_.end(), w);
  if (it == words_.end() || *it != w) return std::nullopt;
  return static_cast<std::size_t>(it - words_.begin());
}

std::string CodeParams::str() const {
  return "(" + std::to_string(n) + "," + std::to_string(M) + "," + (d ? std::to_string(*d) : "-") +
         ")";
}

int weight(Bits w) { return std::popcount(w); }
int weight(const Codeword& w) { return std::popcount(w.bits()); }

int distance(const Codeword& u, const Codeword& v) {
  if (u.length() != v.length()) throw CodeError("distance: length mismatch");
  return std::popcount(u.bits() ^ v.bits());
}

int min_distance(const Code& code) {
  if (code.size() < 2) throw CodeError("undefined minimum distance");
  const auto& w = code.words();
  int best = code.length() + 1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      best = std::min(best, std::popcount(w[i] ^ w[j]));
      if (best == 1) return 1;
    }
  }
  return best;
}

CodeParams params(const Code& code) {
  CodeParams p{code.length(), code.size(), std::nullopt};
  if (code.size() >= 2) p.d = min_distance(code);
  return p;
}

Code shorten(const Code& code, int coord, int value) {
  const int n = code.length();
  if (n < 2) throw CodeError("cannot shorten a code of length " + std::to_string(n));
  if (coord < 1 || coord > n) {
    throw CodeError("coordinate " + std::to_string(coord) + " out of range 1.." + std::to_string(n));
  }
  if (value != 0 && value != 1) throw CodeError("shortening value must be 0 or 1");
  const Bits bit = coord_bit(coord);
  const Bits low = bit - 1;
  std::vector<Bits> kept;
  for (Bits w : code.words()) {
    if (((w & bit) != 0) != (value == 1)) continue;
    kept.push_back((w & low) | ((w >> 1) & ~low));
  }
  return Code(n - 1, std::move(kept));
}

std::vector<Codeword> ball(const Codeword& center, int radius) {
  const int n = center.length();
  if (radius < 0 || radius > n) throw CodeError("ball radius out of range");
  std::vector<Codeword> out;
  for (Bits e = 0; e <= low_mask(n); ++e) {
    if (std::popcount(e) <= radius) out.emplace_back(n, center.bits() ^ e);
    if (e == low_mask(n)) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_perfect(const Code& code) {
  const int n = code.length();
  if (code.empty()) return false;
  const std::size_t space = std::size_t{1} << n;
  if (code.size() * static_cast<std::size_t>(n + 1) != space) return false;
  std::vector<char> covered(space, 0);
  for (Bits w : code.words()) {
    for (int k = -1; k < n; ++k) {
      const Bits p = k < 0 ? w : (w ^ (Bits{1} << k));
      if (covered[p]) return false;
      covered[p] = 1;
    }
  }
  return true;
}

namespace {

// Vertex set over at most 128 words.
struct WordSet {
  std::array<std::uint64_t, 2> lanes{};

  void set(unsigned v) { lanes[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(unsigned v) { lanes[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  bool any() const { return (lanes[0] | lanes[1]) != 0; }
  int count() const { return std::popcount(lanes[0]) + std::popcount(lanes[1]); }
  unsigned first() const {
    return lanes[0] ? static_cast<unsigned>(std::countr_zero(lanes[0]))
                    : 64u + static_cast<unsigned>(std::countr_zero(lanes[1]));
  }
  WordSet operator&(const WordSet& o) const { return {{lanes[0] & o.lanes[0], lanes[1] & o.lanes[1]}}; }
  WordSet without(const WordSet& o) const { return {{lanes[0] & ~o.lanes[0], lanes[1] & ~o.lanes[1]}}; }
};

// Max-clique search in the "distance >= d" graph with a greedy colouring bound.
class OptimalCodeSearch {
 public:
  OptimalCodeSearch(int n, int d) : size_(1u << n) {
    compatible_.resize(size_);
    conflicting_.resize(size_);
    for (unsigned u = 0; u < size_; ++u) {
      for (unsigned v = 0; v < size_; ++v) {
        if (std::popcount(u ^ v) >= d) {
          compatible_[u].set(v);
        } else {
          conflicting_[u].set(v);
        }
      }
    }
  }

  std::vector<Bits> run() {
    // The zero word is always taken: A(n,d) is invariant under translation.
    std::vector<Bits> chosen{0};
    best_ = chosen;
    expand(chosen, compatible_[0]);
    return best_;
  }

 private:
  void expand(std::vector<Bits>& chosen, WordSet candidates) {
    std::vector<unsigned> order;
    std::vector<int> colour;
    colour_sort(candidates, order, colour);
    for (std::size_t k = order.size(); k-- > 0;) {
      if (chosen.size() + static_cast<std::size_t>(colour[k]) <= best_.size()) return;
      const unsigned v = order[k];
      chosen.push_back(v);
      WordSet next = candidates & compatible_[v];
      if (next.any()) {
        expand(chosen, next);
      } else if (chosen.size() > best_.size()) {
        best_ = chosen;
      }
      chosen.pop_back();
      candidates.reset(v);
    }
  }

  // Greedy sequential colouring; vertices returned in nondecreasing colour.
  void colour_sort(WordSet uncoloured, std::vector<unsigned>& order, std::vector<int>& colour) const {
    int c = 0;
    while (uncoloured.any()) {
      ++c;
      WordSet available = uncoloured;
      while (available.any()) {
        const unsigned v = available.first();
        available.reset(v);
        // Words conflicting with v (distance < d) may share its colour.
        available = available & conflicting_[v];
        uncoloured.reset(v);
        order.push_back(v);
        colour.push_back(c);
      }
    }
  }

  unsigned size_;
  std::vector<WordSet> compatible_;
  std::vector<WordSet> conflicting_;
  std::vector<Bits> best_;
};

}  // namespace

OptimalSearchResult brute_force_optimal(int n, int d) {
  if (n < 1) throw CodeError("brute_force_optimal: length must be positive");
  if (n > 7) throw CodeError("brute_force_optimal: refusing n > 7 (search too large)");
  if (d < 1) throw CodeError("brute_force_optimal: distance must be positive");
  if (d > n) return {1, Code(n, std::vector<Bits>{0})};
  OptimalCodeSearch search(n, d);
  auto best = search.run();
  OptimalSearchResult result;
  result.size = best.size();
  result.witness = Code(n, std::move(best));
  return result;
}

std::uint64_t max_code_size(int n, int d) {
  if (d != 3) throw CodeError("A(n,d) is only provided for d = 3");
  if (n >= 1 && n <= 7) return brute_force_optimal(n, 3).size;
  switch (n) {
    case 12: return 256;
    case 13: return 512;
    case 14: return 1024;
    case 15: return 2048;
    default: break;
  }
  throw CodeError("A(" + std::to_string(n) + ",3) not certified by this artifact");
}

Code hamming_code(int m) {
  if (m < 2 || m > 4) throw CodeError("hamming_code: m must be 2, 3 or 4");
  const int n = (1 << m) - 1;
  std::vector<Bits> words;
  for (Bits w = 0; w < (Bits{1} << n); ++w) {
    // Syndrome: XOR of the column labels (coordinate index) of set bits.
    unsigned syndrome = 0;
    for (int i = 0; i < n; ++i) {
      if ((w >> i) & 1u) syndrome ^= static_cast<unsigned>(i + 1);
    }
    if (syndrome == 0) words.push_back(w);
  }
  return Code(n, std::move(words));
}

Code full_space(int n) {
  if (n < 1 || n > kMaxLength) throw CodeError("full_space: bad length");
  std::vector<Bits> words(std::size_t{1} << n);
  for (std::size_t i = 0; i < words.size(); ++i) words[i] = static_cast<Bits>(i);
  return Code(n, std::move(words));
}

}  // namespace codework
