#pragma once

#include <algorithm>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "codework/code.hpp"
#include "codework/symmetry.hpp"
#include "codework/text_io.hpp"

namespace test_support {

using namespace codework;

inline std::filesystem::path data_dir() { return CODEWORK_DATA_DIR; }

inline Code first_fixture_code() { return read_orbit_file(data_dir() / "table1-first.orbit").expand(); }
inline Code second_fixture_code() { return read_orbit_file(data_dir() / "table1-second.orbit").expand(); }

inline Code code_of(std::initializer_list<const char*> words) {
  std::vector<Codeword> ws;
  for (const char* w : words) ws.push_back(Codeword::parse(w));
  return Code(ws.front().length(), std::span<const Codeword>(ws));
}

/// Random code of length n: up to `attempts` random words are offered and
/// kept greedily when at distance >= d from everything kept so far.
inline Code random_code(std::mt19937_64& rng, int n, int d, int attempts) {
  std::uniform_int_distribution<Bits> pick(0, low_mask(n));
  std::vector<Bits> kept;
  for (int a = 0; a < attempts; ++a) {
    const Bits w = pick(rng);
    const bool ok = std::all_of(kept.begin(), kept.end(), [&](Bits v) { return weight(w ^ v) >= d; });
    if (ok) kept.push_back(w);
  }
  return Code(n, kept);
}

/// Random subset of F_2^n with each word present with probability p.
inline Code random_subset(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution keep(p);
  std::vector<Bits> words;
  for (Bits w = 0; w <= low_mask(n); ++w) {
    if (keep(rng)) words.push_back(w);
  }
  return Code(n, words);
}

inline SignedPermutation random_element(std::mt19937_64& rng, int n) {
  std::vector<int> image(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) image[static_cast<std::size_t>(i)] = i;
  std::shuffle(image.begin(), image.end(), rng);
  std::uniform_int_distribution<Bits> flips(0, low_mask(n));
  return SignedPermutation(n, image, flips(rng));
}

}  // namespace test_support
