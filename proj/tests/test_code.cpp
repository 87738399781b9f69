#include <random>

#include "doctest.h"
#include "support.hpp"

using namespace codework;
using test_support::code_of;

TEST_CASE("codeword text round trip and bit layout") {
  const Codeword w = Codeword::parse("1000000010100");
  CHECK(w.length() == 13);
  CHECK(w.bits() == (coord_bit(1) | coord_bit(9) | coord_bit(11)));
  CHECK(w.at(1) == 1);
  CHECK(w.at(2) == 0);
  CHECK(w.str() == "1000000010100");
  CHECK_THROWS_AS(Codeword::parse("10x1"), CodeError);
  CHECK_THROWS_AS(Codeword::parse(""), CodeError);
  CHECK_THROWS_AS(Codeword::parse("00000000000000000"), CodeError);
  CHECK_THROWS_AS(Codeword(3, 0b1000), CodeError);
}

TEST_CASE("weight") {
  CHECK(weight(Codeword::parse("0000000000000")) == 0);
  CHECK(weight(Codeword::parse("1000000010100")) == 3);
  CHECK(weight(Codeword::parse("1111")) == 4);
}

TEST_CASE("distance") {
  const auto zero = Codeword::parse("0000000000000");
  CHECK(distance(zero, Codeword::parse("1000000010100")) == 3);
  CHECK(distance(zero, zero) == 0);
  CHECK(distance(Codeword::parse("10110"), Codeword::parse("01110")) == 2);
  CHECK_THROWS_AS(distance(Codeword::parse("10"), Codeword::parse("100")), CodeError);
}

TEST_CASE("code keeps sorted distinct words") {
  const Code c(3, std::vector<Bits>{7, 0, 7, 2});
  CHECK(c.size() == 3);
  CHECK(c.words() == std::vector<Bits>{0, 2, 7});
  CHECK(c.contains(2));
  CHECK_FALSE(c.contains(1));
  CHECK(c.index_of(7) == 2u);
  CHECK_THROWS_AS(Code(3, std::vector<Bits>{8}), CodeError);
}

TEST_CASE("min_distance") {
  CHECK(min_distance(code_of({"00000", "11100", "00111"})) == 3);
  CHECK(min_distance(test_support::first_fixture_code()) == 3);
  CHECK(min_distance(test_support::second_fixture_code()) == 3);
  CHECK_THROWS_WITH_AS(min_distance(code_of({"101"})), "undefined minimum distance", CodeError);
}

TEST_CASE("params string") {
  CHECK(params(code_of({"000", "111"})).str() == "(3,2,3)");
  CHECK(params(test_support::first_fixture_code()).str() == "(13,512,3)");
}

TEST_CASE("shorten") {
  CHECK(shorten(code_of({"000", "111"}), 3, 0) == code_of({"00"}));
  const Code h = shorten(hamming_code(3), 7, 0);
  CHECK(h.length() == 6);
  CHECK(h.size() == 8);
  CHECK(min_distance(h) == 3);
  const Code first = test_support::first_fixture_code();
  for (int coord = 1; coord <= 13; ++coord) {
    for (int value = 0; value <= 1; ++value) {
      const Code s = shorten(first, coord, value);
      CHECK(params(s).str() == "(12,256,3)");
    }
  }
  CHECK_THROWS_AS(shorten(first, 14, 0), CodeError);
  CHECK_THROWS_AS(shorten(first, 0, 0), CodeError);
}

TEST_CASE("ball") {
  const auto b = ball(Codeword::parse("000"), 1);
  CHECK(b.size() == 4);
  CHECK(ball(Codeword::parse("0110"), 0) == std::vector<Codeword>{Codeword::parse("0110")});
  CHECK(ball(Codeword::parse("101010101010101"), 1).size() == 16);
  CHECK(ball(Codeword::parse("10101"), 2).size() == 16);
}

TEST_CASE("is_perfect") {
  CHECK(is_perfect(code_of({"000", "111"})));
  CHECK(is_perfect(hamming_code(3)));
  CHECK(is_perfect(hamming_code(4)));
  CHECK_FALSE(is_perfect(test_support::first_fixture_code()));
  CHECK_FALSE(is_perfect(code_of({"000", "011"})));
}

TEST_CASE("hamming codes") {
  CHECK(params(hamming_code(3)).str() == "(7,16,3)");
  CHECK(params(hamming_code(4)).str() == "(15,2048,3)");
}

TEST_CASE("max_code_size") {
  CHECK(max_code_size(13) == 512);
  CHECK(max_code_size(15) == 2048);
  CHECK(max_code_size(12) == 256);
  CHECK(max_code_size(14) == 1024);
  CHECK(max_code_size(5) == 4);
  CHECK(max_code_size(7) == 16);
  CHECK_THROWS_WITH_AS(max_code_size(11), "A(11,3) not certified by this artifact", CodeError);
  CHECK_THROWS_AS(max_code_size(9), CodeError);
  CHECK_THROWS_AS(max_code_size(13, 5), CodeError);
}

TEST_CASE("brute_force_optimal") {
  auto r3 = brute_force_optimal(3, 3);
  CHECK(r3.size == 2);
  CHECK(min_distance(r3.witness) >= 3);
  CHECK(brute_force_optimal(5, 3).size == 4);
  auto r7 = brute_force_optimal(7, 3);
  CHECK(r7.size == 16);
  CHECK(is_perfect(r7.witness));
  CHECK(brute_force_optimal(6, 4).size == 4);
  CHECK_THROWS_AS(brute_force_optimal(8, 3), CodeError);
}

TEST_CASE("distance is a metric on random triples") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<Bits> pick(0, low_mask(13));
  for (int t = 0; t < 2000; ++t) {
    const Codeword u(13, pick(rng)), v(13, pick(rng)), w(13, pick(rng));
    CHECK((distance(u, v) == 0) == (u == v));
    CHECK(distance(u, v) == distance(v, u));
    CHECK(distance(u, w) <= distance(u, v) + distance(v, w));
    CHECK(distance(u, v) == weight(Bits{u.bits() ^ v.bits()}));
  }
}

TEST_CASE("shortening keeps pairwise distances of kept words") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 100; ++t) {
    const Code c = test_support::random_code(rng, 8, 2, 60);
    for (int coord = 1; coord <= 8; ++coord) {
      for (int value = 0; value <= 1; ++value) {
        const Code s = shorten(c, coord, value);
        if (s.size() >= 2) CHECK(min_distance(s) >= min_distance(c));
      }
    }
  }
}

TEST_CASE("perfect codes: sphere packing and shortened sizes are optimal") {
  for (const Code& p : {hamming_code(3), hamming_code(4)}) {
    const int n = p.length();
    CHECK(p.size() * static_cast<std::size_t>(n + 1) == (std::size_t{1} << n));
    CHECK(min_distance(p) >= 3);
    Code s = p;
    for (int i = 1; i <= 3; ++i) {
      s = shorten(s, 1, 0);
      const int m = n - i;
      if (m <= 7 || (m >= 12 && m <= 14)) CHECK(s.size() == max_code_size(m));
    }
  }
}
