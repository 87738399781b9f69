// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "codework/canonical.hpp"
#include "codework/classify.hpp"
#include "codework/exact_cover.hpp"
#include "codework/lengthening.hpp"
#include "codework/switching.hpp"
#include "support.hpp"

using namespace codework;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<Outcome()> body;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

Outcome fixture_expansion() {
  for (const char* name : {"table1-first.orbit", "table1-second.orbit"}) {
    const Code c = read_orbit_file(test_support::data_dir() / name).expand();
    if (c.length() != 13 || c.size() != 512 || min_distance(c) != 3) {
      return fail(std::string(name) + " expanded to " + params(c).str());
    }
  }
  return {true, "both fixtures expand to (13,512,3)"};
}

Outcome automorphism_orders() {
  const auto first = read_orbit_file(test_support::data_dir() / "table1-first.orbit");
  const auto second = read_orbit_file(test_support::data_dir() / "table1-second.orbit");
  const std::size_t g1 = first.group().order(), g2 = second.group().order();
  const auto a1 = automorphism_group(first.expand());
  const auto a2 = automorphism_group(second.expand());
  const std::string detail = "closure " + std::to_string(g1) + "/" + std::to_string(g2) + ", Aut " +
                             std::to_string(a1.order) + "/" + std::to_string(a2.order);
  const bool ok = g1 == 128 && g2 == 96 && a1.exact && a2.exact && a1.order == 128 && a2.order == 96;
  return {ok, detail};
}

Outcome headline() {
  const bool first = is_shortened_perfect(test_support::first_fixture_code(), 2);
  const bool second = is_shortened_perfect(test_support::second_fixture_code(), 2);
  return {!first && !second, std::string("first ") + (first ? "extends" : "UNSAT") + ", second " +
                                 (second ? "extends" : "UNSAT")};
}

Outcome further_shortenings() {
  std::string detail;
  bool ok = true;
  int which = 0;
  for (const Code& c : {test_support::first_fixture_code(), test_support::second_fixture_code()}) {
    ++which;
    bool found = false;
    for (const auto& s : shorten_all(c)) {
      if (!is_shortened_perfect(s.code, 3)) {
        detail += (which == 1 ? "" : ", ") + std::string(which == 1 ? "first" : "second") + ": coord " +
                  std::to_string(s.coord) + " value " + std::to_string(s.value) + " fails";
        found = true;
        break;
      }
    }
    ok &= found;
    if (!found) detail += (which == 1 ? "" : ", ") + std::string("no failing shortening for code ") +
                          std::to_string(which);
  }
  return {ok, detail};
}

Outcome positive_control() {
  const Code h = hamming_code(3);
  const auto start = std::chrono::steady_clock::now();
  const bool doubly = is_shortened_perfect(shorten(shorten(h, 7, 0), 6, 0), 2);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!doubly) return fail("doubly shortened Hamming(7) does not extend");
  if (secs >= 1.0) return fail("doubly shortened check took " + std::to_string(secs) + " s");
  for (const auto& s : shorten_all(h)) {
    if (!is_shortened_perfect(s.code, 1)) {
      return fail("single shortening at coord " + std::to_string(s.coord) + " does not extend");
    }
  }
  return {true, "doubly shortened extends; 14/14 single shortenings extend"};
}

Outcome census() {
  const auto codes = enumerate_perfect(7);
  std::set<Code> forms;
  for (const Code& c : codes) forms.insert(canonical_form(c).form);
  const std::uint64_t aut = automorphism_group(hamming_code(3)).order;
  const std::uint64_t predicted = group_order(7) / aut;
  const std::set<Code> distinct(codes.begin(), codes.end());
  const bool ok = codes.size() == 240 && distinct.size() == 240 && forms.size() == 1 && predicted == 240;
  return {ok, std::to_string(codes.size()) + " codes, " + std::to_string(forms.size()) + " class, 7!*2^7/" +
                  std::to_string(aut) + " = " + std::to_string(predicted)};
}

Outcome counting_identity_analog() {
  auto records = classify_shortenings(std::vector<Code>{hamming_code(3)}, 2);
  populate_extension_counts(records, 2);
  const auto id = counting_identity(records, 5, 2);
  return {id.equal && id.rhs == 240, std::to_string(records.size()) + " classes, lhs=" + std::to_string(id.lhs) +
                                         " rhs=" + std::to_string(id.rhs)};
}

Outcome switching_keeps_distance() {
  std::mt19937_64 rng(801);
  std::uniform_int_distribution<int> len(2, 10), dist(1, 4);
  std::size_t switches = 0, grown = 0;
  for (int t = 0; t < 500; ++t) {
    const int n = len(rng);
    Code c;
    do {
      c = test_support::random_code(rng, n, std::min(dist(rng), n), 4 * n);
    } while (c.size() < 2);
    const int d = min_distance(c);
    for (int coord = 1; coord <= n; ++coord) {
      const auto g = switching_graph(c, coord);
      for (std::size_t k = 0; k < g.components.size(); ++k) {
        const Code s = switch_code(g, k);
        ++switches;
        if (s.size() != c.size() || min_distance(s) < d) return fail("code " + std::to_string(t) + " violates");
        std::vector<int> back;
        for (int i : g.components[k]) {
          back.push_back(static_cast<int>(*s.index_of(c.words()[static_cast<std::size_t>(i)] ^ coord_bit(coord))));
        }
        std::sort(back.begin(), back.end());
        // When the minimum distance grew, the switched words need not be a
        // component of the new graph, so they are flipped back directly.
        Code restored;
        if (min_distance(s) == d) {
          restored = switch_code(s, coord, back);
        } else {
          ++grown;
          std::vector<Bits> words = s.words();
          for (int i : back) words[static_cast<std::size_t>(i)] ^= coord_bit(coord);
          restored = Code(n, words);
        }
        if (restored != c) return fail("double switch differs on code " + std::to_string(t));
      }
    }
  }
  return {true, "500 codes, " + std::to_string(switches) + " switches (" + std::to_string(grown) +
                    " raised d, restored by direct flip)"};
}

Outcome odd_distance() {
  std::mt19937_64 rng(901);
  std::uniform_int_distribution<int> len(4, 12);
  std::size_t pairs = 0;
  for (int t = 0; t < 100; ++t) {
    const int n = len(rng);
    Code c;
    do {
      c = test_support::random_code(rng, n, t % 2 ? 3 : 1, 3 * n);
    } while (c.size() < 2 || min_distance(c) % 2 == 0);
    for (int coord = 1; coord <= n; ++coord) {
      const auto g = switching_graph(c, coord);
      for (std::size_t u = 0; u < c.size(); ++u) {
        for (std::size_t v = u + 1; v < c.size(); ++v) {
          if (weight((c.words()[u] ^ c.words()[v]) & ~coord_bit(coord)) % 2 == 0) continue;
          ++pairs;
          if (g.component_of[u] == g.component_of[v]) return fail("code " + std::to_string(t) + " joins an odd pair");
        }
      }
    }
  }
  return {true, "100 codes, " + std::to_string(pairs) + " odd pairs separated"};
}

Outcome canonical_oracle() {
  std::mt19937_64 rng(1001);
  std::uniform_int_distribution<int> len(2, 6);
  std::bernoulli_distribution coin(0.5);
  int equivalent_pairs = 0;
  for (int t = 0; t < 200; ++t) {
    const int n = len(rng);
    Code c;
    do {
      c = test_support::random_subset(rng, n, 0.4);
    } while (c.empty());
    const Code bf = canonical_form_bruteforce(c).form;
    if (canonical_form(c).form != bf) return fail("form differs on code " + std::to_string(t));
    Code other;
    if (coin(rng)) {
      other = apply_code(test_support::random_element(rng, n), c);
    } else {
      // Same size, otherwise random, so the answer is not decided by size.
      std::vector<Bits> all(std::size_t{1} << n);
      std::iota(all.begin(), all.end(), Bits{0});
      std::shuffle(all.begin(), all.end(), rng);
      all.resize(c.size());
      other = Code(n, all);
    }
    const bool expect = canonical_form_bruteforce(other).form == bf;
    equivalent_pairs += expect;
    if (are_equivalent(c, other) != expect) return fail("equivalence differs on pair " + std::to_string(t));
  }
  return {true, "200 codes; " + std::to_string(equivalent_pairs) + " equivalent pairs"};
}

Outcome switching_neighborhood() {
  const auto neighbors = switch_neighbors(test_support::first_fixture_code());
  for (std::size_t k = 0; k < neighbors.size(); ++k) {
    const auto& nb = neighbors[k];
    if (is_shortened_perfect(nb.code, 2)) {
      return {true, "neighbor " + std::to_string(k + 1) + "/" + std::to_string(neighbors.size()) + " (coord " +
                        std::to_string(nb.coord) + ", component " + std::to_string(nb.component) +
                        ") is doubly shortened perfect"};
    }
  }
  return fail("none of " + std::to_string(neighbors.size()) + " neighbors extends");
}

Outcome cover_oracle() {
  std::mt19937_64 rng(1201);
  std::uniform_int_distribution<int> cols_dist(1, 8), rows_dist(0, 12);
  std::bernoulli_distribution take(0.3);
  std::size_t total = 0;
  for (int t = 0; t < 300; ++t) {
    const int cols = cols_dist(rng);
    const int nrows = rows_dist(rng);
    std::vector<std::vector<int>> rows;
    for (int r = 0; r < nrows; ++r) {
      std::vector<int> row;
      for (int c = 0; c < cols; ++c) {
        if (take(rng)) row.push_back(c);
      }
      if (row.empty()) row.push_back(static_cast<int>(rng() % static_cast<unsigned>(cols)));
      rows.push_back(row);
    }
    const ExactCoverInstance inst(cols, rows);
    std::vector<CoverSolution> naive;
    for (std::uint32_t mask = 0; mask < (1u << nrows); ++mask) {
      std::vector<int> pick;
      for (int r = 0; r < nrows; ++r) {
        if (mask >> r & 1u) pick.push_back(r);
      }
      std::vector<int> hits(static_cast<std::size_t>(cols), 0);
      for (int r : pick) {
        for (int c : inst.rows()[static_cast<std::size_t>(r)]) ++hits[static_cast<std::size_t>(c)];
      }
      if (std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; })) naive.push_back({pick});
    }
    auto got = enumerate(inst, 1u << 13);
    std::sort(got.solutions.begin(), got.solutions.end());
    std::sort(naive.begin(), naive.end());
    if (!got.complete || got.solutions != naive) return fail("disagreement on instance " + std::to_string(t));
    for (const auto& s : got.solutions) {
      if (!is_exact_cover(inst, s.rows)) return fail("verifier rejects a solution on instance " + std::to_string(t));
    }
    total += naive.size();
  }
  return {true, "300 instances, " + std::to_string(total) + " solutions agree"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "orbit fixtures expand to (13,512,3) codes", 1, fixture_expansion},
      {2, "automorphism orders 128 and 96", 1200, automorphism_orders},
      {3, "fixture codes are not doubly shortened perfect", 7200, headline},
      {4, "a single shortening is not triply shortened perfect", 7200, further_shortenings},
      {5, "positive control at length 7", 5, positive_control},
      {6, "perfect-code census at length 7", 60, census},
      {7, "counting identity at length 7", 600, counting_identity_analog},
      {8, "switching never reduces minimum distance", 60, switching_keeps_distance},
      {9, "odd punctured distance separates components", 60, odd_distance},
      {10, "canonical form oracle", 300, canonical_oracle},
      {11, "switch neighbor of the first code extends", 14400, switching_neighborhood},
      {12, "exact cover oracle", 60, cover_oracle},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome result;
    try {
      result = c.body();
    } catch (const std::exception& e) {
      result = fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (result.ok && secs > c.budget_seconds) {
      result = fail(result.detail + "; over budget of " + std::to_string(static_cast<int>(c.budget_seconds)) + " s");
    }
    failures += !result.ok;
    std::printf("%s  %2d  %-52s %8.2f s  %s\n", result.ok ? "PASS" : "FAIL", c.id, c.name.c_str(), secs,
                result.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
