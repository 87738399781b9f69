#include "codework/canonical.hpp"

#include "codework/detail/disjoint_sets.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdio>
#include <numeric>
#include <set>
#include <span>

namespace codework {

namespace {

// Prefix elements contributed when one target coordinate is filled: the
// images of the words that become fully placed at that step, sorted.
using LevelWords = std::vector<Bits>;

// Negative when `a` gives the smaller prefix. The smaller prefix is the one
// holding the least element of the symmetric difference.
int compare_levels(std::span<const Bits> a, std::span<const Bits> b) {
  const std::size_t common = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  if (a.size() == b.size()) return 0;
  return a.size() > b.size() ? -1 : 1;
}

std::uint64_t factorial(int k) {
  std::uint64_t f = 1;
  for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

struct Entry {
  Bits residual;  // original coordinates of the translated word not yet placed
  Bits mapped;    // image bits over target coordinates filled so far
};

using detail::DisjointSets;

class FormSearch {
 public:
  explicit FormSearch(const Code& code) : code_(code), n_(code.length()) {}

  // Finds the least form, its first leaf and automorphisms met on the way.
  void minimize() {
    mode_ = Mode::kMinimize;
    const auto& words = code_.words();
    DisjointSets orbits(words.size());
    std::vector<char> explored(words.size(), 0);
    std::size_t merged_generators = 0;
    for (std::size_t idx = 0; idx < words.size(); ++idx) {
      for (; merged_generators < generators_.size(); ++merged_generators) {
        const auto& g = generators_[merged_generators];
        for (std::size_t i = 0; i < words.size(); ++i) {
          orbits.unite(i, *code_.index_of(g.apply(words[i])));
        }
      }
      // Roots are the least index of each orbit, so an orbit containing an
      // explored translation has an explored root.
      bool seen = false;
      for (std::size_t j = 0; j < idx && !seen; ++j) {
        seen = explored[j] && orbits.find(j) == orbits.find(idx);
      }
      if (seen) continue;
      explored[idx] = 1;
      run_translation(words[idx]);
    }
  }

  // Counts leaves equal to the least form below the first leaf's
  // translation: that is the stabilizer of one codeword in Aut(C).
  void count_stabilizer(std::uint64_t node_budget) {
    mode_ = Mode::kCount;
    budget_ = node_budget;
    nodes_ = 0;
    aborted_ = false;
    stabilizer_count_ = 0;
    run_translation(best_translation_);
  }

  SignedPermutation best_transporter() const { return transporter(best_translation_, best_seq_); }
  Bits best_translation() const { return best_translation_; }
  const std::vector<SignedPermutation>& generators() const { return generators_; }
  std::uint64_t stabilizer_count() const { return stabilizer_count_; }
  bool aborted() const { return aborted_; }

 private:
  enum class Mode { kMinimize, kCount };

  SignedPermutation transporter(Bits translation, const std::array<int, kMaxLength>& seq) const {
    std::vector<int> image(static_cast<std::size_t>(n_));
    for (int t = 0; t < n_; ++t) image[static_cast<std::size_t>(seq[static_cast<std::size_t>(t)])] = t;
    return SignedPermutation(n_, image, translation);
  }

  void add_generator(const SignedPermutation& g) {
    if (g.is_identity()) return;
    if (std::find(generators_.begin(), generators_.end(), g) != generators_.end()) return;
    generators_.push_back(g);
  }

  void run_translation(Bits translation) {
    translation_ = translation;
    chosen_ = 0;
    std::vector<Entry> active;
    active.reserve(code_.size());
    for (Bits w : code_.words()) {
      if (w != translation) active.push_back({w ^ translation, 0});
    }
    descend(0, active, have_best_);
  }

  void descend(int k, const std::vector<Entry>& active, bool tied) {
    if (aborted_) return;
    if (mode_ == Mode::kCount && budget_ != 0 && ++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    if (active.empty()) {
      leaf(k, tied);
      return;
    }

    // Words with exactly one unplaced coordinate j become placed if j fills
    // target coordinate k; bucket them by j.
    auto& keys = scratch_keys_[static_cast<std::size_t>(k)];
    keys.clear();
    const Bits top = Bits{1} << k;
    for (const Entry& e : active) {
      if (std::has_single_bit(e.residual)) {
        keys.push_back((static_cast<std::uint64_t>(std::countr_zero(e.residual)) << 32) |
                       (e.mapped | top));
      }
    }
    std::sort(keys.begin(), keys.end());
    std::array<std::span<const std::uint64_t>, kMaxLength> bucket_keys{};
    for (std::size_t a = 0; a < keys.size();) {
      std::size_t b = a;
      const std::size_t j = static_cast<std::size_t>(keys[a] >> 32);
      while (b < keys.size() && (keys[b] >> 32) == j) ++b;
      bucket_keys[j] = std::span<const std::uint64_t>(keys.data() + a, b - a);
      a = b;
    }
    auto bucket = [&](int j) {
      LevelWords out;
      for (std::uint64_t key : bucket_keys[static_cast<std::size_t>(j)]) {
        out.push_back(static_cast<Bits>(key & 0xffffffffu));
      }
      return out;
    };

    LevelWords best;
    std::vector<int> children;
    for (int j = 0; j < n_; ++j) {
      if ((chosen_ >> j) & 1u) continue;
      LevelWords cand = bucket(j);
      const int cmp = children.empty() ? -1 : compare_levels(cand, best);
      if (cmp < 0) {
        best = std::move(cand);
        children.assign(1, j);
      } else if (cmp == 0) {
        children.push_back(j);
      }
    }

    if (mode_ == Mode::kCount) {
      if (compare_levels(best, best_levels_[static_cast<std::size_t>(k)]) != 0) return;
    } else if (tied) {
      const int cmp = compare_levels(best, best_levels_[static_cast<std::size_t>(k)]);
      if (cmp > 0) return;
      if (cmp < 0) tied = false;
    }
    path_levels_[static_cast<std::size_t>(k)] = best;

    std::vector<int> explored;
    for (int j : children) {
      if (mode_ == Mode::kMinimize && equivalent_to_explored(k, j, explored)) continue;
      explored.push_back(j);

      std::vector<Entry> child;
      child.reserve(active.size());
      const Bits bit = Bits{1} << j;
      for (const Entry& e : active) {
        Entry f{e.residual & ~bit, e.mapped | ((e.residual & bit) ? top : 0)};
        if (f.residual != 0) child.push_back(f);
      }
      seq_[static_cast<std::size_t>(k)] = j;
      chosen_ |= bit;
      descend(k + 1, child, tied);
      chosen_ &= ~bit;
      if (aborted_) return;
      // Whatever happened below, the incumbent now agrees with this node's
      // prefix up to level k.
      tied = true;
    }
  }

  // Is child j in the orbit of an explored sibling under the generators
  // that fix this node (translation and placed coordinates)?
  bool equivalent_to_explored(int k, int j, const std::vector<int>& explored) const {
    if (explored.empty() || generators_.empty()) return false;
    std::array<int, kMaxLength> parent{};
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
      return x;
    };
    bool any = false;
    for (const auto& g : generators_) {
      if (g.apply(translation_) != translation_) continue;
      bool fixes = true;
      for (int t = 0; t < k && fixes; ++t) {
        const int c = seq_[static_cast<std::size_t>(t)];
        fixes = g.image(c) == c;
      }
      if (!fixes) continue;
      any = true;
      for (int i = 0; i < n_; ++i) {
        const int a = find(i);
        const int b = find(g.image(i));
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
      }
    }
    if (!any) return false;
    const int root = find(j);
    for (int e : explored) {
      if (find(e) == root) return true;
    }
    return false;
  }

  // All words placed after k target coordinates; the rest are constant in
  // C + translation and may be filled in any order.
  void leaf(int k, bool tied) {
    std::array<int, kMaxLength> seq = seq_;
    int t = k;
    for (int j = 0; j < n_; ++j) {
      if (!((chosen_ >> j) & 1u)) seq[static_cast<std::size_t>(t++)] = j;
    }
    if (mode_ == Mode::kCount || tied) {
      for (int level = k; level < n_; ++level) {
        if (!best_levels_[static_cast<std::size_t>(level)].empty()) return;  // worse
      }
    }
    const SignedPermutation here = transporter(translation_, seq);
    add_free_coordinate_generators(here, seq, k);

    if (mode_ == Mode::kCount) {
      stabilizer_count_ += factorial(n_ - k);
      add_generator(compose(here.inverse(), best_transporter()));
      return;
    }
    if (tied) {
      add_generator(compose(here.inverse(), best_transporter()));
      return;
    }
    have_best_ = true;
    best_translation_ = translation_;
    best_seq_ = seq;
    for (int level = 0; level < n_; ++level) {
      if (level < k) {
        best_levels_[static_cast<std::size_t>(level)] = path_levels_[static_cast<std::size_t>(level)];
      } else {
        best_levels_[static_cast<std::size_t>(level)].clear();
      }
    }
  }

  // Reordering the trailing free coordinates gives equal leaves; a
  // transposition and a full cycle of them generate all such reorderings.
  void add_free_coordinate_generators(const SignedPermutation& here,
                                      const std::array<int, kMaxLength>& seq, int k) {
    const int free = n_ - k;
    if (free < 2) return;
    const SignedPermutation back = here.inverse();
    auto with_order = [&](auto reorder) {
      std::array<int, kMaxLength> other = seq;
      reorder(other);
      add_generator(compose(back, transporter(translation_, other)));
    };
    with_order([&](auto& s) { std::swap(s[static_cast<std::size_t>(k)], s[static_cast<std::size_t>(k + 1)]); });
    if (free > 2) {
      with_order([&](auto& s) {
        std::rotate(s.begin() + k, s.begin() + k + 1, s.begin() + n_);
      });
    }
  }

  const Code& code_;
  int n_;
  Mode mode_ = Mode::kMinimize;

  Bits translation_ = 0;
  Bits chosen_ = 0;
  std::array<int, kMaxLength> seq_{};
  std::array<LevelWords, kMaxLength> path_levels_{};
  std::array<std::vector<std::uint64_t>, kMaxLength> scratch_keys_{};

  bool have_best_ = false;
  Bits best_translation_ = 0;
  std::array<int, kMaxLength> best_seq_{};
  std::array<LevelWords, kMaxLength> best_levels_{};

  std::vector<SignedPermutation> generators_;
  std::uint64_t stabilizer_count_ = 0;
  std::uint64_t nodes_ = 0;
  std::uint64_t budget_ = 0;
  bool aborted_ = false;
};

void require_nonempty(const Code& code, const char* what) {
  if (code.empty()) throw CodeError(std::string(what) + ": empty code");
}

// Greedily drops generators already in the group generated by earlier ones.
std::vector<SignedPermutation> reduce_generators(const std::vector<SignedPermutation>& gens, int n,
                                                 std::size_t cap) {
  std::vector<SignedPermutation> kept;
  Group current = closure(kept, n, cap);
  for (const auto& g : gens) {
    if (current.contains(g)) continue;
    kept.push_back(g);
    current = closure(kept, n, cap);
  }
  return kept;
}

}  // namespace

Group AutomorphismGroup::to_group(std::size_t cap) const { return closure(generators, n, cap); }

CanonicalForm canonical_form(const Code& code) {
  require_nonempty(code, "canonical_form");
  FormSearch search(code);
  search.minimize();
  SignedPermutation t = search.best_transporter();
  return {t.apply(code), t};
}

CanonicalForm canonical_form_bruteforce(const Code& code) {
  require_nonempty(code, "canonical_form_bruteforce");
  const int n = code.length();
  if (n > 6) throw CodeError("canonical_form_bruteforce: n > 6");
  std::vector<int> image(static_cast<std::size_t>(n));
  std::optional<CanonicalForm> best;
  for (Bits x = 0; x < (Bits{1} << n); ++x) {
    std::iota(image.begin(), image.end(), 0);
    do {
      SignedPermutation g(n, image, x);
      Code c = g.apply(code);
      if (!best || c.words() < best->form.words()) best = CanonicalForm{std::move(c), g};
    } while (std::next_permutation(image.begin(), image.end()));
  }
  return *best;
}

std::optional<SignedPermutation> equivalence_witness(const Code& a, const Code& b) {
  if (a.length() != b.length()) throw CodeError("are_equivalent: length mismatch");
  if (a.size() != b.size()) return std::nullopt;
  if (a.empty()) return SignedPermutation::identity(a.length());
  CanonicalForm fa = canonical_form(a);
  CanonicalForm fb = canonical_form(b);
  if (fa.form != fb.form) return std::nullopt;
  SignedPermutation w = compose(fb.transporter.inverse(), fa.transporter);
  if (w.apply(a) != b) throw std::logic_error("equivalence witness failed verification");
  return w;
}

bool are_equivalent(const Code& a, const Code& b) { return equivalence_witness(a, b).has_value(); }

AutomorphismGroup automorphism_group(const Code& code, const AutomorphismOptions& options) {
  require_nonempty(code, "automorphism_group");
  const int n = code.length();
  FormSearch search(code);
  search.minimize();
  search.count_stabilizer(options.node_budget);

  // Orbit of the first leaf's translation under everything found.
  const auto& gens = search.generators();
  std::vector<Bits> orbit{search.best_translation()};
  std::set<Bits> seen{search.best_translation()};
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (const auto& g : gens) {
      const Bits w = g.apply(orbit[i]);
      if (seen.insert(w).second) orbit.push_back(w);
    }
  }

  AutomorphismGroup result;
  result.n = n;
  result.exact = !search.aborted();
  result.order = static_cast<std::uint64_t>(orbit.size()) * std::max<std::uint64_t>(1, search.stabilizer_count());
  constexpr std::uint64_t kReduceLimit = 200'000;
  if (result.exact && result.order <= kReduceLimit) {
    result.generators = reduce_generators(gens, n, kReduceLimit);
  } else {
    result.generators = gens;
  }
  return result;
}

AutomorphismGroup automorphism_group_bruteforce(const Code& code) {
  require_nonempty(code, "automorphism_group_bruteforce");
  const int n = code.length();
  if (n > 5) throw CodeError("automorphism_group_bruteforce: n > 5");
  AutomorphismGroup result;
  result.n = n;
  result.order = 0;
  std::vector<int> image(static_cast<std::size_t>(n));
  std::vector<SignedPermutation> all;
  for (Bits x = 0; x < (Bits{1} << n); ++x) {
    std::iota(image.begin(), image.end(), 0);
    do {
      SignedPermutation g(n, image, x);
      if (g.apply(code) == code) all.push_back(g);
    } while (std::next_permutation(image.begin(), image.end()));
  }
  result.order = all.size();
  result.generators = reduce_generators(all, n, kDefaultClosureCap);
  return result;
}

std::uint64_t code_digest(const Code& code) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint32_t v) {
    for (int i = 0; i < 4; ++i) {
      h ^= (v >> (8 * i)) & 0xffu;
      h *= 1099511628211ull;
    }
  };
  mix(static_cast<std::uint32_t>(code.length()));
  for (Bits w : code.words()) mix(w);
  return h;
}

std::string digest_hex(std::uint64_t digest) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(digest));
  return buf;
}

}  // namespace codework
