#include "codework/classify.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "codework/detail/parallel.hpp"
#include "codework/lengthening.hpp"
#include "codework/text_io.hpp"

namespace codework {

std::vector<Shortening> shorten_all(const Code& code) {
  if (code.length() < 2) throw CodeError("shorten_all: length must be at least 2");
  std::vector<Shortening> out;
  out.reserve(static_cast<std::size_t>(2 * code.length()));
  for (int coord = 1; coord <= code.length(); ++coord) {
    for (int value = 0; value <= 1; ++value) out.push_back({coord, value, shorten(code, coord, value)});
  }
  return out;
}

namespace {

namespace fs = std::filesystem;

fs::path level_dir(const fs::path& root, int level) { return root / ("level-" + std::to_string(level)); }

void save_level(const fs::path& dir, const std::vector<ClassRecord>& records) {
  fs::create_directories(dir);
  write_class_inventory(dir, records);
  std::ofstream prov(dir / "provenance.txt");
  prov << "# class parent coord value\n";
  for (std::size_t i = 0; i < records.size(); ++i) {
    for (const auto& e : records[i].provenance) {
      prov << i << ' ' << e.parent << ' ' << e.coord << ' ' << e.value << '\n';
    }
  }
  prov.close();
  std::ofstream(dir / "complete") << records.size() << '\n';
}

std::vector<ClassRecord> load_level(const fs::path& dir) {
  std::vector<ClassRecord> records;
  for (const auto& line : read_inventory_file(dir / "inventory.txt")) {
    ClassRecord rec;
    rec.representative = read_code_file(dir / line.representative_path);
    rec.form = {rec.representative, SignedPermutation::identity(rec.representative.length())};
    rec.aut_order = line.aut_order;
    rec.extension_count = line.extension_count;
    records.push_back(std::move(rec));
  }
  std::ifstream prov(dir / "provenance.txt");
  std::string text;
  while (std::getline(prov, text)) {
    if (text.empty() || text[0] == '#') continue;
    std::istringstream fields(text);
    std::size_t cls = 0;
    ShorteningEdge e;
    if (!(fields >> cls >> e.parent >> e.coord >> e.value) || cls >= records.size()) {
      throw CodeError((dir / "provenance.txt").string() + ": malformed line '" + text + "'");
    }
    records[cls].provenance.push_back(e);
  }
  return records;
}

std::vector<ClassRecord> classify_level(const std::vector<Code>& parents, unsigned jobs) {
  struct Item {
    ShorteningEdge edge;
    Code code;
  };
  std::vector<Item> items;
  for (std::size_t p = 0; p < parents.size(); ++p) {
    for (auto& s : shorten_all(parents[p])) {
      if (!s.code.empty()) items.push_back({{p, s.coord, s.value}, std::move(s.code)});
    }
  }
  std::vector<CanonicalForm> forms(items.size());
  detail::parallel_for(items.size(), jobs, [&](std::size_t i) { forms[i] = canonical_form(items[i].code); });

  // Dedup keyed by digest; equal digests are confirmed on the full form.
  std::vector<ClassRecord> records;
  std::unordered_multimap<std::uint64_t, std::size_t> index;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const std::uint64_t key = code_digest(forms[i].form);
    std::optional<std::size_t> hit;
    auto [lo, hi] = index.equal_range(key);
    for (auto it = lo; it != hi && !hit; ++it) {
      if (records[it->second].form.form == forms[i].form) hit = it->second;
    }
    if (!hit) {
      hit = records.size();
      index.emplace(key, records.size());
      ClassRecord rec;
      rec.representative = forms[i].form;
      rec.form = {forms[i].form, SignedPermutation::identity(forms[i].form.length())};
      records.push_back(std::move(rec));
    }
    records[*hit].provenance.push_back(items[i].edge);
  }
  std::sort(records.begin(), records.end(),
            [](const ClassRecord& a, const ClassRecord& b) { return a.form.form < b.form.form; });
  detail::parallel_for(records.size(), jobs, [&](std::size_t i) {
    records[i].aut_order = automorphism_group(records[i].representative).order;
  });
  return records;
}

}  // namespace

std::vector<ClassRecord> classify_shortenings(std::span<const Code> seeds, int depth,
                                              const ClassifyOptions& options) {
  if (depth < 1) throw CodeError("classify_shortenings: depth must be at least 1");
  std::vector<Code> parents(seeds.begin(), seeds.end());
  if (parents.empty()) return {};
  for (const Code& s : parents) {
    if (s.length() != parents.front().length()) throw CodeError("classify_shortenings: seeds differ in length");
  }
  if (depth >= parents.front().length()) throw CodeError("classify_shortenings: depth too large");

  std::vector<ClassRecord> records;
  for (int level = 1; level <= depth; ++level) {
    std::optional<fs::path> dir;
    if (options.checkpoint_dir) dir = level_dir(*options.checkpoint_dir, level);
    if (dir && fs::exists(*dir / "complete")) {
      records = load_level(*dir);
    } else {
      records = classify_level(parents, options.jobs);
      if (dir) save_level(*dir, records);
    }
    parents.clear();
    for (const auto& r : records) parents.push_back(r.representative);
  }
  return records;
}

void populate_extension_counts(std::vector<ClassRecord>& records, int appended, unsigned jobs) {
  detail::parallel_for(records.size(), jobs, [&](std::size_t i) {
    if (!records[i].extension_count) {
      records[i].extension_count = count_extensions(records[i].representative, appended);
    }
  });
}

std::uint64_t group_order(int n) {
  if (n < 1 || n > kMaxLength) throw CodeError("group_order: bad length");
  std::uint64_t order = std::uint64_t{1} << n;
  for (int i = 2; i <= n; ++i) order *= static_cast<std::uint64_t>(i);
  return order;
}

std::uint64_t counting_sum(std::span<const std::pair<std::uint64_t, std::uint64_t>> aut_and_e, int n) {
  const std::uint64_t g = group_order(n);
  std::uint64_t total = 0;
  for (const auto& [aut, e] : aut_and_e) {
    if (aut == 0 || g % aut != 0) {
      throw CodeError("counting identity: automorphism order " + std::to_string(aut) +
                      " does not divide " + std::to_string(g));
    }
    std::uint64_t term = 0;
    if (__builtin_mul_overflow(g / aut, e, &term) || __builtin_add_overflow(total, term, &total)) {
      throw CodeError("counting identity: overflow");
    }
  }
  return total;
}

CountingIdentity counting_identity(std::span<const ClassRecord> records, int n, int appended) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> terms;
  for (const auto& r : records) {
    if (!r.extension_count) throw CodeError("counting identity: record without extension count");
    terms.emplace_back(r.aut_order, *r.extension_count);
  }
  const int target = n + appended;
  if (target != 3 && target != 7) {
    throw CodeError("counting identity: number of perfect codes of length " + std::to_string(target) +
                    " unavailable");
  }
  CountingIdentity out;
  out.lhs = counting_sum(terms, n);
  out.rhs = enumerate_perfect(target).size();
  out.equal = out.lhs == out.rhs;
  return out;
}

}  // namespace codework
