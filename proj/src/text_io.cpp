#include "codework/text_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace codework {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail(const std::string& source, std::size_t line, const std::string& what) {
  throw CodeError(source + ":" + std::to_string(line) + ": " + what);
}

template <typename Int>
bool parse_int(std::string_view text, Int& out) {
  text = trim(text);
  if (text.empty()) return false;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CodeError("cannot open " + path.string());
  return in;
}

// Runs `handle` on each non-blank, non-comment line with its 1-based number.
template <typename Handler>
void for_each_line(std::istream& in, Handler&& handle) {
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    handle(line, number);
  }
}

}  // namespace

Code read_code(std::istream& in, const std::string& source) {
  std::vector<Bits> words;
  int length = 0;
  for_each_line(in, [&](std::string_view line, std::size_t number) {
    Codeword w;
    try {
      w = Codeword::parse(line);
    } catch (const CodeError& e) {
      fail(source, number, e.what());
    }
    if (length == 0) length = w.length();
    if (w.length() != length) {
      fail(source, number, "codeword length " + std::to_string(w.length()) + " differs from " +
                               std::to_string(length));
    }
    words.push_back(w.bits());
  });
  if (length == 0) throw CodeError(source + ": no codewords");
  return Code(length, std::move(words));
}

Code read_code_file(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_code(in, path.string());
}

void write_code(std::ostream& out, const Code& code, const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "# " << c << '\n';
  for (std::size_t i = 0; i < code.size(); ++i) out << code.word(i).str() << '\n';
}

void write_code_file(const std::filesystem::path& path, const Code& code,
                     const std::vector<std::string>& comments) {
  std::ofstream out(path);
  if (!out) throw CodeError("cannot write " + path.string());
  write_code(out, code, comments);
}

Group OrbitSpec::group(std::size_t cap) const { return closure(generators, n, cap); }

Code OrbitSpec::expand(std::size_t cap) const { return expand_orbits(group(cap), representatives); }

OrbitSpec read_orbit(std::istream& in, const std::string& source) {
  OrbitSpec spec;
  for_each_line(in, [&](std::string_view line, std::size_t number) {
    try {
      if (line.starts_with("n=")) {
        if (spec.n != 0) fail(source, number, "duplicate n= line");
        if (!parse_int(line.substr(2), spec.n) || spec.n < 1 || spec.n > kMaxLength) {
          fail(source, number, "bad length");
        }
      } else if (line.starts_with("gen:")) {
        if (spec.n == 0) fail(source, number, "gen: before n=");
        spec.generators.push_back(SignedPermutation::parse(trim(line.substr(4)), spec.n));
      } else if (line.starts_with("rep:")) {
        if (spec.n == 0) fail(source, number, "rep: before n=");
        Codeword w = Codeword::parse(trim(line.substr(4)));
        if (w.length() != spec.n) fail(source, number, "representative has wrong length");
        spec.representatives.push_back(w);
      } else {
        fail(source, number, "expected n=, gen: or rep:");
      }
    } catch (const CodeError& e) {
      const std::string what = e.what();
      if (what.starts_with(source + ":")) throw;
      fail(source, number, what);
    }
  });
  if (spec.n == 0) throw CodeError(source + ": missing n= line");
  if (spec.representatives.empty()) throw CodeError(source + ": no representatives");
  return spec;
}

OrbitSpec read_orbit_file(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_orbit(in, path.string());
}

void write_orbit(std::ostream& out, const OrbitSpec& spec) {
  out << "n=" << spec.n << '\n';
  for (const auto& g : spec.generators) out << "gen: " << g.str() << '\n';
  for (const auto& r : spec.representatives) out << "rep: " << r.str() << '\n';
}

ExactCoverInstance read_cover(std::istream& in, const std::string& source) {
  int cols = -1;
  std::vector<std::vector<int>> rows;
  std::vector<int> forced;
  for_each_line(in, [&](std::string_view line, std::size_t number) {
    if (line.starts_with("cols=")) {
      if (cols >= 0) fail(source, number, "duplicate cols= line");
      if (!parse_int(line.substr(5), cols) || cols < 0) fail(source, number, "bad column count");
      return;
    }
    if (cols < 0) fail(source, number, "expected cols= first");
    if (line.starts_with("force")) {
      int r = -1;
      if (!parse_int(line.substr(5), r) || r < 0) fail(source, number, "bad forced row index");
      forced.push_back(r);
      return;
    }
    if (!forced.empty()) fail(source, number, "rows must precede force lines");
    std::vector<int> row;
    std::istringstream fields{std::string(line)};
    std::string token;
    while (fields >> token) {
      int c = -1;
      if (!parse_int(token, c)) fail(source, number, "bad column index '" + token + "'");
      row.push_back(c);
    }
    rows.push_back(std::move(row));
  });
  if (cols < 0) throw CodeError(source + ": missing cols= line");
  try {
    return ExactCoverInstance(cols, std::move(rows), std::move(forced));
  } catch (const CodeError& e) {
    throw CodeError(source + ": " + e.what());
  }
}

ExactCoverInstance read_cover_file(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_cover(in, path.string());
}

void write_cover(std::ostream& out, const ExactCoverInstance& instance) {
  out << "cols=" << instance.num_columns() << '\n';
  for (const auto& row : instance.rows()) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
    out << '\n';
  }
  for (int f : instance.forced_rows()) out << "force " << f << '\n';
}

std::vector<InventoryLine> read_inventory(std::istream& in, const std::string& source) {
  std::vector<InventoryLine> lines;
  for_each_line(in, [&](std::string_view line, std::size_t number) {
    std::istringstream fields{std::string(line)};
    std::string digest, aut, e, path;
    if (!(fields >> digest >> aut >> e >> path)) fail(source, number, "expected 4 fields");
    InventoryLine entry;
    entry.representative_path = path;
    const auto [p, ec] = std::from_chars(digest.data(), digest.data() + digest.size(), entry.digest, 16);
    if (ec != std::errc() || p != digest.data() + digest.size()) fail(source, number, "bad digest");
    if (!parse_int(aut, entry.aut_order) || entry.aut_order == 0) fail(source, number, "bad aut order");
    if (e != "-") {
      std::uint64_t value = 0;
      if (!parse_int(e, value)) fail(source, number, "bad extension count");
      entry.extension_count = value;
    }
    lines.push_back(std::move(entry));
  });
  return lines;
}

std::vector<InventoryLine> read_inventory_file(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_inventory(in, path.string());
}

void write_inventory(std::ostream& out, const std::vector<InventoryLine>& lines) {
  out << "# form-digest  aut-order  E  representative\n";
  for (const auto& l : lines) {
    out << digest_hex(l.digest) << "  " << l.aut_order << "  "
        << (l.extension_count ? std::to_string(*l.extension_count) : "-") << "  "
        << l.representative_path << '\n';
  }
}

std::vector<InventoryLine> write_class_inventory(const std::filesystem::path& dir,
                                                 const std::vector<ClassRecord>& records) {
  std::filesystem::create_directories(dir / "codes");
  std::vector<InventoryLine> lines;
  std::map<std::uint64_t, int> used;
  for (const auto& rec : records) {
    InventoryLine line;
    line.digest = rec.digest();
    line.aut_order = rec.aut_order;
    line.extension_count = rec.extension_count;
    // Distinct forms sharing a digest get numbered file names.
    const int clash = used[line.digest]++;
    std::string name = digest_hex(line.digest) + (clash ? "-" + std::to_string(clash) : "") + ".code";
    line.representative_path = "codes/" + name;
    write_code_file(dir / line.representative_path, rec.representative,
                    {"canonical form " + digest_hex(line.digest), "aut order " + std::to_string(rec.aut_order)});
    lines.push_back(std::move(line));
  }
  std::ofstream out(dir / "inventory.txt");
  if (!out) throw CodeError("cannot write " + (dir / "inventory.txt").string());
  write_inventory(out, lines);
  return lines;
}

}  // namespace codework
