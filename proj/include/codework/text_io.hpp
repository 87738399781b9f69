#pragma once

// Plain-text file formats.
//
//   code      one codeword per line as a 0/1 string; '#' starts a comment
//             line; blank lines are ignored; all words have equal length.
//   orbit     "n=<int>", then "gen: <cycles>" and "rep: <word>" lines.
//   cover     "cols=<int>", then one row per line as space-separated 0-based
//             column indices, then optional "force <row-index>" lines.
//   inventory "<digest>  <aut-order>  <E or ->  <representative-path>".
//
// Parse errors throw CodeError naming the source and line number.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "codework/classify.hpp"
#include "codework/code.hpp"
#include "codework/exact_cover.hpp"
#include "codework/symmetry.hpp"

namespace codework {

Code read_code(std::istream& in, const std::string& source = "<input>");
Code read_code_file(const std::filesystem::path& path);
void write_code(std::ostream& out, const Code& code, const std::vector<std::string>& comments = {});
void write_code_file(const std::filesystem::path& path, const Code& code,
                     const std::vector<std::string>& comments = {});

struct OrbitSpec {
  int n = 0;
  std::vector<SignedPermutation> generators;
  std::vector<Codeword> representatives;

  Group group(std::size_t cap = kDefaultClosureCap) const;
  Code expand(std::size_t cap = kDefaultClosureCap) const;
};

OrbitSpec read_orbit(std::istream& in, const std::string& source = "<input>");
OrbitSpec read_orbit_file(const std::filesystem::path& path);
void write_orbit(std::ostream& out, const OrbitSpec& spec);

ExactCoverInstance read_cover(std::istream& in, const std::string& source = "<input>");
ExactCoverInstance read_cover_file(const std::filesystem::path& path);
void write_cover(std::ostream& out, const ExactCoverInstance& instance);

struct InventoryLine {
  std::uint64_t digest = 0;
  std::uint64_t aut_order = 0;
  std::optional<std::uint64_t> extension_count;
  std::string representative_path;  // relative to the inventory's directory
};

std::vector<InventoryLine> read_inventory(std::istream& in, const std::string& source = "<input>");
std::vector<InventoryLine> read_inventory_file(const std::filesystem::path& path);
void write_inventory(std::ostream& out, const std::vector<InventoryLine>& lines);

/// Writes <dir>/inventory.txt and <dir>/codes/<digest>.code for each record.
std::vector<InventoryLine> write_class_inventory(const std::filesystem::path& dir,
                                                 const std::vector<ClassRecord>& records);

}  // namespace codework
