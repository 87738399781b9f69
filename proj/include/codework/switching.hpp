#pragma once

// Switching: for a chosen coordinate, join codewords that are at the code's
// minimum distance and differ in that coordinate; flipping the coordinate on
// one connected component of that graph never lowers the minimum distance.

#include <cstdint>
#include <span>
#include <vector>

#include "codework/canonical.hpp"
#include "codework/code.hpp"

namespace codework {

struct SwitchingGraph {
  Code code;
  int coord = 0;
  int distance = 0;  // min_distance(code)
  std::vector<std::vector<int>> adjacency;   // over indices into code.words()
  std::vector<std::vector<int>> components;  // sorted, ordered by least member
  std::vector<int> component_of;
};

SwitchingGraph switching_graph(const Code& code, int coord);

/// Flips `coord` on the given codeword indices, which must form exactly one
/// connected component of the switching graph.
Code switch_code(const Code& code, int coord, std::span<const int> component);
Code switch_code(const SwitchingGraph& graph, std::size_t component_index);

struct SwitchNeighbor {
  int coord = 0;
  std::size_t component = 0;
  Code code;
};

/// Every (coordinate, component) switch, coordinates ascending. With
/// `dedupe`, keeps the first neighbor of each equivalence class.
std::vector<SwitchNeighbor> switch_neighbors(const Code& code, bool dedupe = false);

struct SwitchingClassMember {
  CanonicalForm form;
  Code representative;
};

struct SwitchingClass {
  std::vector<SwitchingClassMember> members;  // discovery order
  bool exhausted = false;
};

/// Breadth-first closure under switching, modulo equivalence, stopped once
/// `budget` classes are known. Each level is processed in order of the
/// canonical forms, so truncated results are reproducible. `jobs` > 1
/// canonizes neighbors concurrently without changing the result.
SwitchingClass switching_class(const Code& code, std::size_t budget, unsigned jobs = 1);

}  // namespace codework
