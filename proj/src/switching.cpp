#include "codework/switching.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>

#include "codework/detail/disjoint_sets.hpp"
#include "codework/detail/parallel.hpp"

namespace codework {

SwitchingGraph switching_graph(const Code& code, int coord) {
  if (code.size() < 2) throw CodeError("switching graph needs at least 2 codewords");
  if (coord < 1 || coord > code.length()) {
    throw CodeError("coordinate " + std::to_string(coord) + " out of range");
  }
  SwitchingGraph g;
  g.code = code;
  g.coord = coord;
  g.distance = min_distance(code);
  const auto& w = code.words();
  const std::size_t m = w.size();
  const Bits bit = coord_bit(coord);
  g.adjacency.assign(m, {});
  detail::DisjointSets sets(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const Bits diff = w[i] ^ w[j];
      if ((diff & bit) && std::popcount(diff) == g.distance) {
        g.adjacency[i].push_back(static_cast<int>(j));
        g.adjacency[j].push_back(static_cast<int>(i));
        sets.unite(i, j);
      }
    }
  }
  g.component_of.assign(m, -1);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t root = sets.find(i);
    if (g.component_of[root] < 0) {
      g.component_of[root] = static_cast<int>(g.components.size());
      g.components.emplace_back();
    }
    g.component_of[i] = g.component_of[root];
    g.components[static_cast<std::size_t>(g.component_of[i])].push_back(static_cast<int>(i));
  }
  return g;
}

Code switch_code(const SwitchingGraph& graph, std::size_t component_index) {
  if (component_index >= graph.components.size()) throw CodeError("no such component");
  std::vector<Bits> words = graph.code.words();
  const Bits bit = coord_bit(graph.coord);
  for (int i : graph.components[component_index]) words[static_cast<std::size_t>(i)] ^= bit;
  return Code(graph.code.length(), std::move(words));
}

Code switch_code(const Code& code, int coord, std::span<const int> component) {
  const SwitchingGraph graph = switching_graph(code, coord);
  std::vector<int> given(component.begin(), component.end());
  std::sort(given.begin(), given.end());
  if (given.empty() || given.front() < 0 || static_cast<std::size_t>(given.back()) >= code.size()) {
    throw CodeError("component is not a connected component of the switching graph");
  }
  const int which = graph.component_of[static_cast<std::size_t>(given.front())];
  if (graph.components[static_cast<std::size_t>(which)] != given) {
    throw CodeError("component is not a connected component of the switching graph");
  }
  return switch_code(graph, static_cast<std::size_t>(which));
}

std::vector<SwitchNeighbor> switch_neighbors(const Code& code, bool dedupe) {
  std::vector<SwitchNeighbor> out;
  if (code.size() < 2) return out;
  std::vector<Code> seen_forms;
  for (int coord = 1; coord <= code.length(); ++coord) {
    const SwitchingGraph graph = switching_graph(code, coord);
    for (std::size_t c = 0; c < graph.components.size(); ++c) {
      Code switched = switch_code(graph, c);
      if (dedupe) {
        Code form = canonical_form(switched).form;
        if (std::find(seen_forms.begin(), seen_forms.end(), form) != seen_forms.end()) continue;
        seen_forms.push_back(std::move(form));
      }
      out.push_back({coord, c, std::move(switched)});
    }
  }
  return out;
}

namespace {

std::vector<CanonicalForm> canonize_all(const std::vector<SwitchNeighbor>& codes, unsigned jobs) {
  std::vector<CanonicalForm> forms(codes.size());
  detail::parallel_for(codes.size(), jobs, [&](std::size_t i) { forms[i] = canonical_form(codes[i].code); });
  return forms;
}

}  // namespace

SwitchingClass switching_class(const Code& code, std::size_t budget, unsigned jobs) {
  if (budget < 1) throw CodeError("switching_class: budget must be at least 1");
  SwitchingClass result;
  std::multimap<std::uint64_t, std::size_t> by_digest;
  auto find_member = [&](const Code& form) -> bool {
    auto [lo, hi] = by_digest.equal_range(code_digest(form));
    for (auto it = lo; it != hi; ++it) {
      if (result.members[it->second].form.form == form) return true;
    }
    return false;
  };
  auto add_member = [&](CanonicalForm form, Code rep) {
    by_digest.emplace(code_digest(form.form), result.members.size());
    result.members.push_back({std::move(form), std::move(rep)});
  };

  add_member(canonical_form(code), code);
  std::vector<std::size_t> frontier{0};
  while (!frontier.empty()) {
    std::sort(frontier.begin(), frontier.end(), [&](std::size_t a, std::size_t b) {
      return result.members[a].form.form < result.members[b].form.form;
    });
    std::vector<std::size_t> next;
    for (std::size_t m : frontier) {
      const Code rep = result.members[m].representative;
      const auto neighbors = switch_neighbors(rep);
      if (result.members.size() >= budget) {
        // Only the question "is anything new left?" remains; stop at the
        // first unseen form instead of canonizing the whole neighborhood.
        for (const auto& nb : neighbors) {
          if (!find_member(canonical_form(nb.code).form)) return result;
        }
        continue;
      }
      auto forms = canonize_all(neighbors, jobs);
      for (std::size_t i = 0; i < neighbors.size(); ++i) {
        if (find_member(forms[i].form)) continue;
        if (result.members.size() >= budget) return result;
        next.push_back(result.members.size());
        add_member(std::move(forms[i]), neighbors[i].code);
      }
    }
    frontier = std::move(next);
  }
  result.exhausted = true;
  return result;
}

}  // namespace codework
