#include <algorithm>
#include <set>

#include "codework/symmetry.hpp"

namespace codework {

bool Group::contains(const SignedPermutation& g) const {
  return std::binary_search(elements.begin(), elements.end(), g);
}

Group closure(std::span<const SignedPermutation> generators, int n, std::size_t cap) {
  for (const auto& g : generators) {
    if (g.n() != n) throw CodeError("closure: generator length mismatch");
  }
  const SignedPermutation id = SignedPermutation::identity(n);
  std::set<SignedPermutation> seen{id};
  std::vector<SignedPermutation> frontier{id};
  while (!frontier.empty()) {
    std::vector<SignedPermutation> next;
    for (const auto& h : frontier) {
      for (const auto& g : generators) {
        SignedPermutation k = compose(g, h);
        if (seen.insert(k).second) {
          if (seen.size() > cap) {
            throw CodeError("closure: group order exceeds cap of " + std::to_string(cap));
          }
          next.push_back(k);
        }
      }
    }
    frontier = std::move(next);
  }
  Group group;
  group.n = n;
  group.generators.assign(generators.begin(), generators.end());
  group.elements.assign(seen.begin(), seen.end());
  return group;
}

Code expand_orbits(const Group& group, std::span<const Codeword> reps) {
  std::vector<Bits> words;
  words.reserve(group.order() * reps.size());
  for (const Codeword& r : reps) {
    if (r.length() != group.n) throw CodeError("expand_orbits: length mismatch");
    for (const auto& g : group.elements) words.push_back(g.apply(r.bits()));
  }
  return Code(group.n, std::move(words));
}

std::vector<std::size_t> orbit_sizes(const Group& group, std::span<const Codeword> reps) {
  std::vector<std::size_t> sizes;
  for (const Codeword& r : reps) {
    if (r.length() != group.n) throw CodeError("orbit_sizes: length mismatch");
    std::vector<Bits> orbit;
    for (const auto& g : group.elements) orbit.push_back(g.apply(r.bits()));
    std::sort(orbit.begin(), orbit.end());
    sizes.push_back(static_cast<std::size_t>(std::unique(orbit.begin(), orbit.end()) - orbit.begin()));
  }
  return sizes;
}

}  // namespace codework
