#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "praset/core.hpp"
#include "praset/program.hpp"

namespace praset {

// Draws the index-th program of a seeded corpus. Bounds: at most max_atoms
// atoms and 10 rules, 0-3 body literals per rule, and a preference relation
// declared along a random priority ranking, which keeps it a strict partial
// order by construction. All draws go through the raw engine (modulo) so a
// (seed, index) pair names the same program everywhere.
inline Program random_program(std::uint64_t seed, int index, int max_atoms) {
  std::mt19937_64 rng(seed ^ (0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(index + 1)));
  auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };

  Program p;
  int natoms = 1 + pick(max_atoms);
  for (int i = 0; i < natoms; ++i) p.intern_atom(std::string(1, static_cast<char>('a' + i)));

  int nrules = 1 + pick(10);
  for (int r = 0; r < nrules; ++r) {
    ObjLit head = ObjLit::make(pick(natoms), pick(5) == 0);
    Mask pos = 0, naf = 0;
    int nbody = pick(4);
    for (int b = 0; b < nbody; ++b) {
      ObjLit lit = ObjLit::make(pick(natoms), pick(5) == 0);
      if (pick(100) < 65)
        naf |= bit(lit);
      else
        pos |= bit(lit);
    }
    p.add_rule({"r" + std::to_string(r + 1), head, pos, naf});
  }

  std::vector<int> priority(static_cast<std::size_t>(nrules));
  for (int i = 0; i < nrules; ++i) priority[static_cast<std::size_t>(i)] = i;
  for (int i = nrules - 1; i > 0; --i)
    std::swap(priority[static_cast<std::size_t>(i)], priority[static_cast<std::size_t>(pick(i + 1))]);

  int nprefs = pick(nrules + 1);
  for (int k = 0; k < nprefs; ++k) {
    int i = pick(nrules), j = pick(nrules);
    if (i == j) continue;
    int more = priority[static_cast<std::size_t>(i)] < priority[static_cast<std::size_t>(j)] ? i : j;
    int less = more == i ? j : i;
    bool dup = false;
    for (const Preference& pref : p.prefers)
      dup = dup || (pref.more == more && pref.less == less);
    if (!dup) p.add_preference(p.rules[static_cast<std::size_t>(more)].name,
                               p.rules[static_cast<std::size_t>(less)].name);
  }
  return p;
}

}  // namespace praset
