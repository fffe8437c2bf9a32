#pragma once

// Shared fixture loading for the Catch2 suite. The independent oracles live
// in oracles.hpp so binaries without the test framework can reuse them.

#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "oracles.hpp"
#include "praset/praset.hpp"

namespace testing_support {

inline std::string fixture_path(const std::string& name) {
  return std::string(FIXTURES_DIR) + "/" + name;
}

inline praset::Program load_fixture(const std::string& name) {
  return praset::parse_program_file(fixture_path(name));
}

inline praset::Mask lit_mask(const praset::Program& p, const std::vector<std::string>& names) {
  praset::Mask m = 0;
  for (const std::string& n : names) {
    bool neg = !n.empty() && n[0] == '-';
    int atom = p.atom_id(neg ? n.substr(1) : n);
    REQUIRE(atom >= 0);
    m |= praset::bit(praset::ObjLit::make(atom, neg));
  }
  return m;
}

}  // namespace testing_support
