#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace praset {

// Objective literals of a program signature are numbered 2*atom for the
// positive literal and 2*atom+1 for its strong negation. Sets of objective
// literals (and assumption sets, stored as pos(X)) are 64-bit masks, which
// caps the signature at 32 atoms.
using Mask = std::uint64_t;

constexpr int kMaxAtoms = 32;
constexpr int kMaxRules = 60;

// Rule sets are masks over rule indices.
using RuleMask = std::uint64_t;

struct ObjLit {
  int id = -1;  // 2*atom + (negated ? 1 : 0)

  static ObjLit make(int atom, bool negated) { return ObjLit{2 * atom + (negated ? 1 : 0)}; }
  int atom() const { return id >> 1; }
  bool negated() const { return (id & 1) != 0; }
  ObjLit complement() const { return ObjLit{id ^ 1}; }

  friend bool operator==(ObjLit a, ObjLit b) { return a.id == b.id; }
  friend bool operator!=(ObjLit a, ObjLit b) { return a.id != b.id; }
  friend bool operator<(ObjLit a, ObjLit b) { return a.id < b.id; }
};

inline Mask bit(ObjLit l) { return Mask{1} << l.id; }
inline Mask bit(int objlit_id) { return Mask{1} << objlit_id; }

// A literal as written in a rule body: an objective literal, possibly under
// default negation. No nesting beyond that exists in the language.
struct Lit {
  ObjLit obj;
  bool naf = false;

  friend bool operator==(const Lit& a, const Lit& b) { return a.obj == b.obj && a.naf == b.naf; }
  friend bool operator<(const Lit& a, const Lit& b) {
    return a.naf != b.naf ? a.naf < b.naf : a.obj < b.obj;
  }
};

// Swaps each literal bit with its strong-negation partner.
inline Mask complemented(Mask m) {
  constexpr Mask even = 0x5555555555555555ull;
  return ((m & even) << 1) | ((m & ~even) >> 1);
}

inline int popcount(Mask m) { return __builtin_popcountll(m); }
inline int lowest_bit(Mask m) { return __builtin_ctzll(m); }

// A set of literals, objective part and default part (stored as pos of the
// default literals). Conflicts are L vs -L and L vs not L.
struct LitSet {
  Mask obj = 0;
  Mask naf = 0;

  friend bool operator==(const LitSet& a, const LitSet& b) {
    return a.obj == b.obj && a.naf == b.naf;
  }
};

inline bool consistent(const LitSet& s) {
  return (s.obj & complemented(s.obj)) == 0 && (s.obj & s.naf) == 0;
}

inline bool consistent_obj(Mask obj) { return (obj & complemented(obj)) == 0; }

// ---- errors ----

class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

class parse_error : public error {
 public:
  parse_error(int line, int col, const std::string& expected)
      : error("parse error at " + std::to_string(line) + ":" + std::to_string(col) + ": " +
              expected),
        line_(line),
        col_(col),
        expected_(expected) {}
  int line() const { return line_; }
  int col() const { return col_; }
  const std::string& expected() const { return expected_; }

 private:
  int line_;
  int col_;
  std::string expected_;
};

class duplicate_rule_error : public error {
 public:
  explicit duplicate_rule_error(const std::string& name)
      : error("duplicate rule name: " + name), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class unknown_rule_error : public error {
 public:
  explicit unknown_rule_error(const std::string& name)
      : error("unknown rule in prefer: " + name), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class preference_cycle_error : public error {
 public:
  explicit preference_cycle_error(std::vector<std::string> cycle)
      : error(format(cycle)), cycle_(std::move(cycle)) {}
  const std::vector<std::string>& cycle() const { return cycle_; }

 private:
  static std::string format(const std::vector<std::string>& cycle) {
    std::string s = "preference cycle:";
    for (const auto& n : cycle) s += " " + n;
    return s;
  }
  std::vector<std::string> cycle_;
};

class resource_limit_error : public error {
 public:
  explicit resource_limit_error(const std::string& what) : error(what) {}
};

class precondition_error : public error {
 public:
  explicit precondition_error(const std::string& what) : error(what) {}
};

class unknown_answer_set_error : public error {
 public:
  explicit unknown_answer_set_error(const std::string& sel)
      : error("unknown answer set: " + sel) {}
};

class not_total_error : public error {
 public:
  not_total_error() : error("interpretation is not total over the signature") {}
};

}  // namespace praset
