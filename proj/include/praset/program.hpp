#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "praset/core.hpp"

namespace praset {

struct Rule {
  std::string name;
  ObjLit head;
  Mask body_pos = 0;  // positive objective body literals
  Mask body_naf = 0;  // pos() of the default-negated body literals
};

// A declared preference: the rule at `more` is strictly preferred over the
// rule at `less`.
struct Preference {
  int less = -1;
  int more = -1;

  friend bool operator==(Preference a, Preference b) {
    return a.less == b.less && a.more == b.more;
  }
};

struct Program {
  std::vector<std::string> atoms;
  std::vector<Rule> rules;
  std::vector<Preference> prefers;  // as declared; closure via validate_preferences

  int atom_count() const { return static_cast<int>(atoms.size()); }
  int obj_count() const { return 2 * atom_count(); }
  Mask obj_mask() const {
    int n = obj_count();
    return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  }

  int atom_id(std::string_view name) const {
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if (atoms[i] == name) return static_cast<int>(i);
    return -1;
  }

  int intern_atom(std::string_view name) {
    int id = atom_id(name);
    if (id >= 0) return id;
    if (atom_count() >= kMaxAtoms)
      throw resource_limit_error("program exceeds the supported atom count");
    atoms.emplace_back(name);
    return atom_count() - 1;
  }

  int rule_index(std::string_view name) const {
    for (std::size_t i = 0; i < rules.size(); ++i)
      if (rules[i].name == name) return static_cast<int>(i);
    return -1;
  }

  int add_rule(Rule r) {
    if (rule_index(r.name) >= 0) throw duplicate_rule_error(r.name);
    if (static_cast<int>(rules.size()) >= kMaxRules)
      throw resource_limit_error("program exceeds the supported rule count");
    rules.push_back(std::move(r));
    return static_cast<int>(rules.size()) - 1;
  }

  // Declares `more` preferred over `less`, by rule name.
  void add_preference(std::string_view more, std::string_view less) {
    int m = rule_index(more);
    if (m < 0) throw unknown_rule_error(std::string(more));
    int l = rule_index(less);
    if (l < 0) throw unknown_rule_error(std::string(less));
    prefers.push_back({l, m});
  }
};

// Strict-order view of the declared preferences after transitive closure.
struct PreferenceOrder {
  // above[r] holds the rules strictly preferred over r.
  std::vector<RuleMask> above;

  bool less(int r, int s) const {  // r is less preferred than s
    return r >= 0 && s >= 0 && ((above[r] >> s) & 1) != 0;
  }

  std::vector<Preference> pairs() const {
    std::vector<Preference> out;
    for (int r = 0; r < static_cast<int>(above.size()); ++r)
      for (int s = 0; s < static_cast<int>(above.size()); ++s)
        if (less(r, s)) out.push_back({r, s});
    return out;
  }
};

namespace detail {

// Walks declared edges less -> more to report one cycle by rule name.
inline std::vector<std::string> find_preference_cycle(const Program& p) {
  int n = static_cast<int>(p.rules.size());
  std::vector<std::vector<int>> next(n);
  for (const auto& pr : p.prefers) next[pr.less].push_back(pr.more);
  std::vector<int> state(n, 0);  // 0 new, 1 open, 2 done
  std::vector<int> stack;
  std::vector<std::string> cycle;

  auto dfs = [&](auto&& self, int v) -> bool {
    state[v] = 1;
    stack.push_back(v);
    for (int w : next[v]) {
      if (state[w] == 1) {
        auto it = std::find(stack.begin(), stack.end(), w);
        for (; it != stack.end(); ++it) cycle.push_back(p.rules[*it].name);
        cycle.push_back(p.rules[w].name);
        return true;
      }
      if (state[w] == 0 && self(self, w)) return true;
    }
    state[v] = 2;
    stack.pop_back();
    return false;
  };

  for (int v = 0; v < n; ++v)
    if (state[v] == 0 && dfs(dfs, v)) return cycle;
  return cycle;
}

}  // namespace detail

// Transitive closure of the declared preferences. Throws preference_cycle_error
// when the closure would not be irreflexive.
inline PreferenceOrder validate_preferences(const Program& p) {
  int n = static_cast<int>(p.rules.size());
  PreferenceOrder ord;
  ord.above.assign(n, 0);
  for (const auto& pr : p.prefers) ord.above[pr.less] |= RuleMask{1} << pr.more;
  for (bool changed = true; changed;) {
    changed = false;
    for (int r = 0; r < n; ++r) {
      RuleMask reach = ord.above[r];
      for (RuleMask m = reach; m;) {
        int s = lowest_bit(m);
        m &= m - 1;
        reach |= ord.above[s];
      }
      if (reach != ord.above[r]) {
        ord.above[r] = reach;
        changed = true;
      }
    }
  }
  for (int r = 0; r < n; ++r)
    if ((ord.above[r] >> r) & 1) throw preference_cycle_error(detail::find_preference_cycle(p));
  return ord;
}

}  // namespace praset
