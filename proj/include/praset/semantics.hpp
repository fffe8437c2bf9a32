#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "praset/core.hpp"
#include "praset/parser.hpp"
#include "praset/program.hpp"

namespace praset {

// A rule of the reduct: default-free remainder r+ of a surviving rule.
struct DefiniteRule {
  ObjLit head;
  Mask body = 0;
};

// Least model of a definite program by forward chaining.
inline Mask least_model(const std::vector<DefiniteRule>& rules) {
  Mask model = 0;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& r : rules) {
      Mask h = bit(r.head);
      if ((model & h) == 0 && (r.body & ~model) == 0) {
        model |= h;
        changed = true;
      }
    }
  }
  return model;
}

// Gelfond-Lifschitz reduct w.r.t. the total interpretation S+ / S-.
// S- is given as the set of objective literals assumed false.
inline std::vector<DefiniteRule> reduct(const Program& p, Mask s_pos, Mask s_neg) {
  if ((s_pos & s_neg) != 0 || (s_pos | s_neg) != p.obj_mask()) throw not_total_error();
  std::vector<DefiniteRule> out;
  for (const auto& r : p.rules)
    if ((r.body_naf & s_pos) == 0) out.push_back({r.head, r.body_pos});
  return out;
}

// An answer set, identified by its objective part S+ (S- is the complement
// over the signature).
struct AnswerSet {
  Mask pos = 0;

  friend bool operator==(AnswerSet a, AnswerSet b) { return a.pos == b.pos; }
};

inline Mask answer_set_neg(const Program& p, AnswerSet s) { return p.obj_mask() & ~s.pos; }

namespace detail {

// Objective literals of a mask as a sorted list of names, for canonical
// ordering and rendering.
inline std::vector<std::string> literal_names(const Program& p, Mask m) {
  std::vector<std::string> out;
  for (Mask rest = m; rest;) {
    int id = lowest_bit(rest);
    rest &= rest - 1;
    out.push_back(render(p, ObjLit{id}));
  }
  return out;
}

}  // namespace detail

// All answer sets, canonically ordered (lexicographic in the rendered S+).
// Exhaustive: each atom is true, strongly negated, or undecided. The empty
// program has no atoms and no rules and yields no answer sets.
inline std::vector<AnswerSet> answer_sets(const Program& p) {
  if (p.rules.empty()) return {};
  int n = p.atom_count();
  if (n > 14)
    throw resource_limit_error("answer-set enumeration supports at most 14 atoms, got " +
                               std::to_string(n));
  std::vector<AnswerSet> found;
  std::uint64_t candidates = 1;
  for (int i = 0; i < n; ++i) candidates *= 3;
  for (std::uint64_t c = 0; c < candidates; ++c) {
    Mask pos = 0;
    std::uint64_t k = c;
    for (int a = 0; a < n; ++a, k /= 3) {
      int choice = static_cast<int>(k % 3);
      if (choice == 1) pos |= bit(ObjLit::make(a, false));
      if (choice == 2) pos |= bit(ObjLit::make(a, true));
    }
    if (least_model(reduct(p, pos, p.obj_mask() & ~pos)) == pos) found.push_back({pos});
  }
  std::sort(found.begin(), found.end(), [&](AnswerSet a, AnswerSet b) {
    return detail::literal_names(p, a.pos) < detail::literal_names(p, b.pos);
  });
  return found;
}

// Consequence operator: closure of the assumptions W (given as pos(W)) under
// the rules whose default body is contained in W, starting from extra_facts.
// Returns the closure as a literal set (W itself plus derived objectives).
inline LitSet consequences(const Program& p, Mask extra_facts, Mask w) {
  Mask derived = extra_facts;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& r : p.rules) {
      Mask h = bit(r.head);
      if ((derived & h) == 0 && (r.body_naf & ~w) == 0 && (r.body_pos & ~derived) == 0) {
        derived |= h;
        changed = true;
      }
    }
  }
  return {derived, w};
}

inline bool is_self_consistent(const Program& p, Mask w) {
  return consistent(consequences(p, 0, w));
}

// Rules whose whole body holds in the answer set.
inline RuleMask generating_rules(const Program& p, AnswerSet s) {
  Mask neg = answer_set_neg(p, s);
  RuleMask out = 0;
  for (std::size_t i = 0; i < p.rules.size(); ++i) {
    const Rule& r = p.rules[i];
    if ((r.body_pos & ~s.pos) == 0 && (r.body_naf & ~neg) == 0) out |= RuleMask{1} << i;
  }
  return out;
}

namespace detail {

inline Mask regenerated(const Program& p, RuleMask rules) {
  std::vector<DefiniteRule> defs;
  for (RuleMask m = rules; m;) {
    int i = lowest_bit(m);
    m &= m - 1;
    defs.push_back({p.rules[i].head, p.rules[i].body_pos});
  }
  return least_model(defs);
}

}  // namespace detail

// All subset-minimal R within the generating rules with heads(R)-closure
// equal to S+. Found by subset search; results ascend by rule mask.
inline std::vector<RuleMask> minimal_generating_sets(const Program& p, AnswerSet s) {
  RuleMask all = generating_rules(p, s);
  int k = popcount(all);
  if (k > 20) throw resource_limit_error("generating-set search supports at most 20 rules");
  std::vector<int> members;
  for (RuleMask m = all; m;) {
    members.push_back(lowest_bit(m));
    m &= m - 1;
  }
  std::vector<RuleMask> minimal;
  for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << k); ++sub) {
    RuleMask rules = 0;
    for (int i = 0; i < k; ++i)
      if ((sub >> i) & 1) rules |= RuleMask{1} << members[i];
    if (detail::regenerated(p, rules) != s.pos) continue;
    bool has_smaller = false;
    for (RuleMask got : minimal)
      if ((got & ~rules) == 0) {
        has_smaller = true;
        break;
      }
    if (!has_smaller) minimal.push_back(rules);
  }
  return minimal;  // subsets enumerate in ascending mask order; minimality filtered above
}

}  // namespace praset
