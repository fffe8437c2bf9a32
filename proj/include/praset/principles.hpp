#pragma once

#include <string>
#include <vector>

#include "praset/attacks.hpp"
#include "praset/core.hpp"
#include "praset/parser.hpp"
#include "praset/program.hpp"
#include "praset/semantics.hpp"

namespace praset {

// Rule-set-level attack: some rule of the attacker is strictly above some
// rule of the attacked set whose default body denies the attacker's head.
inline bool rule_set_attacks(const Program& p, const PreferenceOrder& ord, RuleMask att,
                             RuleMask vic) {
  for (RuleMask m1 = att; m1;) {
    int r1 = lowest_bit(m1);
    m1 &= m1 - 1;
    for (RuleMask m2 = vic; m2;) {
      int r2 = lowest_bit(m2);
      m2 &= m2 - 1;
      if (ord.less(r2, r1) && (p.rules[r2].body_naf & bit(p.rules[r1].head)) != 0) return true;
    }
  }
  return false;
}

// A rule set is warranted when no generating set of any answer set attacks
// it. Attackers are the full generating sets by default; pass
// minimal_attackers to quantify over minimal generating sets instead (the
// definition leaves the choice open; reports state which one they used).
inline bool is_warranted_rule_set(const Program& p, const PreferenceOrder& ord,
                                  const std::vector<AnswerSet>& sets, RuleMask r,
                                  bool minimal_attackers = false) {
  for (const AnswerSet& s : sets) {
    if (minimal_attackers) {
      for (RuleMask q : minimal_generating_sets(p, s))
        if (rule_set_attacks(p, ord, q, r)) return false;
    } else {
      if (rule_set_attacks(p, ord, generating_rules(p, s), r)) return false;
    }
  }
  return true;
}

enum class Principle { I, III, IV, Theorem };

inline const char* principle_name(Principle pr) {
  switch (pr) {
    case Principle::I: return "I";
    case Principle::III: return "III";
    case Principle::IV: return "IV";
    case Principle::Theorem: return "Theorem";
  }
  return "?";
}

struct PrincipleReport {
  Principle principle = Principle::Theorem;
  std::string program;
  bool pass = true;
  std::vector<std::string> witness;  // replayable counterexample when failing
};

namespace detail {

inline std::string render_rule_set(const Program& p, RuleMask r) {
  std::string out = "{";
  bool first = true;
  for (RuleMask m = r; m;) {
    int idx = lowest_bit(m);
    m &= m - 1;
    if (!first) out += ", ";
    first = false;
    out += p.rules[idx].name;
  }
  return out + "}";
}

inline std::string render_set(const Program& p, const AnswerSet& s) {
  return "{" + render_obj_mask(p, s.pos) + "}";
}

}  // namespace detail

// If the program has answer sets, at least one must be preferred and all
// preferred ones must be answer sets.
inline PrincipleReport check_principle_III(const Program& p, const Analysis& a,
                                           const std::string& id) {
  PrincipleReport rep{Principle::III, id, true, {}};
  if (a.sets.empty()) return rep;
  bool any = false;
  for (char f : a.preferred) any = any || f != 0;
  if (!any) {
    rep.pass = false;
    rep.witness.push_back("program has " + std::to_string(a.sets.size()) +
                          " answer sets but no preferred one");
    for (const AnswerSet& s : a.sets)
      rep.witness.push_back("answer set " + detail::render_set(p, s));
  }
  return rep;
}

// Every answer set with a warranted minimal generating set must be preferred.
// Warrant quantifies attackers over full generating sets.
inline PrincipleReport check_principle_IV(const Program& p, const Analysis& a,
                                          const std::string& id) {
  PrincipleReport rep{Principle::IV, id, true, {}};
  for (std::size_t i = 0; i < a.sets.size(); ++i) {
    for (RuleMask r : minimal_generating_sets(p, a.sets[i])) {
      if (!is_warranted_rule_set(p, a.order, a.sets, r)) continue;
      if (a.preferred[i]) continue;
      rep.pass = false;
      rep.witness.push_back("answer set " + detail::render_set(p, a.sets[i]) +
                            " has warranted generating set " + detail::render_rule_set(p, r) +
                            " but is not preferred");
      return rep;
    }
  }
  return rep;
}

// Preferred answer sets are answer sets.
inline PrincipleReport check_theorem_subset(const Program& p, const Analysis& a,
                                            const std::string& id) {
  PrincipleReport rep{Principle::Theorem, id, true, {}};
  for (std::size_t i = 0; i < a.sets.size(); ++i) {
    if (!a.preferred[i]) continue;
    bool found = false;
    for (const AnswerSet& s : a.sets) found = found || s == a.sets[i];
    if (!found) {
      rep.pass = false;
      rep.witness.push_back("preferred set " + detail::render_set(p, a.sets[i]) +
                            " is not an answer set");
      return rep;
    }
  }
  return rep;
}

namespace detail {

// True when some warranted generating set (full or minimal) of some answer
// set attacks `target`.
inline bool attacked_by_warranted(const Program& p, const Analysis& a, RuleMask target,
                                  std::string* who) {
  for (const AnswerSet& s : a.sets) {
    std::vector<RuleMask> candidates = minimal_generating_sets(p, s);
    candidates.push_back(generating_rules(p, s));
    for (RuleMask q : candidates) {
      if (!rule_set_attacks(p, a.order, q, target)) continue;
      if (!is_warranted_rule_set(p, a.order, a.sets, q)) continue;
      if (who) *who = render_rule_set(p, q) + " of " + render_set(p, s);
      return true;
    }
  }
  return false;
}

}  // namespace detail

// For answer sets generated by R∪{d1} and R∪{d2} with d2 below d1: when
// every minimal generating set of the second is attacked by a warranted
// generating set, the second must not be preferred.
inline PrincipleReport check_principle_I(const Program& p, const Analysis& a,
                                         const std::string& id) {
  PrincipleReport rep{Principle::I, id, true, {}};
  for (std::size_t i = 0; i < a.sets.size(); ++i) {
    for (std::size_t j = 0; j < a.sets.size(); ++j) {
      if (i == j || !a.preferred[j]) continue;
      bool shaped = false;
      int d1 = -1, d2 = -1;
      for (RuleMask g1 : minimal_generating_sets(p, a.sets[i])) {
        for (RuleMask g2 : minimal_generating_sets(p, a.sets[j])) {
          RuleMask only1 = g1 & ~g2, only2 = g2 & ~g1;
          if (popcount(only1) != 1 || popcount(only2) != 1) continue;
          int c1 = lowest_bit(only1), c2 = lowest_bit(only2);
          if (!a.order.less(c2, c1)) continue;
          shaped = true;
          d1 = c1;
          d2 = c2;
        }
      }
      if (!shaped) continue;
      bool all_attacked = true;
      std::string attacker;
      for (RuleMask g : minimal_generating_sets(p, a.sets[j]))
        if (!detail::attacked_by_warranted(p, a, g, &attacker)) {
          all_attacked = false;
          break;
        }
      if (!all_attacked) continue;
      rep.pass = false;
      rep.witness.push_back("answer sets " + detail::render_set(p, a.sets[i]) + " and " +
                            detail::render_set(p, a.sets[j]) + " differ in " +
                            p.rules[d1].name + " over " + p.rules[d2].name);
      rep.witness.push_back("every generating set of " + detail::render_set(p, a.sets[j]) +
                            " is attacked by a warranted set (e.g. " + attacker +
                            ") yet the set is preferred");
      return rep;
    }
  }
  return rep;
}

}  // namespace praset
