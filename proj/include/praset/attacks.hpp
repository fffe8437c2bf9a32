#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "praset/core.hpp"
#include "praset/program.hpp"
#include "praset/semantics.hpp"
#include "praset/structures.hpp"

namespace praset {

// A attacks-candidate test: some conclusion of `a` is assumed absent by `b`.
inline bool contradicts(ArgStructure a, ArgStructure b) { return (a.y & b.x) != 0; }

enum class QRule { Basic, Q1, Q2, Q3, Q4, Q5, Q6 };

inline const char* qrule_name(QRule q) {
  switch (q) {
    case QRule::Basic: return "Basic";
    case QRule::Q1: return "Q1";
    case QRule::Q2: return "Q2";
    case QRule::Q3: return "Q3";
    case QRule::Q4: return "Q4";
    case QRule::Q5: return "Q5";
    case QRule::Q6: return "Q6";
  }
  return "?";
}

// Attacks are pairs of universe ids: (attacker, attacked).
using AttackKey = std::pair<int, int>;

struct AttackProv {
  QRule rule = QRule::Basic;
  AttackKey premise{-1, -1};  // earlier attack the rule consumed
  int partner = -1;           // third structure (Q1-Q4) or extension target (Q5/Q6)
};

// One closure's worth of attacks, in deterministic derivation order, each
// with the provenance of its first derivation.
struct AttackSet {
  std::set<AttackKey> set;
  std::vector<AttackKey> order;
  std::map<AttackKey, AttackProv> prov;

  bool contains(AttackKey k) const { return set.count(k) != 0; }
};

// Pairs (basic of r1, basic of r2) with r2 below r1 in the preference order
// and the conclusion of r1 among the assumptions denied by r2's structure.
inline std::vector<AttackKey> basic_attacks(const Program& p, const StructureUniverse& u,
                                            const PreferenceOrder& ord) {
  std::vector<AttackKey> out;
  std::set<AttackKey> seen;
  int n = static_cast<int>(p.rules.size());
  for (int r1 = 0; r1 < n; ++r1) {
    int a = u.basic_of[r1];
    if (a < 0) continue;
    for (int r2 = 0; r2 < n; ++r2) {
      int b = u.basic_of[r2];
      if (b < 0 || !ord.less(r2, r1)) continue;
      if (!contradicts(u.items[a], u.items[b])) continue;
      if (seen.insert({a, b}).second) out.push_back({a, b});
    }
  }
  return out;
}

namespace detail {

// A structure that assumes nothing and concludes facts only; granting such a
// structure the attacker-side partner role would let bare facts complete any
// attacker, which collapses the selection (every complete structure would be
// blocked in programs like "troubles": fact + three-rule cycle).
inline bool fact_only(ArgStructure a) { return a.x == 0 && a.z == 0; }

// Closes `seeds` under Q1-Q6. Negative premises ("A3 is not attacked",
// "A3 does not attack A1") are tested against the frozen set `ref`
// (nullptr means every negative premise passes). When `victims` is given,
// every attack kept — seeds included — must have its attacked side in it.
inline AttackSet q_closure(const Program& p, const StructureUniverse& u,
                           const std::vector<AttackKey>& seeds, const AttackSet* ref,
                           const std::set<int>* victims) {
  std::vector<char> attacked_ref(u.items.size(), 0);
  if (ref)
    for (AttackKey k : ref->order) attacked_ref[static_cast<std::size_t>(k.second)] = 1;
  auto ref_attacks = [&](int a, int v) { return ref && ref->contains({a, v}); };

  AttackSet out;
  std::vector<AttackKey> queue;
  auto push = [&](AttackKey k, AttackProv pr) {
    if (victims && victims->count(k.second) == 0) return;
    if (!out.set.insert(k).second) return;
    out.order.push_back(k);
    out.prov.emplace(k, pr);
    queue.push_back(k);
  };
  for (AttackKey s : seeds) push(s, AttackProv{});

  std::vector<int> cf;  // condition-free structures, id order
  for (std::size_t i = 0; i < u.items.size(); ++i)
    if (u.items[i].z == 0) cf.push_back(static_cast<int>(i));

  for (std::size_t head = 0; head < queue.size(); ++head) {
    auto [a1, a2] = queue[head];
    // Q1: unfold the attacked side; the helper must not attack the attacker.
    for (const UnfoldEdge& e : u.unfolds) {
      int partner = e.cond == a2 ? e.basic : e.basic == a2 ? e.cond : -1;
      if (partner < 0 || ref_attacks(partner, a1)) continue;
      push({a1, e.product}, {QRule::Q1, {a1, a2}, partner});
    }
    // Q2: unfold the attacking side; the helper must be unattacked and must
    // carry assumptions or conditions of its own.
    for (const UnfoldEdge& e : u.unfolds) {
      int partner = e.cond == a1 ? e.basic : e.basic == a1 ? e.cond : -1;
      if (partner < 0 || attacked_ref[static_cast<std::size_t>(partner)]) continue;
      if (fact_only(u.items[partner])) continue;
      push({e.product, a2}, {QRule::Q2, {a1, a2}, partner});
    }
    if (u.items[a1].z == 0) {
      // Q3: join the attacking side with an unattacked structure. The join
      // must genuinely come from the attacker's side: a partner that already
      // covers the attacker would smuggle in an unrelated attack.
      for (int j : cf) {
        if (attacked_ref[static_cast<std::size_t>(j)]) continue;
        if (fact_only(u.items[j])) continue;
        if ((u.items[a1].y & ~u.items[j].y) == 0 && (u.items[a1].x & ~u.items[j].x) == 0)
          continue;
        int un = u.find({u.items[a1].y | u.items[j].y, u.items[a1].x | u.items[j].x, 0});
        if (un < 0) continue;
        push({un, a2}, {QRule::Q3, {a1, a2}, j});
      }
      // Q5: extend the attacking side's assumptions.
      for (auto [from, to] : u.extensions)
        if (from == a1) push({to, a2}, {QRule::Q5, {a1, a2}, to});
    }
    if (u.items[a2].z == 0) {
      // Q4: join the attacked side with a structure not attacking the attacker.
      for (int j : cf) {
        if (ref_attacks(j, a1)) continue;
        int un = u.find({u.items[a2].y | u.items[j].y, u.items[a2].x | u.items[j].x, 0});
        if (un < 0) continue;
        push({a1, un}, {QRule::Q4, {a1, a2}, j});
      }
      // Q6: extend the attacked side's assumptions.
      for (auto [from, to] : u.extensions)
        if (from == a2) push({a1, to}, {QRule::Q6, {a1, a2}, to});
    }
  }
  return out;
}

}  // namespace detail

// Definite attacks hold under every reading of the negative premises the
// alternating fixpoint visits; possible attacks hold under some reading.
struct AttackClosure {
  AttackSet definite;
  AttackSet possible;
  bool stable = false;
};

// Alternating fixpoint over the nonmonotonic negative premises: start from
// the closure with all negatives granted, then re-evaluate each side against
// the other until both stop moving.
inline AttackClosure attack_closure(const Program& p, const StructureUniverse& u,
                                    const PreferenceOrder& ord) {
  std::vector<AttackKey> seeds = basic_attacks(p, u, ord);
  AttackClosure c;
  AttackSet upper = detail::q_closure(p, u, seeds, nullptr, nullptr);
  while (true) {
    AttackSet lower = detail::q_closure(p, u, seeds, &upper, nullptr);
    AttackSet next = detail::q_closure(p, u, seeds, &lower, nullptr);
    if (next.set == upper.set) {
      c.definite = std::move(lower);
      c.possible = std::move(upper);
      break;
    }
    upper = std::move(next);
  }
  c.stable = c.definite.set == c.possible.set;
  return c;
}

// ---- blocking ----

struct AttackStep {
  QRule rule = QRule::Basic;
  ArgStructure attacker;
  ArgStructure attacked;
};

struct BlockInfo {
  bool blocked = false;
  std::vector<AttackStep> chain;  // seed-first attack derivation when blocked
};

namespace detail {

inline void collect_chain(const StructureUniverse& u, const AttackSet& g, AttackKey k,
                          std::vector<AttackStep>& out) {
  const AttackProv& pr = g.prov.at(k);
  if (pr.rule != QRule::Basic) collect_chain(u, g, pr.premise, out);
  out.push_back({pr.rule, u.items[static_cast<std::size_t>(k.first)],
                 u.items[static_cast<std::size_t>(k.second)]});
}

}  // namespace detail

// A derivation is blocked when an attack derivation confined to its own
// structures on the attacked side ends in a complete attacker against its
// final structure. Negative premises are tested against the possible set,
// which keeps every attack used here inside the definite closure.
inline BlockInfo is_blocked(const Program& p, const StructureUniverse& u,
                            const AttackClosure& closure, const PreferenceOrder& ord,
                            const Derivation& d) {
  std::set<int> members;
  for (const DerivStep& st : d.steps) {
    int id = u.find(st.s);
    if (id >= 0) members.insert(id);
  }
  int final_id = u.find(d.result());
  if (final_id < 0 || members.empty()) return {};

  std::vector<AttackKey> seeds = basic_attacks(p, u, ord);
  AttackSet g = detail::q_closure(p, u, seeds, &closure.possible, &members);
  for (AttackKey k : g.order) {
    if (k.second != final_id) continue;
    if (!is_complete(p, u.items[static_cast<std::size_t>(k.first)])) continue;
    BlockInfo info;
    info.blocked = true;
    detail::collect_chain(u, g, k, info.chain);
    return info;
  }
  return {};
}

// ---- full analysis ----

struct DerivationVerdict {
  Derivation derivation;
  BlockInfo block;
};

struct Analysis {
  StructureUniverse universe;
  PreferenceOrder order;
  AttackClosure closure;
  std::vector<AnswerSet> sets;
  std::vector<std::vector<DerivationVerdict>> verdicts;  // per answer set
  std::vector<char> preferred;                           // per answer set
};

inline Analysis analyze(const Program& p) {
  Analysis a;
  a.order = validate_preferences(p);
  a.universe = saturate(p);
  a.closure = attack_closure(p, a.universe, a.order);
  a.sets = answer_sets(p);
  a.verdicts.resize(a.sets.size());
  a.preferred.assign(a.sets.size(), 0);
  for (std::size_t i = 0; i < a.sets.size(); ++i) {
    for (Derivation& d : canonical_derivations(p, a.sets[i])) {
      DerivationVerdict v;
      v.block = is_blocked(p, a.universe, a.closure, a.order, d);
      v.derivation = std::move(d);
      if (!v.block.blocked) a.preferred[i] = 1;
      a.verdicts[i].push_back(std::move(v));
    }
  }
  return a;
}

// A complete structure is warranted when one of its canonical derivations
// survives blocking. The structure must be the completion of an answer set;
// anything else has no derivation ending in it.
inline bool is_warranted(const Program& p, const Analysis& a, ArgStructure complete) {
  for (std::size_t i = 0; i < a.sets.size(); ++i) {
    ArgStructure c{a.sets[i].pos, answer_set_neg(p, a.sets[i]), 0};
    if (!(c == complete)) continue;
    for (const DerivationVerdict& v : a.verdicts[i])
      if (!v.block.blocked) return true;
    return false;
  }
  return false;
}

inline std::vector<AnswerSet> preferred_answer_sets(const Program& p) {
  Analysis a = analyze(p);
  std::vector<AnswerSet> out;
  for (std::size_t i = 0; i < a.sets.size(); ++i)
    if (a.preferred[i]) out.push_back(a.sets[i]);
  return out;
}

// ---- step auditing ----
// Re-checks one link of a printed attack chain against the closure, so a
// specific derivation (with its rule tags) can be validated independently of
// which chain the engine happened to record first.

inline bool valid_attack_step(const Program& p, const StructureUniverse& u,
                              const AttackClosure& closure, QRule rule, AttackKey premise,
                              int partner, AttackKey result) {
  auto attacked = [&](int id) {
    for (AttackKey k : closure.possible.order)
      if (k.second == id) return true;
    return false;
  };
  if (rule == QRule::Basic) return true;  // seed membership is checked by the caller
  if (!closure.definite.contains(premise)) return false;
  auto [a1, a2] = premise;
  switch (rule) {
    case QRule::Q1:
      for (const UnfoldEdge& e : u.unfolds)
        if (e.product == result.second && (e.cond == a2 || e.basic == a2) &&
            result.first == a1 && !closure.possible.contains({e.cond == a2 ? e.basic : e.cond, a1}))
          return true;
      return false;
    case QRule::Q2:
      for (const UnfoldEdge& e : u.unfolds)
        if (e.product == result.first && (e.cond == a1 || e.basic == a1) &&
            result.second == a2 && !attacked(e.cond == a1 ? e.basic : e.cond) &&
            !detail::fact_only(u.items[static_cast<std::size_t>(e.cond == a1 ? e.basic : e.cond)]))
          return true;
      return false;
    case QRule::Q3: {
      if (partner < 0 || result.second != a2 || attacked(partner)) return false;
      if (detail::fact_only(u.items[static_cast<std::size_t>(partner)])) return false;
      ArgStructure s1 = u.items[static_cast<std::size_t>(a1)];
      ArgStructure s3 = u.items[static_cast<std::size_t>(partner)];
      if ((s1.y & ~s3.y) == 0 && (s1.x & ~s3.x) == 0) return false;
      return u.find({s1.y | s3.y, s1.x | s3.x, 0}) == result.first;
    }
    case QRule::Q4: {
      if (partner < 0 || result.first != a1) return false;
      if (closure.possible.contains({partner, a1})) return false;
      ArgStructure s2 = u.items[static_cast<std::size_t>(a2)];
      ArgStructure s3 = u.items[static_cast<std::size_t>(partner)];
      return u.find({s2.y | s3.y, s2.x | s3.x, 0}) == result.second;
    }
    case QRule::Q5:
      for (auto [from, to] : u.extensions)
        if (from == a1 && to == result.first && result.second == a2) return true;
      return false;
    case QRule::Q6:
      for (auto [from, to] : u.extensions)
        if (from == a2 && to == result.second && result.first == a1) return true;
      return false;
    default:
      return false;
  }
}

}  // namespace praset
