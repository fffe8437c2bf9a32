#pragma once

#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "praset/core.hpp"
#include "praset/program.hpp"
#include "praset/semantics.hpp"

namespace praset {

// A structure <Y <- X; Z>: conclusions y, assumptions x (stored as pos(X)),
// open conditions z. Condition-free structures have z == 0.
struct ArgStructure {
  Mask y = 0;
  Mask x = 0;
  Mask z = 0;

  friend bool operator==(ArgStructure a, ArgStructure b) {
    return a.y == b.y && a.x == b.x && a.z == b.z;
  }
  friend bool operator!=(ArgStructure a, ArgStructure b) { return !(a == b); }
  friend bool operator<(ArgStructure a, ArgStructure b) {
    if (a.y != b.y) return a.y < b.y;
    if (a.x != b.x) return a.x < b.x;
    return a.z < b.z;
  }
};

// Count of constructed structures that failed re-validation. Stays zero
// unless a derivation rule is broken; tests assert on it.
inline long& structure_violations() {
  static long count = 0;
  return count;
}

// The defining conditions of a dependency structure: consistent conclusions,
// self-consistent assumptions disjoint from the conditions, and conclusions
// contained in the consequences of the assumptions with conditions as facts.
inline bool dependency_structure_ok(const Program& p, ArgStructure a) {
  if (!consistent_obj(a.y)) return false;
  if (!is_self_consistent(p, a.x)) return false;
  if ((a.x & a.z) != 0) return false;
  LitSet closure = consequences(p, a.z, a.x);
  return (a.y & ~closure.obj) == 0;
}

namespace detail {

// Every construction funnels through here so the dependency conditions are
// re-checked on each structure the engine ever builds.
inline ArgStructure checked_structure(const Program& p, Mask y, Mask x, Mask z) {
  ArgStructure a{y, x, z};
  if (!dependency_structure_ok(p, a)) ++structure_violations();
  return a;
}

}  // namespace detail

// Reads the structure on one rule: <{head} <- body-; body+>, defined only
// when the default body is self-consistent and disjoint from the positive one.
inline std::optional<ArgStructure> basic_structure(const Program& p, int rule) {
  const Rule& r = p.rules[rule];
  if (!is_self_consistent(p, r.body_naf)) return std::nullopt;
  if ((r.body_naf & r.body_pos) != 0) return std::nullopt;
  return detail::checked_structure(p, bit(r.head), r.body_naf, r.body_pos);
}

namespace detail {

inline int basic_rule_of(const Program& p, ArgStructure a) {
  for (std::size_t i = 0; i < p.rules.size(); ++i) {
    auto b = basic_structure(p, static_cast<int>(i));
    if (b && *b == a) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace detail

// Unfolding: resolves one condition of a1 against the basic structure a2 of
// some rule. Shape violations are errors; failed side conditions are a value.
inline std::optional<ArgStructure> apply_R1(const Program& p, ArgStructure a1, ArgStructure a2) {
  if (a1.z == 0) throw precondition_error("unfolding needs a structure with open conditions");
  if (popcount(a1.y) != 1)
    throw precondition_error("unfolding needs a single-conclusion structure");
  int r2 = detail::basic_rule_of(p, a2);
  if (r2 < 0) throw precondition_error("second unfolding premise must be a basic structure");
  Mask head2 = bit(p.rules[r2].head);
  if ((a1.z & head2) == 0)
    throw precondition_error("unfolded head does not occur among the open conditions");
  Mask x = a1.x | a2.x;
  if (!consistent(LitSet{a1.y | a1.z | a2.z, x})) return std::nullopt;
  if (!is_self_consistent(p, x)) return std::nullopt;
  return detail::checked_structure(p, a1.y, x, (a1.z & ~head2) | a2.z);
}

// Union of two condition-free structures.
inline std::optional<ArgStructure> apply_R2(const Program& p, ArgStructure a1, ArgStructure a2) {
  if (a1.z != 0 || a2.z != 0)
    throw precondition_error("union requires condition-free structures");
  Mask y = a1.y | a2.y;
  Mask x = a1.x | a2.x;
  if (!consistent(LitSet{y, x})) return std::nullopt;
  if (!is_self_consistent(p, x)) return std::nullopt;
  return detail::checked_structure(p, y, x, 0);
}

// Assumption extension of a condition-free structure by w (pos of W).
inline std::optional<ArgStructure> apply_R3(const Program& p, ArgStructure a1, Mask w) {
  if (a1.z != 0) throw precondition_error("extension requires a condition-free structure");
  Mask x = a1.x | w;
  if (!consistent(LitSet{a1.y, x})) return std::nullopt;
  if (!is_self_consistent(p, x)) return std::nullopt;
  return detail::checked_structure(p, a1.y, x, 0);
}

inline bool is_complete(const Program& p, ArgStructure a) {
  return a.z == 0 && (p.obj_mask() & ~(a.y | a.x)) == 0;
}

// One unfolding event: `product` = u(items[cond], items[basic]).
struct UnfoldEdge {
  int cond = -1;
  int basic = -1;
  int product = -1;
};

// The derivable structures, held explicitly up to assumption extension:
// basic structures, the unfolding closure, the union closure over
// condition-free structures, and the completions of the answer sets.
// Extensions (R3) are kept as edges between explicit structures; membership
// of an extension that was not materialized is answered by contains().
struct StructureUniverse {
  std::vector<ArgStructure> items;
  std::map<ArgStructure, int> index;
  std::vector<int> basic_of;           // rule -> structure id, -1 if undefined
  std::vector<RuleMask> rules_of;      // structure id -> rules it is basic for
  std::vector<UnfoldEdge> unfolds;
  std::vector<std::pair<int, int>> extensions;  // (from, to), x grows, y fixed
  std::vector<int> completions;        // parallel to answer_sets() order

  int find(ArgStructure a) const {
    auto it = index.find(a);
    return it == index.end() ? -1 : it->second;
  }
};

// Default cap on explicit structures; PRASET_LIMIT overrides it.
inline std::size_t structure_limit() {
  if (const char* env = std::getenv("PRASET_LIMIT")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 200000;
}

namespace detail {

inline int add_structure(StructureUniverse& u, ArgStructure a, std::size_t limit) {
  int id = u.find(a);
  if (id >= 0) return id;
  if (u.items.size() >= limit)
    throw resource_limit_error("structure universe exceeds the configured limit of " +
                               std::to_string(limit) + " (see PRASET_LIMIT)");
  id = static_cast<int>(u.items.size());
  u.items.push_back(a);
  u.index.emplace(a, id);
  u.rules_of.push_back(0);
  return id;
}

}  // namespace detail

// Closes the basic structures under unfolding and union, then records the
// answer-set completions and the extension edges. Assumption extensions are
// not enumerated; contains() below answers membership for them.
inline StructureUniverse saturate(const Program& p, std::size_t limit = structure_limit()) {
  StructureUniverse u;
  int n = static_cast<int>(p.rules.size());
  u.basic_of.assign(n, -1);
  for (int r = 0; r < n; ++r) {
    auto b = basic_structure(p, r);
    if (!b) continue;
    int id = detail::add_structure(u, *b, limit);
    u.basic_of[r] = id;
    u.rules_of[id] |= RuleMask{1} << r;
  }

  // Unfolding closure: every structure with open conditions against every
  // basic structure whose head resolves one of them.
  for (std::size_t i = 0; i < u.items.size(); ++i) {
    if (u.items[i].z == 0 || popcount(u.items[i].y) != 1) continue;
    for (int r = 0; r < n; ++r) {
      int b = u.basic_of[r];
      if (b < 0 || (u.items[i].z & bit(p.rules[r].head)) == 0) continue;
      auto prod = apply_R1(p, u.items[i], u.items[b]);
      if (!prod) continue;
      int pid = detail::add_structure(u, *prod, limit);
      u.unfolds.push_back({static_cast<int>(i), b, pid});
    }
  }

  for (AnswerSet s : answer_sets(p)) {
    if (s.pos == 0) {  // nothing derivable concludes the empty set
      u.completions.push_back(-1);
      continue;
    }
    ArgStructure c = detail::checked_structure(p, s.pos, answer_set_neg(p, s), 0);
    u.completions.push_back(detail::add_structure(u, c, limit));
  }

  // Union closure over the condition-free structures.
  for (std::size_t i = 0; i < u.items.size(); ++i) {
    if (u.items[i].z != 0) continue;
    for (std::size_t j = 0; j < i; ++j) {
      if (u.items[j].z != 0) continue;
      auto prod = apply_R2(p, u.items[i], u.items[j]);
      if (prod) detail::add_structure(u, *prod, limit);
    }
  }

  for (std::size_t i = 0; i < u.items.size(); ++i) {
    if (u.items[i].z != 0) continue;
    for (std::size_t j = 0; j < u.items.size(); ++j) {
      if (i == j || u.items[j].z != 0) continue;
      if (u.items[i].y == u.items[j].y && (u.items[i].x & ~u.items[j].x) == 0 &&
          u.items[i].x != u.items[j].x)
        u.extensions.push_back({static_cast<int>(i), static_cast<int>(j)});
    }
  }
  return u;
}

// Membership in the full closure: explicit hit, or an assumption extension
// of an explicit condition-free structure (unions and unfoldings never
// extend past the explicit pool, extensions always end on a valid superset
// of assumptions with unchanged conclusions).
inline bool universe_contains(const Program& p, const StructureUniverse& u, ArgStructure a) {
  if (u.find(a) >= 0) return true;
  if (a.z != 0) return false;
  if (!dependency_structure_ok(p, a)) return false;
  for (const ArgStructure& e : u.items)
    if (e.z == 0 && e.y == a.y && (e.x & ~a.x) == 0) return true;
  return false;
}

// ---- derivations ----

struct DerivStep {
  enum class Kind { Basic, Unfold, Union, Extend };
  Kind kind = Kind::Basic;
  ArgStructure s;
  int rule = -1;              // Basic: originating rule
  int from1 = -1, from2 = -1; // premise step indices
  Mask w = 0;                 // Extend: the added assumptions
};

struct Derivation {
  std::vector<DerivStep> steps;
  RuleMask gen_rules = 0;

  const ArgStructure& result() const { return steps.back().s; }
};

namespace detail {

inline int push_step(Derivation& d, DerivStep step) {
  for (std::size_t i = 0; i < d.steps.size(); ++i)
    if (d.steps[i].s == step.s) return static_cast<int>(i);
  d.steps.push_back(step);
  return static_cast<int>(d.steps.size()) - 1;
}

// Orders the rules so each positive body is satisfied by earlier heads.
inline std::vector<int> firing_order(const Program& p, RuleMask rules) {
  std::vector<int> order;
  Mask heads = 0;
  RuleMask left = rules;
  while (left) {
    int pick = -1;
    for (RuleMask m = left; m;) {
      int r = lowest_bit(m);
      m &= m - 1;
      if ((p.rules[r].body_pos & ~heads) == 0) {
        pick = r;
        break;
      }
    }
    if (pick < 0) break;  // not a generating set; caller guarantees otherwise
    order.push_back(pick);
    heads |= bit(p.rules[pick].head);
    left &= ~(RuleMask{1} << pick);
  }
  return order;
}

}  // namespace detail

// One derivation per minimal generating set: basic structures in firing
// order, each unfolded to condition-free form against earlier rules' basic
// structures (ties to the lowest rule index), folded by unions, and closed
// by one extension up to <S+ <- S->.
inline std::vector<Derivation> canonical_derivations(const Program& p, AnswerSet s) {
  Mask neg = answer_set_neg(p, s);
  std::vector<Derivation> out;
  for (RuleMask rules : minimal_generating_sets(p, s)) {
    Derivation d;
    d.gen_rules = rules;
    if (rules == 0) {  // nothing fires; the empty conclusion set is assumed outright
      d.steps.push_back({DerivStep::Kind::Extend, detail::checked_structure(p, 0, neg, 0),
                         -1, -1, -1, neg});
      out.push_back(std::move(d));
      continue;
    }
    std::vector<int> order = detail::firing_order(p, rules);
    std::vector<int> basic_step(p.rules.size(), -1);
    for (int r : order) {
      auto b = basic_structure(p, r);
      basic_step[r] = detail::push_step(d, {DerivStep::Kind::Basic, *b, r});
    }
    int acc = -1;
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
      int cur = basic_step[order[pos]];
      while (d.steps[cur].s.z != 0) {
        ObjLit cond{lowest_bit(d.steps[cur].s.z)};
        int supplier = -1;
        for (std::size_t q = 0; q < pos && supplier < 0; ++q)
          if (p.rules[order[q]].head == cond) supplier = order[q];
        for (std::size_t q = 0; q < pos; ++q)
          if (p.rules[order[q]].head == cond && order[q] < supplier) supplier = order[q];
        auto prod = apply_R1(p, d.steps[cur].s, d.steps[basic_step[supplier]].s);
        cur = detail::push_step(
            d, {DerivStep::Kind::Unfold, *prod, -1, cur, basic_step[supplier]});
      }
      if (acc < 0) {
        acc = cur;
      } else {
        auto prod = apply_R2(p, d.steps[acc].s, d.steps[cur].s);
        if (*prod != d.steps[acc].s)
          acc = detail::push_step(d, {DerivStep::Kind::Union, *prod, -1, acc, cur});
      }
    }
    Mask w = neg & ~d.steps[acc].s.x;
    if (w != 0) {
      auto ext = apply_R3(p, d.steps[acc].s, w);
      detail::push_step(d, {DerivStep::Kind::Extend, *ext, -1, acc, -1, w});
    }
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace praset
