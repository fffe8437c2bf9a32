#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "helpers.hpp"
#include "praset/praset.hpp"

using namespace praset;
using testing_support::lit_mask;
using testing_support::load_fixture;
using testing_support::oracle_answer_sets;
using testing_support::oracle_cn;

namespace {

std::set<Mask> set_of(const std::vector<AnswerSet>& v) {
  std::set<Mask> out;
  for (AnswerSet s : v) out.insert(s.pos);
  return out;
}

}  // namespace

TEST_CASE("least model chains positive rules") {
  Program p = parse_program("r1: a.\nr2: b :- a.\nr3: c :- b, a.\nr4: d :- e.\n");
  std::vector<DefiniteRule> rules;
  for (const Rule& r : p.rules) rules.push_back({r.head, r.body_pos});
  Mask lm = least_model(rules);
  CHECK(lm == lit_mask(p, {"a", "b", "c"}));
}

TEST_CASE("reduct keeps rules whose default body avoids the set") {
  Program p = load_fixture("running.lp");
  Mask pos = lit_mask(p, {"a", "b"});
  Mask neg = p.obj_mask() & ~pos;
  std::vector<DefiniteRule> red = reduct(p, pos, neg);
  REQUIRE(red.size() == 2);  // r2 falls: not b conflicts with b in S+

  CHECK_THROWS_AS(reduct(p, pos, 0), not_total_error);
  CHECK_THROWS_AS(reduct(p, pos, p.obj_mask()), not_total_error);
}

TEST_CASE("running example has its two answer sets") {
  Program p = load_fixture("running.lp");
  auto sets = answer_sets(p);
  CHECK(set_of(sets) == std::set<Mask>{lit_mask(p, {"a", "b"}), lit_mask(p, {"a", "-b"})});
}

TEST_CASE("incoherent and empty programs have no answer sets") {
  CHECK(answer_sets(load_fixture("incoherent.lp")).empty());
  CHECK(answer_sets(parse_program("")).empty());
}

TEST_CASE("facts force themselves into every answer set") {
  Program p = parse_program("r1: a.\nr2: b :- not c.\n");
  auto sets = answer_sets(p);
  REQUIRE(sets.size() == 1);
  CHECK(sets[0].pos == lit_mask(p, {"a", "b"}));
}

TEST_CASE("strong negation participates in answer sets") {
  Program p = parse_program("r1: -a.\nr2: b :- not a.\n");
  auto sets = answer_sets(p);
  REQUIRE(sets.size() == 1);
  CHECK(sets[0].pos == lit_mask(p, {"-a", "b"}));
}

TEST_CASE("inconsistent closure means incoherence") {
  Program p = parse_program("r1: a.\nr2: -a.\n");
  CHECK(answer_sets(p).empty());
}

TEST_CASE("answer sets are listed in canonical order") {
  Program p = load_fixture("running.lp");
  auto sets = answer_sets(p);
  REQUIRE(sets.size() == 2);
  // {a, -b} sorts before {a, b}: "-b" precedes "b" in the name ordering
  CHECK(sets[0].pos == lit_mask(p, {"a", "-b"}));
  CHECK(sets[1].pos == lit_mask(p, {"a", "b"}));
}

TEST_CASE("enumeration bails out beyond the supported atom count") {
  Program p;
  for (int i = 0; i < 15; ++i) p.intern_atom("x" + std::to_string(i));
  p.add_rule({"r1", ObjLit::make(0, false), 0, 0});
  CHECK_THROWS_AS(answer_sets(p), resource_limit_error);
}

TEST_CASE("answer sets agree with the guess-and-check oracle") {
  for (int i = 0; i < 60; ++i) {
    Program p = random_program(11, i, 4);
    CHECK(set_of(answer_sets(p)) == set_of(oracle_answer_sets(p)));
  }
}

TEST_CASE("consequences agree with rule-sequence search on all assumption sets") {
  int programs = 0;
  for (int i = 0; programs < 100; ++i) {
    Program p = random_program(23, i, 5);
    ++programs;
    for (Mask w = 0;; ++w) {
      if ((w & ~p.obj_mask()) == 0) {
        LitSet fix = consequences(p, 0, w);
        LitSet walk = oracle_cn(p, w);
        REQUIRE(fix.obj == walk.obj);
        REQUIRE(fix.naf == walk.naf);
      }
      if (w == p.obj_mask()) break;
    }
  }
}

TEST_CASE("consequences include extra facts") {
  Program p = parse_program("r1: b :- a.\n");
  Mask a = lit_mask(p, {"a"});
  LitSet c = consequences(p, a, 0);
  CHECK((c.obj & lit_mask(p, {"a", "b"})) == lit_mask(p, {"a", "b"}));
}

TEST_CASE("self-consistency rejects assumption sets that refute themselves") {
  Program p = parse_program("r1: a :- not b.\n");
  CHECK(is_self_consistent(p, lit_mask(p, {"b"})));
  CHECK(is_self_consistent(p, lit_mask(p, {"a"})));  // nothing fires under not a
  Program loop = load_fixture("incoherent.lp");
  CHECK_FALSE(is_self_consistent(loop, lit_mask(loop, {"p"})));  // not p derives p
  Program facts = parse_program("r1: a.\nr2: b :- not a.\n");
  CHECK_FALSE(is_self_consistent(facts, lit_mask(facts, {"a"})));  // the fact fires anyway
  Program q = load_fixture("four_rule.lp");
  CHECK_FALSE(is_self_consistent(q, lit_mask(q, {"c"})));  // not c fires r4
}

TEST_CASE("generating rules and their minimal subsets") {
  Program p = load_fixture("ambiguity.lp");
  auto sets = answer_sets(p);
  REQUIRE(sets.size() == 2);
  AnswerSet a = sets[0].pos == lit_mask(p, {"a"}) ? sets[0] : sets[1];
  AnswerSet bc = sets[0].pos == lit_mask(p, {"a"}) ? sets[1] : sets[0];

  CHECK(generating_rules(p, a) == (RuleMask{1} | RuleMask{4}));  // r1 and r3
  auto mins = minimal_generating_sets(p, a);
  REQUIRE(mins.size() == 2);
  CHECK(mins[0] == RuleMask{1});  // {r1}
  CHECK(mins[1] == RuleMask{4});  // {r3}

  auto mins_bc = minimal_generating_sets(p, bc);
  REQUIRE(mins_bc.size() == 1);
  CHECK(mins_bc[0] == (RuleMask{2} | RuleMask{8}));  // {r2, r4}
}

TEST_CASE("minimal generating sets regenerate the set and nothing smaller does") {
  for (int i = 0; i < 40; ++i) {
    Program p = random_program(31, i, 4);
    for (AnswerSet s : answer_sets(p)) {
      for (RuleMask r : minimal_generating_sets(p, s)) {
        CHECK((r & ~generating_rules(p, s)) == 0);
        for (RuleMask sub = r; sub;) {
          sub &= sub - 1;  // drop lowest rule; proper subsets must fail
          RuleMask probe = sub;
          if (probe == r) continue;
          bool regen = detail::regenerated(p, probe) == s.pos;
          CHECK_FALSE(regen);
          break;
        }
      }
    }
  }
}

TEST_CASE("generating-set search bails out on oversized programs") {
  Program p;
  p.intern_atom("a");
  for (int i = 0; i < 21; ++i) p.add_rule({"r" + std::to_string(i + 1), ObjLit{0}, 0, 0});
  CHECK_THROWS_AS(minimal_generating_sets(p, AnswerSet{bit(0)}), resource_limit_error);
}
