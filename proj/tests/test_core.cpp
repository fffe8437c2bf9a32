#include <catch2/catch_amalgamated.hpp>

#include "praset/core.hpp"

using namespace praset;

TEST_CASE("objective literal encoding round-trips") {
  ObjLit a = ObjLit::make(3, false);
  ObjLit na = ObjLit::make(3, true);
  CHECK(a.atom() == 3);
  CHECK_FALSE(a.negated());
  CHECK(na.atom() == 3);
  CHECK(na.negated());
  CHECK(a.complement() == na);
  CHECK(na.complement() == a);
  CHECK(a != na);
}

TEST_CASE("complemented swaps each literal with its strong negation") {
  Mask m = bit(ObjLit::make(0, false)) | bit(ObjLit::make(2, true));
  Mask c = complemented(m);
  CHECK((c & bit(ObjLit::make(0, true))) != 0);
  CHECK((c & bit(ObjLit::make(2, false))) != 0);
  CHECK(popcount(c) == 2);
  CHECK(complemented(c) == m);
}

TEST_CASE("consistency detects both conflict kinds") {
  Mask a = bit(ObjLit::make(0, false));
  Mask na = bit(ObjLit::make(0, true));
  Mask b = bit(ObjLit::make(1, false));

  SECTION("objective vs strong negation") {
    CHECK_FALSE(consistent_obj(a | na));
    CHECK(consistent_obj(a | b));
    CHECK_FALSE(consistent(LitSet{a | na, 0}));
  }
  SECTION("objective vs default negation") {
    CHECK_FALSE(consistent(LitSet{a, a}));
    CHECK(consistent(LitSet{a, na}));  // a and not -a coexist
    CHECK(consistent(LitSet{a, b}));
  }
  SECTION("default literals never conflict with each other") {
    CHECK(consistent(LitSet{0, a | na | b}));
  }
}

TEST_CASE("bit helpers agree with the encoding") {
  CHECK(lowest_bit(Mask{8}) == 3);
  CHECK(popcount(Mask{0}) == 0);
  CHECK(popcount(~Mask{0}) == 64);
  CHECK(bit(5) == Mask{32});
}

TEST_CASE("error types carry their context") {
  parse_error pe(3, 7, "expected atom");
  CHECK(pe.line() == 3);
  CHECK(pe.col() == 7);
  CHECK(pe.expected() == "expected atom");
  CHECK(std::string(pe.what()).find("3:7") != std::string::npos);

  preference_cycle_error ce({"r1", "r2", "r1"});
  CHECK(std::string(ce.what()).find("r1") != std::string::npos);
  CHECK(std::string(duplicate_rule_error("r9").what()).find("r9") != std::string::npos);
  CHECK(std::string(unknown_rule_error("rx").what()).find("rx") != std::string::npos);
}
