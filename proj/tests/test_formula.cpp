// Copyright 2026 The Choice Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "choice/formula.hpp"

#include "choice/checks.hpp"
#include "doctest.h"

using namespace choice;

TEST_CASE("parse builds the expected trees") {
  FormulaPtr f = parse("a");
  CHECK(f->op == Op::Var);
  CHECK(f->name == "a");

  f = parse("!!x1");
  REQUIRE(f->op == Op::Not);
  REQUIRE(f->lhs->op == Op::Not);
  CHECK(f->lhs->lhs->name == "x1");

  // Chains of >< parse right-associatively.
  f = parse("(a & b) >< a >< b");
  FormulaPtr want = ord(conj(var("a"), var("b")), ord(var("a"), var("b")));
  CHECK(equal(f, want));

  CHECK(equal(parse("a >< b >< c"), ord(var("a"), ord(var("b"), var("c")))));
  CHECK(equal(parse("a & b & c"), conj(var("a"), conj(var("b"), var("c")))));
  CHECK(equal(parse("a | b | c"), disj(var("a"), disj(var("b"), var("c")))));
}

TEST_CASE("precedence: ! over & over | over ><") {
  FormulaPtr f = parse("!a & b | c >< d");
  FormulaPtr want =
      ord(disj(conj(neg(var("a")), var("b")), var("c")), var("d"));
  CHECK(equal(f, want));

  CHECK(equal(parse("a | b & c"), disj(var("a"), conj(var("b"), var("c")))));
  CHECK(equal(parse("(a | b) & c"), conj(disj(var("a"), var("b")), var("c"))));
}

TEST_CASE("unicode connectives are accepted on input") {
  CHECK(equal(parse("\xc2\xac"
                    "a \xe2\x88\xa7 b"),
              parse("!a & b")));
  CHECK(equal(parse("a \xe2\x88\xa8 b"), parse("a | b")));
  CHECK(equal(parse("a \xc3\x97 b"), parse("a >< b")));
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("a ><"), ParseError);
  CHECK_THROWS_AS(parse("a b"), ParseError);
  CHECK_THROWS_AS(parse("a >< >< b"), ParseError);
  CHECK_THROWS_AS(parse("a && b"), ParseError);

  try {
    parse("(a & b");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 7);
  }

  try {
    parse("a &\nB");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);  // lexical error: uppercase start
    CHECK(e.column() == 1);
  }

  CHECK_THROWS_AS(parse("a > b"), ParseError);
  CHECK_THROWS_AS(parse("a ? b"), ParseError);
}

TEST_CASE("print emits minimal parentheses") {
  CHECK(print(ord(var("a"), var("b"))) == "a >< b");
  CHECK(print(neg(conj(var("a"), var("b")))) == "!(a & b)");
  CHECK(print(conj(var("t"), ord(var("m"), var("a")))) == "t & (m >< a)");
  CHECK(print(parse("((a))")) == "a");
  CHECK(print(parse("!(!(a))")) == "!!a");
  CHECK(print(parse("(a | b) & c")) == "(a | b) & c");
  CHECK(print(parse("a | b & c")) == "a | b & c");

  // Left-nested chains keep their parentheses, right-nested ones drop them.
  CHECK(print(ord(ord(var("a"), var("b")), var("c"))) == "(a >< b) >< c");
  CHECK(print(ord(var("a"), ord(var("b"), var("c")))) == "a >< b >< c");
  CHECK(print(parse("((a><b)><c) & !(a><d)")) ==
        "((a >< b) >< c) & !(a >< d)");
}

TEST_CASE("parse(print(f)) is the identity on random formulas") {
  checks::FormulaGen gen(2026, 4);
  for (int k = 0; k < 500; ++k) {
    FormulaPtr f = gen.by_depth(8);
    CAPTURE(print(f));
    CHECK(equal(parse(print(f)), f));
  }
}

TEST_CASE("vars collects identifiers") {
  CHECK(vars(*parse("t & (m >< a)")) == std::set<std::string>{"a", "m", "t"});
  CHECK(vars(*parse("a >< a")) == std::set<std::string>{"a"});
  CHECK(vars(*parse("!(a >< d)")) == std::set<std::string>{"a", "d"});
}

TEST_CASE("interpretations enumerate in binary-counting order") {
  auto all = all_interpretations(*parse("a >< b"));
  REQUIRE(all.size() == 4);
  CHECK(all[0].to_string() == "{}");
  CHECK(all[1].to_string() == "{b}");
  CHECK(all[2].to_string() == "{a}");
  CHECK(all[3].to_string() == "{a,b}");

  auto single = all_interpretations(*parse("a"));
  REQUIRE(single.size() == 2);
  CHECK(single[0].empty());
  CHECK(single[1].contains("a"));
}

TEST_CASE("interpretation enumeration yields 2^n distinct sets") {
  checks::FormulaGen gen(7, 4);
  for (int k = 0; k < 50; ++k) {
    FormulaPtr f = gen.by_connectives(8);
    auto all = all_interpretations(*f);
    CHECK(all.size() == (1ULL << vars(*f).size()));
    std::set<Interpretation> distinct(all.begin(), all.end());
    CHECK(distinct.size() == all.size());
  }
}

TEST_CASE("the variable cap is enforced") {
  // 21 distinct variables against the default cap of 20.
  std::string text = "x00";
  for (int i = 1; i < 21; ++i) {
    char buf[8];
    std::snprintf(buf, sizeof buf, " | x%02d", i);
    text += buf;
  }
  FormulaPtr f = parse(text);
  REQUIRE(vars(*f).size() == 21);
  CHECK_THROWS_AS(all_interpretations(*f), CapExceeded);
  CHECK_THROWS_AS(all_interpretations(*f, 20), CapExceeded);
  CHECK_NOTHROW(all_interpretations(*f, 21));
}

TEST_CASE("interpretations parse from csv") {
  CHECK(Interpretation::from_csv("a,b").to_string() == "{a,b}");
  CHECK(Interpretation::from_csv(" b , a ").to_string() == "{a,b}");
  CHECK(Interpretation::from_csv("").empty());
  CHECK(Interpretation::from_csv("a,a").vars().size() == 1);
  CHECK_THROWS_AS(Interpretation::from_csv("A"), std::invalid_argument);
  CHECK_THROWS_AS(Interpretation::from_csv("a,,b"), std::invalid_argument);
  CHECK(Interpretation::from_csv("a,b").to_csv() == "a,b");
}

TEST_CASE("identifier validation") {
  CHECK(valid_identifier("a"));
  CHECK(valid_identifier("x1_y"));
  CHECK_FALSE(valid_identifier(""));
  CHECK_FALSE(valid_identifier("A"));
  CHECK_FALSE(valid_identifier("_a"));
  CHECK_FALSE(valid_identifier("1a"));
  CHECK_THROWS_AS(var("Bad"), std::invalid_argument);
}
