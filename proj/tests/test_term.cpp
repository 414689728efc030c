#include "support.hpp"
#include "oracle.hpp"

#include "unsharp/ops.hpp"
#include "unsharp/term.hpp"

using namespace unsharp;

TEST_CASE("parse: precedence") {
    CHECK(parse_term("x & y'").to_string() == "x & y'");
    CHECK(parse_term("x & y -> z").kind() == Term::Kind::Implication);
    CHECK(parse_term("x -> y & z").right().kind() == Term::Kind::Meet);
    CHECK(parse_term("(x & y)'0").kind() == Term::Kind::Negation);
    CHECK(parse_term("x''").operand().kind() == Term::Kind::Negation);
    CHECK(parse_term("x'0'0").to_string() == parse_term("x''").to_string());
    CHECK(parse_term("(x -> y) -> y").left().kind() == Term::Kind::Implication);
}

TEST_CASE("parse: equations") {
    const Equation e = parse_equation("x'0 & y'0 = (x & y)'0");
    CHECK(e.relation == Relation::Equal);
    CHECK(e.slots == std::vector<std::size_t>{0, 1});

    CHECK(parse_equation("x <=1 x''").relation == Relation::Leq1);
    CHECK(parse_equation("x ~=1 x").relation == Relation::Approx1);
    CHECK(parse_equation("x & (x -> y) <= y").relation == Relation::SetLeq);
    CHECK(parse_equation("w = z").slots == std::vector<std::size_t>{2, 3});
    CHECK(parse_equation("1 -> x = x").lhs.uses_top());
    CHECK_FALSE(parse_equation("0 -> x = x").lhs.uses_top());
}

TEST_CASE("parse: errors") {
    CHECK_THROWS_CODE(parse_term("x -> y -> z"), ErrorCode::ParseError);
    CHECK_THROWS_CODE(parse_term("(x & y"), ErrorCode::ParseError);
    CHECK_THROWS_CODE(parse_term("x & "), ErrorCode::ParseError);
    CHECK_THROWS_CODE(parse_term("q"), ErrorCode::ParseError);
    CHECK_THROWS_CODE(parse_term(""), ErrorCode::ParseError);
    CHECK_THROWS_CODE(parse_equation("x & y"), ErrorCode::ParseError);
    CHECK_THROWS_CODE(parse_equation("x = y = z"), ErrorCode::ParseError);
}

TEST_CASE("evaluate") {
    const auto f2 = build("fig2");
    const Index a = f2.index_of("a"), e = f2.index_of("e");
    const Assignment v{a, e, 0, 0};
    CHECK(evaluate(f2, parse_term("x'0 & y'0"), v) == S(f2, {"d"}));
    CHECK(evaluate(f2, parse_term("(x & y)'0"), v) == S(f2, {"g", "h"}));
    CHECK(evaluate(f2, parse_term("x''"), v) == S(f2, {"a"}));
    CHECK(evaluate(f2, parse_term("1"), v) == S(f2, {"1"}));
    CHECK(evaluate(f2, parse_term("0'"), v) == S(f2, {"1"}));

    const auto f1 = build("fig1");
    CHECK_THROWS_CODE(evaluate(f1, parse_term("1 & x"), v), ErrorCode::RequiresBounded);

    const auto f4 = build("fig4");
    const Assignment w{f4.index_of("d"), f4.index_of("e"), 0, 0};
    CHECK(evaluate(f4, parse_term("(x -> y) -> y"), w) == S(f4, {"d", "e"}));
    CHECK(evaluate(f4, parse_term("x & (x -> y)"), w) == S(f4, {"c"}));
}

TEST_CASE("evaluation matches the operators") {
    for (const auto& s : sample_structures()) {
        for (Index a = 0; a < s.size(); ++a) {
            for (Index b = 0; b < s.size(); ++b) {
                const Assignment v{a, b, 0, 0};
                CHECK(evaluate(s, parse_term("x -> y"), v) == imp(s, a, b));
                CHECK(evaluate(s, parse_term("x & y"), v) == ElemSet::single(s.meet(a, b)));
                CHECK(oracle::to_set(evaluate(s, parse_term("x' & y'"), v)) ==
                      oracle::meet_sets(s, oracle::neg(s, a), oracle::neg(s, b)));
            }
            CHECK(evaluate(s, parse_term("x'"), Assignment{a, 0, 0, 0}) == neg(s, a));
        }
    }
}

TEST_CASE("relations") {
    const auto f4 = build("fig4");
    CHECK(relation_holds(f4, Relation::Approx1, S(f4, {"c", "e", "f"}), S(f4, {"e", "f"})));
    CHECK_FALSE(relation_holds(f4, Relation::Equal, S(f4, {"c", "e", "f"}), S(f4, {"e", "f"})));
    CHECK(relation_holds(f4, Relation::SetLeq, S(f4, {"c"}), S(f4, {"e", "f"})));
    CHECK(relation_holds(f4, Relation::Leq1, S(f4, {"c", "e"}), S(f4, {"e"})));
    CHECK(to_string(Relation::Approx1) == "~=1");
}
