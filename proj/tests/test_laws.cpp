#include "support.hpp"
#include "oracle.hpp"

#include "unsharp/laws.hpp"

using namespace unsharp;

TEST_CASE("catalog") {
    CHECK(all_laws().size() == 35);
    CHECK(negation_axioms().size() == 4);
    CHECK(implication_axioms().size() == 6);
    for (LawId id : all_laws())
        CHECK(parse_law_id(to_string(id)) == id);
    CHECK(parse_law_id("T2.xiii") == LawId::T2_xiii);
    CHECK_FALSE(parse_law_id("T2.xiv").has_value());
    CHECK(requires_bounded(LawId::T1_vi));
    CHECK(requires_bounded(LawId::T2_x));
    CHECK(requires_bounded(LawId::T2_xii));
    CHECK_FALSE(requires_bounded(LawId::T2_v));
    CHECK(arity(LawId::ADJ) == 3);
}

TEST_CASE("worked examples") {
    const auto f1 = build("fig1");
    CHECK(check_law(f1, LawId::T1_viii).holds());
    const auto f4 = build("fig4");
    CHECK(check_law(f4, LawId::R4).holds());
    const Outcome r4 = evaluate_law(f4, LawId::R4,
                                    std::vector<Index>{f4.index_of("d"), f4.index_of("e"),
                                                       f4.index_of("f")});
    CHECK(r4.holds);
    CHECK(r4.lhs == "{e,f}");
    CHECK(r4.rhs == "{c,e,f}");
}

TEST_CASE("non-laws") {
    const auto f2 = build("fig2");
    const Equation e = parse_equation("x'0 & y'0 = (x & y)'0");
    const LawReport r = check_equation(f2, e);
    CHECK(r.failed());
    REQUIRE(r.counterexample);
    CHECK(reproduces_violation(f2, e, r));

    bool found = false;
    for (const auto& cx : equation_violations(f2, e))
        if (cx.binding == std::vector<std::pair<std::string, std::string>>{{"x", "a"}, {"y", "e"}}) {
            found = true;
            CHECK(cx.lhs == "{d}");
            CHECK(cx.rhs == "{g,h}");
        }
    CHECK(found);

    const auto f3 = build("fig3");
    const Equation e3 = parse_equation("(x' & y')'' = x' & y'");
    CHECK(check_equation(f3, e3).failed());
    found = false;
    for (const auto& cx : equation_violations(f3, e3))
        if (cx.binding == std::vector<std::pair<std::string, std::string>>{{"x", "a"}, {"y", "b"}}) {
            found = true;
            CHECK(cx.lhs == "{c}");
            CHECK(cx.rhs == "{0,c}");
        }
    CHECK(found);

    CHECK(check_equation(f2, "x'0 & y'0 <=1 (x & y)'0").holds());
    CHECK(check_equation(f2, "x & x = x").holds());
}

TEST_CASE("check_equation edge cases") {
    const auto f1 = build("fig1");
    CHECK_THROWS_CODE(check_equation(f1, "1 -> x = x"), ErrorCode::RequiresBounded);
    CHECK_THROWS_CODE(check_equation(f1, "x ->"), ErrorCode::ParseError);
    // closed terms have a single instance
    const LawReport r = check_equation(f1, "0' = 0'");
    CHECK(r.holds());
    CHECK(r.instances == 1);
}

TEST_CASE("bounded-only laws") {
    const auto f1 = build("fig1");
    CHECK_THROWS_CODE(check_law(f1, LawId::T2_xii), ErrorCode::RequiresBounded);
    std::size_t skipped = 0;
    for (const auto& r : check_all(f1)) {
        CHECK_FALSE(r.failed());
        skipped += r.status == LawStatus::Skipped;
    }
    CHECK(skipped == 3);

    const auto f3 = build("fig3");
    for (const auto& r : check_all(f3))
        CHECK(r.holds());
}

TEST_CASE("whole catalog on samples") {
    for (const auto& s : sample_structures()) {
        CAPTURE(s.label());
        for (const auto& r : check_all(s)) {
            CAPTURE(r.law);
            CHECK_FALSE(r.failed());
        }
    }
}

TEST_CASE("laws checked directly against brute force") {
    // a few catalog laws restated with the oracle only
    for (const auto& s : sample_structures()) {
        CAPTURE(s.label());
        const Index n = static_cast<Index>(s.size());
        for (Index a = 0; a < n; ++a) {
            const auto a0 = oracle::neg(s, a);
            // x <=1 x''
            bool below = false;
            for (Index m : oracle::neg_set(s, a0))
                below = below || s.leq(a, m);
            CHECK(below);
            for (Index b = 0; b < n; ++b) {
                // x & z <= y for z in x -> y
                for (Index z : oracle::imp(s, a, b))
                    CHECK(s.leq(oracle::meet(s, a, z), b));
                // x' & y' <=1 (x & y)'
                const auto lhs = oracle::meet_sets(s, a0, oracle::neg(s, b));
                const auto rhs = oracle::neg(s, oracle::meet(s, a, b));
                for (Index l : lhs) {
                    bool ok = false;
                    for (Index r : rhs)
                        ok = ok || s.leq(l, r);
                    CHECK(ok);
                }
            }
        }
    }
}

TEST_CASE("laws detect perturbed operators") {
    const auto f1 = build("fig1");
    const auto negt = make_table(f1, OperatorKind::Negation);
    const auto impt = make_table(f1, OperatorKind::Implication);

    // 0' := {0}
    const auto bad_neg = PerturbedOperator(negt, {{0, ElemSet{0}}}).materialize();
    const LawReport p2 = check_law(f1, LawId::P2, bad_neg, impt);
    CHECK(p2.failed());
    REQUIRE(p2.counterexample);

    // b -> b := {a}
    const Index b = f1.index_of("b");
    const auto bad_imp =
        PerturbedOperator(impt, {{impt.key(b, b), S(f1, {"a"})}}).materialize();
    CHECK(check_law(f1, LawId::R5, negt, bad_imp).failed());

    bool any = false;
    for (const auto& r : check_implication_axioms(bad_imp))
        any = any || r.failed();
    CHECK(any);
    for (const auto& r : check_negation_axioms(negt))
        CHECK(r.holds());
}

TEST_CASE("characterization") {
    for (auto name : {"fig1", "fig2", "fig3", "fig4"}) {
        CAPTURE(name);
        const auto s = build(name);
        CharacterizationSummary ns, is;
        const LawReport rn = verify_neg_characterization(s, 100, 5, &ns);
        const LawReport ri = verify_imp_characterization(s, 100, 5, &is);
        CHECK(rn.holds());
        CHECK(ri.holds());
        CHECK(ns.canonical_passes);
        CHECK(ns.perturbed == 100);
        CHECK(ns.rejected == 100);
        CHECK(ns.falsifications == 0);
        CHECK(is.perturbed == 100);
        CHECK(is.rejected == 100);
    }

    const auto one = build_semilattice({"0"}, {});
    CharacterizationSummary sum;
    CHECK(verify_imp_characterization(one, 10, 0, &sum).holds());
    CHECK(sum.canonical_passes);
    CHECK(sum.perturbed == 0);

    // same seed, same report
    const auto f3 = build("fig3");
    CharacterizationSummary a, b;
    verify_neg_characterization(f3, 20, 9, &a);
    verify_neg_characterization(f3, 20, 9, &b);
    CHECK(a.rejected == b.rejected);
}

TEST_CASE("remark on products") {
    for (auto spec : {"bool:2", "bool:3", "mn:3", "mn:4", "prod:bool:2+mn:3", "prod:mn:2+mn:3"}) {
        CAPTURE(spec);
        CHECK(check_remark_products(build(spec)).holds());
    }
    const LawReport r = check_remark_products(build("fig3"));
    CHECK(r.failed());
    REQUIRE(r.counterexample);
    CHECK(r.counterexample->binding.front().second == "a");
}

TEST_CASE("counterexamples reproduce") {
    const auto f3 = build("fig3");
    const LawReport r = check_equation(f3, "(x & y)' = x' & y'");
    REQUIRE(r.failed());
    CHECK(reproduces_violation(f3, parse_equation("(x & y)' = x' & y'"), r));
    CHECK_FALSE(reproduces_violation(f3, LawId::MP, check_law(f3, LawId::MP)));
}
