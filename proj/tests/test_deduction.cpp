#include "support.hpp"
#include "oracle.hpp"

#include "unsharp/deduction.hpp"

using namespace unsharp;

namespace {

bool oracle_dsys(const MeetSemilattice& s, const oracle::Set& d) {
    const auto top = oracle::maxima(s, oracle::to_set(s.carrier()));
    bool d1 = false;
    for (Index m : top)
        d1 = d1 || d.count(m);
    if (!d1)
        return false;
    for (Index x : d)
        for (Index y = 0; y < s.size(); ++y) {
            bool hit = false;
            for (Index z : oracle::imp(s, x, y))
                hit = hit || d.count(z);
            if (hit && !d.count(y))
                return false;
        }
    return true;
}

bool oracle_theta(const MeetSemilattice& s, const oracle::Set& a, Index x, Index y) {
    for (Index w : a)
        if (oracle::meet(s, x, w) == oracle::meet(s, y, w))
            return true;
    return false;
}

oracle::Set from_mask(std::uint32_t mask) {
    oracle::Set out;
    for (Index i = 0; i < 32; ++i)
        if (mask >> i & 1u)
            out.insert(i);
    return out;
}

ElemSet to_elem(const oracle::Set& s) { return ElemSet(std::vector<Index>(s.begin(), s.end())); }

} // namespace

TEST_CASE("filters") {
    const auto f4 = build("fig4");
    CHECK(is_filter(f4, S(f4, {"d", "1"})));
    const auto f1 = build("fig1");
    CHECK_FALSE(is_filter(f1, S(f1, {"a", "b"})));
    CHECK_FALSE(is_filter(f1, ElemSet{}));
    CHECK(principal_filter(f4, f4.index_of("c")) == S(f4, {"c", "d", "e", "f", "1"}));

    CHECK(enumerate_filters(f1).size() == 4);
    CHECK(enumerate_filters(f4).size() == 8);
    CHECK(enumerate_filters(build("chain:5")).size() == 5);
    for (const auto& f : enumerate_filters(f4))
        CHECK(f.role == SubsetRole::Filter);
}

TEST_CASE("deductive systems") {
    const auto f4 = build("fig4");
    CHECK(is_deductive_system(f4, S(f4, {"e", "1"})));
    CHECK_FALSE(is_deductive_system(f4, S(f4, {"a", "1"})));

    // unbounded: {a} passes D1 and D2 in the three-atom structure
    const auto f1 = build("fig1");
    CHECK(is_deductive_system(f1, S(f1, {"a"})));
    CHECK(oracle_dsys(f1, oracle::named(f1, {"a"})));
    CHECK_FALSE(is_deductive_system(f1, S(f1, {"a", "b"})));

    std::vector<ElemSet> ds, fs;
    for (const auto& d : enumerate_deductive_systems(f4))
        ds.push_back(d.members);
    for (const auto& f : enumerate_filters(f4))
        fs.push_back(f.members);
    std::sort(ds.begin(), ds.end());
    std::sort(fs.begin(), fs.end());
    CHECK(ds == fs);

    const auto one = build_semilattice({"0"}, {});
    const auto only = enumerate_deductive_systems(one);
    REQUIRE(only.size() == 1);
    CHECK(only[0].members == ElemSet{0});

    CHECK_THROWS_CODE(enumerate_deductive_systems(build("chain:16")), ErrorCode::TooLarge);
}

TEST_CASE("subset predicates agree with brute force") {
    for (const auto& s : sample_structures()) {
        if (s.size() > 9)
            continue;
        CAPTURE(s.label());
        for (std::uint32_t mask = 1; mask < (1u << s.size()); ++mask) {
            const auto d = from_mask(mask);
            CHECK(is_filter(s, to_elem(d)) == oracle::is_filter(s, d));
            CHECK(is_deductive_system(s, to_elem(d)) == oracle_dsys(s, d));
        }
    }
}

TEST_CASE("theta") {
    const auto f4 = build("fig4");
    const auto t = theta(f4, S(f4, {"d", "1"}));
    REQUIRE(is_equivalence(t));
    CHECK(is_congruence(f4, t));
    const std::vector<ElemSet> expect{S(f4, {"0"}), S(f4, {"a"}), S(f4, {"b"}),
                                      S(f4, {"c", "e", "f"}), S(f4, {"d", "1"})};
    CHECK(classes(t) == expect);
    CHECK(class_of(t, f4.index_of("1")) == S(f4, {"d", "1"}));

    CHECK(theta(f4, S(f4, {"0"})) == BinaryRelation::total(f4.size()));
    CHECK(theta(f4, f4.carrier()) == BinaryRelation::total(f4.size()));
    CHECK_THROWS_CODE(theta(f4, ElemSet{}), ErrorCode::EmptyOperand);

    for (const auto& s : sample_structures()) {
        CAPTURE(s.label());
        const Index last = static_cast<Index>(s.size() - 1);
        const ElemSet a{last};
        const auto r = theta(s, a);
        for (Index x = 0; x < s.size(); ++x)
            for (Index y = 0; y < s.size(); ++y)
                CHECK(r.contains(x, y) == oracle_theta(s, {last}, x, y));
    }
}

TEST_CASE("relations") {
    const auto f1 = build("fig1");
    const Index a = f1.index_of("a"), b = f1.index_of("b");
    auto r = BinaryRelation::identity(f1.size());
    CHECK(is_congruence(f1, r));
    r.add(a, b);
    r.add(b, a);
    CHECK(is_equivalence(r));
    CHECK_FALSE(is_congruence(f1, r));

    auto broken = BinaryRelation::identity(f1.size());
    broken.add(a, b);
    CHECK_FALSE(is_equivalence(broken));
    CHECK_THROWS_CODE(classes(broken), ErrorCode::NotEquivalence);

    const auto id = BinaryRelation::identity(4);
    CHECK(class_of(id, 2) == ElemSet{2});
    CHECK(class_of(BinaryRelation::total(4), 2) == ElemSet{0, 1, 2, 3});
    CHECK(id.count() == 4);
    CHECK(id.is_subset_of(BinaryRelation::total(4)));
}

TEST_CASE("congruences") {
    CHECK(enumerate_congruences(build("chain:2")).size() == 2);

    const auto f4 = build("fig4");
    const auto all = enumerate_congruences(f4);
    for (const auto& f : enumerate_filters(f4)) {
        const auto t = theta(f4, f.members);
        CHECK(std::find(all.begin(), all.end(), t) != all.end());
    }
    const auto f1 = build("fig1");
    const auto c1 = enumerate_congruences(f1);
    for (const auto& f : enumerate_filters(f1))
        CHECK(std::find(c1.begin(), c1.end(), theta(f1, f.members)) != c1.end());
    for (const auto& c : c1)
        CHECK(is_congruence(f1, c));

    CHECK_THROWS_CODE(enumerate_congruences(build("chain:9")), ErrorCode::TooLarge);
}

TEST_CASE("th3, lemma1, proposition") {
    const LawReport t4 = check_th3(build("fig4"));
    CHECK(t4.holds());
    CHECK(t4.detail == "equivalence holds (255 subsets checked)");
    CHECK(check_th3(build("fig2")).holds());
    CHECK(check_th3(build("chain:2")).holds());
    CHECK_THROWS_CODE(check_th3(build("fig1")), ErrorCode::RequiresBounded);

    CHECK(check_lemma1(build("fig4")).holds());
    CHECK_THROWS_CODE(check_lemma1(build("fig1")), ErrorCode::RequiresBounded);

    const auto f1 = build("fig1");
    const LawReport p = check_proposition(f1, principal_filter(f1, f1.index_of("a")));
    CHECK(p.holds());
    CHECK(p.instances == 16);
    CHECK_THROWS_CODE(check_proposition(f1, S(f1, {"a", "b"})), ErrorCode::NotAFilter);

    for (const auto& s : sample_structures())
        CHECK(principal_filter_join_ok(s));
}
