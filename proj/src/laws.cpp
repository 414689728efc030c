#include "unsharp/laws.hpp"

#include <array>
#include <random>

namespace unsharp {

namespace {

struct Ctx {
    const MeetSemilattice& s;
    const OperatorTable& neg;
    const OperatorTable& imp;

    const ElemSet& n(Index x) const { return neg.at(x); }
    const ElemSet& i(Index x, Index y) const { return imp.at(x, y); }
    ElemSet one(Index x) const { return ElemSet::single(x); }
    ElemSet m(const ElemSet& a, const ElemSet& b) const { return set_meet(s, a, b); }
    std::string f(const ElemSet& a) const { return format_set(s, a); }
};

using Eval = bool (*)(const Ctx&, const Index*, Outcome*);

struct LawInfo {
    LawId id;
    std::string_view name;
    std::string_view statement;
    std::size_t arity;
    bool bounded_only;
    Eval eval;
};

bool fill(Outcome* o, bool ok, std::string lhs, std::string rhs) {
    if (o) {
        o->holds = ok;
        o->lhs = std::move(lhs);
        o->rhs = std::move(rhs);
    }
    return ok;
}

bool compare(const Ctx& c, Relation r, const ElemSet& lhs, const ElemSet& rhs, Outcome* o) {
    const bool ok = relation_holds(c.s, r, lhs, rhs);
    if (o)
        fill(o, ok, c.f(lhs), c.f(rhs));
    return ok;
}

bool vacuous(Outcome* o) { return fill(o, true, "premise false", "-"); }

bool antichain(const Ctx& c, const ElemSet& a, Outcome* o) {
    const bool ok = is_antichain(c.s, a);
    if (o)
        fill(o, ok, c.f(a), ok ? "antichain" : "not an antichain");
    return ok;
}

// Thm th1 / P1-P4

bool t1_i(const Ctx& c, const Index* v, Outcome* o) { return antichain(c, c.n(v[0]), o); }

bool t1_ii(const Ctx& c, const Index* v, Outcome* o) {
    return compare(c, Relation::Leq1, c.one(v[0]), neg_set(c.s, c.n(v[0])), o);
}

bool t1_iii(const Ctx& c, const Index* v, Outcome* o) {
    if (!c.s.leq(v[0], v[1]))
        return vacuous(o);
    return compare(c, Relation::Leq1, c.n(v[1]), c.n(v[0]), o);
}

bool t1_iv(const Ctx& c, const Index*, Outcome* o) {
    return compare(c, Relation::Equal, c.n(c.s.bottom()), c.s.maximal(), o);
}

bool t1_v(const Ctx& c, const Index* v, Outcome* o) {
    return compare(c, Relation::Equal, c.m(c.one(v[0]), c.n(v[0])), c.one(c.s.bottom()), o);
}

bool t1_vi(const Ctx& c, const Index*, Outcome* o) {
    const Index bot = c.s.bottom();
    const Index top = *c.s.top();
    const bool ok = c.n(bot) == c.one(top) && c.n(top) == c.one(bot);
    if (o)
        fill(o, ok, "0'=" + c.f(c.n(bot)) + " 1'=" + c.f(c.n(top)),
             "0'=" + c.f(c.one(top)) + " 1'=" + c.f(c.one(bot)));
    return ok;
}

bool t1_vii(const Ctx& c, const Index* v, Outcome* o) {
    return compare(c, Relation::Approx1, c.m(c.one(v[0]), c.n(c.s.bottom())), c.one(v[0]), o);
}

bool t1_viii(const Ctx& c, const Index* v, Outcome* o) {
    return compare(c, Relation::Approx1, c.m(c.one(v[0]), c.n(c.s.meet(v[0], v[1]))),
                   c.m(c.one(v[0]), c.n(v[1])), o);
}

bool p3(const Ctx& c, const Index* v, Outcome* o) {
    return compare(c, Relation::Approx1, c.m(c.one(v[0]), c.n(v[0])), c.one(c.s.bottom()), o);
}

// Thm th2 / R1-R6

bool t2_i(const Ctx& c, const Index* v, Outcome* o) { return antichain(c, c.i(v[0], v[1]), o); }

bool t2_ii(const Ctx& c, const Index* v, Outcome* o) {
    if (!c.s.leq(v[0], v[1]))
        return vacuous(o);
    return compare(c, Relation::Equal, c.i(v[0], v[1]), c.s.maximal(), o);
}

bool t2_iii(const Ctx& c, const Index* v, Outcome* o) {
    if (!c.s.maximal().contains(v[1]))
        return vacuous(o);
    const ElemSet& r = c.i(v[0], v[1]);
    const bool ok = r.contains(v[1]);
    if (o)
        fill(o, ok, c.f(r), "contains " + c.s.name(v[1]));
    return ok;
}

bool t2_iv(const Ctx& c, const Index* v, Outcome* o) {
    return compare(c, Relation::Leq1, c.one(v[1]), c.i(v[0], v[1]), o);
}

bool t2_v(const Ctx& c, const Index* v, Outcome* o) {
    const ElemSet& xy = c.i(v[0], v[1]);
    const ElemSet back = imp_set(c.s, xy, c.one(v[1]));
    const bool stated = leq1(c.s, c.one(v[0]), back);
    const ElemSet mp = c.m(xy, c.one(v[0]));
    const bool proof_form = set_leq(c.s, mp, c.one(v[1]));
    const bool ok = stated && proof_form;
    if (o) {
        if (!stated)
            fill(o, ok, c.f(c.one(v[0])) + " <=1 ...", "(x->y)->y = " + c.f(back));
        else
            fill(o, ok, "(x->y)&x = " + c.f(mp), c.f(c.one(v[1])) + " (proof form <=)");
    }
    return ok;
}

bool t2_vi(const Ctx& c, const Index* v, Outcome* o) {
    const Index a = v[0], b = v[1], z = v[2];
    if (!c.s.leq(a, b))
        return vacuous(o);
    if (!leq1(c.s, c.i(z, a), c.i(z, b)))
        return compare(c, Relation::Leq1, c.i(z, a), c.i(z, b), o);
    return compare(c, Relation::Leq1, c.i(b, z), c.i(a, z), o);
}

bool t2_vii(const Ctx& c, const Index* v, Outcome* o) {
    return compare(c, Relation::Approx1, c.m(c.one(v[0]), c.i(v[0], v[1])),
                   c.one(c.s.meet(v[0], v[1])), o);
}

bool t2_viii(const Ctx& c, const Index* v, Outcome* o) {
    return compare(c, Relation::Approx1, c.i(v[0], c.s.meet(v[1], v[2])),
                   c.m(c.i(v[0], v[1]), c.i(v[0], v[2])), o);
}

bool t2_ix(const Ctx& c, const Index* v, Outcome* o) {
    return compare(c, Relation::Approx1, c.m(c.i(v[0], v[1]), c.one(v[1])), c.one(v[1]), o);
}

bool t2_x(const Ctx& c, const Index* v, Outcome* o) {
    return compare(c, Relation::Equal, c.i(*c.s.top(), v[0]), c.one(v[0]), o);
}

bool t2_xi(const Ctx& c, const Index* v, Outcome* o) {
    return compare(c, Relation::Approx1, c.m(c.one(v[0]), c.i(v[1], v[1])), c.one(v[0]), o);
}

bool t2_xii(const Ctx& c, const Index* v, Outcome* o) {
    const bool is_top = c.i(v[0], v[1]) == c.one(*c.s.top());
    const bool below = c.s.leq(v[0], v[1]);
    const bool ok = is_top == below;
    if (o)
        fill(o, ok, "x->y = " + c.f(c.i(v[0], v[1])), below ? "x <= y" : "not x <= y");
    return ok;
}

bool t2_xiii(const Ctx& c, const Index* v, Outcome* o) {
    return compare(c, Relation::Leq1, c.one(v[1]), c.i(v[0], c.s.meet(v[0], v[1])), o);
}

bool r6(const Ctx& c, const Index* v, Outcome* o) {
    if (!c.s.leq(v[1], v[2]))
        return vacuous(o);
    return compare(c, Relation::Leq1, c.i(v[0], v[1]), c.i(v[0], v[2]), o);
}

// Remaining laws

bool adj(const Ctx& c, const Index* v, Outcome* o) {
    const bool left = c.s.leq(c.s.meet(v[0], v[1]), v[2]);
    const bool right = leq1(c.s, c.one(v[0]), c.i(v[1], v[2]));
    const bool ok = left == right;
    if (o)
        fill(o, ok, std::string("x&y <= z: ") + (left ? "true" : "false"),
             "x <=1 y->z = " + c.f(c.i(v[1], v[2])) + ": " + (right ? "true" : "false"));
    return ok;
}

bool mp(const Ctx& c, const Index* v, Outcome* o) {
    return compare(c, Relation::SetLeq, c.m(c.one(v[0]), c.i(v[0], v[1])), c.one(v[1]), o);
}

bool negmeet(const Ctx& c, const Index* v, Outcome* o) {
    return compare(c, Relation::Leq1, c.m(c.n(v[0]), c.n(v[1])), c.n(c.s.meet(v[0], v[1])), o);
}

constexpr std::array<LawInfo, 35> catalog{{
    {LawId::T1_i, "T1.i", "x' is an antichain", 1, false, t1_i},
    {LawId::T1_ii, "T1.ii", "x <=1 x''", 1, false, t1_ii},
    {LawId::T1_iii, "T1.iii", "x <= y implies y' <=1 x'", 2, false, t1_iii},
    {LawId::T1_iv, "T1.iv", "0' = Max S", 0, false, t1_iv},
    {LawId::T1_v, "T1.v", "x & x' = 0", 1, false, t1_v},
    {LawId::T1_vi, "T1.vi", "0' = 1 and 1' = 0 (bounded)", 0, true, t1_vi},
    {LawId::T1_vii, "T1.vii", "x & 0' ~=1 x", 1, false, t1_vii},
    {LawId::T1_viii, "T1.viii", "x & (x & y)' ~=1 x & y'", 2, false, t1_viii},
    {LawId::P1, "P1", "x' is an antichain", 1, false, t1_i},
    {LawId::P2, "P2", "x & 0' ~=1 x", 1, false, t1_vii},
    {LawId::P3, "P3", "x & x' ~=1 0", 1, false, p3},
    {LawId::P4, "P4", "x & (x & y)' ~=1 x & y'", 2, false, t1_viii},
    {LawId::T2_i, "T2.i", "x -> y is an antichain", 2, false, t2_i},
    {LawId::T2_ii, "T2.ii", "x <= y implies x -> y = Max S", 2, false, t2_ii},
    {LawId::T2_iii, "T2.iii", "y in Max S implies y in x -> y", 2, false, t2_iii},
    {LawId::T2_iv, "T2.iv", "y <=1 x -> y", 2, false, t2_iv},
    {LawId::T2_v, "T2.v", "x <=1 (x -> y) -> y, and (x -> y) & x <= y", 2, false, t2_v},
    {LawId::T2_vi, "T2.vi", "x <= y implies z -> x <=1 z -> y and y -> z <=1 x -> z", 3, false,
     t2_vi},
    {LawId::T2_vii, "T2.vii", "x & (x -> y) ~=1 x & y", 2, false, t2_vii},
    {LawId::T2_viii, "T2.viii", "x -> (y & z) ~=1 (x -> y) & (x -> z)", 3, false, t2_viii},
    {LawId::T2_ix, "T2.ix", "(x -> y) & y ~=1 y", 2, false, t2_ix},
    {LawId::T2_x, "T2.x", "1 -> x = x (bounded)", 1, true, t2_x},
    {LawId::T2_xi, "T2.xi", "x & (y -> y) ~=1 x", 2, false, t2_xi},
    {LawId::T2_xii, "T2.xii", "x -> y = 1 iff x <= y (bounded)", 2, true, t2_xii},
    {LawId::T2_xiii, "T2.xiii", "y <=1 x -> (x & y)", 2, false, t2_xiii},
    {LawId::R1, "R1", "x -> y is an antichain", 2, false, t2_i},
    {LawId::R2, "R2", "x & (x -> y) ~=1 x & y", 2, false, t2_vii},
    {LawId::R3, "R3", "(x -> y) & y ~=1 y", 2, false, t2_ix},
    {LawId::R4, "R4", "x -> (y & z) ~=1 (x -> y) & (x -> z)", 3, false, t2_viii},
    {LawId::R5, "R5", "x & (y -> y) ~=1 x", 2, false, t2_xi},
    {LawId::R6, "R6", "y <= z implies x -> y <=1 x -> z", 3, false, r6},
    {LawId::ADJ, "ADJ", "x & y <= z iff x <=1 y -> z", 3, false, adj},
    {LawId::DIV, "DIV", "x & (x -> y) ~=1 x & y", 2, false, t2_vii},
    {LawId::MP, "MP", "x & z <= y for every z in x -> y", 2, false, mp},
    {LawId::NEGMEET, "NEGMEET", "x' & y' <=1 (x & y)'", 2, false, negmeet},
}};

constexpr std::array<LawId, catalog.size()> catalog_ids = [] {
    std::array<LawId, catalog.size()> ids{};
    for (std::size_t i = 0; i < catalog.size(); ++i)
        ids[i] = catalog[i].id;
    return ids;
}();

static_assert([] {
    for (std::size_t i = 0; i < catalog.size(); ++i)
        if (static_cast<std::size_t>(catalog[i].id) != i)
            return false;
    return true;
}(), "catalog must be listed in LawId order");

constexpr std::array<LawId, 4> neg_axioms{LawId::P1, LawId::P2, LawId::P3, LawId::P4};
constexpr std::array<LawId, 6> imp_axioms{LawId::R1, LawId::R2, LawId::R3,
                                          LawId::R4, LawId::R5, LawId::R6};

const LawInfo& info(LawId id) {
    return catalog[static_cast<std::size_t>(id)];
}

std::vector<std::pair<std::string, std::string>> make_binding(const MeetSemilattice& s,
                                                              const Index* v,
                                                              std::size_t arity) {
    std::vector<std::pair<std::string, std::string>> out;
    for (std::size_t k = 0; k < arity; ++k)
        out.emplace_back(std::string(1, variable_name(k)), s.name(v[k]));
    return out;
}

// Advances `v` (length k, digits < n) lexicographically; false after the last tuple.
bool next_tuple(std::vector<Index>& v, Index n) {
    for (std::size_t k = v.size(); k-- > 0;) {
        if (++v[k] < n)
            return true;
        v[k] = 0;
    }
    return false;
}

LawReport run_law(const Ctx& c, LawId law) {
    const LawInfo& li = info(law);
    if (li.bounded_only && !c.s.bounded())
        throw Error(ErrorCode::RequiresBounded,
                    std::string(li.name) + " requires a bounded structure");
    LawReport r;
    r.law = std::string(li.name);
    r.structure = c.s.label();
    std::vector<Index> v(li.arity, 0);
    const Index n = static_cast<Index>(c.s.size());
    do {
        ++r.instances;
        if (!li.eval(c, v.data(), nullptr)) {
            Outcome o;
            li.eval(c, v.data(), &o);
            r.status = LawStatus::Fails;
            r.counterexample = Counterexample{make_binding(c.s, v.data(), li.arity), o.lhs, o.rhs};
            return r;
        }
    } while (next_tuple(v, n));
    return r;
}

std::vector<Index> binding_values(const MeetSemilattice& s, const LawReport& report) {
    std::vector<Index> v;
    if (report.counterexample)
        for (const auto& [var, elem] : report.counterexample->binding)
            v.push_back(s.index_of(elem));
    return v;
}

} // namespace

std::span<const LawId> all_laws() { return catalog_ids; }
std::span<const LawId> negation_axioms() { return neg_axioms; }
std::span<const LawId> implication_axioms() { return imp_axioms; }

std::string_view to_string(LawId id) { return info(id).name; }
std::string_view statement(LawId id) { return info(id).statement; }
std::size_t arity(LawId id) { return info(id).arity; }
bool requires_bounded(LawId id) { return info(id).bounded_only; }

std::optional<LawId> parse_law_id(std::string_view text) {
    for (const auto& li : catalog)
        if (li.name == text)
            return li.id;
    return std::nullopt;
}

std::string_view to_string(LawStatus status) {
    switch (status) {
    case LawStatus::Holds: return "holds";
    case LawStatus::Fails: return "fails";
    case LawStatus::Skipped: return "skipped";
    }
    return "?";
}

LawReport check_law(const MeetSemilattice& s, LawId law) {
    const OperatorTable negation = make_table(s, OperatorKind::Negation);
    const OperatorTable implication = make_table(s, OperatorKind::Implication);
    return check_law(s, law, negation, implication);
}

LawReport check_law(const MeetSemilattice& s, LawId law, const OperatorTable& negation,
                    const OperatorTable& implication) {
    return run_law(Ctx{s, negation, implication}, law);
}

std::vector<LawReport> check_all(const MeetSemilattice& s) {
    const OperatorTable negation = make_table(s, OperatorKind::Negation);
    const OperatorTable implication = make_table(s, OperatorKind::Implication);
    const Ctx c{s, negation, implication};
    std::vector<LawReport> out;
    out.reserve(catalog.size());
    for (const auto& li : catalog) {
        if (li.bounded_only && !s.bounded()) {
            LawReport r;
            r.law = std::string(li.name);
            r.structure = s.label();
            r.status = LawStatus::Skipped;
            r.detail = "requires a bounded structure";
            out.push_back(std::move(r));
            continue;
        }
        out.push_back(run_law(c, li.id));
    }
    return out;
}

Outcome evaluate_law(const MeetSemilattice& s, LawId law, std::span<const Index> values) {
    const LawInfo& li = info(law);
    if (values.size() != li.arity)
        throw Error(ErrorCode::InvalidArgument, "wrong number of values for " + std::string(li.name));
    if (li.bounded_only && !s.bounded())
        throw Error(ErrorCode::RequiresBounded,
                    std::string(li.name) + " requires a bounded structure");
    const OperatorTable negation = make_table(s, OperatorKind::Negation);
    const OperatorTable implication = make_table(s, OperatorKind::Implication);
    Outcome o;
    li.eval(Ctx{s, negation, implication}, values.data(), &o);
    return o;
}

bool reproduces_violation(const MeetSemilattice& s, LawId law, const LawReport& report) {
    if (!report.failed() || !report.counterexample)
        return false;
    const auto v = binding_values(s, report);
    const Outcome o = evaluate_law(s, law, v);
    return !o.holds && o.lhs == report.counterexample->lhs && o.rhs == report.counterexample->rhs;
}

LawReport check_equation(const MeetSemilattice& s, std::string_view equation) {
    return check_equation(s, parse_equation(equation));
}

namespace {

// Calls visit(cx) for each violating tuple until it returns false.
template <class Visit>
std::uint64_t scan_equation(const MeetSemilattice& s, const Equation& eq, Visit visit) {
    if (eq.slots.size() > max_variables)
        throw Error(ErrorCode::InvalidArgument, "at most four variables");
    if ((eq.lhs.uses_top() || eq.rhs.uses_top()) && !s.bounded())
        throw Error(ErrorCode::RequiresBounded, "equation uses 1 on a structure without top");

    std::uint64_t instances = 0;
    std::vector<Index> v(eq.slots.size(), 0);
    const Index n = static_cast<Index>(s.size());
    Assignment values{};
    do {
        ++instances;
        for (std::size_t k = 0; k < v.size(); ++k)
            values[eq.slots[k]] = v[k];
        const ElemSet lhs = evaluate(s, eq.lhs, values);
        const ElemSet rhs = evaluate(s, eq.rhs, values);
        if (!relation_holds(s, eq.relation, lhs, rhs)) {
            Counterexample cx;
            for (std::size_t k = 0; k < v.size(); ++k)
                cx.binding.emplace_back(std::string(1, variable_name(eq.slots[k])), s.name(v[k]));
            cx.lhs = format_set(s, lhs);
            cx.rhs = format_set(s, rhs);
            if (!visit(std::move(cx)))
                break;
        }
    } while (next_tuple(v, n));
    return instances;
}

} // namespace

LawReport check_equation(const MeetSemilattice& s, const Equation& eq) {
    LawReport r;
    r.law = eq.text;
    r.structure = s.label();
    r.instances = scan_equation(s, eq, [&](Counterexample cx) {
        r.status = LawStatus::Fails;
        r.counterexample = std::move(cx);
        return false;
    });
    return r;
}

std::vector<Counterexample> equation_violations(const MeetSemilattice& s, const Equation& eq) {
    std::vector<Counterexample> out;
    scan_equation(s, eq, [&](Counterexample cx) {
        out.push_back(std::move(cx));
        return true;
    });
    return out;
}

bool reproduces_violation(const MeetSemilattice& s, const Equation& eq, const LawReport& report) {
    if (!report.failed() || !report.counterexample)
        return false;
    Assignment values{};
    for (const auto& [var, elem] : report.counterexample->binding) {
        std::size_t slot = 0;
        while (slot < max_variables && variable_name(slot) != var.front())
            ++slot;
        if (slot == max_variables)
            return false;
        values[slot] = s.index_of(elem);
    }
    const ElemSet lhs = evaluate(s, eq.lhs, values);
    const ElemSet rhs = evaluate(s, eq.rhs, values);
    return !relation_holds(s, eq.relation, lhs, rhs) &&
           format_set(s, lhs) == report.counterexample->lhs &&
           format_set(s, rhs) == report.counterexample->rhs;
}

std::vector<LawReport> check_negation_axioms(const OperatorTable& negation) {
    const MeetSemilattice& s = negation.structure();
    const OperatorTable implication = make_table(s, OperatorKind::Implication);
    std::vector<LawReport> out;
    for (LawId id : neg_axioms)
        out.push_back(check_law(s, id, negation, implication));
    return out;
}

std::vector<LawReport> check_implication_axioms(const OperatorTable& implication) {
    const MeetSemilattice& s = implication.structure();
    const OperatorTable negation = make_table(s, OperatorKind::Negation);
    std::vector<LawReport> out;
    for (LawId id : imp_axioms)
        out.push_back(check_law(s, id, negation, implication));
    return out;
}

namespace {

// A random non-empty antichain different from `avoid`, or nullopt when the
// attempts run out (e.g. the one-element structure has a single antichain).
std::optional<ElemSet> random_antichain(const MeetSemilattice& s, const ElemSet& avoid,
                                        std::mt19937_64& rng) {
    const Index n = static_cast<Index>(s.size());
    std::uniform_int_distribution<Index> pick(0, n - 1);
    std::bernoulli_distribution coin(0.5);
    for (int attempt = 0; attempt < 256; ++attempt) {
        ElemSet candidate;
        if (coin(rng)) {
            candidate = ElemSet::single(pick(rng));
        } else {
            std::vector<Index> members;
            for (Index x = 0; x < n; ++x)
                if (coin(rng))
                    members.push_back(x);
            if (members.empty())
                continue;
            candidate = max_elements(s, ElemSet(std::move(members)));
        }
        if (candidate != avoid)
            return candidate;
    }
    return std::nullopt;
}

struct AxiomFamily {
    OperatorKind kind;
    std::span<const LawId> axioms;
    std::string_view name;
};

LawReport verify_characterization(const MeetSemilattice& s, std::size_t trials,
                                  std::uint64_t seed, const AxiomFamily& family,
                                  CharacterizationSummary* summary) {
    const OperatorTable negation = make_table(s, OperatorKind::Negation);
    const OperatorTable implication = make_table(s, OperatorKind::Implication);
    const OperatorTable& canonical = family.kind == OperatorKind::Negation ? negation : implication;

    CharacterizationSummary sum;
    sum.trials = trials;
    LawReport report;
    report.law = std::string(family.name);
    report.structure = s.label();

    for (LawId id : family.axioms) {
        LawReport r = check_law(s, id, negation, implication);
        report.instances += r.instances;
        if (r.failed()) {
            report.status = LawStatus::Fails;
            report.counterexample = r.counterexample;
            report.detail = "canonical operator violates " + r.law;
            if (summary)
                *summary = sum;
            return report;
        }
    }
    sum.canonical_passes = true;

    const Index n = static_cast<Index>(s.size());
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Index> pick(0, n - 1);
    for (std::size_t t = 0; t < trials; ++t) {
        const Index a = pick(rng);
        const Index b = family.kind == OperatorKind::Implication ? pick(rng) : 0;
        const std::size_t key = canonical.key(a, b);
        auto replacement = random_antichain(s, canonical.entries()[key], rng);
        if (!replacement)
            continue;
        ++sum.perturbed;
        const PerturbedOperator perturbation(canonical, {{key, *replacement}});
        const OperatorTable table = perturbation.materialize();
        const OperatorTable& neg_tab = family.kind == OperatorKind::Negation ? table : negation;
        const OperatorTable& imp_tab = family.kind == OperatorKind::Negation ? implication : table;

        bool rejected = false;
        for (LawId id : family.axioms) {
            if (run_law(Ctx{s, neg_tab, imp_tab}, id).failed()) {
                rejected = true;
                break;
            }
        }
        if (rejected) {
            ++sum.rejected;
            continue;
        }
        ++sum.falsifications;
        if (report.status != LawStatus::Fails) {
            report.status = LawStatus::Fails;
            Counterexample cx;
            cx.binding.emplace_back("x", s.name(a));
            if (family.kind == OperatorKind::Implication)
                cx.binding.emplace_back("y", s.name(b));
            cx.lhs = "perturbed " + format_set(s, *replacement);
            cx.rhs = "canonical " + format_set(s, canonical.entries()[key]);
            report.counterexample = std::move(cx);
        }
    }

    report.detail = "canonical passes; " + std::to_string(sum.rejected) + "/" +
                    std::to_string(sum.perturbed) + " perturbations rejected";
    if (sum.perturbed < trials)
        report.detail += " (" + std::to_string(trials - sum.perturbed) +
                         " trials found no alternative antichain)";
    if (sum.falsifications > 0)
        report.detail += "; FALSIFICATION: " + std::to_string(sum.falsifications) +
                         " perturbations satisfy every axiom";
    if (summary)
        *summary = sum;
    return report;
}

} // namespace

LawReport verify_neg_characterization(const MeetSemilattice& s, std::size_t trials,
                                      std::uint64_t seed, CharacterizationSummary* summary) {
    if (trials == 0)
        throw Error(ErrorCode::InvalidArgument, "trials must be at least 1");
    return verify_characterization(s, trials, seed,
                                   {OperatorKind::Negation, neg_axioms, "P1-P4"}, summary);
}

LawReport verify_imp_characterization(const MeetSemilattice& s, std::size_t trials,
                                      std::uint64_t seed, CharacterizationSummary* summary) {
    if (trials == 0)
        throw Error(ErrorCode::InvalidArgument, "trials must be at least 1");
    return verify_characterization(s, trials, seed,
                                   {OperatorKind::Implication, imp_axioms, "R1-R6"}, summary);
}

LawReport check_remark_products(const MeetSemilattice& s) {
    LawReport r;
    r.law = "all-sharp";
    r.structure = s.label();
    for (Index x = 0; x < s.size(); ++x) {
        ++r.instances;
        if (!is_sharp(s, x)) {
            r.status = LawStatus::Fails;
            r.counterexample = Counterexample{{{"x", s.name(x)}},
                                              format_set(s, neg_set(s, neg(s, x))),
                                              format_set(s, ElemSet::single(x))};
            r.detail = s.name(x) + " is not sharp";
            return r;
        }
    }
    return r;
}

} // namespace unsharp
