#include "unsharp/deduction.hpp"

#include <algorithm>
#include <functional>

#include "unsharp/ops.hpp"

namespace unsharp {

BinaryRelation BinaryRelation::identity(std::size_t n) {
    BinaryRelation r(n);
    for (Index i = 0; i < n; ++i)
        r.add(i, i);
    return r;
}

BinaryRelation BinaryRelation::total(std::size_t n) {
    BinaryRelation r(n);
    std::fill(r.pairs_.begin(), r.pairs_.end(), 1);
    return r;
}

std::size_t BinaryRelation::count() const {
    return static_cast<std::size_t>(std::count(pairs_.begin(), pairs_.end(), 1));
}

bool BinaryRelation::is_subset_of(const BinaryRelation& other) const {
    if (n_ != other.n_)
        return false;
    for (std::size_t k = 0; k < pairs_.size(); ++k)
        if (pairs_[k] && !other.pairs_[k])
            return false;
    return true;
}

bool is_filter(const MeetSemilattice& s, const ElemSet& f) {
    if (f.empty())
        return false;
    for (Index x : f) {
        for (Index y : f)
            if (!f.contains(s.meet(x, y)))
                return false;
        for (Index y = 0; y < s.size(); ++y)
            if (s.leq(x, y) && !f.contains(y))
                return false;
    }
    return true;
}

bool is_deductive_system(const MeetSemilattice& s, const ElemSet& d) {
    if (!s.maximal().intersects(d))
        return false;
    for (Index x : d)
        for (Index y = 0; y < s.size(); ++y)
            if (!d.contains(y) && imp(s, x, y).intersects(d))
                return false;
    return true;
}

ElemSet principal_filter(const MeetSemilattice& s, Index x) {
    std::vector<Index> up;
    for (Index y = 0; y < s.size(); ++y)
        if (s.leq(x, y))
            up.push_back(y);
    return ElemSet(std::move(up));
}

BinaryRelation theta(const MeetSemilattice& s, const ElemSet& a) {
    if (a.empty())
        throw Error(ErrorCode::EmptyOperand, "theta of the empty set");
    const Index n = static_cast<Index>(s.size());
    BinaryRelation r(n);
    for (Index x = 0; x < n; ++x)
        for (Index y = 0; y < n; ++y)
            for (Index w : a)
                if (s.meet(x, w) == s.meet(y, w)) {
                    r.add(x, y);
                    break;
                }
    return r;
}

bool is_equivalence(const BinaryRelation& r) {
    const Index n = static_cast<Index>(r.size());
    for (Index x = 0; x < n; ++x) {
        if (!r.contains(x, x))
            return false;
        for (Index y = 0; y < n; ++y) {
            if (!r.contains(x, y))
                continue;
            if (!r.contains(y, x))
                return false;
            for (Index z = 0; z < n; ++z)
                if (r.contains(y, z) && !r.contains(x, z))
                    return false;
        }
    }
    return true;
}

bool is_congruence(const MeetSemilattice& s, const BinaryRelation& r) {
    if (r.size() != s.size() || !is_equivalence(r))
        return false;
    const Index n = static_cast<Index>(s.size());
    for (Index x = 0; x < n; ++x)
        for (Index y = 0; y < n; ++y)
            if (r.contains(x, y))
                for (Index f = 0; f < n; ++f)
                    if (!r.contains(s.meet(x, f), s.meet(y, f)))
                        return false;
    return true;
}

ElemSet class_of(const BinaryRelation& r, Index x) {
    if (!is_equivalence(r))
        throw Error(ErrorCode::NotEquivalence, "relation is not an equivalence");
    std::vector<Index> out;
    for (Index y = 0; y < r.size(); ++y)
        if (r.contains(x, y))
            out.push_back(y);
    return ElemSet(std::move(out));
}

std::vector<ElemSet> classes(const BinaryRelation& r) {
    if (!is_equivalence(r))
        throw Error(ErrorCode::NotEquivalence, "relation is not an equivalence");
    std::vector<ElemSet> out;
    std::vector<bool> seen(r.size(), false);
    for (Index x = 0; x < r.size(); ++x) {
        if (seen[x])
            continue;
        std::vector<Index> cls;
        for (Index y = 0; y < r.size(); ++y)
            if (r.contains(x, y)) {
                cls.push_back(y);
                seen[y] = true;
            }
        out.emplace_back(std::move(cls));
    }
    return out;
}

std::vector<CarrierSubset> enumerate_filters(const MeetSemilattice& s) {
    std::vector<CarrierSubset> out;
    for (Index x = 0; x < s.size(); ++x)
        out.push_back({principal_filter(s, x), SubsetRole::Filter});
    return out;
}

namespace {

void require_scan_size(const MeetSemilattice& s, std::size_t cap, const char* what) {
    if (s.size() > cap)
        throw Error(ErrorCode::TooLarge, std::string(what) + " is limited to " +
                                             std::to_string(cap) + " elements");
}

ElemSet subset_of_mask(std::uint32_t mask, std::size_t n) {
    std::vector<Index> m;
    for (Index i = 0; i < n; ++i)
        if (mask & (1u << i))
            m.push_back(i);
    return ElemSet(std::move(m));
}

std::string set_names(const MeetSemilattice& s, const ElemSet& a) { return format_set(s, a); }

} // namespace

std::vector<CarrierSubset> enumerate_deductive_systems(const MeetSemilattice& s) {
    require_scan_size(s, max_subset_scan, "deductive system enumeration");
    const std::size_t n = s.size();
    std::vector<CarrierSubset> out;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        ElemSet d = subset_of_mask(mask, n);
        if (is_deductive_system(s, d))
            out.push_back({std::move(d), SubsetRole::DeductiveSystem});
    }
    return out;
}

std::vector<BinaryRelation> enumerate_congruences(const MeetSemilattice& s) {
    require_scan_size(s, max_congruence_scan, "congruence enumeration");
    const std::size_t n = s.size();
    std::vector<BinaryRelation> out;
    // Restricted growth strings: block[i] <= 1 + max(block[0..i-1]).
    std::vector<Index> block(n, 0);
    std::function<void(std::size_t, Index)> extend = [&](std::size_t i, Index used) {
        if (i == n) {
            BinaryRelation r(n);
            for (Index x = 0; x < n; ++x)
                for (Index y = 0; y < n; ++y)
                    if (block[x] == block[y])
                        r.add(x, y);
            if (is_congruence(s, r))
                out.push_back(std::move(r));
            return;
        }
        for (Index b = 0; b <= used && b < n; ++b) {
            block[i] = b;
            extend(i + 1, std::max<Index>(used, b + 1));
        }
    };
    extend(0, 0);
    return out;
}

LawReport check_th3(const MeetSemilattice& s) {
    if (!s.top())
        throw Error(ErrorCode::RequiresBounded, "theorem check requires a top element");
    require_scan_size(s, max_subset_scan, "subset scan");
    const Index top = *s.top();
    const std::size_t n = s.size();

    LawReport r;
    r.law = "th3";
    r.structure = s.label();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        const ElemSet d = subset_of_mask(mask, n);
        ++r.instances;
        const bool dsys = is_deductive_system(s, d);
        const bool filter = is_filter(s, d);
        const BinaryRelation t = theta(s, d);
        const bool cong = is_congruence(s, t) && class_of(t, top) == d;
        if (dsys == filter && filter == cong)
            continue;
        r.status = LawStatus::Fails;
        auto flag = [](bool b) { return b ? std::string("true") : std::string("false"); };
        r.counterexample = Counterexample{{{"D", set_names(s, d)}},
                                          "deductive system: " + flag(dsys) +
                                              ", filter: " + flag(filter),
                                          "congruence with [1] = D: " + flag(cong)};
        return r;
    }
    r.detail = "equivalence holds (" + std::to_string(r.instances) + " subsets checked)";
    return r;
}

LawReport check_lemma1(const MeetSemilattice& s) {
    if (!s.top())
        throw Error(ErrorCode::RequiresBounded, "lemma check requires a top element");
    const Index top = *s.top();
    LawReport r;
    r.law = "lemma1";
    r.structure = s.label();
    for (const BinaryRelation& phi : enumerate_congruences(s)) {
        ++r.instances;
        const ElemSet top_class = class_of(phi, top);
        const bool filter = is_filter(s, top_class);
        const bool contained = theta(s, top_class).is_subset_of(phi);
        if (filter && contained)
            continue;
        r.status = LawStatus::Fails;
        std::string blocks;
        for (const ElemSet& c : classes(phi))
            blocks += set_names(s, c);
        r.counterexample = Counterexample{{{"Phi", blocks}},
                                          "[1]Phi = " + set_names(s, top_class) +
                                              (filter ? " is a filter" : " is not a filter"),
                                          contained ? "Theta([1]Phi) inside Phi"
                                                    : "Theta([1]Phi) not inside Phi"};
        return r;
    }
    r.detail = std::to_string(r.instances) + " congruences checked";
    return r;
}

LawReport check_proposition(const MeetSemilattice& s, const ElemSet& f) {
    if (!is_filter(s, f))
        throw Error(ErrorCode::NotAFilter, set_names(s, f) + " is not a filter");
    const BinaryRelation t = theta(s, f);
    const Index n = static_cast<Index>(s.size());
    LawReport r;
    r.law = "proposition";
    r.structure = s.label();
    for (Index a = 0; a < n; ++a) {
        for (Index b = 0; b < n; ++b) {
            ++r.instances;
            const bool in_theta = t.contains(a, b);
            const bool both_meet = imp(s, a, b).intersects(f) && imp(s, b, a).intersects(f);
            if (in_theta == both_meet)
                continue;
            r.status = LawStatus::Fails;
            r.counterexample = Counterexample{
                {{"a", s.name(a)}, {"b", s.name(b)}},
                std::string("(a,b) in Theta(F): ") + (in_theta ? "true" : "false"),
                std::string("a->b and b->a meet F: ") + (both_meet ? "true" : "false")};
            return r;
        }
    }
    return r;
}

bool principal_filter_join_ok(const MeetSemilattice& s) {
    const Index n = static_cast<Index>(s.size());
    for (Index x = 0; x < n; ++x) {
        for (Index y = 0; y < n; ++y) {
            const ElemSet fx = principal_filter(s, x);
            const ElemSet fy = principal_filter(s, y);
            const ElemSet fm = principal_filter(s, s.meet(x, y));
            if (!fx.is_subset_of(fm) || !fy.is_subset_of(fm))
                return false;
            for (Index z = 0; z < n; ++z) {
                const ElemSet fz = principal_filter(s, z);
                if (fx.is_subset_of(fz) && fy.is_subset_of(fz) && !fm.is_subset_of(fz))
                    return false;
            }
        }
    }
    return true;
}

} // namespace unsharp
