#include "unsharp/order.hpp"

#include <algorithm>

namespace unsharp {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::DuplicateElement: return "DuplicateElement";
    case ErrorCode::EmptyName: return "EmptyName";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::NoMeet: return "NoMeet";
    case ErrorCode::NoBottom: return "NoBottom";
    case ErrorCode::EmptyOperand: return "EmptyOperand";
    case ErrorCode::RequiresBounded: return "RequiresBounded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::NotEquivalence: return "NotEquivalence";
    case ErrorCode::NotAFilter: return "NotAFilter";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::RetriesExhausted: return "RetriesExhausted";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

// ---------------------------------------------------------------- ElemSet

ElemSet::ElemSet(std::initializer_list<Index> members)
    : ElemSet(std::vector<Index>(members)) {}

ElemSet::ElemSet(std::vector<Index> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool ElemSet::contains(Index x) const {
    return std::binary_search(members_.begin(), members_.end(), x);
}

bool ElemSet::is_subset_of(const ElemSet& other) const {
    return std::includes(other.members_.begin(), other.members_.end(),
                         members_.begin(), members_.end());
}

bool ElemSet::intersects(const ElemSet& other) const {
    auto i = members_.begin();
    auto j = other.members_.begin();
    while (i != members_.end() && j != other.members_.end()) {
        if (*i == *j)
            return true;
        if (*i < *j)
            ++i;
        else
            ++j;
    }
    return false;
}

void ElemSet::insert(Index x) {
    auto it = std::lower_bound(members_.begin(), members_.end(), x);
    if (it == members_.end() || *it != x)
        members_.insert(it, x);
}

// ---------------------------------------------------------------- Poset

Poset::Poset(std::vector<std::string> names, std::vector<std::uint8_t> leq)
    : names_(std::move(names)), leq_(std::move(leq)) {
    for (Index i = 0; i < names_.size(); ++i)
        lookup_.emplace(names_[i], i);
}

namespace {

void check_names(const std::vector<std::string>& names) {
    std::unordered_map<std::string_view, std::size_t> seen;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i].empty())
            throw Error(ErrorCode::EmptyName, "element names must be non-empty").at_item(i);
        if (!seen.emplace(names[i], i).second)
            throw Error(ErrorCode::DuplicateElement, "duplicate element '" + names[i] + "'")
                .at_item(i);
    }
}

} // namespace

Poset Poset::build(std::vector<std::string> names, const std::vector<Cover>& covers) {
    check_names(names);
    const std::size_t n = names.size();
    std::unordered_map<std::string_view, Index> lookup;
    for (Index i = 0; i < n; ++i)
        lookup.emplace(names[i], i);

    std::vector<std::uint8_t> leq(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        leq[i * n + i] = 1;

    std::vector<std::pair<Index, Index>> edges;
    edges.reserve(covers.size());
    for (std::size_t k = 0; k < covers.size(); ++k) {
        const auto& [lo, hi] = covers[k];
        auto a = lookup.find(lo);
        auto b = lookup.find(hi);
        if (a == lookup.end() || b == lookup.end()) {
            const std::string& missing = a == lookup.end() ? lo : hi;
            throw Error(ErrorCode::UnknownName, "unknown element '" + missing + "' in cover")
                .at_item(k);
        }
        edges.emplace_back(a->second, b->second);
    }

    // closure maintained edge by edge, so a cycle is blamed on the cover that closes it
    for (std::size_t k = 0; k < edges.size(); ++k) {
        auto [a, b] = edges[k];
        if (a == b || leq[b * n + a]) {
            throw Error(ErrorCode::CycleDetected,
                        "cover " + names[a] + " < " + names[b] + " closes a cycle")
                .at_item(k);
        }
        if (leq[a * n + b])
            continue;
        for (std::size_t i = 0; i < n; ++i)
            if (leq[i * n + a])
                for (std::size_t j = 0; j < n; ++j)
                    if (leq[b * n + j])
                        leq[i * n + j] = 1;
    }
    return Poset(std::move(names), std::move(leq));
}

Poset Poset::from_relation(std::vector<std::string> names, std::vector<std::uint8_t> leq) {
    check_names(names);
    const std::size_t n = names.size();
    if (leq.size() != n * n)
        throw Error(ErrorCode::InvalidArgument, "order matrix has wrong size");
    for (std::size_t i = 0; i < n; ++i) {
        if (!leq[i * n + i])
            throw Error(ErrorCode::InvalidArgument, "order is not reflexive at " + names[i]);
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && leq[i * n + j] && leq[j * n + i])
                throw Error(ErrorCode::CycleDetected,
                            "order is not antisymmetric at " + names[i] + ", " + names[j]);
            if (!leq[i * n + j])
                continue;
            for (std::size_t k = 0; k < n; ++k)
                if (leq[j * n + k] && !leq[i * n + k])
                    throw Error(ErrorCode::InvalidArgument,
                                "order is not transitive at " + names[i] + ", " + names[j] +
                                    ", " + names[k]);
        }
    }
    return Poset(std::move(names), std::move(leq));
}

std::optional<Index> Poset::find(std::string_view name) const {
    auto it = lookup_.find(std::string(name));
    if (it == lookup_.end())
        return std::nullopt;
    return it->second;
}

Index Poset::index_of(std::string_view name) const {
    if (auto i = find(name))
        return *i;
    throw Error(ErrorCode::UnknownName, "unknown element '" + std::string(name) + "'");
}

std::vector<std::pair<Index, Index>> Poset::cover_pairs() const {
    std::vector<std::pair<Index, Index>> out;
    const Index n = static_cast<Index>(size());
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
            if (!less(i, j))
                continue;
            bool covered = true;
            for (Index k = 0; k < n && covered; ++k)
                if (less(i, k) && less(k, j))
                    covered = false;
            if (covered)
                out.emplace_back(i, j);
        }
    }
    return out;
}

// ---------------------------------------------------------------- MeetSemilattice

ElemSet MeetSemilattice::carrier() const {
    std::vector<Index> all(size());
    for (Index i = 0; i < all.size(); ++i)
        all[i] = i;
    return ElemSet(std::move(all));
}

MeetSemilattice to_meet_semilattice(Poset p) {
    const Index n = static_cast<Index>(p.size());
    if (n == 0)
        throw Error(ErrorCode::NoBottom, "empty carrier has no bottom");

    MeetSemilattice s(std::move(p));
    const Poset& po = s.poset_;
    s.meet_.assign(static_cast<std::size_t>(n) * n, 0);

    std::vector<Index> lower;
    for (Index i = 0; i < n; ++i) {
        for (Index j = i; j < n; ++j) {
            lower.clear();
            for (Index k = 0; k < n; ++k)
                if (po.leq(k, i) && po.leq(k, j))
                    lower.push_back(k);
            std::optional<Index> glb;
            for (Index k : lower) {
                if (std::all_of(lower.begin(), lower.end(),
                                [&](Index m) { return po.leq(m, k); })) {
                    glb = k;
                    break;
                }
            }
            if (!glb)
                throw Error(ErrorCode::NoMeet,
                            "no meet for " + po.name(i) + " and " + po.name(j));
            s.meet_[i * n + j] = *glb;
            s.meet_[j * n + i] = *glb;
        }
    }

    // With all meets present the meet of everything is the only candidate.
    Index bottom = 0;
    for (Index i = 1; i < n; ++i)
        bottom = s.meet_[bottom * n + i];
    for (Index i = 0; i < n; ++i)
        if (!po.leq(bottom, i))
            throw Error(ErrorCode::NoBottom, "no least element");
    s.bottom_ = bottom;

    for (Index i = 0; i < n; ++i) {
        bool maximal = true;
        for (Index j = 0; j < n && maximal; ++j)
            if (po.less(i, j))
                maximal = false;
        if (maximal)
            s.maximal_.insert(i);
    }
    if (s.maximal_.size() == 1)
        s.top_ = s.maximal_.front();
    return s;
}

// ---------------------------------------------------------------- set primitives

ElemSet max_elements(const MeetSemilattice& s, const ElemSet& a) {
    std::vector<Index> out;
    for (Index x : a) {
        bool dominated = false;
        for (Index y : a) {
            if (s.less(x, y)) {
                dominated = true;
                break;
            }
        }
        if (!dominated)
            out.push_back(x);
    }
    return ElemSet(std::move(out));
}

bool set_leq(const MeetSemilattice& s, const ElemSet& a, const ElemSet& b) {
    for (Index x : a)
        for (Index y : b)
            if (!s.leq(x, y))
                return false;
    return true;
}

bool leq1(const MeetSemilattice& s, const ElemSet& a, const ElemSet& b) {
    for (Index x : a) {
        bool covered = false;
        for (Index y : b) {
            if (s.leq(x, y)) {
                covered = true;
                break;
            }
        }
        if (!covered)
            return false;
    }
    return true;
}

bool approx1(const MeetSemilattice& s, const ElemSet& a, const ElemSet& b) {
    return leq1(s, a, b) && leq1(s, b, a);
}

ElemSet set_meet(const MeetSemilattice& s, const ElemSet& a, const ElemSet& b) {
    std::vector<Index> out;
    out.reserve(a.size() * b.size());
    for (Index x : a)
        for (Index y : b)
            out.push_back(s.meet(x, y));
    return ElemSet(std::move(out));
}

bool is_antichain(const MeetSemilattice& s, const ElemSet& a) {
    for (Index x : a)
        for (Index y : a)
            if (s.less(x, y))
                return false;
    return true;
}

ElemSet elem_set(const MeetSemilattice& s, std::span<const std::string> names) {
    std::vector<Index> out;
    out.reserve(names.size());
    for (const auto& n : names)
        out.push_back(s.index_of(n));
    return ElemSet(std::move(out));
}

ElemSet elem_set(const MeetSemilattice& s, std::initializer_list<std::string_view> names) {
    std::vector<Index> out;
    for (auto n : names)
        out.push_back(s.index_of(n));
    return ElemSet(std::move(out));
}

std::string format_set(const MeetSemilattice& s, const ElemSet& a) {
    std::string out = "{";
    bool first = true;
    for (Index x : a) {
        if (!first)
            out += ',';
        out += s.name(x);
        first = false;
    }
    out += '}';
    return out;
}

} // namespace unsharp
