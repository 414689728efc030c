#include "unsharp/ops.hpp"

namespace unsharp {

ElemSet neg(const MeetSemilattice& s, Index a) {
    return imp(s, a, s.bottom());
}

ElemSet neg_set(const MeetSemilattice& s, const ElemSet& a) {
    if (a.empty())
        throw Error(ErrorCode::EmptyOperand, "negation of the empty set");
    return imp_set(s, a, ElemSet::single(s.bottom()));
}

ElemSet imp(const MeetSemilattice& s, Index a, Index b) {
    std::vector<Index> witnesses;
    for (Index x = 0; x < s.size(); ++x)
        if (s.leq(s.meet(a, x), b))
            witnesses.push_back(x);
    return max_elements(s, ElemSet(std::move(witnesses)));
}

ElemSet imp_set(const MeetSemilattice& s, const ElemSet& a, const ElemSet& b) {
    if (a.empty() || b.empty())
        throw Error(ErrorCode::EmptyOperand, "implication with an empty operand");
    std::vector<Index> witnesses;
    for (Index x = 0; x < s.size(); ++x) {
        bool ok = true;
        for (Index u : a) {
            const Index m = s.meet(u, x);
            for (Index v : b) {
                if (!s.leq(m, v)) {
                    ok = false;
                    break;
                }
            }
            if (!ok)
                break;
        }
        if (ok)
            witnesses.push_back(x);
    }
    return max_elements(s, ElemSet(std::move(witnesses)));
}

bool is_sharp(const MeetSemilattice& s, Index a) {
    return neg_set(s, neg(s, a)) == ElemSet::single(a);
}

OperatorTable::OperatorTable(const MeetSemilattice& s, OperatorKind kind,
                             std::vector<ElemSet> entries)
    : structure_(&s), kind_(kind), entries_(std::move(entries)) {
    const std::size_t n = s.size();
    const std::size_t expected = kind == OperatorKind::Negation ? n : n * n;
    if (entries_.size() != expected)
        throw Error(ErrorCode::InvalidArgument, "operator table is not total");
    for (const auto& e : entries_) {
        if (e.empty())
            throw Error(ErrorCode::InvalidArgument, "operator table entry is empty");
        for (Index x : e)
            if (x >= n)
                throw Error(ErrorCode::InvalidArgument, "operator table entry outside carrier");
        if (!is_antichain(s, e))
            throw Error(ErrorCode::InvalidArgument, "operator table entry is not an antichain");
    }
}

OperatorTable make_table(const MeetSemilattice& s, OperatorKind kind) {
    const Index n = static_cast<Index>(s.size());
    std::vector<ElemSet> entries;
    if (kind == OperatorKind::Negation) {
        entries.reserve(n);
        for (Index a = 0; a < n; ++a)
            entries.push_back(neg(s, a));
    } else {
        entries.reserve(static_cast<std::size_t>(n) * n);
        for (Index a = 0; a < n; ++a)
            for (Index b = 0; b < n; ++b)
                entries.push_back(imp(s, a, b));
    }
    return OperatorTable(s, kind, std::move(entries));
}

PerturbedOperator::PerturbedOperator(const OperatorTable& base,
                                     std::map<std::size_t, ElemSet> overrides)
    : base_(&base), overrides_(std::move(overrides)) {
    bool differs = false;
    for (const auto& [key, value] : overrides_) {
        if (key >= base.entries().size())
            throw Error(ErrorCode::InvalidArgument, "override key outside table");
        if (base.entries()[key] != value)
            differs = true;
    }
    if (!differs)
        throw Error(ErrorCode::InvalidArgument, "perturbation leaves the table unchanged");
}

OperatorTable PerturbedOperator::materialize() const {
    std::vector<ElemSet> entries = base_->entries();
    for (const auto& [key, value] : overrides_)
        entries[key] = value;
    return OperatorTable(base_->structure(), base_->kind(), std::move(entries));
}

} // namespace unsharp
