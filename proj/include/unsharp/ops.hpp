#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "unsharp/order.hpp"

namespace unsharp {

// Unsharp negation and implication. All results are Max of the set of
// witnesses, hence non-empty antichains on any valid structure.

/// a^0 = Max{x | a ∧ x = 0}
ElemSet neg(const MeetSemilattice& s, Index a);
/// A^0 = Max{x | a ∧ x = 0 for every a ∈ A}. Throws EmptyOperand.
ElemSet neg_set(const MeetSemilattice& s, const ElemSet& a);
/// a → b = Max{x | a ∧ x ≤ b}
ElemSet imp(const MeetSemilattice& s, Index a, Index b);
/// A → B = Max{x | A ∧ {x} ≤ B}, with ≤ the all-pairs order. Throws EmptyOperand.
ElemSet imp_set(const MeetSemilattice& s, const ElemSet& a, const ElemSet& b);

/// a^{00} = {a}
bool is_sharp(const MeetSemilattice& s, Index a);

enum class OperatorKind { Negation, Implication };

/// Operator table over a structure. Entries are indexed by `a` (negation) or
/// `a * n + b` (implication). The table refers to the structure it was built
/// from, which must outlive it.
class OperatorTable {
public:
    OperatorTable(const MeetSemilattice& s, OperatorKind kind, std::vector<ElemSet> entries);

    OperatorKind kind() const noexcept { return kind_; }
    const MeetSemilattice& structure() const noexcept { return *structure_; }

    const ElemSet& at(Index a) const { return entries_.at(a); }
    const ElemSet& at(Index a, Index b) const { return entries_.at(a * structure_->size() + b); }
    const std::vector<ElemSet>& entries() const noexcept { return entries_; }

    /// Key of the entry for input `a` (negation) / (a, b) (implication).
    std::size_t key(Index a, Index b = 0) const {
        return kind_ == OperatorKind::Negation ? a : a * structure_->size() + b;
    }

    friend bool operator==(const OperatorTable& x, const OperatorTable& y) {
        return x.kind_ == y.kind_ && x.entries_ == y.entries_;
    }

private:
    const MeetSemilattice* structure_;
    OperatorKind kind_;
    std::vector<ElemSet> entries_;
};

OperatorTable make_table(const MeetSemilattice& s, OperatorKind kind);

/// A table with some entries replaced. At least one override must differ from
/// the base entry (InvalidArgument otherwise).
class PerturbedOperator {
public:
    PerturbedOperator(const OperatorTable& base, std::map<std::size_t, ElemSet> overrides);

    const OperatorTable& base() const noexcept { return *base_; }
    const std::map<std::size_t, ElemSet>& overrides() const noexcept { return overrides_; }
    OperatorTable materialize() const;

private:
    const OperatorTable* base_;
    std::map<std::size_t, ElemSet> overrides_;
};

} // namespace unsharp
