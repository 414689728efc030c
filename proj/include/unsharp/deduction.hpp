#pragma once

#include <cstdint>
#include <vector>

#include "unsharp/laws.hpp"
#include "unsharp/order.hpp"

namespace unsharp {

enum class SubsetRole { Raw, Filter, DeductiveSystem };

/// A carrier subset tagged with the predicate it was validated against.
struct CarrierSubset {
    ElemSet members;
    SubsetRole role = SubsetRole::Raw;

    friend bool operator==(const CarrierSubset&, const CarrierSubset&) = default;
};

/// Dense binary relation on a carrier of size n.
class BinaryRelation {
public:
    explicit BinaryRelation(std::size_t n) : n_(n), pairs_(n * n, 0) {}

    static BinaryRelation identity(std::size_t n);
    static BinaryRelation total(std::size_t n);

    std::size_t size() const noexcept { return n_; }
    bool contains(Index x, Index y) const { return pairs_[x * n_ + y] != 0; }
    void add(Index x, Index y) { pairs_[x * n_ + y] = 1; }
    std::size_t count() const;
    bool is_subset_of(const BinaryRelation& other) const;

    friend bool operator==(const BinaryRelation&, const BinaryRelation&) = default;

private:
    std::size_t n_;
    std::vector<std::uint8_t> pairs_;
};

// Subset caps for exhaustive scans.
inline constexpr std::size_t max_subset_scan = 15;
inline constexpr std::size_t max_congruence_scan = 8;

/// Non-empty, meet-closed, up-closed.
bool is_filter(const MeetSemilattice& s, const ElemSet& f);
/// D1: D meets Max S.  D2: x ∈ D and (x → y) ∩ D ≠ ∅ imply y ∈ D.
bool is_deductive_system(const MeetSemilattice& s, const ElemSet& d);

/// [x)
ElemSet principal_filter(const MeetSemilattice& s, Index x);

/// Θ(A): (x, y) whenever x ∧ a = y ∧ a for some a ∈ A. Throws EmptyOperand.
BinaryRelation theta(const MeetSemilattice& s, const ElemSet& a);

bool is_equivalence(const BinaryRelation& r);
/// Equivalence compatible with meet.
bool is_congruence(const MeetSemilattice& s, const BinaryRelation& r);

/// Throws NotEquivalence.
ElemSet class_of(const BinaryRelation& r, Index x);
/// All classes ordered by least member. Throws NotEquivalence.
std::vector<ElemSet> classes(const BinaryRelation& r);

/// Principal filters [x) in declaration order of x.
std::vector<CarrierSubset> enumerate_filters(const MeetSemilattice& s);
/// Subset scan; TooLarge above max_subset_scan elements. Ordered by bitmask.
std::vector<CarrierSubset> enumerate_deductive_systems(const MeetSemilattice& s);
/// Partition scan; TooLarge above max_congruence_scan elements.
std::vector<BinaryRelation> enumerate_congruences(const MeetSemilattice& s);

/// For every non-empty subset D: deductive system ⟺ filter ⟺
/// (Θ(D) congruence and [1]Θ(D) = D). Requires top; TooLarge above
/// max_subset_scan.
LawReport check_th3(const MeetSemilattice& s);
/// For every congruence Φ: [1]Φ is a filter and Θ([1]Φ) ⊆ Φ.
LawReport check_lemma1(const MeetSemilattice& s);
/// (a, b) ∈ Θ(F) ⟺ (a → b) ∩ F ≠ ∅ and (b → a) ∩ F ≠ ∅. Throws NotAFilter.
LawReport check_proposition(const MeetSemilattice& s, const ElemSet& f);

/// [x) ∪ [y) ⊆ [x ∧ y), and [x ∧ y) is the least principal filter containing both.
bool principal_filter_join_ok(const MeetSemilattice& s);

} // namespace unsharp
