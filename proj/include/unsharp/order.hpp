#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "unsharp/error.hpp"

namespace unsharp {

using Index = std::uint32_t;

/// A subset of a carrier, stored as strictly increasing element indices.
///
/// Indices follow declaration order, so iteration order is also the order in
/// which members are rendered.
class ElemSet {
public:
    using const_iterator = std::vector<Index>::const_iterator;

    ElemSet() = default;
    ElemSet(std::initializer_list<Index> members);
    explicit ElemSet(std::vector<Index> members);

    static ElemSet single(Index x) { return ElemSet({x}); }

    bool contains(Index x) const;
    bool is_subset_of(const ElemSet& other) const;
    bool intersects(const ElemSet& other) const;
    void insert(Index x);

    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    const_iterator begin() const noexcept { return members_.begin(); }
    const_iterator end() const noexcept { return members_.end(); }
    Index front() const { return members_.front(); }
    const std::vector<Index>& members() const noexcept { return members_; }

    friend bool operator==(const ElemSet&, const ElemSet&) = default;
    friend auto operator<=>(const ElemSet&, const ElemSet&) = default;

private:
    std::vector<Index> members_;
};

/// Finite poset over named elements with a dense order matrix.
class Poset {
public:
    using Cover = std::pair<std::string, std::string>;

    /// Reflexive-transitive closure of `covers` over `names`.
    /// Throws DuplicateElement, EmptyName, UnknownName or CycleDetected; the
    /// offending entry is reported through Error::item() (name index for
    /// names, cover index for covers).
    static Poset build(std::vector<std::string> names, const std::vector<Cover>& covers);

    /// Validates an explicit order matrix (row-major, leq[i * n + j]).
    static Poset from_relation(std::vector<std::string> names, std::vector<std::uint8_t> leq);

    std::size_t size() const noexcept { return names_.size(); }
    const std::string& name(Index i) const { return names_.at(i); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    std::optional<Index> find(std::string_view name) const;
    /// Throws UnknownName.
    Index index_of(std::string_view name) const;

    bool leq(Index i, Index j) const { return leq_[i * names_.size() + j] != 0; }
    bool less(Index i, Index j) const { return i != j && leq(i, j); }

    /// Hasse diagram edges (lower, upper) in declaration order.
    std::vector<std::pair<Index, Index>> cover_pairs() const;

    friend bool operator==(const Poset& a, const Poset& b) {
        return a.names_ == b.names_ && a.leq_ == b.leq_;
    }

private:
    Poset(std::vector<std::string> names, std::vector<std::uint8_t> leq);

    std::vector<std::string> names_;
    std::vector<std::uint8_t> leq_;
    std::unordered_map<std::string, Index> lookup_;
};

/// A finite meet-semilattice with least element.
class MeetSemilattice {
public:
    const Poset& poset() const noexcept { return poset_; }
    std::size_t size() const noexcept { return poset_.size(); }
    const std::string& name(Index i) const { return poset_.name(i); }
    const std::vector<std::string>& names() const noexcept { return poset_.names(); }
    Index index_of(std::string_view name) const { return poset_.index_of(name); }

    bool leq(Index i, Index j) const { return poset_.leq(i, j); }
    bool less(Index i, Index j) const { return poset_.less(i, j); }
    Index meet(Index i, Index j) const { return meet_[i * size() + j]; }

    Index bottom() const noexcept { return bottom_; }
    std::optional<Index> top() const noexcept { return top_; }
    bool bounded() const noexcept { return top_.has_value(); }

    /// Max S.
    const ElemSet& maximal() const noexcept { return maximal_; }
    ElemSet carrier() const;

    /// Free-form identifier used in reports ("fig1", "random(12,7)", a path).
    const std::string& label() const noexcept { return label_; }
    void set_label(std::string label) { label_ = std::move(label); }

    friend bool operator==(const MeetSemilattice& a, const MeetSemilattice& b) {
        return a.poset_ == b.poset_;
    }

private:
    friend MeetSemilattice to_meet_semilattice(Poset p);
    explicit MeetSemilattice(Poset p) : poset_(std::move(p)) {}

    Poset poset_;
    std::vector<Index> meet_;
    Index bottom_ = 0;
    std::optional<Index> top_;
    ElemSet maximal_;
    std::string label_;
};

/// Computes the meet table, bottom and top. Throws NoMeet naming the first
/// pair without a greatest lower bound, or NoBottom.
MeetSemilattice to_meet_semilattice(Poset p);

inline MeetSemilattice build_semilattice(std::vector<std::string> names,
                                         const std::vector<Poset::Cover>& covers) {
    return to_meet_semilattice(Poset::build(std::move(names), covers));
}

ElemSet max_elements(const MeetSemilattice& s, const ElemSet& a);

// Set relations. Empty operands follow the vacuous reading.
bool set_leq(const MeetSemilattice& s, const ElemSet& a, const ElemSet& b);
bool leq1(const MeetSemilattice& s, const ElemSet& a, const ElemSet& b);
bool approx1(const MeetSemilattice& s, const ElemSet& a, const ElemSet& b);

/// {a ∧ b | a ∈ A, b ∈ B}
ElemSet set_meet(const MeetSemilattice& s, const ElemSet& a, const ElemSet& b);
bool is_antichain(const MeetSemilattice& s, const ElemSet& a);

/// Resolves names to an ElemSet; throws UnknownName.
ElemSet elem_set(const MeetSemilattice& s, std::span<const std::string> names);
ElemSet elem_set(const MeetSemilattice& s, std::initializer_list<std::string_view> names);

/// "{a,b,c}"; used in reports and error messages.
std::string format_set(const MeetSemilattice& s, const ElemSet& a);

} // namespace unsharp
