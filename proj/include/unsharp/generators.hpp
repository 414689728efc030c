#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "unsharp/order.hpp"

namespace unsharp {

/// Description of a structure the generators can build.
///
/// Text form: `fig1`..`fig4`, `chain:N`, `bool:K`, `mn:N`, `remark5`,
/// `prod:A+B[+C...]`. A nested product factor must be parenthesised:
/// `prod:(prod:bool:1+mn:2)+mn:3`.
struct StructureSpec {
    enum class Kind { Fixture, Chain, Boolean, Mn, Product, Remark5 };

    Kind kind = Kind::Fixture;
    std::string fixture;  // Kind::Fixture
    std::size_t n = 0;    // Chain, Boolean, Mn
    std::vector<StructureSpec> factors;

    /// Throws InvalidSpec.
    static StructureSpec parse(std::string_view text);
    std::string to_string() const;
};

/// Throws InvalidSpec.
MeetSemilattice build(const StructureSpec& spec);
MeetSemilattice build(std::string_view spec);

/// Names of the paper fixtures, in figure order.
std::span<const std::string_view> fixture_names();

/// Componentwise order and meet. Element names are "x.y"; a factor name
/// that already contains '.' is wrapped in parentheses.
MeetSemilattice product(std::span<const MeetSemilattice> factors);

inline constexpr std::size_t max_enumeration_size = 6;

/// Streams every labeled meet-semilattice on n elements whose labeling is a
/// linear extension with the bottom at index 0. Throws TooLarge for n > 6.
class SemilatticeEnumerator {
public:
    explicit SemilatticeEnumerator(std::size_t n);

    std::optional<MeetSemilattice> next();

private:
    std::size_t n_;
    std::vector<std::pair<Index, Index>> pairs_;  // candidate strict pairs i < j, i, j >= 1
    std::uint64_t mask_ = 0;
    std::uint64_t limit_;
    std::uint64_t produced_ = 0;
};

std::vector<MeetSemilattice> enumerate_all(std::size_t n);

/// Seeded random meet-semilattice with exactly n elements. Throws
/// RetriesExhausted if no valid structure is found within the retry cap.
MeetSemilattice random_instance(std::size_t n, std::uint64_t seed);

} // namespace unsharp
