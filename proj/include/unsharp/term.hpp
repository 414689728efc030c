#pragma once

#include <array>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "unsharp/order.hpp"

namespace unsharp {

// Term language for candidate laws.
//
//   equation := expr relation expr
//   expr     := meet [ "->" meet ]          -- non-associative
//   meet     := postfix { "&" postfix }
//   postfix  := primary { "'" | "'0" }      -- unsharp negation
//   primary  := x | y | z | w | 0 | 1 | "(" expr ")"
//   relation := "=" | "<=1" | "~=1" | "<="
//
// Terms are evaluated set-valued: variables range over singletons, & is the
// lifted meet, ' is neg_set and -> is imp_set.

inline constexpr std::size_t max_variables = 4;
using Assignment = std::array<Index, max_variables>;

class Term {
public:
    enum class Kind { Variable, Bottom, Top, Negation, Meet, Implication };

    static Term variable(std::size_t slot);
    static Term bottom();
    static Term top();
    static Term negation(Term operand);
    static Term meet(Term lhs, Term rhs);
    static Term implication(Term lhs, Term rhs);

    Kind kind() const noexcept;
    /// 0..3 for x, y, z, w.
    std::size_t slot() const noexcept;
    const Term& left() const;
    const Term& right() const;
    const Term& operand() const { return left(); }

    bool uses_top() const;
    /// Bitmask of variable slots occurring in the term.
    unsigned variable_mask() const;

    std::string to_string() const;

private:
    struct Node;
    explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

enum class Relation { Equal, Leq1, Approx1, SetLeq };

std::string_view to_string(Relation r);
bool relation_holds(const MeetSemilattice& s, Relation r, const ElemSet& lhs, const ElemSet& rhs);

struct Equation {
    Term lhs;
    Term rhs;
    Relation relation;
    std::string text;
    /// Slots used by either side, ascending.
    std::vector<std::size_t> slots;
};

char variable_name(std::size_t slot);

/// Throws ParseError with the offending column in the message.
Term parse_term(std::string_view text);
Equation parse_equation(std::string_view text);

/// Throws RequiresBounded if the term mentions 1 and `s` has no top.
ElemSet evaluate(const MeetSemilattice& s, const Term& t, const Assignment& values);

} // namespace unsharp
