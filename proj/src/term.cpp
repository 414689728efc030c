#include "unsharp/term.hpp"

#include <cctype>

#include "unsharp/ops.hpp"

namespace unsharp {

struct Term::Node {
    Kind kind;
    std::size_t slot = 0;
    Term left{nullptr};
    Term right{nullptr};
};

Term Term::variable(std::size_t slot) {
    if (slot >= max_variables)
        throw Error(ErrorCode::InvalidArgument, "variable slot out of range");
    return Term(std::make_shared<const Node>(Node{Kind::Variable, slot, Term{nullptr}, Term{nullptr}}));
}
Term Term::bottom() {
    return Term(std::make_shared<const Node>(Node{Kind::Bottom, 0, Term{nullptr}, Term{nullptr}}));
}
Term Term::top() {
    return Term(std::make_shared<const Node>(Node{Kind::Top, 0, Term{nullptr}, Term{nullptr}}));
}
Term Term::negation(Term operand) {
    return Term(std::make_shared<const Node>(Node{Kind::Negation, 0, std::move(operand), Term{nullptr}}));
}
Term Term::meet(Term lhs, Term rhs) {
    return Term(std::make_shared<const Node>(Node{Kind::Meet, 0, std::move(lhs), std::move(rhs)}));
}
Term Term::implication(Term lhs, Term rhs) {
    return Term(
        std::make_shared<const Node>(Node{Kind::Implication, 0, std::move(lhs), std::move(rhs)}));
}

Term::Kind Term::kind() const noexcept { return node_->kind; }
std::size_t Term::slot() const noexcept { return node_->slot; }
const Term& Term::left() const { return node_->left; }
const Term& Term::right() const { return node_->right; }

bool Term::uses_top() const {
    switch (kind()) {
    case Kind::Top: return true;
    case Kind::Variable:
    case Kind::Bottom: return false;
    case Kind::Negation: return left().uses_top();
    default: return left().uses_top() || right().uses_top();
    }
}

unsigned Term::variable_mask() const {
    switch (kind()) {
    case Kind::Variable: return 1u << slot();
    case Kind::Bottom:
    case Kind::Top: return 0;
    case Kind::Negation: return left().variable_mask();
    default: return left().variable_mask() | right().variable_mask();
    }
}

char variable_name(std::size_t slot) {
    static constexpr char names[] = {'x', 'y', 'z', 'w'};
    return slot < max_variables ? names[slot] : '?';
}

std::string Term::to_string() const {
    switch (kind()) {
    case Kind::Variable: return std::string(1, variable_name(slot()));
    case Kind::Bottom: return "0";
    case Kind::Top: return "1";
    case Kind::Negation: {
        const auto k = left().kind();
        const bool atomic = k == Kind::Variable || k == Kind::Bottom || k == Kind::Top ||
                            k == Kind::Negation || k == Kind::Implication;
        return atomic ? left().to_string() + "'" : "(" + left().to_string() + ")'";
    }
    case Kind::Meet: {
        auto side = [](const Term& t) {
            return t.kind() == Kind::Implication ? "(" + t.to_string() + ")" : t.to_string();
        };
        return side(left()) + " & " + side(right());
    }
    case Kind::Implication: return "(" + left().to_string() + " -> " + right().to_string() + ")";
    }
    return {};
}

std::string_view to_string(Relation r) {
    switch (r) {
    case Relation::Equal: return "=";
    case Relation::Leq1: return "<=1";
    case Relation::Approx1: return "~=1";
    case Relation::SetLeq: return "<=";
    }
    return "?";
}

bool relation_holds(const MeetSemilattice& s, Relation r, const ElemSet& lhs, const ElemSet& rhs) {
    switch (r) {
    case Relation::Equal: return lhs == rhs;
    case Relation::Leq1: return leq1(s, lhs, rhs);
    case Relation::Approx1: return approx1(s, lhs, rhs);
    case Relation::SetLeq: return set_leq(s, lhs, rhs);
    }
    return false;
}

namespace {

enum class Tok { Var, Zero, One, Neg, Meet, Arrow, LParen, RParen, Eq, Leq1, Approx1, SetLeq, End };

struct Token {
    Tok kind;
    std::size_t column;
    std::size_t slot = 0;
};

[[noreturn]] void parse_fail(std::size_t column, const std::string& what) {
    throw Error(ErrorCode::ParseError, "column " + std::to_string(column + 1) + ": " + what);
}

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto starts = [&](std::string_view s) { return text.substr(i, s.size()) == s; };
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t col = i;
        switch (c) {
        case 'x': out.push_back({Tok::Var, col, 0}); ++i; break;
        case 'y': out.push_back({Tok::Var, col, 1}); ++i; break;
        case 'z': out.push_back({Tok::Var, col, 2}); ++i; break;
        case 'w': out.push_back({Tok::Var, col, 3}); ++i; break;
        case '0': out.push_back({Tok::Zero, col}); ++i; break;
        case '1': out.push_back({Tok::One, col}); ++i; break;
        case '&': out.push_back({Tok::Meet, col}); ++i; break;
        case '(': out.push_back({Tok::LParen, col}); ++i; break;
        case ')': out.push_back({Tok::RParen, col}); ++i; break;
        case '=': out.push_back({Tok::Eq, col}); ++i; break;
        case '\'':
            out.push_back({Tok::Neg, col});
            i += (i + 1 < text.size() && text[i + 1] == '0') ? 2 : 1;
            break;
        default:
            if (starts("->")) {
                out.push_back({Tok::Arrow, col});
                i += 2;
            } else if (starts("<=1")) {
                out.push_back({Tok::Leq1, col});
                i += 3;
            } else if (starts("~=1")) {
                out.push_back({Tok::Approx1, col});
                i += 3;
            } else if (starts("<=")) {
                out.push_back({Tok::SetLeq, col});
                i += 2;
            } else {
                parse_fail(col, std::string("unexpected character '") + c + "'");
            }
        }
    }
    out.push_back({Tok::End, text.size()});
    return out;
}

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    Term expr() {
        Term lhs = meet();
        if (peek().kind != Tok::Arrow)
            return lhs;
        next();
        Term rhs = meet();
        if (peek().kind == Tok::Arrow)
            parse_fail(peek().column, "'->' is non-associative; parenthesize nested implications");
        return Term::implication(std::move(lhs), std::move(rhs));
    }

    const Token& peek() const { return tokens_[pos_]; }
    const Token& next() { return tokens_[pos_++]; }

private:
    Term meet() {
        Term t = postfix();
        while (peek().kind == Tok::Meet) {
            next();
            t = Term::meet(std::move(t), postfix());
        }
        return t;
    }

    Term postfix() {
        Term t = primary();
        while (peek().kind == Tok::Neg) {
            next();
            t = Term::negation(std::move(t));
        }
        return t;
    }

    Term primary() {
        const Token& tok = next();
        switch (tok.kind) {
        case Tok::Var: return Term::variable(tok.slot);
        case Tok::Zero: return Term::bottom();
        case Tok::One: return Term::top();
        case Tok::LParen: {
            Term inner = expr();
            if (peek().kind != Tok::RParen)
                parse_fail(peek().column, "expected ')'");
            next();
            return inner;
        }
        case Tok::End: parse_fail(tok.column, "unexpected end of input");
        default: parse_fail(tok.column, "expected a variable, constant or '('");
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

std::vector<std::size_t> slots_of(unsigned mask) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < max_variables; ++i)
        if (mask & (1u << i))
            out.push_back(i);
    return out;
}

} // namespace

Term parse_term(std::string_view text) {
    Parser p(tokenize(text));
    Term t = p.expr();
    if (p.peek().kind != Tok::End)
        parse_fail(p.peek().column, "trailing input");
    return t;
}

Equation parse_equation(std::string_view text) {
    Parser p(tokenize(text));
    Term lhs = p.expr();
    Relation rel;
    switch (p.peek().kind) {
    case Tok::Eq: rel = Relation::Equal; break;
    case Tok::Leq1: rel = Relation::Leq1; break;
    case Tok::Approx1: rel = Relation::Approx1; break;
    case Tok::SetLeq: rel = Relation::SetLeq; break;
    default: parse_fail(p.peek().column, "expected a relation (=, <=1, ~=1, <=)");
    }
    p.next();
    Term rhs = p.expr();
    if (p.peek().kind != Tok::End)
        parse_fail(p.peek().column, "trailing input");
    const unsigned mask = lhs.variable_mask() | rhs.variable_mask();
    return Equation{std::move(lhs), std::move(rhs), rel, std::string(text), slots_of(mask)};
}

ElemSet evaluate(const MeetSemilattice& s, const Term& t, const Assignment& values) {
    switch (t.kind()) {
    case Term::Kind::Variable: return ElemSet::single(values[t.slot()]);
    case Term::Kind::Bottom: return ElemSet::single(s.bottom());
    case Term::Kind::Top:
        if (!s.top())
            throw Error(ErrorCode::RequiresBounded, "constant 1 used on a structure without top");
        return ElemSet::single(*s.top());
    case Term::Kind::Negation: return neg_set(s, evaluate(s, t.operand(), values));
    case Term::Kind::Meet:
        return set_meet(s, evaluate(s, t.left(), values), evaluate(s, t.right(), values));
    case Term::Kind::Implication:
        return imp_set(s, evaluate(s, t.left(), values), evaluate(s, t.right(), values));
    }
    return {};
}

} // namespace unsharp
