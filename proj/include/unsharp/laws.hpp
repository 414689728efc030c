#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "unsharp/ops.hpp"
#include "unsharp/term.hpp"

namespace unsharp {

enum class LawId {
    T1_i, T1_ii, T1_iii, T1_iv, T1_v, T1_vi, T1_vii, T1_viii,
    P1, P2, P3, P4,
    T2_i, T2_ii, T2_iii, T2_iv, T2_v, T2_vi, T2_vii, T2_viii, T2_ix, T2_x, T2_xi, T2_xii, T2_xiii,
    R1, R2, R3, R4, R5, R6,
    ADJ, DIV, MP, NEGMEET,
};

/// Catalog order.
std::span<const LawId> all_laws();
std::span<const LawId> negation_axioms();    // P1..P4
std::span<const LawId> implication_axioms(); // R1..R6

std::string_view to_string(LawId id);
std::optional<LawId> parse_law_id(std::string_view text);
/// Human-readable statement over variables x, y, z.
std::string_view statement(LawId id);
std::size_t arity(LawId id);
bool requires_bounded(LawId id);

enum class LawStatus { Holds, Fails, Skipped };
std::string_view to_string(LawStatus status);

struct Counterexample {
    /// (variable, element name) in variable order.
    std::vector<std::pair<std::string, std::string>> binding;
    std::string lhs;
    std::string rhs;
};

struct LawReport {
    std::string law;
    std::string structure;
    LawStatus status = LawStatus::Holds;
    std::optional<Counterexample> counterexample;
    /// Number of variable tuples evaluated.
    std::uint64_t instances = 0;
    std::string detail;

    bool holds() const noexcept { return status == LawStatus::Holds; }
    bool failed() const noexcept { return status == LawStatus::Fails; }
};

/// Result of evaluating one law at one binding.
struct Outcome {
    bool holds = true;
    std::string lhs;
    std::string rhs;
};

/// Exhaustive check over all tuples. Throws RequiresBounded for T1.vi,
/// T2.x and T2.xii on a structure without top.
LawReport check_law(const MeetSemilattice& s, LawId law);

/// Checks P/R axioms (or any law) with the element-level operators taken from
/// the given tables instead of the canonical ones.
LawReport check_law(const MeetSemilattice& s, LawId law, const OperatorTable& negation,
                    const OperatorTable& implication);

/// One report per catalog law; bounded-only laws are Skipped on unbounded
/// structures.
std::vector<LawReport> check_all(const MeetSemilattice& s);

/// Re-evaluates a single binding with the canonical operators.
Outcome evaluate_law(const MeetSemilattice& s, LawId law, std::span<const Index> values);

/// True iff re-evaluating the report's counterexample still violates the law.
bool reproduces_violation(const MeetSemilattice& s, LawId law, const LawReport& report);
bool reproduces_violation(const MeetSemilattice& s, const Equation& eq, const LawReport& report);

/// At most four variables. Throws ParseError (string overload) and
/// RequiresBounded when the equation uses 1 on a structure without top.
LawReport check_equation(const MeetSemilattice& s, const Equation& eq);
LawReport check_equation(const MeetSemilattice& s, std::string_view equation);
/// Every violating binding, in tuple order.
std::vector<Counterexample> equation_violations(const MeetSemilattice& s, const Equation& eq);

/// Reports of each axiom in the family against a (possibly perturbed) table.
std::vector<LawReport> check_negation_axioms(const OperatorTable& negation);
std::vector<LawReport> check_implication_axioms(const OperatorTable& implication);

struct CharacterizationSummary {
    bool canonical_passes = false;
    std::size_t trials = 0;
    std::size_t perturbed = 0;
    std::size_t rejected = 0;
    std::size_t falsifications = 0;
};

/// Canonical negation must satisfy P1..P4 and `trials` random single-entry
/// perturbations (each a different non-empty antichain) must each violate at
/// least one of them. A perturbation that survives is reported as a
/// falsification. Deterministic in `seed`.
LawReport verify_neg_characterization(const MeetSemilattice& s, std::size_t trials,
                                      std::uint64_t seed = 0,
                                      CharacterizationSummary* summary = nullptr);
LawReport verify_imp_characterization(const MeetSemilattice& s, std::size_t trials,
                                      std::uint64_t seed = 0,
                                      CharacterizationSummary* summary = nullptr);

/// Holds iff every element is sharp.
LawReport check_remark_products(const MeetSemilattice& s);

} // namespace unsharp
