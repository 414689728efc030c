#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "unsharp/deduction.hpp"
#include "unsharp/laws.hpp"
#include "unsharp/ops.hpp"

namespace unsharp {

/// Table-cell style: "abc" for {a,b,c}, "a" for {a}. Falls back to "{x,y}"
/// when some member name is longer than one character.
std::string render_cell(const MeetSemilattice& s, const ElemSet& a);

/// Fixed-width grid; rows are the first argument.
std::string render_table(const OperatorTable& table);

nlohmann::json to_json(const OperatorTable& table);
nlohmann::json to_json(const LawReport& report);
nlohmann::json to_json(const MeetSemilattice& s);

/// A cell where the computed table differs from a golden table.
struct GoldenMismatch {
    std::string row;
    std::string column;
    std::string printed;
    std::string computed;
    /// Set when the golden file lists this cell as a known exception whose
    /// recorded computed value matches.
    bool annotated = false;
    std::string note;
};

/// Golden schema: {"kind": "implication"|"negation", "elements": [...],
/// "cells": [[...], ...], "exceptions": [{"row","column","printed","computed","note"}]}.
/// Negation goldens have a single column of cells. Throws InvalidArgument on
/// schema or element-list mismatch.
std::vector<GoldenMismatch> compare_with_golden(const OperatorTable& table,
                                                const nlohmann::json& golden);

} // namespace unsharp
