#include "unsharp/render.hpp"

#include <algorithm>

namespace unsharp {

std::string render_cell(const MeetSemilattice& s, const ElemSet& a) {
    if (a.size() == 1)
        return s.name(a.front());
    const bool short_names =
        std::all_of(a.begin(), a.end(), [&](Index x) { return s.name(x).size() == 1; });
    if (!short_names || a.empty())
        return format_set(s, a);
    std::string out;
    for (Index x : a)
        out += s.name(x);
    return out;
}

std::string render_table(const OperatorTable& table) {
    const MeetSemilattice& s = table.structure();
    const Index n = static_cast<Index>(s.size());
    const bool binary = table.kind() == OperatorKind::Implication;

    std::size_t head = binary ? 2 : 1;
    std::size_t width = 1;
    for (Index a = 0; a < n; ++a) {
        head = std::max(head, s.name(a).size());
        width = std::max(width, s.name(a).size());
        for (Index b = 0; b < (binary ? n : 1); ++b)
            width = std::max(width, render_cell(s, binary ? table.at(a, b) : table.at(a)).size());
    }
    auto pad = [](std::string text, std::size_t w) {
        text.resize(std::max(w, text.size()), ' ');
        return text;
    };

    std::string out;
    if (binary) {
        std::string header = pad("->", head) + " |";
        for (Index b = 0; b < n; ++b)
            header += " " + pad(s.name(b), width);
        while (!header.empty() && header.back() == ' ')
            header.pop_back();
        out += header + "\n" + std::string(head + 1, '-') + "+" +
               std::string(n * (width + 1), '-') + "\n";
    }
    for (Index a = 0; a < n; ++a) {
        std::string line = pad(s.name(a), head) + " |";
        if (binary)
            for (Index b = 0; b < n; ++b)
                line += " " + pad(render_cell(s, table.at(a, b)), width);
        else
            line += " " + render_cell(s, table.at(a));
        while (!line.empty() && line.back() == ' ')
            line.pop_back();
        out += line + "\n";
    }
    return out;
}

namespace {

nlohmann::json names_of(const MeetSemilattice& s, const ElemSet& a) {
    auto arr = nlohmann::json::array();
    for (Index x : a)
        arr.push_back(s.name(x));
    return arr;
}

} // namespace

nlohmann::json to_json(const OperatorTable& table) {
    const MeetSemilattice& s = table.structure();
    const Index n = static_cast<Index>(s.size());
    nlohmann::json j;
    j["structure"] = s.label();
    j["kind"] = table.kind() == OperatorKind::Negation ? "negation" : "implication";
    j["elements"] = s.names();
    auto rows = nlohmann::json::array();
    for (Index a = 0; a < n; ++a) {
        auto cells = nlohmann::json::array();
        if (table.kind() == OperatorKind::Negation) {
            cells.push_back(names_of(s, table.at(a)));
        } else {
            for (Index b = 0; b < n; ++b)
                cells.push_back(names_of(s, table.at(a, b)));
        }
        rows.push_back({{"row", s.name(a)}, {"cells", cells}});
    }
    j["rows"] = rows;
    return j;
}

nlohmann::json to_json(const LawReport& report) {
    nlohmann::json j;
    j["law"] = report.law;
    j["structure"] = report.structure;
    j["status"] = std::string(to_string(report.status));
    j["instances"] = report.instances;
    if (!report.detail.empty())
        j["detail"] = report.detail;
    if (report.counterexample) {
        nlohmann::json binding = nlohmann::json::object();
        for (const auto& [var, elem] : report.counterexample->binding)
            binding[var] = elem;
        j["counterexample"] = {{"binding", binding},
                               {"lhs", report.counterexample->lhs},
                               {"rhs", report.counterexample->rhs}};
    }
    return j;
}

nlohmann::json to_json(const MeetSemilattice& s) {
    nlohmann::json j;
    j["structure"] = s.label();
    j["elements"] = s.names();
    auto covers = nlohmann::json::array();
    for (auto [lo, hi] : s.poset().cover_pairs())
        covers.push_back({s.name(lo), s.name(hi)});
    j["covers"] = covers;
    j["bottom"] = s.name(s.bottom());
    j["top"] = s.top() ? nlohmann::json(s.name(*s.top())) : nlohmann::json(nullptr);
    j["maximal"] = names_of(s, s.maximal());
    auto sharp = nlohmann::json::array();
    for (Index x = 0; x < s.size(); ++x)
        if (is_sharp(s, x))
            sharp.push_back(s.name(x));
    j["sharp"] = sharp;
    return j;
}

std::vector<GoldenMismatch> compare_with_golden(const OperatorTable& table,
                                                const nlohmann::json& golden) {
    const MeetSemilattice& s = table.structure();
    const Index n = static_cast<Index>(s.size());
    const bool binary = table.kind() == OperatorKind::Implication;
    try {
        const std::string kind = golden.at("kind").get<std::string>();
        if (kind != (binary ? "implication" : "negation"))
            throw Error(ErrorCode::InvalidArgument, "golden table kind mismatch");
        if (golden.at("elements").get<std::vector<std::string>>() != s.names())
            throw Error(ErrorCode::InvalidArgument, "golden table elements mismatch");
        const auto& cells = golden.at("cells");
        if (cells.size() != n)
            throw Error(ErrorCode::InvalidArgument, "golden table has wrong row count");

        std::vector<GoldenMismatch> out;
        for (Index a = 0; a < n; ++a) {
            const auto& row = cells.at(a);
            if (row.size() != (binary ? n : 1))
                throw Error(ErrorCode::InvalidArgument, "golden table has wrong column count");
            for (Index b = 0; b < row.size(); ++b) {
                const std::string printed = row.at(b).get<std::string>();
                const std::string computed =
                    render_cell(s, binary ? table.at(a, b) : table.at(a));
                if (printed == computed)
                    continue;
                GoldenMismatch m{s.name(a), binary ? s.name(b) : std::string(), printed,
                                 computed, false, {}};
                for (const auto& ex : golden.value("exceptions", nlohmann::json::array())) {
                    if (ex.at("row") == m.row && ex.value("column", std::string()) == m.column &&
                        ex.at("computed") == computed && ex.at("printed") == printed) {
                        m.annotated = true;
                        m.note = ex.value("note", std::string());
                    }
                }
                out.push_back(std::move(m));
            }
        }
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::InvalidArgument, std::string("malformed golden table: ") + e.what());
    }
}

} // namespace unsharp
