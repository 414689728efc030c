#include "unsharp/structure_file.hpp"

#include <sstream>
#include <vector>

namespace unsharp {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> words(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    std::string w;
    while (in >> w)
        out.push_back(w);
    return out;
}

[[noreturn]] void syntax(std::size_t line, const std::string& what) {
    throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line) + ": " + what).at_line(line);
}

} // namespace

MeetSemilattice parse_structure(std::string_view text) {
    enum class Section { None, Elements, Covers };
    Section section = Section::None;

    std::vector<std::string> names;
    std::vector<std::size_t> name_lines;
    std::vector<Poset::Cover> covers;
    std::vector<std::size_t> cover_lines;
    std::size_t elements_line = 0;
    bool saw_covers = false;

    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto eol = text.find('\n', pos);
        std::string_view raw = text.substr(pos, eol == std::string_view::npos ? text.npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++lineno;

        if (const auto hash = raw.find('#'); hash != std::string_view::npos)
            raw = raw.substr(0, hash);
        std::string_view line = trim(raw);
        if (line.empty())
            continue;

        if (line.starts_with("elements:")) {
            if (elements_line != 0)
                syntax(lineno, "duplicate 'elements:' section");
            section = Section::Elements;
            elements_line = lineno;
            line = trim(line.substr(9));
        } else if (line.starts_with("covers:")) {
            if (elements_line == 0)
                syntax(lineno, "'covers:' before 'elements:'");
            if (saw_covers)
                syntax(lineno, "duplicate 'covers:' section");
            section = Section::Covers;
            saw_covers = true;
            line = trim(line.substr(7));
        }
        if (line.empty())
            continue;

        switch (section) {
        case Section::None: syntax(lineno, "expected 'elements:'");
        case Section::Elements:
            for (auto& w : words(line)) {
                names.push_back(std::move(w));
                name_lines.push_back(lineno);
            }
            break;
        case Section::Covers: {
            const auto lt = line.find('<');
            if (lt == std::string_view::npos)
                syntax(lineno, "expected 'x < y'");
            const auto lo = words(line.substr(0, lt));
            const auto hi = words(line.substr(lt + 1));
            if (lo.size() != 1 || hi.size() != 1)
                syntax(lineno, "expected 'x < y'");
            covers.emplace_back(lo[0], hi[0]);
            cover_lines.push_back(lineno);
            break;
        }
        }
    }
    if (elements_line == 0)
        throw Error(ErrorCode::SyntaxError, "missing 'elements:' section").at_line(lineno);
    if (names.empty())
        throw Error(ErrorCode::SyntaxError, "no elements declared").at_line(elements_line);

    try {
        return to_meet_semilattice(Poset::build(names, covers));
    } catch (Error& e) {
        std::size_t line = elements_line;
        if (e.item()) {
            const bool about_names =
                e.code() == ErrorCode::DuplicateElement || e.code() == ErrorCode::EmptyName;
            const auto& lines = about_names ? name_lines : cover_lines;
            if (*e.item() < lines.size())
                line = lines[*e.item()];
        }
        throw Error(e.code(), "line " + std::to_string(line) + ": " + e.what()).at_line(line);
    }
}

std::string render_structure(const MeetSemilattice& s) {
    std::string out;
    if (!s.label().empty())
        out += "# " + s.label() + "\n";
    out += "elements:";
    for (const auto& n : s.names())
        out += " " + n;
    out += "\ncovers:\n";
    for (auto [lo, hi] : s.poset().cover_pairs())
        out += s.name(lo) + " < " + s.name(hi) + "\n";
    return out;
}

} // namespace unsharp
