#include "unsharp/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "unsharp/deduction.hpp"
#include "unsharp/generators.hpp"
#include "unsharp/laws.hpp"
#include "unsharp/render.hpp"
#include "unsharp/structure_file.hpp"

namespace unsharp {

namespace {

using nlohmann::json;

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::InvalidArgument, "cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// A structure file path, or a generator spec such as `fig3` or `prod:bool:2+mn:3`.
MeetSemilattice load(const std::string& source) {
    if (std::filesystem::is_regular_file(source)) {
        MeetSemilattice s = parse_structure(read_file(source));
        s.set_label(source);
        return s;
    }
    try {
        return build(source);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::InvalidSpec)
            throw;
        throw Error(ErrorCode::InvalidArgument,
                    "'" + source + "' is neither a readable file nor a structure spec");
    }
}

ElemSet parse_set_arg(const MeetSemilattice& s, const std::string& text) {
    std::vector<std::string> names;
    std::string cur;
    for (char c : text) {
        if (c == ',' || c == ' ') {
            if (!cur.empty())
                names.push_back(std::move(cur));
            cur.clear();
        } else if (c != '{' && c != '}') {
            cur += c;
        }
    }
    if (!cur.empty())
        names.push_back(std::move(cur));
    return elem_set(s, names);
}

std::string describe(const LawReport& r) {
    std::ostringstream os;
    os << r.law << ": " << to_string(r.status);
    if (r.status != LawStatus::Skipped)
        os << " (" << r.instances << " instances)";
    if (r.counterexample) {
        os << "\n  counterexample:";
        for (const auto& [var, elem] : r.counterexample->binding)
            os << ' ' << var << '=' << elem;
        os << "\n  lhs: " << r.counterexample->lhs << "\n  rhs: " << r.counterexample->rhs;
    }
    if (!r.detail.empty())
        os << "\n  " << r.detail;
    return os.str();
}

std::string set_list(const MeetSemilattice& s, const std::vector<ElemSet>& sets) {
    std::string out;
    for (const auto& e : sets) {
        if (!out.empty())
            out += ' ';
        out += format_set(s, e);
    }
    return out;
}

struct Options {
    bool json = false;
    std::string source;
    // tables
    std::string kind = "imp";
    std::string golden;
    // laws
    std::string law;
    std::string equation;
    std::uint64_t seed = 0;
    bool characterize = false;
    bool all = false;
    std::size_t trials = 100;
    // search
    std::size_t min_size = 1;
    std::size_t max_size = 8;
    std::size_t count = 100;
    bool no_exhaustive = false;
    // deduction
    std::string subcommand;
    std::string argument;
    // gen
    std::string output;
};

int cmd_check(const Options& o, std::ostream& out) {
    const MeetSemilattice s = load(o.source);
    if (o.json) {
        out << to_json(s).dump(2) << '\n';
        return exit_ok;
    }
    std::string sharp_names;
    for (Index x = 0; x < s.size(); ++x)
        if (is_sharp(s, x))
            sharp_names += (sharp_names.empty() ? "" : " ") + s.name(x);
    out << "structure: " << s.label() << '\n'
        << "elements: " << s.size() << '\n'
        << "bottom: " << s.name(s.bottom()) << '\n'
        << "top: " << (s.top() ? s.name(*s.top()) : std::string("none")) << '\n'
        << "maximal: " << format_set(s, s.maximal()) << '\n'
        << "sharp: " << sharp_names << '\n'
        << "valid meet-semilattice with 0\n";
    return exit_ok;
}

int cmd_tables(const Options& o, std::ostream& out) {
    const MeetSemilattice s = load(o.source);
    const OperatorKind kind = o.kind == "neg" ? OperatorKind::Negation : OperatorKind::Implication;
    const OperatorTable table = make_table(s, kind);

    std::vector<GoldenMismatch> mismatches;
    if (!o.golden.empty())
        mismatches = compare_with_golden(table, json::parse(read_file(o.golden)));
    const bool unexplained = std::any_of(mismatches.begin(), mismatches.end(),
                                         [](const GoldenMismatch& m) { return !m.annotated; });

    if (o.json) {
        json j = to_json(table);
        if (!o.golden.empty()) {
            auto arr = json::array();
            for (const auto& m : mismatches)
                arr.push_back({{"row", m.row},
                               {"column", m.column},
                               {"printed", m.printed},
                               {"computed", m.computed},
                               {"annotated", m.annotated},
                               {"note", m.note}});
            j["golden_mismatches"] = arr;
        }
        out << j.dump(2) << '\n';
    } else {
        out << render_table(table);
        for (const auto& m : mismatches) {
            out << "cell (" << m.row << (m.column.empty() ? "" : "," + m.column)
                << "): printed " << m.printed << ", computed " << m.computed;
            if (m.annotated)
                out << " [known discrepancy: " << m.note << "]";
            out << '\n';
        }
        if (!o.golden.empty() && mismatches.empty())
            out << "matches golden table\n";
    }
    return unexplained ? exit_failure : exit_ok;
}

int cmd_laws(const Options& o, std::ostream& out) {
    const MeetSemilattice s = load(o.source);
    std::vector<LawReport> reports;
    std::vector<Counterexample> violations;
    if (!o.equation.empty()) {
        const Equation eq = parse_equation(o.equation);
        reports.push_back(check_equation(s, eq));
        if (o.all)
            violations = equation_violations(s, eq);
    } else if (!o.law.empty()) {
        const auto id = parse_law_id(o.law);
        if (!id)
            throw Error(ErrorCode::InvalidArgument, "unknown law '" + o.law + "'");
        if (requires_bounded(*id) && !s.bounded()) {
            LawReport r;
            r.law = o.law;
            r.structure = s.label();
            r.status = LawStatus::Skipped;
            r.detail = "requires a bounded structure";
            reports.push_back(std::move(r));
        } else {
            reports.push_back(check_law(s, *id));
        }
    } else {
        reports = check_all(s);
    }
    if (o.characterize) {
        reports.push_back(verify_neg_characterization(s, o.trials, o.seed));
        reports.push_back(verify_imp_characterization(s, o.trials, o.seed));
    }

    bool failed = false;
    for (const auto& r : reports)
        failed = failed || r.failed();

    if (o.json) {
        json j;
        j["structure"] = s.label();
        j["reports"] = json::array();
        for (const auto& r : reports)
            j["reports"].push_back(to_json(r));
        if (o.all) {
            j["violations"] = json::array();
            for (const auto& cx : violations) {
                json binding = json::object();
                for (const auto& [var, elem] : cx.binding)
                    binding[var] = elem;
                j["violations"].push_back({{"binding", binding}, {"lhs", cx.lhs}, {"rhs", cx.rhs}});
            }
        }
        j["ok"] = !failed;
        out << j.dump(2) << '\n';
    } else {
        for (const auto& r : reports)
            out << describe(r) << '\n';
        if (o.all) {
            out << violations.size() << " violating bindings\n";
            for (const auto& cx : violations) {
                out << " ";
                for (const auto& [var, elem] : cx.binding)
                    out << ' ' << var << '=' << elem;
                out << ": " << cx.lhs << " vs " << cx.rhs << '\n';
            }
        }
        out << (failed ? "some laws fail\n" : "all applicable laws hold\n");
    }
    return failed ? exit_failure : exit_ok;
}

int cmd_search(const Options& o, std::ostream& out) {
    if (o.min_size < 1 || o.max_size < o.min_size)
        throw Error(ErrorCode::InvalidArgument, "need 1 <= --min <= --max");
    const Equation eq = parse_equation(o.equation);
    const bool needs_top = eq.lhs.uses_top() || eq.rhs.uses_top();

    std::size_t checked = 0;
    std::size_t skipped = 0;
    auto try_one = [&](const MeetSemilattice& s, const std::string& source) -> bool {
        if (needs_top && !s.bounded()) {
            ++skipped;
            return false;
        }
        ++checked;
        const LawReport r = check_equation(s, eq);
        if (!r.failed())
            return false;
        if (o.json) {
            json j{{"equation", eq.text},
                   {"found", true},
                   {"source", source},
                   {"structures_checked", checked},
                   {"structure", render_structure(s)},
                   {"report", to_json(r)}};
            out << j.dump(2) << '\n';
        } else {
            out << "counterexample found in " << source << " (n=" << s.size() << ")\n"
                << render_structure(s);
            out << "binding:";
            for (const auto& [var, elem] : r.counterexample->binding)
                out << ' ' << var << '=' << elem;
            out << "\nlhs: " << r.counterexample->lhs << "\nrhs: " << r.counterexample->rhs << '\n';
        }
        return true;
    };

    if (!o.no_exhaustive) {
        const std::size_t top = std::min(max_enumeration_size, o.max_size);
        for (std::size_t n = 1; n <= top; ++n) {
            SemilatticeEnumerator gen(n);
            while (auto s = gen.next())
                if (try_one(*s, "exhaustive n=" + std::to_string(n)))
                    return exit_failure;
        }
    }
    for (auto name : fixture_names())
        if (try_one(build(name), "fixture " + std::string(name)))
            return exit_failure;

    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<std::size_t> size_dist(o.min_size, o.max_size);
    for (std::size_t i = 0; i < o.count; ++i) {
        const std::size_t n = size_dist(rng);
        const std::uint64_t instance_seed = rng();
        const MeetSemilattice s = random_instance(n, instance_seed);
        if (try_one(s, "random instance " + std::to_string(i) + " " + s.label()))
            return exit_failure;
    }

    if (o.json) {
        out << json{{"equation", eq.text},
                    {"found", false},
                    {"structures_checked", checked},
                    {"structures_skipped", skipped}}
                   .dump(2)
            << '\n';
    } else {
        out << "no counterexample (" << checked << " structures checked";
        if (skipped)
            out << ", " << skipped << " without top skipped";
        out << ")\n";
    }
    return exit_ok;
}

int cmd_deduction(const Options& o, std::ostream& out) {
    const MeetSemilattice s = load(o.source);
    const std::string& sub = o.subcommand;
    json j{{"structure", s.label()}, {"subcommand", sub}};
    auto needs_arg = [&] {
        if (o.argument.empty())
            throw Error(ErrorCode::InvalidArgument, "'" + sub + "' needs a set argument, e.g. d,1");
        return parse_set_arg(s, o.argument);
    };
    auto emit_report = [&](const LawReport& r) {
        if (o.json) {
            j["report"] = to_json(r);
            out << j.dump(2) << '\n';
        } else {
            out << (r.holds() ? (r.detail.empty() ? "holds (" + std::to_string(r.instances) +
                                                        " instances checked)"
                                                  : r.detail)
                              : describe(r))
                << '\n';
        }
        return r.failed() ? exit_failure : exit_ok;
    };

    if (sub == "filters") {
        std::string text;
        auto arr = json::array();
        for (const auto& f : enumerate_filters(s)) {
            // [x) is generated by its least element
            Index least = f.members.front();
            for (Index x : f.members)
                if (s.leq(x, least))
                    least = x;
            const std::string label = "[" + s.name(least) + ")";
            text += (text.empty() ? "" : " ") + label;
            arr.push_back({{"generator", s.name(least)}, {"members", format_set(s, f.members)}});
        }
        if (o.json) {
            j["filters"] = arr;
            out << j.dump(2) << '\n';
        } else {
            out << text << '\n';
        }
        return exit_ok;
    }
    if (sub == "dsys") {
        std::vector<ElemSet> systems, filters;
        for (const auto& d : enumerate_deductive_systems(s))
            systems.push_back(d.members);
        for (const auto& f : enumerate_filters(s))
            filters.push_back(f.members);
        std::sort(systems.begin(), systems.end());
        std::sort(filters.begin(), filters.end());
        const bool same = systems == filters;
        if (o.json) {
            auto arr = json::array();
            for (const auto& d : systems)
                arr.push_back(format_set(s, d));
            j["deductive_systems"] = arr;
            j["coincides_with_filters"] = same;
            out << j.dump(2) << '\n';
        } else {
            out << set_list(s, systems) << '\n'
                << "coincides with filters: " << (same ? "yes" : "no") << '\n';
        }
        return exit_ok;
    }
    if (sub == "theta") {
        const BinaryRelation t = theta(s, needs_arg());
        const bool equiv = is_equivalence(t);
        const bool cong = is_congruence(s, t);
        if (o.json) {
            if (equiv) {
                auto arr = json::array();
                for (const auto& c : classes(t))
                    arr.push_back(format_set(s, c));
                j["classes"] = arr;
            }
            j["equivalence"] = equiv;
            j["congruence"] = cong;
            out << j.dump(2) << '\n';
        } else if (equiv) {
            out << set_list(s, classes(t)) << '\n'
                << "congruence: " << (cong ? "yes" : "no") << '\n';
        } else {
            out << "not an equivalence; pairs:";
            for (Index x = 0; x < s.size(); ++x)
                for (Index y = 0; y < s.size(); ++y)
                    if (x != y && t.contains(x, y))
                        out << " (" << s.name(x) << ',' << s.name(y) << ')';
            out << '\n';
        }
        return exit_ok;
    }
    if (sub == "th3")
        return emit_report(check_th3(s));
    if (sub == "lemma1")
        return emit_report(check_lemma1(s));
    if (sub == "prop")
        return emit_report(check_proposition(s, needs_arg()));
    if (sub == "joins") {
        const bool ok = principal_filter_join_ok(s);
        if (o.json) {
            j["ok"] = ok;
            out << j.dump(2) << '\n';
        } else {
            out << "principal filter joins: " << (ok ? "ok" : "violated") << '\n';
        }
        return ok ? exit_ok : exit_failure;
    }
    if (sub == "congruences") {
        const auto all = enumerate_congruences(s);
        if (o.json) {
            auto arr = json::array();
            for (const auto& c : all) {
                auto blocks = json::array();
                for (const auto& b : classes(c))
                    blocks.push_back(format_set(s, b));
                arr.push_back(blocks);
            }
            j["congruences"] = arr;
            out << j.dump(2) << '\n';
        } else {
            out << all.size() << " congruences\n";
            for (const auto& c : all)
                out << "  " << set_list(s, classes(c)) << '\n';
        }
        return exit_ok;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown deduction subcommand '" + sub + "'");
}

int cmd_gen(const Options& o, std::ostream& out) {
    const MeetSemilattice s = build(o.source);
    const std::string text = render_structure(s);
    if (o.output.empty()) {
        out << text;
    } else {
        std::ofstream f(o.output, std::ios::binary);
        if (!f)
            throw Error(ErrorCode::InvalidArgument, "cannot write " + o.output);
        f << text;
    }
    return exit_ok;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Unsharp negation and implication on finite meet-semilattices"};
    app.require_subcommand(1);
    Options o;

    auto* check = app.add_subcommand("check", "Validate a structure and summarize it");
    check->add_option("FILE", o.source, "Structure file or generator spec")->required();
    check->add_flag("--json", o.json, "Emit JSON");

    auto* tables = app.add_subcommand("tables", "Print the negation or implication table");
    tables->add_option("FILE", o.source, "Structure file or generator spec")->required();
    tables->add_option("--kind", o.kind, "neg or imp")
        ->check(CLI::IsMember({"neg", "imp"}))
        ->capture_default_str();
    tables->add_option("--golden", o.golden, "Compare against a golden JSON table");
    tables->add_flag("--json", o.json, "Emit JSON");

    auto* laws = app.add_subcommand("laws", "Check the law catalog or a candidate equation");
    laws->add_option("FILE", o.source, "Structure file or generator spec")->required();
    laws->add_option("--law", o.law, "Single catalog law, e.g. T2.v");
    laws->add_option("--equation", o.equation, "Candidate law, e.g. \"x' & y' = (x & y)'\"");
    laws->add_option("--seed", o.seed, "Seed for --characterize")->capture_default_str();
    laws->add_flag("--all", o.all, "With --equation, list every violating binding");
    laws->add_flag("--characterize", o.characterize, "Also run the perturbation checks");
    laws->add_option("--trials", o.trials, "Perturbations per operator")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    laws->add_flag("--json", o.json, "Emit JSON");

    auto* search = app.add_subcommand("search", "Look for a counterexample to an equation");
    search->add_option("--min", o.min_size, "Smallest random instance")->capture_default_str();
    search->add_option("--max", o.max_size, "Largest instance; also caps the exhaustive stream")
        ->capture_default_str();
    search->add_option("--count", o.count, "Random instances after the exhaustive stream")
        ->capture_default_str();
    search->add_option("--seed", o.seed, "Seed for the random instances")->capture_default_str();
    search->add_option("--equation", o.equation, "Candidate law")->required();
    search->add_flag("--no-exhaustive", o.no_exhaustive, "Skip the exhaustive n <= 6 stream");
    search->add_flag("--json", o.json, "Emit JSON");

    auto* deduction = app.add_subcommand("deduction", "Filters, deductive systems and congruences");
    deduction->add_option("FILE", o.source, "Structure file or generator spec")->required();
    deduction
        ->add_option("SUBCMD", o.subcommand,
                     "filters | dsys | theta SET | th3 | prop SET | congruences | lemma1 | joins")
        ->required();
    deduction->add_option("SET", o.argument, "Comma-separated element names");
    deduction->add_flag("--json", o.json, "Emit JSON");

    auto* gen = app.add_subcommand("gen", "Write a generated structure as a structure file");
    gen->add_option("SPEC", o.source, "e.g. mn:4, prod:bool:2+chain:3")->required();
    gen->add_option("-o,--output", o.output, "Write to FILE instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*check) return cmd_check(o, out);
        if (*tables) return cmd_tables(o, out);
        if (*laws) return cmd_laws(o, out);
        if (*search) return cmd_search(o, out);
        if (*deduction) return cmd_deduction(o, out);
        if (*gen) return cmd_gen(o, out);
    } catch (const Error& e) {
        err << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
        return exit_usage;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

} // namespace unsharp
