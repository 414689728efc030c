#include "support.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "unsharp/cli.hpp"
#include "unsharp/laws.hpp"
#include "unsharp/structure_file.hpp"

using namespace unsharp;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "unsharp");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) { return std::string(UNSHARP_GOLDEN_DIR) + "/" + name; }

struct TempFile {
    std::filesystem::path path;
    explicit TempFile(const std::string& text, const std::string& name = "structure.txt")
        : path(std::filesystem::temp_directory_path() / ("unsharp_test_" + name)) {
        std::ofstream(path) << text;
    }
    ~TempFile() { std::filesystem::remove(path); }
};

} // namespace

TEST_CASE("usage errors") {
    CHECK(run({}).code == exit_usage);
    CHECK(run({"frobnicate"}).code == exit_usage);
    CHECK(run({"tables", "fig1", "--kind", "xor"}).code == exit_usage);
    CHECK(run({"--help"}).code == exit_ok);

    const Run missing = run({"check", "/no/such/file"});
    CHECK(missing.code == exit_usage);
    CHECK(missing.err.find("InvalidArgument") != std::string::npos);

    const Run parse = run({"laws", "fig1", "--equation", "x -> y -> z"});
    CHECK(parse.code == exit_usage);
    CHECK(parse.err.find("ParseError") != std::string::npos);
}

TEST_CASE("check") {
    const Run r = run({"check", "fig3"});
    CHECK(r.code == exit_ok);
    CHECK(r.out.find("sharp: 0 b c f 1") != std::string::npos);

    TempFile bad("elements: a b\ncovers:\na < c\n");
    const Run e = run({"check", bad.path.string()});
    CHECK(e.code == exit_usage);
    CHECK(e.err.find("line 3") != std::string::npos);

    const auto j = nlohmann::json::parse(run({"check", "fig4", "--json"}).out);
    CHECK(j["top"] == "1");
}

TEST_CASE("tables") {
    const Run r = run({"tables", "fig1", "--kind", "imp"});
    CHECK(r.code == exit_ok);
    CHECK(r.out.find("c  | ab  ab  ab  abc\n") != std::string::npos);

    const Run g1 = run({"tables", "fig1", "--kind", "imp", "--golden", golden("fig1_imp.json")});
    CHECK(g1.code == exit_ok);
    CHECK(g1.out.find("cell (a,c): printed ab, computed bc [known discrepancy") != std::string::npos);

    const Run g3 = run({"tables", "fig3", "--golden", golden("fig3_imp.json")});
    CHECK(g3.code == exit_ok);
    CHECK(g3.out.find("matches golden table") != std::string::npos);

    // fig1 against a golden file without the exception note fails
    auto doc = nlohmann::json::parse(std::ifstream(golden("fig1_imp.json")));
    doc["exceptions"] = nlohmann::json::array();
    TempFile plain(doc.dump(), "golden.json");
    CHECK(run({"tables", "fig1", "--golden", plain.path.string()}).code == exit_failure);

    TempFile one("elements: 0\ncovers:\n", "one.txt");
    CHECK(run({"tables", one.path.string(), "--kind", "neg"}).out == "0 | 0\n");

    const auto j = nlohmann::json::parse(run({"tables", "fig3", "--json"}).out);
    CHECK(j["rows"][5]["cells"][4] == nlohmann::json::array({"f"}));
}

TEST_CASE("laws") {
    CHECK(run({"laws", "fig4"}).code == exit_ok);

    const Run eq = run({"laws", "fig2", "--equation", "x'0 & y'0 = (x & y)'0", "--all"});
    CHECK(eq.code == exit_failure);
    CHECK(eq.out.find("x=a y=e: {d} vs {g,h}") != std::string::npos);

    const Run sk = run({"laws", "fig1", "--law", "T2.xii"});
    CHECK(sk.code == exit_ok);
    CHECK(sk.out.find("T2.xii: skipped") != std::string::npos);

    CHECK(run({"laws", "fig1", "--law", "nope"}).code == exit_usage);
    CHECK(run({"laws", "fig3", "--law", "T2.v"}).code == exit_ok);

    const Run ch = run({"laws", "fig1", "--law", "P1", "--characterize", "--trials", "20", "--seed", "3"});
    CHECK(ch.code == exit_ok);
    CHECK(ch.out.find("FALSIFICATION") == std::string::npos);

    const auto j = nlohmann::json::parse(run({"laws", "fig3", "--json"}).out);
    CHECK(j["ok"] == true);
    CHECK(j["reports"].size() == 35);
}

TEST_CASE("search") {
    const Run r = run({"search", "--equation", "(x & y)'0 = x'0 & y'0", "--count", "5"});
    CHECK(r.code == exit_failure);
    CHECK(r.out.find("counterexample found in exhaustive") != std::string::npos);
    // the reported structure is a readable structure file
    const auto start = r.out.find("elements:");
    const auto end = r.out.find("binding:");
    REQUIRE(start != std::string::npos);
    REQUIRE(end != std::string::npos);
    const auto s = parse_structure(r.out.substr(start, end - start));
    CHECK(check_equation(s, "(x & y)'0 = x'0 & y'0").failed());

    const Run mp = run({"search", "--equation", "x & (x -> y) <=1 y", "--max", "8", "--count", "20"});
    CHECK(mp.code == exit_ok);
    CHECK(mp.out.find("no counterexample") != std::string::npos);

    CHECK(run({"search", "--equation", "x & x = x", "--count", "10"}).code == exit_ok);
    CHECK(run({"search", "--equation", "x &"}).code == exit_usage);
    CHECK(run({"search", "--equation", "x = x", "--min", "5", "--max", "2"}).code == exit_usage);

    const Run top = run({"search", "--equation", "1 -> x = x", "--count", "5", "--json"});
    CHECK(top.code == exit_ok);
    const auto j = nlohmann::json::parse(top.out);
    CHECK(j["found"] == false);
    CHECK(j["structures_skipped"].get<int>() > 0);

    // deterministic in the seed
    const auto a = run({"search", "--equation", "x = x", "--no-exhaustive", "--count", "5", "--seed", "4"});
    const auto b = run({"search", "--equation", "x = x", "--no-exhaustive", "--count", "5", "--seed", "4"});
    CHECK(a.out == b.out);
}

TEST_CASE("deduction") {
    const Run t = run({"deduction", "fig4", "theta", "d,1"});
    CHECK(t.code == exit_ok);
    CHECK(t.out.rfind("{0} {a} {b} {c,e,f} {d,1}\n", 0) == 0);

    CHECK(run({"deduction", "fig4", "th3"}).out == "equivalence holds (255 subsets checked)\n");
    CHECK(run({"deduction", "fig1", "filters"}).out == "[0) [a) [b) [c)\n");
    CHECK(run({"deduction", "fig1", "th3"}).code == exit_usage);
    CHECK(run({"deduction", "fig1", "dsys"}).out.find("coincides with filters: yes") != std::string::npos);
    CHECK(run({"deduction", "fig1", "prop", "a"}).code == exit_ok);
    CHECK(run({"deduction", "fig1", "prop", "a,b"}).code == exit_usage);
    CHECK(run({"deduction", "fig1", "prop"}).code == exit_usage);
    CHECK(run({"deduction", "fig4", "lemma1"}).code == exit_ok);
    CHECK(run({"deduction", "chain:3", "congruences"}).out.rfind("4 congruences", 0) == 0);
    CHECK(run({"deduction", "fig4", "bogus"}).code == exit_usage);
    CHECK(run({"deduction", "fig2", "joins"}).out == "principal filter joins: ok\n");

    const Run nt = run({"deduction", "fig1", "theta", "a,b"});
    CHECK(nt.code == exit_ok);
    CHECK(nt.out.find("not an equivalence") != std::string::npos);
}

TEST_CASE("gen") {
    const Run r = run({"gen", "mn:3"});
    CHECK(r.code == exit_ok);
    CHECK(parse_structure(r.out) == build("mn:3"));

    TempFile out("", "gen_out.txt");
    CHECK(run({"gen", "prod:bool:1+chain:3", "-o", out.path.string()}).code == exit_ok);
    const Run back = run({"check", out.path.string()});
    CHECK(back.code == exit_ok);
    CHECK(back.out.find("elements: 6") != std::string::npos);

    CHECK(run({"gen", "chain:0"}).code == exit_usage);
}
