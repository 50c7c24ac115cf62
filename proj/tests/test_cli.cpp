#include "subsums/cli.hpp"
#include "subsums/search.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace subsums;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<nlohmann::ordered_json> json_lines(const std::string& text) {
    std::vector<nlohmann::ordered_json> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) out.push_back(nlohmann::ordered_json::parse(line));
    return out;
}

std::vector<std::string> with_json(std::vector<std::string> args) {
    args.push_back("--json");
    return args;
}

struct TempDir {
    fs::path path;
    TempDir() {
        static int counter = 0;
        path = fs::temp_directory_path() /
               ("subsums_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string operator/(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("cli examples") {
    auto r = run({"sigma", "--group", "Z14", "--set", "1,2,3,11,12,13"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("|Σ(S)| = 13\n", 0) == 0);

    r = run({"cr", "--group", "Z7"});
    CHECK(r.code == 0);
    CHECK(r.out == "cr = 4\n");

    r = run({"check", "--claim", "MAIN_T2", "--group", "Z13", "--set", "1,2,3", "--json"});
    CHECK(r.code == 0);
    const auto lines = json_lines(r.out);
    REQUIRE(lines.size() == 1);
    CHECK(lines[0]["claim"] == "MAIN_T2");
    CHECK(lines[0]["branch"] == "(i')+(ii)");
    CHECK(lines[0]["slack"] == "0/1");
    CHECK(lines[0]["rhs"] == "7/1");
    CHECK(lines[0]["hypotheses_met"] == true);
    for (const char* key : {"claim", "group", "set", "lhs", "rhs", "slack", "branch", "witness", "hypotheses_met"}) {
        CHECK(lines[0].contains(key));
    }
}

TEST_CASE("every single-set command emits one JSON line and a table") {
    const std::vector<std::vector<std::string>> commands{
        {"sigma", "--group", "Z4xZ2", "--set", "(1,0),(0,1)"},
        {"sigma", "--group", "Z7", "--set", "-1,-2"},
        {"sigma-star", "--group", "Z5", "--set", "1,2"},
        {"kwedge", "--group", "Z7", "--set", "1,2,3"},
        {"kwedge", "--group", "Z7", "--set", "1,2,3", "--k", "2"},
        {"period", "--group", "Z6", "--set", "0,3"},
        {"lambda", "--group", "Z7", "--set", "0,1,2"},
        {"lambda", "--group", "Z7", "--set", "0,1,2", "--x", "3"},
        {"hp-rep", "--group", "Z7", "--set", "1,3"},
        {"faithful", "--group", "Z7", "--set", "1"},
        {"layers", "--group", "Z6", "--set", "0,1,2,3,4", "--subgroup", "3"},
        {"ap-stats", "--group", "Z9", "--set", "1,2", "--subgroup", "0"},
        {"check", "--group", "Z9", "--set", "1,2,-1,-2", "--claim", "CONJECTURE"},
        {"check", "--group", "Z8", "--set", "1,2,3", "--claim", "LEMMA_12", "--b", "0,1", "--x", "1", "--y", "2"},
        {"check", "--group", "Z4xZ2", "--set", "(0,0),(1,0),(0,1)", "--claim", "KWEDGE_T11", "--k", "2"},
        {"check", "--group", "Z9", "--set", "1,2", "--claim", "LEMMA_18", "--subgroup", "0"},
        {"check", "--group", "Z15", "--set", "1,2,3,4", "--claim", "LEMMA_20", "--b", "0,1", "--t", "2"},
        {"cr", "--group", "Z1"},
        {"cr", "--group", "Z2xZ2"},
    };
    for (const auto& args : commands) {
        CAPTURE(args[0]);
        auto table = run(args);
        CHECK(table.code == 0);
        CHECK_FALSE(table.out.empty());
        CHECK(table.err.empty());
        auto js = run(with_json(args));
        CHECK(js.code == 0);
        REQUIRE_NOTHROW(CHECK(json_lines(js.out).size() == 1));
        // identical invocations give identical bytes
        CHECK(run(with_json(args)).out == js.out);
    }
}

TEST_CASE("cli outputs") {
    CHECK(run({"sigma", "--group", "Z7", "--set", "-1,-2"}).out == "|Σ(S)| = 4\nΣ(S) = {0,4,5,6}\n");
    CHECK(run({"kwedge", "--group", "Z7", "--set", "1,2,3", "--k", "2"}).out == "|2∧A| = 3\n2∧A = {3,4,5}\n");
    CHECK(run({"period", "--group", "Z6", "--set", "0,3"}).out == "period = <3> (order 2)\naperiodic = no\n");
    CHECK(run({"lambda", "--group", "Z7", "--set", "0,1,2", "--x", "3"}).out == "λ_B(3) = 3\n");
    CHECK(run({"faithful", "--group", "Z7", "--set", "1"}).out == "faithful = yes\nsuper-faithful = no\n");
    CHECK(run({"hp-rep", "--group", "Z7", "--set", "1,3"}).out ==
          "hypotheses_met = no\n"
          "group=Z7 set=a0 H=[] kind=AP ap=(1,3) quotient=7\n"
          "group=Z7 set=a0 H=[] kind=Vosper quotient=7\n");
    CHECK(run({"layers", "--group", "Z6", "--set", "0,1,2,3,4", "--subgroup", "3"}).out ==
          "G/K = Z3 (cosets labelled by least element)\nT_1 = {0+K,1+K,2+K}\nT_2 = {0+K,1+K}\n");
    auto ap = json_lines(run({"ap-stats", "--group", "Z9", "--set", "1,2", "--subgroup", "0", "--json"}).out)[0];
    CHECK(ap["h"] == 1);
    CHECK(ap["v"] == 2);
    CHECK(ap["ell"] == 3);
    CHECK(ap["sigma_size"] == 4);
    auto k = json_lines(run({"kwedge", "--group", "Z7", "--set", "1,2,3", "--json"}).out)[0];
    CHECK(k["sizes"] == nlohmann::ordered_json::array({1, 3, 3, 1}));
}

TEST_CASE("usage errors exit 2 with one line") {
    const std::vector<std::vector<std::string>> bad{
        {},
        {"nonsense"},
        {"sigma", "--group", "Z7"},
        {"sigma", "--set", "1"},
        {"sigma", "--group", "Q7", "--set", "1"},
        {"sigma", "--group", "Z7", "--set", "9"},
        {"sigma", "--group", "Z7", "--set", "1", "--bogus"},
        {"sigma", "--group", "Z100", "--set", "1", "--max-order", "50"},
        {"check", "--group", "Z7", "--set", "1"},
        {"check", "--group", "Z7", "--set", "1", "--claim", "NOPE"},
        {"check", "--group", "Z7", "--set", "1,2", "--claim", "LEMMA_19"},
        {"layers", "--group", "Z6", "--set", "1"},
        {"hp-rep", "--group", "Z8", "--set", "2"},
        {"search", "--group", "Z5", "--claim", "CONJECTURE"},
        {"search", "--group", "Z5", "--out", "/nonexistent/dir/r.jsonl"},
        {"search", "--group", "Z5", "--claim", "LEMMA_19", "--out", "x"},
        {"search", "--group", "Z5", "--claim", "CONJECTURE", "--symmetric", "--asymmetric", "--out", "x"},
        {"search", "--claim", "CONJECTURE", "--out", "x"},
        {"search", "--max-order", "70", "--claim", "CONJECTURE", "--out", "x"},
        {"search", "--resume", "/nonexistent.manifest.json"},
        {"search", "--extremal", "--group", "Z9", "--claim", "LEMMA_18"},
        {"fuzz"},
        {"report"},
        {"report", "--in", "/nonexistent.jsonl"},
        {"cr", "--group", "Z7", "--threads", "0"},
    };
    for (const auto& args : bad) {
        CAPTURE(args);
        auto r = run(args);
        CHECK(r.code == 2);
        CHECK(r.out.empty());
        CHECK(r.err.rfind("error: ", 0) == 0);
        CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
    }
    auto help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("sigma") != std::string::npos);
}

TEST_CASE("violated claims exit 1") {
    // max λ_B = 1 for B = {0} while the bound asks for more than 3
    auto r = run({"check", "--group", "Z8", "--set", "1,2,3", "--claim", "LEMMA_19", "--b", "0"});
    CHECK(r.code == 1);
    CHECK(r.out.find("holds           no") != std::string::npos);
    auto ap = run({"ap-stats", "--group", "Z9", "--set", "1,2", "--subgroup", "0"});
    CHECK(ap.code == 0);
}

TEST_CASE("search, resume and report through the cli") {
    TempDir dir;
    const std::vector<std::string> base{"search", "--max-order", "8", "--claim", "CONJECTURE", "--claim", "MAIN_T2",
                                        "--zero-free", "--chunk", "16"};
    auto with = [&](std::vector<std::string> extra) {
        auto a = base;
        a.insert(a.end(), extra.begin(), extra.end());
        return a;
    };
    auto full = run(with({"--out", dir / "full.jsonl", "--threads", "3"}));
    CHECK(full.code == 0);
    CHECK(full.out.find("complete = yes") != std::string::npos);
    CHECK(full.err.find("search: ") != std::string::npos);

    auto part = run(with({"--out", dir / "part.jsonl", "--stop-after", "77", "--json"}));
    CHECK(part.code == 0);
    CHECK(json_lines(part.out)[0]["complete"] == false);
    auto resumed = run({"search", "--resume", dir / "part.jsonl.manifest.json", "--json", "--threads", "2"});
    CHECK(resumed.code == 0);
    const auto summary = json_lines(resumed.out)[0];
    CHECK(summary["complete"] == true);
    CHECK(summary["min_slack"]["CONJECTURE"] == "0/1");
    CHECK(slurp(dir / "part.jsonl") == slurp(dir / "full.jsonl"));

    CHECK(run({"search", "--resume", dir / "part.jsonl.manifest.json", "--group", "Z5"}).code == 2);

    auto rep = run({"report", "--in", dir / "full.jsonl", "--json"});
    CHECK(rep.code == 0);
    const auto rj = json_lines(rep.out)[0];
    CHECK(rj["records"] == rj["verified"]);
    CHECK(rj["violations"] == 0);
    CHECK(run({"report", "--in", dir / "full.jsonl"}).out.find("mismatched = 0") != std::string::npos);

    // a forged violation fails re-verification
    auto text = slurp(dir / "full.jsonl");
    const auto first = text.substr(0, text.find('\n'));
    auto forged = nlohmann::ordered_json::parse(first);
    forged["sigma_size"] = 0;
    forged["slacks"]["CONJECTURE"] = "-1/1";
    forged["violated"] = {"CONJECTURE"};
    std::ofstream(dir / "forged.jsonl") << forged.dump() << '\n';
    auto fr = run({"report", "--in", dir / "forged.jsonl"});
    CHECK(fr.code == 2);
    CHECK(fr.out.find("mismatched = 1") != std::string::npos);
    CHECK(fr.err.find(":1: ") != std::string::npos);

    std::ofstream(dir / "cut.jsonl") << first << '\n' << first.substr(0, 10);
    auto cut = run({"report", "--in", dir / "cut.jsonl"});
    CHECK(cut.code == 2);
    CHECK(cut.err.find(":2:") != std::string::npos);
}

TEST_CASE("extremal search through the cli") {
    auto r = run({"search", "--extremal", "--group", "Z9", "--claim", "CONJECTURE", "--symmetric", "--zero-free",
                  "--size-min", "4", "--size-max", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("Z9\t|S|=4\tslack=0/1\t{1,2,7,8}") != std::string::npos);
    auto js = run({"search", "--extremal", "--group", "Z13", "--claim", "MAIN_T2", "--asymmetric", "--size-min", "3",
                   "--size-max", "3", "--json"});
    CHECK(js.code == 0);
    for (const auto& j : json_lines(js.out)) CHECK(j["slacks"]["MAIN_T2"] == "0/1");
    auto none = run({"search", "--extremal", "--group", "Z5", "--claim", "CONJECTURE", "--size-min", "9"});
    CHECK(none.code == 0);
    CHECK(none.out.empty());
    CHECK(none.err == "no instances\n");
}

TEST_CASE("fuzz through the cli") {
    TempDir dir;
    auto r = run({"fuzz", "--max-order", "9", "--min-order", "3", "--threads", "2", "--out", dir / "cert.json"});
    CHECK(r.code == 0);
    CHECK(r.out.find("exhausted = yes") != std::string::npos);
    CHECK(r.out.find("counterexamples = 0") != std::string::npos);
    const auto cert = nlohmann::ordered_json::parse(slurp(dir / "cert.json"));
    CHECK(cert["exhausted"] == true);
    CHECK(cert["tool_version"] == kToolVersion);
    CHECK_FALSE(cert["per_group"].contains("Z2"));
    CHECK(cert["per_group"].contains("Z9"));

    auto js = run({"fuzz", "--group", "Z7", "--group", "Z2xZ4", "--generating", "--json"});
    CHECK(js.code == 0);
    const auto v = json_lines(js.out)[0];
    CHECK(v["per_group"].size() == 2);
    CHECK(v["min_slack_by_size"].contains("2"));

    ::setenv("SUBSUMS_MAX_ORDER", "5", 1);
    auto env = run({"fuzz", "--json"});
    ::unsetenv("SUBSUMS_MAX_ORDER");
    CHECK(env.code == 0);
    CHECK(json_lines(env.out)[0]["per_group"].size() == 6);
}
