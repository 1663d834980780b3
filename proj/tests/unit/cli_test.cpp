// End-to-end coverage for the command line tool. The test binary receives the
// tool's location as --cli=<path> (stripped before doctest sees the command
// line) and drives it through popen, checking structured output, text output,
// file side effects, and exit codes.
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

using nlohmann::json;

namespace {

std::string g_cli;

struct Run {
    int code = -1;
    std::string out;
};

Run run_shell(const std::string& cmd) {
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    const int status = pclose(pipe);
    Run r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = std::move(out);
    return r;
}

Run cli(const std::string& args, bool merge_stderr = false) {
    return run_shell("\"" + g_cli + "\" " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null"));
}

json parse_out(const Run& r) {
    CAPTURE(r.out);
    return json::parse(r.out);
}

bool has(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

std::string tmp_path(const char* tag) {
    return "/tmp/monopoly_cli_" + std::to_string(getpid()) + "_" + tag;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    REQUIRE(f.good());
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("gen writes a plain edge list to stdout") {
    const Run r = cli("gen path:3");
    CHECK(r.code == 0);
    CHECK(r.out == "3 2\n0 1\n1 2\n");
}

TEST_CASE("gen structured output lists the edges") {
    const Run r = cli("gen path:3 --format structured");
    REQUIRE(r.code == 0);
    const json j = parse_out(r);
    CHECK(j["command"] == "gen");
    CHECK(j["family"] == "path");
    CHECK(j["params"] == json::array({3}));
    CHECK(j["n"] == 3);
    CHECK(j["m"] == 2);
    CHECK(j["edges"] == json::parse("[[0,1],[1,2]]"));
}

TEST_CASE("gen --out writes the file and solve reads it back") {
    const std::string path = tmp_path("c4.txt");
    const Run g = cli("gen cycle:4 --out " + path);
    CHECK(g.code == 0);
    CHECK(g.out.empty());
    CHECK(slurp(path) == "4 4\n0 1\n0 3\n1 2\n2 3\n");

    const Run s = cli("solve --in " + path + " --k 0 --format structured");
    REQUIRE(s.code == 0);
    const json j = parse_out(s);
    CHECK(j["optimum"] == 2);
    CHECK(j["witness"] == json::array({0, 1}));
    std::remove(path.c_str());
}

TEST_CASE("solve reports the five-vertex path resolution") {
    const Run r = cli("solve --gen path:5 --k 0 --format structured");
    REQUIRE(r.code == 0);
    const json j = parse_out(r);
    CHECK(j["command"] == "solve");
    CHECK(j["problem"] == "monopoly");
    CHECK(j["k"] == 0);
    CHECK(j["objective"] == "cardinality");
    CHECK(j["status"] == "optimal");
    CHECK(j["optimum"] == 3);
    CHECK(j["witness"] == json::array({1, 2, 3}));
    REQUIRE(j.contains("note"));
    const std::string note = j["note"];
    CHECK(has(note, "32"));
    CHECK(has(note, "3, not 2"));
    // the degree bounds always apply; P_5 is irregular and k < 1
    REQUIRE(j["bounds"].size() == 2);
    CHECK(j["bounds"][0]["name"] == "degree_lower_bound");
    CHECK(j["bounds"][1]["name"] == "degree_upper_bound");

    const Run t = cli("solve --gen path:5 --k 0");
    CHECK(t.code == 0);
    CHECK(has(t.out, "status: optimal"));
    CHECK(has(t.out, "minimum size: 3"));
    CHECK(has(t.out, "note: five-vertex path"));
}

TEST_CASE("solve handles every problem kind") {
    const json td = parse_out(cli("solve --gen cycle:8 --problem total-dom --format structured"));
    CHECK_FALSE(td.contains("k"));
    CHECK(td["optimum"] == 4);

    const json st = parse_out(
        cli("solve --gen complete:5 --problem signed-total --k 2 --format structured"));
    CHECK(st["objective"] == "weight");
    CHECK(st["optimum"] == 3);
    CHECK(st["witness"] == json::array({0, 1, 2, 3}));

    const json pw = parse_out(cli("solve --gen complete:5 --problem powerful --format structured"));
    CHECK(pw["optimum"] == 3);

    const json da = parse_out(
        cli("solve --gen complete:3 --problem def-off-alliance --k -2 --format structured"));
    CHECK(da["optimum"] == 1);
    CHECK(da["witness"] == json::array({0}));
}

TEST_CASE("solve reports infeasibility without failing") {
    const Run r = cli("solve --gen path:2 --problem signed-total --k 2 --format structured");
    CHECK(r.code == 0);
    const json j = parse_out(r);
    CHECK(j["status"] == "infeasible");
    CHECK(j["optimum"].is_null());
    CHECK(j["witness"] == json::array());
}

TEST_CASE("structured solve output is byte-identical across worker counts") {
    const Run r1 = cli("solve --gen cycle:30 --k 0 --workers 1 --format structured");
    const Run r3 = cli("solve --gen cycle:30 --k 0 --workers 3 --format structured");
    const Run r4 = cli("solve --gen cycle:30 --k 0 --workers 4 --format structured");
    REQUIRE(r1.code == 0);
    CHECK(r1.out == r3.out);
    CHECK(r1.out == r4.out);
    CHECK(parse_out(r1)["optimum"] == 16);
}

TEST_CASE("the order guard rejects big graphs unless lifted") {
    const Run blocked = cli("solve --gen complete:70 --k 0", true);
    CHECK(blocked.code == 2);
    CHECK(has(blocked.out, "64"));

    const Run lifted = cli("solve --gen complete:70 --k 0 --max-n-override --format structured");
    REQUIRE(lifted.code == 0);
    CHECK(parse_out(lifted)["optimum"] == 36);
}

TEST_CASE("verify accepts a good set and pinpoints a bad one") {
    const Run ok = cli("verify --gen path:5 --set 1,2,3 --k 0 --format structured");
    CHECK(ok.code == 0);
    const json jok = parse_out(ok);
    CHECK(jok["valid"] == true);
    CHECK(jok["condition"].is_null());
    CHECK(jok["violating_vertex"].is_null());

    const Run bad = cli("verify --gen path:5 --set 0,1 --k 0 --format structured");
    CHECK(bad.code == 1);
    const json jbad = parse_out(bad);
    CHECK(jbad["valid"] == false);
    CHECK(jbad["condition"] == "open k-monopoly control");
    CHECK(jbad["violating_vertex"] == 3);

    const Run pw = cli("verify --gen complete:5 --problem powerful --set 0,1 --k 0 "
                       "--format structured");
    CHECK(pw.code == 1);
    const json jpw = parse_out(pw);
    CHECK(jpw["condition"] == "defensive condition (k)");
    CHECK(jpw["violating_vertex"] == 0);
}

TEST_CASE("bounds lists every applicable record") {
    const Run r = cli("bounds --gen complete:5 --k 1 --format structured");
    REQUIRE(r.code == 0);
    const json j = parse_out(r);
    const json& b = j["bounds"];
    REQUIRE(b.size() == 7);
    CHECK(b[0]["name"] == "trivial_lower_bound");
    CHECK(b[0]["value"] == 2);
    CHECK(b[1]["name"] == "trivial_upper_bound");
    CHECK(b[1]["value"] == 5);
    CHECK(b[2]["name"] == "degree_lower_bound");
    CHECK(b[2]["value"] == 4);
    CHECK(b[3]["name"] == "degree_upper_bound");
    CHECK(b[3]["value"] == 4);
    CHECK(b[4]["name"] == "size_lower_bound");
    CHECK(b[4]["value"] == 3);
    CHECK(b[4]["applies"] == "k >= 1");
    CHECK(b[5]["name"] == "regular_lower_bound");
    CHECK(b[5]["value"] == 4);
    CHECK(b[6]["name"] == "closed_form");
    CHECK(b[6]["side"] == "exact");
    CHECK(b[6]["value"] == 4);
    CHECK(b[6]["applies"] == "complete:5");

    // graphs read from a file have no family, hence no closed form record
    const std::string path = tmp_path("k5.txt");
    REQUIRE(cli("gen complete:5 --out " + path).code == 0);
    const json file_j = parse_out(cli("bounds --in " + path + " --k 1 --format structured"));
    CHECK(file_j["bounds"].size() == 6);
    std::remove(path.c_str());
}

TEST_CASE("formula evaluates closed forms and rejects unsupported families") {
    const Run r = cli("formula --gen complete_bipartite:3,4 --k 1 --format structured");
    REQUIRE(r.code == 0);
    const json j = parse_out(r);
    CHECK(j["command"] == "formula");
    CHECK(j["family"] == "complete_bipartite");
    CHECK(j["params"] == json::array({3, 4}));
    CHECK(j["value"] == 6);

    const Run no = cli("formula --gen family_f:5 --k 1", true);
    CHECK(no.code == 2);
    CHECK(has(no.out, "error:"));
}

TEST_CASE("transform translates and strict mode rejects with the failed condition") {
    const json ok = parse_out(cli("transform --gen complete:5 --op powerful-to-signed "
                                  "--set 0,1,2 --k 0 --format structured"));
    CHECK(ok["result"]["b1"] == json::array({0, 1, 2}));
    CHECK(ok["result"]["b_minus1"] == json::array({3, 4}));
    CHECK(ok["result"]["weight"] == 1);
    CHECK(ok["result"]["signed_k"] == 1);

    const Run rej = cli("transform --gen path:4 --op signed-total-to-monopoly "
                        "--set 0,1 --level 2 --format structured");
    CHECK(rej.code == 1);
    const json jr = parse_out(rej);
    CHECK(jr["rejected"]["condition"] == "signed total 2-domination");
    CHECK(jr["rejected"]["vertex"] == 0);

    const Run loose = cli("transform --gen path:4 --op signed-total-to-monopoly "
                          "--set 0,1 --level 2 --no-strict --format structured");
    CHECK(loose.code == 0);
    const json jl = parse_out(loose);
    CHECK(jl["strict"] == false);
    CHECK(jl["result"]["monopoly"] == json::array({0, 1}));
    CHECK(jl["result"]["k"] == 1);
}

TEST_CASE("reduce reports the expansion and checks the size identity") {
    const std::string map_path = tmp_path("map.txt");
    const std::string h_path = tmp_path("h.txt");
    const Run r = cli("reduce --gen path:3 --out " + h_path + " --map " + map_path +
                      " --verify --format structured");
    REQUIRE(r.code == 0);
    const json j = parse_out(r);
    CHECK(j["n"] == 3);
    CHECK(j["m"] == 2);
    CHECK(j["h_n"] == 8);
    CHECK(j["h_m"] == 7);
    CHECK(j["added_vertices"] == 5);
    CHECK(j["added_edges"] == 5);
    CHECK(j["added_leaves"] == 2);
    CHECK(j["identity"]["status"] == "verified");
    CHECK(j["identity"]["lhs"] == 5);
    CHECK(j["identity"]["rhs"] == 5);
    CHECK(j["identity"]["equal"] == true);

    CHECK(slurp(map_path) ==
          "0 original 0 - -\n"
          "1 original 1 - -\n"
          "2 original 2 - -\n"
          "3 path 1 0 1\n"
          "4 path 1 0 2\n"
          "5 path 1 0 3\n"
          "6 path 1 0 4\n"
          "7 path 1 0 5\n");

    // the emitted expansion parses and has the documented size
    const json solved = parse_out(cli("solve --in " + h_path + " --k 0 --format structured"));
    CHECK(solved["n"] == 8);
    CHECK(solved["optimum"] == 5);
    std::remove(map_path.c_str());
    std::remove(h_path.c_str());
}

TEST_CASE("reduce skips the identity when the expansion exceeds the guard") {
    const Run r = cli("reduce --gen complete:7 --verify --format structured");
    CHECK(r.code == 0);
    const json j = parse_out(r);
    CHECK(j["h_n"] == 182);
    CHECK(j["identity"]["status"] == "too_large");
    CHECK(j["identity"]["lhs"].is_null());
    CHECK(j["identity"]["equal"].is_null());
}

TEST_CASE("partition finds splits and reports excluded cases") {
    const json found = parse_out(cli("partition --gen cycle:4 --k 0 --r 2 --format structured"));
    CHECK(found["status"] == "found");
    CHECK(found["parts"] == json::parse("[[0,1],[2,3]]"));

    const json excl = parse_out(cli("partition --gen cycle:8 --k 1 --r 2 --format structured"));
    CHECK(excl["status"] == "bound_excluded");
    CHECK(excl["parts"] == json::array());

    const json none = parse_out(
        cli("partition --gen cycle:8 --k 1 --r 2 --no-bound-check --format structured"));
    CHECK(none["status"] == "none_exists");
}

TEST_CASE("partition-check measures the two-part structure") {
    const Run r = cli("partition --gen cycle:8 --x 0,1,4,5 --y 2,3,6,7 --format structured");
    CHECK(r.code == 0);
    const json j = parse_out(r);
    CHECK(j["command"] == "partition-check");
    CHECK(j["split_degrees_equal"] == true);
    CHECK(j["all_degrees_even"] == true);
    CHECK(j["edges_in_x"] == 2);
    CHECK(j["edges_in_y"] == 2);
    CHECK(j["induced_sizes_equal"] == true);
    CHECK(j["cut"] == 4);
    CHECK(j["cut_identity"] == true);

    // sides that are not 0-monopolies are an input error, not a finding
    const Run bad = cli("partition --gen cycle:8 --x 0,1,2,3 --y 4,5,6,7", true);
    CHECK(bad.code == 2);
    CHECK(has(bad.out, "not a 0-monopoly"));
}

TEST_CASE("solve reads an edge list from stdin") {
    const Run r = run_shell("printf '5 4\\n0 1\\n1 2\\n2 3\\n3 4\\n' | \"" + g_cli +
                            "\" solve --in - --k 0 --format structured 2>/dev/null");
    REQUIRE(r.code == 0);
    CHECK(parse_out(r)["optimum"] == 3);
}

TEST_CASE("usage and input errors exit with 2") {
    CHECK(cli("solve --k 0", true).code == 2);                       // no graph source
    CHECK(cli("solve --in x.txt --gen cycle:4", true).code == 2);    // two sources
    CHECK(cli("nonsense", true).code == 2);                          // unknown subcommand
    CHECK(cli("gen cycle:2", true).code == 2);                       // bad family parameter
    CHECK(cli("verify --gen cycle:4", true).code == 2);              // --set is required
    CHECK(cli("solve --gen cycle:8 --k 7", true).code == 2);         // k out of range
    CHECK(cli("verify --gen cycle:4 --set 0,9 --k 0", true).code == 2);
    CHECK(cli("solve --in /nonexistent/f.txt", true).code == 2);
    const Run help = cli("--help");
    CHECK(help.code == 0);
    CHECK(has(help.out, "solve"));
}

int main(int argc, char** argv) {
    doctest::Context ctx;
    std::vector<const char*> pass;
    for (int i = 0; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg.rfind("--cli=", 0) == 0) g_cli = arg.substr(6);
        else pass.push_back(argv[i]);
    }
    if (g_cli.empty()) {
        std::cerr << "cli_test: pass --cli=<path to the command line binary>\n";
        return 1;
    }
    ctx.applyCommandLine(static_cast<int>(pass.size()), pass.data());
    return ctx.run();
}
