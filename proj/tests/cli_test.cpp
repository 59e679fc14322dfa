#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "caliber/catalog.hpp"
#include "caliber/json_io.hpp"
#include "caliber/span7.hpp"

using namespace caliber;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// Runs the CLI binary through the shell, capturing exit code and both
// streams via scratch files in the test working directory.
RunResult run_cli_process(const std::string& args) {
    static int counter = 0;
    ++counter;
    std::string out_path = "cli_stdout_" + std::to_string(counter) + ".txt";
    std::string err_path = "cli_stderr_" + std::to_string(counter) + ".txt";
    std::string command = std::string("\"") + CALIBER_CLI_PATH + "\" " + args +
                          " > " + out_path + " 2> " + err_path;
    int status = std::system(command.c_str());
    RunResult result;
    if (WIFEXITED(status)) result.code = WEXITSTATUS(status);
    result.out = slurp(out_path);
    result.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return result;
}

// Writes a form to a scratch JSON file and returns its path.
std::string write_form(const std::string& name, const KForm& form) {
    std::string path = "cli_form_" + name + ".json";
    std::ofstream out(path);
    out << form_to_json_text(form, 2) << "\n";
    return path;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("comass of the Cayley form, exact path") {
    std::string path = write_form("cay", from_span(Span7{1, 1, 1, 1, -1, -1, -1}));
    RunResult plain = run_cli_process("comass --input " + path + " --method exact");
    CHECK(plain.code == 0);
    CHECK(plain.out == "1\n");

    RunResult as_json = run_cli_process("comass --input " + path + " --json");
    CHECK(as_json.code == 0);
    auto parsed = nlohmann::json::parse(as_json.out);
    CHECK(parsed["value"] == "1");
    CHECK(parsed["method"] == "exact");
    CHECK(parsed["exact"] == true);
    std::remove(path.c_str());
}

TEST_CASE("exact method rejects forms outside the span") {
    KForm simple = kform(4);
    add_term(simple, {1, 2, 3, 4}, Rat(1));
    std::string path = write_form("plain", simple);
    RunResult r = run_cli_process("comass --input " + path + " --method exact");
    CHECK(r.code == 1);
    CHECK(contains(r.err, "--method auto"));

    // The numeric fallback handles the same input.
    RunResult numeric = run_cli_process("comass --input " + path +
                                        " --method numeric --restarts 8 --json");
    CHECK(numeric.code == 0);
    auto parsed = nlohmann::json::parse(numeric.out);
    CHECK(parsed["exact"] == false);
    CHECK(parsed["method"] == "numeric");
    CHECK(parsed.contains("tol"));
    double value = parsed["value"].get<double>();
    CHECK(value > 1.0 - 1e-6);
    CHECK(value < 1.0 + 1e-6);
    std::remove(path.c_str());
}

TEST_CASE("bad inputs exit with the usage code") {
    RunResult missing = run_cli_process("comass --input does_not_exist.json");
    CHECK(missing.code == 2);
    CHECK(contains(missing.err, "input error"));

    std::ofstream bad("cli_form_bad.json");
    bad << "{ not json";
    bad.close();
    RunResult malformed = run_cli_process("comass --input cli_form_bad.json");
    CHECK(malformed.code == 2);
    CHECK(contains(malformed.err, "input error"));
    std::remove("cli_form_bad.json");

    RunResult no_subcommand = run_cli_process("");
    CHECK(no_subcommand.code == 2);

    RunResult bad_method = run_cli_process("comass --input x.json --method guess");
    CHECK(bad_method.code == 2);
}

TEST_CASE("decompose prints vertex weights") {
    std::string path = write_form("cay2", from_span(Span7{1, 1, 1, 1, -1, -1, -1}));
    RunResult r = run_cli_process("decompose --input " + path);
    CHECK(r.code == 0);
    CHECK(contains(r.out, "omega1 1\n"));
    CHECK(contains(r.out, "eta4 0\n"));
    std::remove(path.c_str());

    std::string off_center = write_form("gen2", from_span(Span7{0, 1, 0, 0, 0, 0, 0}));
    RunResult outside = run_cli_process("decompose --input " + off_center + " --json");
    CHECK(outside.code == 1);
    auto parsed = nlohmann::json::parse(outside.out);
    CHECK(parsed["in_hull"] == false);
    std::remove(off_center.c_str());
}

TEST_CASE("stabilizer reports dimension and kernel") {
    std::string path = write_form("cay3", from_span(Span7{1, 1, 1, 1, -1, -1, -1}));
    RunResult r = run_cli_process("stabilizer --input " + path + " --json");
    CHECK(r.code == 0);
    auto parsed = nlohmann::json::parse(r.out);
    CHECK(parsed["dim"] == 21);
    CHECK(parsed["kernel"].size() == 21);
    CHECK(parsed["plane_order"].size() == 28);
    std::remove(path.c_str());
}

TEST_CASE("catalog renders in all three formats") {
    RunResult csv = run_cli_process("catalog --format csv");
    CHECK(csv.code == 0);
    int lines = 0;
    for (char c : csv.out) {
        if (c == '\n') ++lines;
    }
    CHECK(lines == 13);
    CHECK(contains(csv.out, "type_label,label,name,"));
    CHECK(contains(csv.out, "\"(1,0)\",phi,\"Cayley geometry\""));
    CHECK(contains(csv.out, "mu(verbatim)"));

    RunResult as_json = run_cli_process("catalog --format json");
    CHECK(as_json.code == 0);
    auto parsed = nlohmann::json::parse(as_json.out);
    CHECK(parsed["entries"].size() == 9);
    CHECK(parsed["counterexamples"].size() == 2);

    RunResult md = run_cli_process("catalog");
    CHECK(md.code == 0);
    CHECK(contains(md.out, "| (1,0) | Cayley geometry | cay |"));
    CHECK(contains(md.out, "comass-2 combinations:"));
}

TEST_CASE("normal-form succeeds on span input") {
    std::string path = write_form("cay4", from_span(Span7{1, 1, 1, 1, -1, -1, -1}));
    RunResult r = run_cli_process("normal-form --input " + path + " --json");
    CHECK(r.code == 0);
    auto parsed = nlohmann::json::parse(r.out);
    CHECK(parsed["success"] == true);
    CHECK(parsed["restarts_used"] == 1);
    CHECK(parsed["coeffs"][0] == "1");
    CHECK(parsed["rotation"].size() == 8);
    std::remove(path.c_str());

    KForm simple = kform(4);
    add_term(simple, {1, 2, 3, 4}, Rat(1));
    std::string not_sd = write_form("plain2", simple);
    RunResult rejected = run_cli_process("normal-form --input " + not_sd);
    CHECK(rejected.code == 1);
    CHECK(contains(rejected.err, "self-dual"));
    std::remove(not_sd.c_str());
}

TEST_CASE("random forms are reproducible through the CLI") {
    RunResult a = run_cli_process("random --seed 5 --class span");
    RunResult b = run_cli_process("random --seed 5 --class span");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    KForm form = form_from_json_text(a.out);
    CHECK(form.degree == 4);
    CHECK(to_span(form).residual.is_zero());

    RunResult c = run_cli_process("random --seed 6 --class general");
    CHECK(c.code == 0);
    CHECK(c.out != a.out);
}

}  // TEST_SUITE
