// End-to-end checks of the command-line surface: exit codes, JSON schema,
// spec round-trips. Invoked with the binary path as argv[1].

#include <sys/wait.h>

#include <cstdio>
#include <iostream>
#include <string>

#include "json.hpp"

namespace {

std::string g_binary;
int g_failures = 0;

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = g_binary + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        std::cerr << "FATAL cannot spawn: " << cmd << "\n";
        std::exit(2);
    }
    std::string out;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

void expect(bool ok, const std::string& what) {
    if (!ok) {
        ++g_failures;
        std::cerr << "[FAIL] " << what << "\n";
    } else {
        std::cout << "[ ok ] " << what << "\n";
    }
}

const char* kK23 = R"('{"family":"integer_scaled","multipliers":[2,3]}')";
const char* kK24 = R"('{"family":"integer_scaled","multipliers":[2,4]}')";
const char* kZ6 = R"('{"family":"modular_scaled","modulus":6,"multipliers":[1,2,3,4,5]}')";
const char* kCoset12 = R"('{"family":"modular_coset","modulus":12,"coset":[0,6]}')";

void test_describe() {
    RunResult r = run(std::string("describe --ring ") + kK23);
    expect(r.exit_code == 0, "describe exits 0");
    auto j = nlohmann::json::parse(r.out);
    expect(j["proper"] == true, "describe: K={2,3} is proper");
    expect(j["strongly_distributive"] == false, "describe: K={2,3} not strongly distributive");

    auto coset = nlohmann::json::parse(run(std::string("describe --ring ") + kCoset12).out);
    expect(coset["strongly_distributive"] == true, "describe: coset ring strongly distributive");

    auto degenerate = nlohmann::json::parse(
        run(R"(describe --ring '{"family":"modular_scaled","modulus":6,"multipliers":[1]}')").out);
    expect(degenerate["proper"] == false, "describe: singleton multiplier flagged improper");

    expect(run("describe --ring '{\"family\":\"nope\"}'").exit_code == 2,
           "describe: malformed spec exits 2");
    expect(run("describe --ring '{bad json'").exit_code == 2, "describe: bad JSON exits 2");
    expect(run("describe").exit_code == 2, "describe: missing --ring exits 2");
}

void test_classify() {
    RunResult r = run(std::string("classify --ring ") + kK23 +
                      " --ideal 12Z"
                      " --expect prime=false,primary=false,2a=false,2ap=true,radical=6Z");
    expect(r.exit_code == 0, "classify 12Z: expectations met");
    auto j = nlohmann::json::parse(r.out);
    expect(j["minimal_primes"] == nlohmann::json::array({"2Z", "3Z"}),
           "classify 12Z: minimal primes 2Z, 3Z");
    expect(j["verdicts"]["primary"]["witness"]["kind"] == "pair",
           "classify 12Z: primary witness is a pair");

    expect(run(std::string("classify --ring ") + kK23 + " --ideal 12Z --expect prime=true")
                   .exit_code == 1,
           "classify: failed expectation exits 1");

    RunResult z6 = run(std::string("classify --ring ") + kZ6 +
                       R"( --ideal '{"elements":[0]}' --expect 2a=true,primary=false,prime=false)");
    expect(z6.exit_code == 0, "classify Z6 zero ideal: expectations met");

    RunResult cu = run(std::string("classify --ring ") + kK24 + " --ideal 2Z --expect cu=true");
    expect(cu.exit_code == 0, "classify K={2,4} 2Z: C_u expectation met");

    expect(run(std::string("classify --ring ") + kK23 + " --ideal '{\"elements\":[0,2]}'")
                   .exit_code == 2,
           "classify: family-mismatched ideal exits 2");
}

void test_divergence_flag() {
    RunResult r = run(std::string("classify --ring ") + kK24 + " --ideal 120Z");
    expect(r.exit_code == 0, "classify 120Z exits 0");
    auto j = nlohmann::json::parse(r.out);
    expect(!j["divergences"].empty(), "classify 120Z: divergence flagged");
    bool found = false;
    for (const auto& d : j["divergences"])
        if (d["id"] == "E3.3.2" && d["kind"] == "2ap" && d["computed"] == "false") found = true;
    expect(found, "classify 120Z: flags the recorded 2AP claim");
    expect(j["verdicts"]["2ap"]["holds"] == false, "classify 120Z: definition-faithful verdict");
    expect(j["verdicts"]["2ap"]["witness"]["kind"] == "triple",
           "classify 120Z: triple witness attached");
}

void test_round_trip() {
    RunResult r = run(std::string("classify --ring ") + kK23 + " --ideal 12Z");
    auto j = nlohmann::json::parse(r.out);
    // re-feed the emitted specs; verdicts must be identical
    std::string ring_spec = "'" + j["ring"].dump() + "'";
    std::string ideal_spec = "'" + j["ideal_spec"].dump() + "'";
    RunResult again = run("classify --ring " + ring_spec + " --ideal " + ideal_spec);
    expect(again.exit_code == 0, "round trip: emitted specs re-parse");
    auto j2 = nlohmann::json::parse(again.out);
    expect(j["verdicts"] == j2["verdicts"] && j["radical"] == j2["radical"],
           "round trip: identical classification");

    RunResult quotient = run(
        R"(describe --ring '{"projection":{"ring":{"family":"integer_scaled","multipliers":[2,4]},"ideal":{"principal":4}}}')");
    expect(quotient.exit_code == 0, "projection ring spec accepted");
    auto q = nlohmann::json::parse(quotient.out);
    expect(q["ring"]["family"] == "modular_scaled" && q["ring"]["modulus"] == 4,
           "projection spec resolves to the quotient ring");
}

void test_laws_cmd() {
    RunResult r = run("laws --law P2.5 --grid dmax=20,modular=0 --format json");
    expect(r.exit_code == 0, "laws P2.5 exits 0");
    auto j = nlohmann::json::parse(r.out);
    expect(j["law"] == "P2.5" && j["violations"].empty(), "laws P2.5: no violations");

    expect(run("laws --law X9.9").exit_code == 2, "laws: unknown id exits 2");
    expect(run("laws").exit_code == 2, "laws: missing --law/--all exits 2");

    RunResult t318 = run(std::string("laws --law T3.18 --ring ") + kCoset12);
    expect(t318.exit_code == 0, "laws T3.18 on an explicit coset ring");
    expect(run(std::string("laws --law T3.18 --ring ") + kK23).exit_code == 2,
           "laws T3.18 rejects a non-coset ring");

    // deterministic output for fixed grid and seed
    RunResult a = run("laws --law L2.1 --grid dmax=12,modular=0 --seed 5");
    RunResult b = run("laws --law L2.1 --grid dmax=12,modular=0 --seed 5");
    expect(a.out == b.out, "laws: byte-identical report for fixed grid+seed");
}

void test_search_cmd() {
    RunResult r = run(std::string("search --holds 2ap --fails 2a --ring ") + kK23 +
                      " --grid dmax=30");
    expect(r.exit_code == 0, "search 2ap/not-2a exits 0");
    auto j = nlohmann::json::parse(r.out);
    bool has12 = false;
    for (const auto& m : j["matches"])
        if (m["ideal"] == "12Z") has12 = true;
    expect(has12, "search: 12Z separates 2ap from 2a");

    expect(run(std::string("search --holds prime --fails primary --ring ") + kK23 +
               " --grid dmax=20")
                   .exit_code == 1,
           "search: empty result exits 1");
    expect(run("search --holds wat --fails 2a").exit_code == 2,
           "search: unknown predicate exits 2");
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: test_cli <path-to-hyperlab-binary>\n";
        return 2;
    }
    g_binary = argv[1];
    test_describe();
    test_classify();
    test_divergence_flag();
    test_round_trip();
    test_laws_cmd();
    test_search_cmd();
    if (g_failures) {
        std::cerr << g_failures << " CLI check(s) failed\n";
        return 1;
    }
    std::cout << "all CLI checks passed\n";
    return 0;
}
