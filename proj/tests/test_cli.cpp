#include <doctest.h>

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <unistd.h>

#include "koszul/report.hpp"

using namespace koszul;

namespace {

std::string fixture(const std::string& name) {
    return std::string(KOSZUL_FIXTURE_DIR) + "/" + name;
}

std::string temp_path(const std::string& suffix) {
    static std::atomic<int> counter{0};
    return "/tmp/koszul-test-" + std::to_string(getpid()) + "-" +
           std::to_string(counter++) + suffix;
}

struct CliRun {
    int exit_code = -1;
    std::string output;
};

// Runs the installed binary, capturing stdout+stderr.
CliRun run_cli(const std::string& args) {
    std::string out_file = temp_path(".out");
    std::string cmd = std::string(KOSZUL_CLI_PATH) + " " + args + " > " + out_file +
                      " 2>&1";
    int rc = std::system(cmd.c_str());
    CliRun run;
    run.exit_code = WEXITSTATUS(rc);
    std::ifstream in(out_file, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    run.output = ss.str();
    std::remove(out_file.c_str());
    return run;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("analyze emits the sequence block of the three-relation fixture") {
    CliRun run = run_cli("analyze " + fixture("a3.json") + " --format machine");
    REQUIRE(run.exit_code == 0);
    Json j = Json::parse(run.output);
    CHECK(j["command"] == "analyze");
    const Json& plain = j["sequences"]["plain"];
    REQUIRE(plain.size() == 7);
    CHECK(plain[0]["values"] == Json::array({0}));
    CHECK(plain[1]["values"] == Json::array({1, 0}));
    CHECK(plain[2]["values"] == Json::array({2, 1}));
    CHECK(plain[3]["values"] == Json::array({3, 2, 0}));
    CHECK(plain[4]["values"] == Json::array({4, 3, 2, 0}));
    CHECK(plain[5]["values"] == Json::array({5, 4}));
    CHECK(plain[6]["values"] == Json::array({6, 5, 3, 2, 0}));
}

TEST_CASE("analyze handles the one-vertex pattern") {
    CliRun run = run_cli("analyze " + fixture("n0.json") + " --format machine");
    REQUIRE(run.exit_code == 0);
    Json j = Json::parse(run.output);
    CHECK(j["dual"]["objects"].size() == 1);
    CHECK(j["dual"]["morphisms"].empty());
    CHECK(j["dual"]["mu"].empty());
}

TEST_CASE("validation failures exit with code 1") {
    CliRun run = run_cli("analyze " + fixture("bad_len.json"));
    CHECK(run.exit_code == 1);
    CHECK(run.output.find("(2,3)") != std::string::npos);
    CliRun missing = run_cli("analyze " + fixture("no_such_file.json"));
    CHECK(missing.exit_code == 1);

    auto with_doc = [&](const std::string& text) {
        std::string path = temp_path(".json");
        std::ofstream(path) << text;
        CliRun r = run_cli("analyze " + path);
        std::remove(path.c_str());
        return r.exit_code;
    };
    CHECK(with_doc("not json at all") == 1);
    CHECK(with_doc("{\"relations\": []}") == 1);             // missing n
    CHECK(with_doc("{\"n\": 3}") == 1);                      // missing relations
    CHECK(with_doc("{\"n\": 3, \"relations\": [[0]]}") == 1);  // bad pair
    CHECK(with_doc("{\"n\": 3, \"relations\": \"x\"}") == 1);
    CHECK(with_doc("{\"n\": 2.5, \"relations\": []}") == 1);
    CHECK(with_doc("{\"n\": 100000, \"relations\": []}") == 1);  // above the cap
}

TEST_CASE("forcing the unsound convention fails verification") {
    // the quadratic n=4 pattern is the minimal counterexample for the
    // first-arg reading, so forcing it must exit 2 with the failing chain
    CliRun run = run_cli("verify " + fixture("b42.json") +
                         " --convention first-arg --format machine");
    CHECK(run.exit_code == 2);
    Json j = Json::parse(run.output);
    bool assoc_failed = false;
    for (const auto& c : j["report"]["checks"])
        if (c["name"] == "associativity")
            assoc_failed = c["status"] == "fail" && !c["failures"].empty();
    CHECK(assoc_failed);
    // under the default convention the same pattern passes everything
    CHECK(run_cli("verify " + fixture("b42.json")).exit_code == 0);
}

TEST_CASE("verify passes the shipped fixtures") {
    CHECK(run_cli("verify " + fixture("a1.json")).exit_code == 0);
    CliRun a2 = run_cli("verify " + fixture("a2.json") + " --format machine");
    REQUIRE(a2.exit_code == 0);
    Json j = Json::parse(a2.output);
    CHECK(j["status"] == "pass");
    // the oracle's degree-2 entries sit exactly at (3,0) and (6,3): read the
    // dual's mu-backed hom table out of the analyze report instead
    CliRun an = run_cli("analyze " + fixture("a2.json") + " --format machine");
    Json a = Json::parse(an.output);
    int deg2 = 0;
    for (const auto& m : a["dual"]["morphisms"])
        if (m["degree"] == 2) {
            ++deg2;
            bool ok = (m["src"] == "B(6)" && m["dst"] == "B(3)") ||
                      (m["src"] == "B(3)" && m["dst"] == "B(0)");
            CHECK(ok);
        }
    CHECK(deg2 == 2);
}

TEST_CASE("a corrupted mu entry makes verification fail with code 2") {
    CliRun run = run_cli("verify " + fixture("a3.json") +
                         " --debug-corrupt-mu \"eta(3,0);eta(6,3)\" --format machine");
    CHECK(run.exit_code == 2);
    Json j = Json::parse(run.output);
    CHECK(j["status"] == "fail");
    bool found_chain = false;
    for (const auto& c : j["report"]["checks"])
        if (c["name"] == "associativity" && c["status"] == "fail")
            found_chain = !c["failures"].empty();
    CHECK(found_chain);

    CliRun bad_key = run_cli("verify " + fixture("a3.json") +
                             " --debug-corrupt-mu \"eta(9,9)\"");
    CHECK(bad_key.exit_code == 1);
}

TEST_CASE("sweep respects the ceiling and lists patterns") {
    CliRun run = run_cli("sweep --n-max 3 --format machine");
    REQUIRE(run.exit_code == 0);
    Json j = Json::parse(run.output);
    CHECK(j["patterns"] == 9);
    CHECK(j["adjudication"]["last_arg"]["status"] == "pass");
    CHECK(j["adjudication"]["chosen"] == "last-arg");

    CliRun trivial = run_cli("sweep --n-max 0 --format machine");
    CHECK(trivial.exit_code == 0);
    CHECK(Json::parse(trivial.output)["patterns"] == 1);

    CliRun over = run_cli("sweep --n-max 9");
    CHECK(over.exit_code == 1);
    CliRun raised = run_cli("sweep --n-max 1 --ceiling 1");
    CHECK(raised.exit_code == 0);
}

TEST_CASE("a failing sweep exits 2 and names the minimal failing pattern") {
    CliRun run = run_cli("sweep --n-max 4 --convention first-arg --format machine");
    CHECK(run.exit_code == 2);
    Json j = Json::parse(run.output);
    CHECK(j["status"] == "fail");
    std::string minimal = j["minimal_failure"].get<std::string>();
    CHECK(minimal.find("(0,2),(1,3),(2,4)") != std::string::npos);
    CHECK(minimal.find("associativity") != std::string::npos);
}

TEST_CASE("sweep reports are identical for any job count") {
    CliRun serial = run_cli("sweep --n-max 3 --format machine");
    CliRun parallel = run_cli("sweep --n-max 3 --jobs 4 --format machine");
    CHECK(serial.exit_code == parallel.exit_code);
    CHECK(serial.output == parallel.output);
}

TEST_CASE("reports are byte-identical across runs") {
    for (std::string args :
         {std::string("analyze ") + fixture("a3.json") + " --format machine",
          std::string("analyze ") + fixture("a3.json"),
          std::string("verify ") + fixture("a1.json") + " --format machine"}) {
        CliRun first = run_cli(args);
        CliRun second = run_cli(args);
        CHECK(first.exit_code == second.exit_code);
        CHECK(first.output == second.output);
    }
}

TEST_CASE("diagram subcommand writes the golden bytes") {
    std::string out1 = temp_path(".svg");
    std::string out2 = temp_path(".svg");
    CHECK(run_cli("diagram " + fixture("a1.json") + " --out " + out1).exit_code == 0);
    CHECK(run_cli("diagram " + fixture("a1.json") + " --out " + out2).exit_code == 0);
    CHECK(slurp(out1) == slurp(out2));
    CHECK(slurp(out1) == slurp(fixture("goldens/a1.svg")));
    std::remove(out1.c_str());
    std::remove(out2.c_str());

    CliRun bad = run_cli("diagram " + fixture("bad_len.json") + " --out " + out1);
    CHECK(bad.exit_code == 1);

    // i/o failures are reported distinctly from validation errors
    CliRun io = run_cli("diagram " + fixture("a1.json") +
                        " --out /nonexistent-dir/x.svg");
    CHECK(io.exit_code == 1);
    CHECK(io.output.find("io error") != std::string::npos);
}

TEST_CASE("analyze and verify reports match the goldens") {
    CliRun machine = run_cli("analyze " + fixture("a3.json") + " --format machine");
    CHECK(machine.output == slurp(fixture("goldens/a3.analyze.json")));
    CliRun human = run_cli("analyze " + fixture("a1.json"));
    CHECK(human.output == slurp(fixture("goldens/a1.analyze.txt")));
    CliRun verify = run_cli("verify " + fixture("a1.json") + " --format machine");
    CHECK(verify.output == slurp(fixture("goldens/a1.verify.json")));
}

TEST_CASE("--out writes the report to a file") {
    std::string out = temp_path(".json");
    CliRun run = run_cli("analyze " + fixture("a3.json") + " --format machine --out " + out);
    CHECK(run.exit_code == 0);
    CHECK(run.output.empty());
    CHECK(slurp(out) == slurp(fixture("goldens/a3.analyze.json")));
    std::remove(out.c_str());
}

TEST_CASE("corrupting a mu entry shows up in the analyze table") {
    CliRun run = run_cli("analyze " + fixture("a3.json") +
                         " --debug-corrupt-mu \"eta(3,0);eta(6,3)\" --format machine");
    REQUIRE(run.exit_code == 0);
    Json j = Json::parse(run.output);
    bool found = false;
    for (const auto& e : j["dual"]["mu"])
        if (e["args"] == Json::array({"eta(3,0)", "eta(6,3)"})) {
            found = true;
            CHECK(e["sign"] == -1);  // flipped from +1
        }
    CHECK(found);
}

TEST_CASE("human and machine renderings carry the same verdicts") {
    CliRun machine = run_cli("verify " + fixture("a1.json") + " --format machine");
    CliRun human = run_cli("verify " + fixture("a1.json") + " --format human");
    Json j = Json::parse(machine.output);
    for (const auto& c : j["report"]["checks"]) {
        std::string name = c["name"].get<std::string>();
        CHECK(human.output.find(name) != std::string::npos);
    }
    CHECK(human.output.find("status: pass") != std::string::npos);
}

TEST_SUITE_END();
