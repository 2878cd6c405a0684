#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <string>

// ADLV_CLI_PATH is injected by the build as the path of the built binary.

using json = nlohmann::json;

namespace {

struct RunResult {
    int code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(ADLV_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    int st = pclose(p);
    return {WEXITSTATUS(st), out};
}

json parse_doc(const RunResult& r) {
    json j = json::parse(r.out, nullptr, false);
    REQUIRE(!j.is_discarded());
    CHECK(j["schema_version"] == 1);
    return j;
}

std::string write_pgl2_datum() {
    std::string path = "/tmp/adlv_test_pgl2.json";
    std::ofstream f(path);
    f << R"({"type": "A1", "components": 1})" << "\n";
    return path;
}

}  // namespace

TEST_CASE("pi0 on the rank-one catalog example") {
    std::string datum = write_pgl2_datum();
    auto r = run_cli("pi0 --datum " + datum + " --lambda \"[2]\" --b \"t[2];e\"");
    CHECK(r.code == 0);
    json j = parse_doc(r);
    CHECK(j["command"] == "pi0");
    CHECK(j["result"]["size"] == 2);
    // b = t^lambda is not HN-irreducible, so the count is exploratory only
    CHECK(j["result"]["formula_asserted"] == false);
    CHECK(j["result"].contains("note"));

    // the basic class is HN-irreducible and carries the full certificate
    auto rb = run_cli("pi0 --datum " + datum + " --lambda \"[2]\" --b \"e\"");
    CHECK(rb.code == 0);
    json jb = parse_doc(rb);
    CHECK(jb["result"]["size"] == 2);
    CHECK(jb["result"]["formula_asserted"] == true);
    CHECK(jb["result"]["certificate"]["kernel_span_ok"] == true);
    CHECK(jb["result"]["certificate"]["generator_span_ok"] == true);
}

TEST_CASE("nonempty reports the failing criterion with exit 2") {
    std::string datum = write_pgl2_datum();
    auto r = run_cli("nonempty --datum " + datum + " --lambda \"[1]\" --b \"e\"");
    CHECK(r.code == 2);
    json j = parse_doc(r);
    CHECK(j["result"]["nonempty"] == false);
    CHECK(j["result"]["criterion"] == "kappa mismatch");

    auto ok = run_cli("nonempty --datum " + datum + " --lambda \"[2]\" --b \"e\"");
    CHECK(ok.code == 0);
    CHECK(parse_doc(ok)["result"]["nonempty"] == true);
}

TEST_CASE("invariants subcommand") {
    auto r = run_cli("invariants --type A1 --b \"t[1];s1\"");
    CHECK(r.code == 0);
    json j = parse_doc(r);
    CHECK(j["result"]["basic"] == true);
    CHECK(j["result"]["superbasic"] == true);
    CHECK(j["result"]["nu"] == json::array({"0"}));
}

TEST_CASE("verify emits a passing report") {
    auto r = run_cli("verify --lemma gashi --type A2 --bound 4");
    CHECK(r.code == 0);
    json j = parse_doc(r);
    CHECK(j["report"]["lemma_id"] == "gashi");
    CHECK(j["report"]["status"] == "PASS");
    CHECK(j["report"]["cases_run"].get<int>() > 0);
    CHECK(j["report"]["failures"] == json::array());
    // wall time lives on stderr, never in the document
    CHECK(r.out.find("wall_time") == std::string::npos);
}

TEST_CASE("schema violations exit 3") {
    // malformed vector
    auto r1 = run_cli("pi0 --type A1 --lambda \"oops\" --b \"e\"");
    CHECK(r1.code == 3);
    CHECK(parse_doc(r1)["kind"] == "schema");

    // unknown field in the datum document
    std::string path = "/tmp/adlv_test_bad_datum.json";
    {
        std::ofstream f(path);
        f << R"({"type": "A1", "rank": 1})" << "\n";
    }
    auto r2 = run_cli("pi0 --datum " + path + " --lambda \"[2]\" --b \"e\"");
    CHECK(r2.code == 3);
    CHECK(parse_doc(r2)["kind"] == "schema");

    // unknown subcommand never reaches dispatch
    auto r3 = run_cli("frobnicate");
    CHECK(r3.code == 3);
}

TEST_CASE("mathematical domain errors exit 2") {
    auto r = run_cli("verify --lemma no_such_lemma --type A1");
    CHECK(r.code == 2);
    CHECK(parse_doc(r)["kind"] == "domain");
}

TEST_CASE("output is byte-identical across runs and --out mirrors stdout") {
    std::string out_path = "/tmp/adlv_test_out.json";
    auto r1 = run_cli("verify --lemma conv_chain --type A2 --sigma \"(0 1)\" --out " + out_path);
    auto r2 = run_cli("verify --lemma conv_chain --type A2 --sigma \"(0 1)\"");
    CHECK(r1.code == 0);
    CHECK(r1.out == r2.out);
    std::ifstream f(out_path);
    std::string mirrored((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    CHECK(mirrored == r1.out);
}
