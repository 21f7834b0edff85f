// End-to-end checks of the eqeuler binary. The binary path comes from the
// EQEULER_BIN environment variable (set by CTest).

#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "json.hpp"

namespace {

std::string binary() {
    const char* env = std::getenv("EQEULER_BIN");
    return env ? env : "./build/tools/eqeuler";
}

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = binary() + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf;
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    int status = pclose(p);
    return {WEXITSTATUS(status), out};
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    f << text;
}

const char* kS3 = "/tmp/eqeuler_test_s3.json";
const char* kZ5 = "/tmp/eqeuler_test_z5.json";
const char* kPoint = "/tmp/eqeuler_test_pt.json";        // one generator image (Z/5)
const char* kPointPlain = "/tmp/eqeuler_test_pt2.json";  // no action block
const char* kSphere = "/tmp/eqeuler_test_sphere.json";

void setup_files() {
    write_file(kS3, R"({"degree":3,"generators":[[1,2,0],[1,0,2]]})");
    write_file(kZ5, R"({"degree":5,"generators":[[1,2,3,4,0]]})");
    write_file(kPoint,
               R"({"vertices":1,"simplices":[[0]],"action":{"generator_images":[[0]]}})");
    write_file(kPointPlain, R"({"vertices":1,"simplices":[[0]]})");
}

}  // namespace

TEST_CASE("group info command") {
    setup_files();
    RunResult r = run(std::string("group ") + kS3);
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["order"] == 6);
    CHECK(j["subgroup_classes"].size() == 4);
    CHECK(j["conjugacy_classes"]["Q"] == 3);
}

TEST_CASE("reps table command") {
    setup_files();
    RunResult r = run(std::string("reps table ") + kZ5 + " --field R");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["irreducibles"].size() == 3);
    CHECK(j["irreducibles"][0]["degree"] == 1);
    CHECK(j["irreducibles"][1]["degree"] == 2);
    CHECK(j["irreducibles"][1]["values"][1]["e"] == 5);
}

TEST_CASE("marks command") {
    setup_files();
    RunResult r = run(std::string("marks ") + kS3);
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["table_of_marks"].size() == 4);
    CHECK(j["table_of_marks"][0][0] == 6);
    CHECK(j["j1_matrix"].size() == 4);
}

TEST_CASE("builtin piped into euler reproduces the torsion class") {
    write_file(kSphere, run("builtin s3-sphere3").out);
    RunResult r = run(std::string("euler --field R < ") + kSphere);
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["h0_r"]["free_rank"] == 3);
    CHECK(j["h0_r"]["torsion"] == nlohmann::json::array({2}));
    CHECK(j["class_order"] == 2);
    CHECK(j["verify"]["all_pass"] == true);
}

TEST_CASE("euler on the Z/5 point") {
    setup_files();
    RunResult r = run(std::string("euler ") + kZ5 + " " + kPoint + " --field R");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["h0_r"]["free_rank"] == 3);
    CHECK(j["h0_q"]["free_rank"] == 2);
}

TEST_CASE("reports are byte-identical across runs") {
    setup_files();
    RunResult a = run(std::string("euler ") + kZ5 + " " + kPoint + " --field Q");
    RunResult b = run(std::string("euler ") + kZ5 + " " + kPoint + " --field Q");
    CHECK(a.out == b.out);
}

TEST_CASE("verify command exit code") {
    setup_files();
    RunResult ok = run(std::string("verify ") + kS3 + " " + kPointPlain);
    CHECK(ok.exit_code == 0);
    auto j = nlohmann::json::parse(ok.out);
    CHECK(j["verify"]["all_pass"] == true);
}

TEST_CASE("input errors exit with code 1 and structured stderr") {
    write_file("/tmp/eqeuler_bad.json", R"({"degree":2,"generators":[[0,0]]})");
    RunResult r = run("group /tmp/eqeuler_bad.json");
    CHECK(r.exit_code == 1);
    RunResult missing = run("group /tmp/eqeuler_no_such_file.json");
    CHECK(missing.exit_code == 1);
}

TEST_CASE("group cap override via environment") {
    setup_files();
    std::string cmd = std::string("EQEULER_GROUP_CAP=2 ") + binary() + " group " + kS3 +
                      " 2>/dev/null";
    int status = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(status) == 1);
}

TEST_CASE("euler writes reports with --out") {
    setup_files();
    RunResult r = run(std::string("euler ") + kZ5 + " " + kPoint +
                      " --field R --out /tmp/eqeuler_report.json");
    REQUIRE(r.exit_code == 0);
    std::ifstream in("/tmp/eqeuler_report.json");
    REQUIRE(in.good());
    nlohmann::json j;
    in >> j;
    CHECK(j["h0_r"]["free_rank"] == 3);
}

TEST_CASE("rep-sphere builtin from a spec file") {
    write_file("/tmp/eqeuler_spec.json", R"({
      "group": {"degree":3,"generators":[[1,2,0],[1,0,2]]},
      "pieces": [
        {"type":"trivial_line"},
        {"type":"sign_line","signs":[1,-1]},
        {"type":"dihedral_plane","ngon":6,
         "images":[[2,3,4,5,0,1],[0,5,4,3,2,1]]}
      ]})");
    RunResult r = run("builtin rep-sphere /tmp/eqeuler_spec.json");
    REQUIRE(r.exit_code == 0);
    auto built = nlohmann::json::parse(r.out);
    auto canonical = nlohmann::json::parse(run("builtin s3-sphere3").out);
    CHECK(built == canonical);
}
