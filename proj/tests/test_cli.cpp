#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "symcrit/cli.hpp"
#include "symcrit/errors.hpp"

using namespace symcrit;
using namespace symcrit::cli;
using Json = nlohmann::json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_cfg(const RunConfig& cfg) {
    std::ostringstream out, err;
    const int code = run(cfg, out, err);
    return {code, out.str(), err.str()};
}

RunConfig verify_cfg(Theorem t, std::string group, Format f = Format::json) {
    RunConfig cfg;
    cfg.command = Command::verify;
    cfg.theorem = t;
    cfg.group_spec = std::move(group);
    cfg.format = f;
    return cfg;
}

std::filesystem::path temp_file(const std::string& name, const std::string& contents) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << contents;
    return path;
}

int binary_exit(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + std::string(SYMCRIT_BINARY) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("argument parsers") {
    CHECK(parse_command("table") == Command::table);
    CHECK(parse_theorem("sym3root") == Theorem::sym3root);
    CHECK(to_string(Theorem::monotone) == "monotone");
    CHECK(parse_format("markdown") == Format::markdown);
    CHECK_THROWS_AS(parse_theorem("sym5"), ParseError);
    CHECK_THROWS_AS(parse_format("yaml"), ParseError);
}

TEST_CASE("group specs") {
    CHECK(parse_group_spec("dihedral:7")->order() == 28);
    CHECK(parse_group_spec("tetrahedral")->order() == 24);
    CHECK(parse_group_spec("octahedral")->order() == 48);
    CHECK(parse_group_spec("icosahedral")->order() == 120);
    CHECK_THROWS_AS(parse_group_spec("dihedral:1"), ParseError);
    CHECK_THROWS_AS(parse_group_spec("dihedral:x"), ParseError);
    CHECK_THROWS_AS(parse_group_spec("cyclic:3"), ParseError);
    CHECK_THROWS_AS(parse_group_spec("icosahedral", 50), CapExceeded);
}

TEST_CASE("generator files") {
    const auto ok = temp_file("symcrit_gens_ok.json", R"([[["z6", "0"], ["0", "z6^-1"]], [["0", "1"], ["-1", "0"]]])");
    const GroupPtr g = parse_group_spec("file:" + ok.string());
    CHECK(g->order() == 12);
    const auto tet = temp_file("symcrit_gens_tet.json",
                               R"([[["z4", "0"], ["0", "-z4"]], [["(1+z4)/2", "(1+z4)/2"], ["(-1+z4)/2", "(1-z4)/2"]]])");
    CHECK(parse_group_spec("file:" + tet.string())->order() == 24);

    const auto decimal = temp_file("symcrit_gens_dec.json", R"([[["0.5", "0"], ["0", "1"]]])");
    CHECK_THROWS_AS(parse_group_spec("file:" + decimal.string()), ParseError);
    const auto shape = temp_file("symcrit_gens_shape.json", R"([[["1", "0", "0"], ["0", "1", "0"]]])");
    CHECK_THROWS_AS(parse_group_spec("file:" + shape.string()), ParseError);
    const auto not_json = temp_file("symcrit_gens_bad.json", "[[");
    CHECK_THROWS_AS(parse_group_spec("file:" + not_json.string()), ParseError);
    CHECK_THROWS_AS(parse_group_spec("file:/nonexistent/gens.json"), ParseError);
    const auto infinite = temp_file("symcrit_gens_inf.json", R"([[["2", "0"], ["0", "1"]]])");
    CHECK_THROWS_AS(parse_group_spec("file:" + infinite.string(), 50), CapExceeded);
}

TEST_CASE("table reproduces the M column") {
    RunConfig cfg;
    cfg.command = Command::table;
    cfg.format = Format::json;
    const Outcome o = run_cfg(cfg);
    CHECK(o.code == kExitOk);
    const Json doc = Json::parse(o.out);
    CHECK(doc["schema"] == 1);
    REQUIRE(doc["rows"].size() == 7);
    const std::vector<int> expected{1, 1, 1, 1, 2, 3, 5};
    for (std::size_t k = 0; k < 7; ++k) {
        const Json& row = doc["rows"][k];
        CHECK(row["M"] == expected[k]);
        for (const char* field : {"group", "order", "projective_type", "M", "reducibility_vector"})
            CHECK(row.contains(field));
        CHECK(row["reducibility_vector"].size() == 7);
    }
    CHECK(doc["all_match"] == true);

    cfg.n_max = 12;
    const Json wide = Json::parse(run_cfg(cfg).out);
    for (std::size_t k = 0; k < 7; ++k) {
        CHECK(wide["rows"][k]["M"] == expected[k]);
        CHECK(wide["rows"][k]["reducibility_vector"].size() == 11);
    }

    cfg.format = Format::text;
    cfg.n_max = 8;
    const Outcome text = run_cfg(cfg);
    CHECK(text.out.find("all rows match: yes") != std::string::npos);
    cfg.format = Format::markdown;
    CHECK(run_cfg(cfg).out.find("| icosahedral | 120 | icosahedral | 5 |") != std::string::npos);
}

TEST_CASE("verify reports") {
    const Outcome s2 = run_cfg(verify_cfg(Theorem::sym2, "dihedral:5"));
    CHECK(s2.code == kExitOk);
    const Json r2 = Json::parse(s2.out);
    CHECK(r2["consistent"] == true);
    CHECK(r2["result"]["dihedral"] == true);
    CHECK(r2["result"]["chi"]["order"] == 2);
    CHECK(r2["result"]["mu"].is_object());
    CHECK(r2["result"]["decomposition"]["summands"][1]["name"] == "Ind(mu^2)");
    CHECK(r2["result"]["decomposition"]["summands"][1]["degree"] == 2);

    const Json r6 = Json::parse(run_cfg(verify_cfg(Theorem::sym6, "icosahedral")).out);
    CHECK(r6["result"]["status"] == "applicable");
    CHECK(r6["result"]["sigma_prime"]["description"].get<std::string>().find("Galois conjugate") != std::string::npos);
    CHECK(r6["result"]["chi"]["description"] == "trivial");
    CHECK(r6["result"]["mu"]["description"] == "trivial");
    CHECK(r6["result"]["etas"][0]["description"] == "trivial");
    CHECK(r6["result"]["sym6"]["summands"][0]["degree"] == 4);
    CHECK(r6["result"]["sym6"]["summands"][1]["degree"] == 3);

    const Outcome na = run_cfg(verify_cfg(Theorem::sym6, "octahedral"));
    CHECK(na.code == kExitOk);
    CHECK(Json::parse(na.out)["result"]["status"] == "not-applicable");

    RunConfig higher = verify_cfg(Theorem::higher, "icosahedral");
    higher.n_max = 10;
    const Json rh = Json::parse(run_cfg(higher).out);
    CHECK(rh["result"]["higher"]["Sym^10"] == "reducible");
    CHECK(rh["consistent"] == true);

    const Json rm = Json::parse(run_cfg(verify_cfg(Theorem::monotone, "icosahedral")).out);
    CHECK(rm["result"]["M"] == 5);

    const Json r3 = Json::parse(run_cfg(verify_cfg(Theorem::sym3, "tetrahedral")).out);
    CHECK(r3["result"]["found"] == true);
    const Json r4 = Json::parse(run_cfg(verify_cfg(Theorem::sym4, "octahedral")).out);
    CHECK(r4["result"]["H"]["order"] == 24);
}

TEST_CASE("verify cg and sym3root") {
    RunConfig cg = verify_cfg(Theorem::cg, "");
    cg.seed = 7;
    const Outcome o = run_cfg(cg);
    CHECK(o.code == kExitOk);
    const Json doc = Json::parse(o.out);
    CHECK(doc["result"]["pairs"].size() == 16);
    for (const auto& p : doc["result"]["pairs"]) CHECK(p["group_validated"] == true);

    RunConfig root = verify_cfg(Theorem::sym3root, "tetrahedral");
    const Json r = Json::parse(run_cfg(root).out);
    CHECK(r["result"]["group_elements_round_tripped"] == 24);
    CHECK(r["result"]["random_round_tripped"] == 100);
    CHECK(r["consistent"] == true);
}

TEST_CASE("output is byte-identical across runs") {
    for (const RunConfig& cfg : {verify_cfg(Theorem::sym4, "octahedral"), verify_cfg(Theorem::sym2, "dihedral:4"),
                                 verify_cfg(Theorem::sym3root, "octahedral")}) {
        CHECK(run_cfg(cfg).out == run_cfg(cfg).out);
    }
    RunConfig table;
    table.format = Format::json;
    CHECK(run_cfg(table).out == run_cfg(table).out);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cfg(verify_cfg(Theorem::sym2, "")).code == kExitUsage);
    CHECK(run_cfg(verify_cfg(Theorem::sym2, "bogus")).code == kExitUsage);
    CHECK(run_cfg(verify_cfg(Theorem::sym4, "tetrahedral")).code == kExitUsage);
    CHECK(run_cfg(verify_cfg(Theorem::sym3, "dihedral:3")).code == kExitUsage);
    RunConfig bad = verify_cfg(Theorem::sym2, "dihedral:3");
    bad.n_max = 13;
    const Outcome o = run_cfg(bad);
    CHECK(o.code == kExitUsage);
    CHECK(o.err.find("--nmax") != std::string::npos);
    bad.n_max = 8;
    bad.cap = 5;
    CHECK(run_cfg(bad).code == kExitUsage);
}

TEST_CASE("--out writes the report to a file") {
    RunConfig cfg = verify_cfg(Theorem::sym2, "dihedral:3");
    const auto path = std::filesystem::temp_directory_path() / "symcrit_out.json";
    std::filesystem::remove(path);
    cfg.output_path = path.string();
    const Outcome o = run_cfg(cfg);
    CHECK(o.code == kExitOk);
    CHECK(o.out.empty());
    std::ifstream in(path);
    CHECK(Json::parse(in)["consistent"] == true);
}

TEST_CASE("selftest") {
    RunConfig cfg;
    cfg.command = Command::selftest;
    cfg.format = Format::json;
    const Outcome ok = run_cfg(cfg);
    CHECK(ok.code == kExitOk);
    const Json doc = Json::parse(ok.out);
    for (const char* field : {"suite", "passed", "failed", "duration_ms"}) CHECK(doc.contains(field));
    CHECK(doc["failed"] == 0);
    CHECK(doc["passed"].get<int>() >= 20);

    setenv("SYMCRIT_SELFTEST_FAIL", "reps.sym_power_det", 1);
    const Outcome bad = run_cfg(cfg);
    unsetenv("SYMCRIT_SELFTEST_FAIL");
    CHECK(bad.code == kExitMismatch);
    CHECK(Json::parse(bad.out)["first_failure"] == "reps.sym_power_det");
    cfg.format = Format::text;
    setenv("SYMCRIT_SELFTEST_FAIL", "groups.orders", 1);
    const Outcome text = run_cfg(cfg);
    unsetenv("SYMCRIT_SELFTEST_FAIL");
    CHECK(text.out.find("first failing invariant: groups.orders") != std::string::npos);
}

TEST_CASE("closure cap from the environment") {
    unsetenv("SYMCRIT_CAP");
    CHECK(cap_from_env() == kDefaultClosureCap);
    setenv("SYMCRIT_CAP", "64", 1);
    CHECK(cap_from_env() == 64);
    setenv("SYMCRIT_CAP", "abc", 1);
    CHECK_THROWS_AS(cap_from_env(), ParseError);
    setenv("SYMCRIT_CAP", "0", 1);
    CHECK_THROWS_AS(cap_from_env(), ParseError);
    unsetenv("SYMCRIT_CAP");
}

TEST_CASE("binary exit codes") {
    CHECK(binary_exit("table") == 0);
    CHECK(binary_exit("verify sym2 --group dihedral:5 --format json") == 0);
    CHECK(binary_exit("verify sym2 --group nowhere") == 2);
    CHECK(binary_exit("verify sym9 --group tetrahedral") == 2);
    CHECK(binary_exit("table --nmax 4") == 2);
    CHECK(binary_exit("") == 2);
    CHECK(binary_exit("--help") == 0);
    CHECK(binary_exit("verify sym2 --group icosahedral") == 0);
    CHECK(binary_exit("verify sym2 --group icosahedral", "SYMCRIT_CAP=10 ") == 2);
    CHECK(binary_exit("selftest", "SYMCRIT_SELFTEST_FAIL=linalg.inverse ") == 1);
}

}  // TEST_SUITE
