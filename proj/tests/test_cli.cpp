#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "hodgeball/cli.hpp"
#include "hodgeball/json_io.hpp"
#include "hodgeball/period_domain.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace hodgeball;
using nlohmann::json;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& content)
        : path("/tmp/hodgeball_test_" + name) {
        std::ofstream(path) << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("jacobian reports the plane-quartic table") {
    CliResult r = run({"jacobian", "--poly", "x0^3+x1^3+x2^3+x3^3", "--dim", "2",
                       "--report", "json"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    // primitive h^{1,1} = 6 for the cubic surface
    bool found = false;
    for (const auto& row : j["pieces"])
        if (row["k"] == 1 && row["h"] == 6) found = true;
    CHECK(found);
}

TEST_CASE("balltype verdict drives the exit code") {
    CliResult pass = run({"balltype", "--poly", "x0^3+x1^3+x2^3+x3^3+x4^3+x5^3", "--dim", "4",
                          "--tangent-degree", "3", "--vars", "5", "--report", "json"});
    CHECK(pass.code == 0);
    json j = json::parse(pass.out);
    CHECK(j["star1"] == true);
    CHECK(j["star2"] == true);
    CHECK(j["star1_rank"] == 10);

    CliResult fail = run({"balltype", "--poly", "x0^4+x1^4+x2^4+x3^4", "--dim", "2",
                          "--report", "json"});
    CHECK(fail.code == 2);
    CHECK(json::parse(fail.out)["star2"] == false);
}

TEST_CASE("cover emits the augmented polynomial") {
    CliResult r = run({"cover", "--poly", "x0^3+x1^3+x2^3+x3^3", "--dim", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("x4^3") != std::string::npos);
}

TEST_CASE("lu succeeds on members and reports the witness otherwise") {
    BlockShape shape(HodgeNumbers(1, {1, 1}));
    Mat good = Mat::identity(2);
    good.at(1, 0) = GaussianRational(5);
    TempFile good_file("good.json", period_matrix_to_json(PeriodMatrix(good, shape)).dump());
    CliResult ok = run({"lu", "--matrix", good_file.path, "--report", "json"});
    CHECK(ok.code == 0);
    CHECK(json::parse(ok.out)["member"] == true);

    Mat bad(2, 2);
    bad.at(0, 1) = GaussianRational(1);
    bad.at(1, 0) = GaussianRational(1);
    TempFile bad_file("bad.json", period_matrix_to_json(PeriodMatrix(bad, shape)).dump());
    CliResult fail = run({"lu", "--matrix", bad_file.path});
    CHECK(fail.code == 2);
    CHECK(fail.err.find("submatrix 0") != std::string::npos);
}

TEST_CASE("orbit checkers pass on seeded families") {
    CliResult r = run({"orbit", "--family", "cy", "--seed", "3", "--size", "3", "--order", "5",
                       "--report", "json"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["transversality"] == true);
    CHECK(j["order_bounds"] == true);
}

TEST_CASE("refine reports membership and the exact form value") {
    CliResult inside = run({"refine", "--family", "ball", "--seed", "8", "--size", "3",
                            "--order", "5", "--point", "0;0;0", "--report", "json"});
    CHECK(inside.code == 0);
    json j = json::parse(inside.out);
    CHECK(j["inside"] == true);
    CHECK(j["hr2"] == "1");
}

TEST_CASE("dm prints binomial tables") {
    CliResult r = run({"dm", "--m", "12", "--n", "1", "--mu-sum", "2", "--report", "json"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["total"] == 10);
    CHECK(j["hodge"][0]["h"] == 1);
    CHECK(j["hodge"][1]["h"] == 9);
}

TEST_CASE("dm reads arrangement configs") {
    json config;
    config["m"] = 3;
    config["n"] = 1;
    config["mu"] = {"1/3", "1/3", "1/3"};
    config["coeffs"] = json::array({json::array({"1", "0"}), json::array({"0", "1"}),
                                    json::array({"1", "1"})});
    TempFile file("dm.json", config.dump());
    CliResult r = run({"dm", "--config", file.path, "--report", "json"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["mu_sum"] == 1);
    CHECK(j["equations"].size() == 2);
}

TEST_CASE("eigen-dims sweeps chi indices") {
    CliResult r = run({"eigen-dims", "--poly", "x0^3+x1^3+x2^3+x3^3+x4^3", "--dim", "3",
                       "--weights", "0,0,0,0,1", "--modulus", "3", "--degrees", "1,4",
                       "--report", "json"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    REQUIRE(j.size() == 2);
    CHECK(j[0]["dims"] == json::array({4, 1, 0}));
    CHECK(j[1]["dims"] == json::array({1, 4, 0}));
}

TEST_CASE("input errors exit 1 with diagnostics") {
    CliResult bad_poly = run({"jacobian", "--poly", "x0^^", "--dim", "1"});
    CHECK(bad_poly.code == 1);
    CHECK_FALSE(bad_poly.err.empty());

    CliResult bad_flag = run({"jacobian", "--poly", "x0^2+x1^2+x2^2", "--dim", "1",
                              "--no-such-flag"});
    CHECK(bad_flag.code == 1);

    CliResult no_sub = run({});
    CHECK(no_sub.code == 1);

    CliResult missing_file = run({"lu", "--matrix", "/tmp/hodgeball_does_not_exist.json"});
    CHECK(missing_file.code == 1);
}

TEST_CASE("json reports are byte-stable") {
    std::vector<std::string> args{"balltype", "--poly", "x0^4+x1^4+x2^4+x3^4", "--dim", "2",
                                  "--report", "json"};
    CHECK(run(args).out == run(args).out);
}
