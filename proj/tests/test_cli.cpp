#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "rigidity/cli.hpp"
#include "rigidity/serialize.hpp"

using namespace rigidity;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_cli(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

void check_error_line(const Outcome& o, const std::string& kind) {
    CHECK(o.out.empty());
    REQUIRE_FALSE(o.err.empty());
    CHECK(o.err.find('\n') == o.err.size() - 1);
    auto j = Json::parse(o.err);
    CHECK(j.contains("error"));
    CHECK(j.at("kind") == kind);
}

}  // namespace

TEST_CASE("certify example") {
    auto o = run_cli({"certify", "--n", "4", "--coeff", "7/12", "--mode", "exact"});
    REQUIRE(o.code == cli::kExitOk);
    auto j = Json::parse(o.out);
    CHECK(j.at("verdict") == true);
    CHECK(j.at("max_critical_value") == "0/1");
    CHECK(j.at("maximizer_partitions") == Json::parse("[[3,1]]"));
}

TEST_CASE("eval examples") {
    auto o = run_cli({"eval", "--mode", "exact"}, "[1,-1,0,0]");
    REQUIRE(o.code == cli::kExitOk);
    CHECK(Json::parse(o.out).at("value") == "-1/3");

    auto frac = run_cli({"eval", "--mode", "exact"}, R"(["1/2","-1/2",0,0])");
    REQUIRE(frac.code == cli::kExitOk);
    CHECK(Json::parse(frac.out).at("value") == "-1/48");

    auto fl = run_cli({"eval"}, "[-1,-1,-1,3]");
    REQUIRE(fl.code == cli::kExitOk);
    auto jf = Json::parse(fl.out);
    CHECK(std::fabs(jf.at("value").get<double>()) <= 1e-12 * 144);
    CHECK(jf.at("rotational_pattern").at("rotational") == true);
    CHECK(jf.at("rotational_pattern").at("signature") == Json::parse("[3,1]"));

    auto mat = run_cli({"eval"}, "[[0,1,0,0],[1,0,0,0],[0,0,0,0],[0,0,0,0]]");
    REQUIRE(mat.code == cli::kExitOk);
    CHECK(Json::parse(mat.out).at("value").get<double>() == doctest::Approx(2 - 7.0 / 12 * 4));

    auto grad = run_cli({"grad", "--mode", "exact"}, "[1,-1,0,0]");
    REQUIRE(grad.code == cli::kExitOk);
    CHECK(grad.out.find("\"-2/3\"") != std::string::npos);
}

TEST_CASE("sharp-constant example") {
    auto o = run_cli({"sharp-constant", "--n", "3"});
    REQUIRE(o.code == cli::kExitOk);
    auto j = Json::parse(o.out);
    CHECK(j.at("sharp_constant").get<double>() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(j.at("candidate") == "1/2");
    CHECK(std::fabs(j.at("difference").get<double>()) <= 1e-8);
}

TEST_CASE("validation failures exit 2 with one-line JSON") {
    check_error_line(run_cli({"bogus"}), "usage");
    CHECK(run_cli({"bogus"}).code == cli::kExitValidation);

    auto rat = run_cli({"certify", "--coeff", "7/x"});
    CHECK(rat.code == cli::kExitValidation);
    check_error_line(rat, "invalid-argument");

    auto sym = run_cli({"eval", "--n", "2"}, "[[0,1],[0,0]]");
    CHECK(sym.code == cli::kExitValidation);
    check_error_line(sym, "symmetry-violation");

    auto exact_max = run_cli({"maximize", "--mode", "exact"});
    CHECK(exact_max.code == cli::kExitValidation);
    check_error_line(exact_max, "invalid-argument");
    CHECK(run_cli({"surface", "--mode", "exact"}).code == cli::kExitValidation);

    CHECK(run_cli({"eval", "--mode", "exact"}, "[0.5,-0.5,0,0]").code == cli::kExitValidation);
    CHECK(run_cli({"eval"}, "not json").code == cli::kExitValidation);
    auto dim = run_cli({"eval", "--n", "4"}, "[1,2,3]");
    CHECK(dim.code == cli::kExitValidation);
    check_error_line(dim, "dimension-mismatch");
    CHECK(run_cli({"certify", "--n", "9"}).code == cli::kExitValidation);
    CHECK(run_cli({"certify", "--format", "xml"}).code == cli::kExitValidation);
    CHECK(run_cli({"surface", "--family", "clifford", "--k", "2", "--theta", "0.5"}).code == cli::kExitValidation);
}

TEST_CASE("numerical failures exit 3") {
    auto o = run_cli({"energy", "--family", "catenoid", "--z-max", "2"});
    CHECK(o.code == cli::kExitNumerical);
    check_error_line(o, "integration-blowup");
}

TEST_CASE("help exits cleanly") {
    auto o = run_cli({"--help"});
    CHECK(o.code == cli::kExitOk);
    CHECK(o.out.find("sharp-constant") != std::string::npos);
}

TEST_CASE("round trip: reports re-parse without loss") {
    auto cert = run_cli({"certify", "--n", "5", "--coeff", "2/3"});
    REQUIRE(cert.code == 0);
    auto cj = Json::parse(cert.out);
    CHECK(certificate_to_json(certificate_from_json(cj)) == cj);

    auto max = run_cli({"maximize", "--n", "5", "--starts", "7", "--seed", "3"});
    REQUIRE(max.code == 0);
    auto mj = Json::parse(max.out);
    mj.erase("functional");
    CHECK(maximize_to_json(maximize_from_json(mj)) == mj);

    auto sharp = run_cli({"sharp-constant", "--n", "6"});
    auto sj = Json::parse(sharp.out);
    CHECK(sharp_constant_to_json(sharp_constant_from_json(sj)).at("maximizer") == sj.at("maximizer"));

    auto surf = run_cli({"surface", "--family", "catenoid", "--z-max", "0.3", "--step", "0.01"});
    REQUIRE(surf.code == 0);
    auto fj = Json::parse(surf.out);
    auto samples = samples_from_json(fj.at("samples"));
    CHECK(samples_to_json(samples, RigidityFunctional::rotational()) == fj.at("samples"));

    for (double x : {0.1, 1.0 / 3, 6.02214076e23, -2.5e-300, 0.0})
        CHECK(std::stod(format_double(x)) == x);
}

TEST_CASE("determinism: byte-identical reruns") {
    std::vector<std::string> args{"maximize", "--n", "6", "--starts", "20", "--seed", "11"};
    CHECK(run_cli(args).out == run_cli(args).out);
    std::vector<std::string> sharp{"sharp-constant", "--n", "5"};
    CHECK(run_cli(sharp).out == run_cli(sharp).out);
}

TEST_CASE("tabular output") {
    auto tsv = run_cli({"surface", "--family", "clifford", "--k", "1", "--resolution", "1", "--format", "tsv"});
    REQUIRE(tsv.code == 0);
    std::istringstream lines(tsv.out);
    std::string header, row;
    std::getline(lines, header);
    CHECK(header.rfind("param1\t", 0) == 0);
    CHECK(header.find("\ts\tweight") != std::string::npos);
    int rows = 0;
    while (std::getline(lines, row)) {
        CHECK(std::count(row.begin(), row.end(), '\t') == std::count(header.begin(), header.end(), '\t'));
        ++rows;
    }
    CHECK(rows > 0);

    auto csv = run_cli({"certify", "--format", "csv"});
    REQUIRE(csv.code == 0);
    CHECK(csv.out.rfind("partition,direction", 0) == 0);
    CHECK(csv.out.find("3 1,3 -1 -1 -1,12/1,7/12,0/1,global-max-candidate,8") != std::string::npos);
}

TEST_CASE("output file option") {
    auto path = std::filesystem::temp_directory_path() / "rigidity_cli_test.json";
    std::filesystem::remove(path);
    auto o = run_cli({"certify", "-o", path.string()});
    CHECK(o.code == 0);
    CHECK(o.out.empty());
    std::ifstream f(path);
    REQUIRE(f.good());
    CHECK(Json::parse(f).at("verdict") == true);
    std::filesystem::remove(path);
}
